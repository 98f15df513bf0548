"""
Set families over a ground set [n] = {1, ..., n}.

A subset is stored as a plain ``int`` bitmask: element ``i`` is present iff
bit ``i - 1`` is set, so ``{1, 3}`` is ``0b101``.  Ordering masks as integers
gives the canonical member order used by the enumerators.

Example::

    fam = SetFamily.from_sets(4, [[1, 2], [3, 4]])
    assert is_uniform(fam) == 2
    assert elements(aggregate(fam, [0, 1], "union")) == [1, 2, 3, 4]
"""

import json
import os
from dataclasses import dataclass

from .errors import (
    DuplicateMember,
    ElementOutOfRange,
    EmptyFamily,
    EmptyIndexSet,
    GroundSetTooLarge,
    GroundSetTooSmall,
    IndexOutOfRange,
    MalformedInput,
)

MAX_N = 64


def max_ground_set():
    """Effective cap on n; the BALFAM_MAX_N environment variable may lower it."""
    raw = os.environ.get("BALFAM_MAX_N")
    if raw is None:
        return MAX_N
    try:
        value = int(raw)
    except ValueError:
        return MAX_N
    return max(1, min(MAX_N, value))


def full_mask(n):
    return (1 << n) - 1


def mask_of(elems, n=None):
    """Bitmask of an iterable of 1-based elements, range-checked against n if given."""
    mask = 0
    for e in elems:
        e = int(e)
        if e < 1 or (n is not None and e > n):
            raise ElementOutOfRange(f"element {e} outside [1, {n}]")
        mask |= 1 << (e - 1)
    return mask


def elements(mask):
    """Ascending list of the 1-based elements of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def complement(mask, n):
    return full_mask(n) & ~mask


def popcount(mask):
    return bin(mask).count("1")


def is_subset(a, b):
    return a & ~b == 0


@dataclass(frozen=True)
class SetFamily:
    """An ordered family of subsets of [n]; certificates index ``members`` 0-based."""

    n: int
    members: tuple
    allow_duplicates: bool = False

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise MalformedInput(f"ground-set size must be a positive integer, got {self.n!r}")
        if self.n > MAX_N:
            raise GroundSetTooLarge(f"n = {self.n} exceeds the cap of {MAX_N}")
        members = tuple(int(m) for m in self.members)
        object.__setattr__(self, "members", members)
        top = full_mask(self.n)
        for m in members:
            if m < 0 or m & ~top:
                raise ElementOutOfRange(f"member {m:#b} is not a subset of [{self.n}]")
        if not self.allow_duplicates and len(set(members)) != len(members):
            raise DuplicateMember("family contains a repeated member")

    @classmethod
    def from_sets(cls, n, sets, allow_duplicates=False):
        return cls(n, tuple(mask_of(s, n) for s in sets), allow_duplicates)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def sets(self):
        """Members as lists of 1-based elements."""
        return [elements(m) for m in self.members]

    def has_duplicates(self):
        return len(set(self.members)) != len(self.members)

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets())
        return f"n={self.n} [{body}]"


def is_uniform(family):
    """Return k if every member has exactly k elements, else None."""
    if not family.members:
        raise EmptyFamily("uniformity is undefined for an empty family")
    sizes = {popcount(m) for m in family.members}
    return sizes.pop() if len(sizes) == 1 else None


def is_sperner(family):
    """True iff no member is contained in a different member."""
    ms = family.members
    for i, a in enumerate(ms):
        for j, b in enumerate(ms):
            if i != j and is_subset(a, b):
                return False
    return True


def aggregate(family, indices, mode):
    """Union or intersection (``mode`` is "union"/"intersection") of the indexed members."""
    indices = list(indices)
    if not indices:
        raise EmptyIndexSet("cannot aggregate over an empty index set")
    m = len(family.members)
    for i in indices:
        if not 0 <= i < m:
            raise IndexOutOfRange(f"index {i} outside [0, {m})")
    if mode == "union":
        acc = 0
        for i in indices:
            acc |= family.members[i]
    elif mode == "intersection":
        acc = full_mask(family.n)
        for i in indices:
            acc &= family.members[i]
    else:
        raise ValueError(f"unknown aggregation mode {mode!r}")
    return acc


def gen_nonuniform_sharp(n):
    """All singletons of [n] plus [n] itself: n+1 members, union-balanced, not balanced."""
    if n < 2:
        raise GroundSetTooSmall("the non-uniform sharpness family needs n >= 2")
    return SetFamily(n, tuple(1 << i for i in range(n)) + (full_mask(n),))


def gen_uniform_sharp(n):
    """{2,3} together with {1,i} for 2 <= i <= n: n members, 2-uniform, not balanced."""
    if n < 3:
        raise GroundSetTooSmall("the uniform sharpness family needs n >= 3")
    sets = [[2, 3]] + [[1, i] for i in range(2, n + 1)]
    return SetFamily.from_sets(n, sets)


def gen_complete_uniform(n, k):
    """Every k-subset of [n], in ascending bitmask order."""
    from itertools import combinations

    if n < 1:
        raise GroundSetTooSmall("n must be positive")
    masks = sorted(mask_of(c) for c in combinations(range(1, n + 1), k))
    return SetFamily(n, tuple(masks))


# --- text / JSON formats ---------------------------------------------------


def _parse_line(line, lineno):
    if line == "-":
        return []
    out = []
    for tok in line.split(","):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            raise MalformedInput(f"line {lineno}: bad element {tok!r}") from None
    return out


def _build(n, sets, allow_duplicates):
    cap = max_ground_set()
    if n is None:
        seen = [e for s in sets for e in s]
        if not seen:
            raise MalformedInput("no `n` header and no elements to infer it from")
        n = max(seen)
    if n < 1:
        raise MalformedInput(f"ground-set size must be positive, got {n}")
    if n > cap:
        raise GroundSetTooLarge(f"n = {n} exceeds the cap of {cap}")
    masks = tuple(mask_of(s, n) for s in sets)
    return SetFamily(n, masks, allow_duplicates)


def _parse_text(text):
    n = None
    allow_duplicates = False
    sets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()
        if head[0] == "n":
            if sets or n is not None or len(head) != 2:
                raise MalformedInput(f"line {lineno}: misplaced or malformed `n` header")
            try:
                n = int(head[1])
            except ValueError:
                raise MalformedInput(f"line {lineno}: bad ground-set size {head[1]!r}") from None
            continue
        if line == "allow_duplicates":
            if sets:
                raise MalformedInput(f"line {lineno}: `allow_duplicates` must precede the sets")
            allow_duplicates = True
            continue
        sets.append(_parse_line(line, lineno))
    return _build(n, sets, allow_duplicates)


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("sets"), list):
        raise MalformedInput('family JSON must be an object with a "sets" list')
    n = doc.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool)):
        raise MalformedInput('"n" must be an integer')
    sets = []
    for s in doc["sets"]:
        if not isinstance(s, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in s):
            raise MalformedInput("every set must be a list of integers")
        sets.append(s)
    return _build(n, sets, bool(doc.get("allow_duplicates", False)))


def parse_family(text, format="text"):
    """Parse a family from a string or text stream in the text or JSON grammar."""
    if hasattr(text, "read"):
        text = text.read()
    if format == "auto":
        format = "json" if text.lstrip().startswith("{") else "text"
    if format == "text":
        return _parse_text(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown family format {format!r}")


def family_to_json(family):
    doc = {"n": family.n, "sets": family.sets()}
    if family.allow_duplicates:
        doc["allow_duplicates"] = True
    return doc


def format_family(family, format="text"):
    if format == "json":
        return json.dumps(family_to_json(family))
    if format != "text":
        raise ValueError(f"unknown family format {format!r}")
    lines = [f"n {family.n}"]
    if family.allow_duplicates:
        lines.append("allow_duplicates")
    for s in family.sets():
        lines.append(",".join(map(str, s)) if s else "-")
    return "\n".join(lines) + "\n"
