"""
Brute-force search for balancing index sets.

Each index goes to I1, I2 or neither.  The search walks the combined support
S = I1 | I2 (an index bitmask) in ascending order and, within S, every
nonempty I2 drawn from S minus its lowest index, also ascending; the lowest
index of S therefore always lands in I1, which removes the I1/I2 mirror
images.  Unions and intersections of every index subset are tabulated up
front so each candidate pair costs O(1).
"""

from dataclasses import dataclass

from .balancer import BALANCED, UNION, BalanceCertificate
from .errors import FamilyTooLarge
from .family import full_mask

MAX_MEMBERS = 20


@dataclass(frozen=True)
class OracleResult:
    found: BalanceCertificate | None
    pairs_examined: int


def _tables(family, with_intersections):
    ms = family.members
    size = 1 << len(ms)
    unions = [0] * size
    inters = [full_mask(family.n)] * size if with_intersections else None
    for s in range(1, size):
        low = s & -s
        i = low.bit_length() - 1
        rest = s ^ low
        unions[s] = unions[rest] | ms[i]
        if with_intersections:
            inters[s] = inters[rest] & ms[i]
    return unions, inters


def _indices(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def brute_force_find(family, mode=BALANCED, minimal=False):
    """
    Exhaustive search for disjoint nonempty I1, I2 with equal unions (and, in
    balanced mode, equal intersections).

    Returns the first hit in enumeration order, or with ``minimal`` the hit
    with the fewest indices in total (earliest in enumeration order on ties).
    """
    m = len(family.members)
    if m > MAX_MEMBERS:
        raise FamilyTooLarge(f"{m} members exceeds the oracle limit of {MAX_MEMBERS}")
    if mode not in (BALANCED, UNION):
        raise ValueError(f"unknown mode {mode!r}")
    balanced = mode == BALANCED
    unions, inters = _tables(family, balanced)

    examined = 0
    best = None
    best_size = m + 1
    for s in range(1, 1 << m):
        size = bin(s).count("1")
        if size < 2 or size >= best_size:
            continue
        rest = s & (s - 1)
        # ascending nonempty submasks of rest
        t = -rest & rest
        while t:
            a = s ^ t
            examined += 1
            if unions[a] == unions[t] and (not balanced or inters[a] == inters[t]):
                best = (a, t)
                best_size = size
                break
            t = (t - rest) & rest
        if best is not None and not minimal:
            break

    if best is None:
        return OracleResult(None, examined)
    a, t = best
    cert = BalanceCertificate(
        mode=mode,
        i1=_indices(a),
        i2=_indices(t),
        union=unions[a],
        intersection=inters[a] if balanced else None,
    )
    return OracleResult(cert, examined)


def is_balanced(family):
    return brute_force_find(family, BALANCED).found is not None


def is_union_balanced(family):
    return brute_force_find(family, UNION).found is not None
