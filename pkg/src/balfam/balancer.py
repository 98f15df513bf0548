"""
Constructive balancing of set families through incidence-vector dependencies.

Every set A of [n] is mapped to its extended incidence vector
``(x_1, y_1, ..., x_n, y_n)`` with ``x_i = [i in A]`` and ``y_i = 1 - x_i``.
Once there are more members than the dimension of the space the vectors live
in, the exact kernel of the column matrix yields a nontrivial relation
``sum_{I1} a_i v_i = sum_{I2} b_j v_j`` with positive a, b.  Equal supports of
the x-parts give equal unions; equal supports of the y-parts give equal
unions of complements, hence equal intersections.

The three finders differ only in the ambient space:

* ``find_balanced_uniform``: k-uniform families live in the n-dimensional
  kernel of the constraint matrix T(n, k), so m >= n + 1 members suffice.
* ``find_balanced_general``: without the cardinality row of T the space has
  dimension n + 1, so m >= n + 2 members suffice.
* ``find_union_balanced``: plain incidence vectors in n dimensions, m >= n + 1,
  union equality only.
"""

from dataclasses import dataclass

from . import linalg
from .errors import (
    DimensionMismatch,
    DuplicateMember,
    ElementOutOfRange,
    EmptySetMember,
    EmptyUniformity,
    InsufficientFamily,
    InvalidUniformity,
    NotUniform,
    OneSidedRelation,
)
from .family import aggregate, complement, elements, full_mask, is_uniform, mask_of

BALANCED = "balanced"
UNION = "union"


@dataclass(frozen=True)
class BalanceCertificate:
    mode: str
    i1: tuple
    i2: tuple
    union: int
    intersection: int | None = None

    def to_json(self):
        return {
            "mode": self.mode,
            "i1": list(self.i1),
            "i2": list(self.i2),
            "union": elements(self.union),
            "intersection": None if self.intersection is None else elements(self.intersection),
        }

    @classmethod
    def from_json(cls, doc):
        inter = doc.get("intersection")
        return cls(
            mode=doc["mode"],
            i1=tuple(doc["i1"]),
            i2=tuple(doc["i2"]),
            union=mask_of(doc["union"]),
            intersection=None if inter is None else mask_of(inter),
        )


def extended_incidence(mask, n):
    """Interleaved (x_i, y_i) indicator vector of a set and its complement."""
    if mask < 0 or mask & ~full_mask(n):
        raise ElementOutOfRange(f"{mask:#b} is not a subset of [{n}]")
    v = []
    for i in range(n):
        x = (mask >> i) & 1
        v.append(x)
        v.append(1 - x)
    return v


def incidence(mask, n):
    if mask < 0 or mask & ~full_mask(n):
        raise ElementOutOfRange(f"{mask:#b} is not a subset of [{n}]")
    return [(mask >> i) & 1 for i in range(n)]


def build_T(n, k):
    """
    The n x 2n matrix whose kernel is the space of vectors with constant
    ``x_i + y_i`` and ``(n - k) * sum(x) == k * sum(y)``.
    """
    if n < 1 or not 1 <= k <= n:
        raise InvalidUniformity(f"need 1 <= k <= n, got n={n}, k={k}")
    rows = _balance_rows(n)
    rows.append([n - k if c % 2 == 0 else -k for c in range(2 * n)])
    return linalg.RationalMatrix(rows)


def _balance_rows(n):
    # row j: +1 on (x_1, y_1), -1 on (x_{j+1}, y_{j+1})
    rows = []
    for j in range(1, n):
        row = [0] * (2 * n)
        row[0] = row[1] = 1
        row[2 * j] = row[2 * j + 1] = -1
        rows.append(row)
    return rows


def build_balance_matrix(n):
    """Rows 1..n-1 of T: the constraints x_i + y_i == x_1 + y_1 alone (None when n == 1)."""
    if n < 1:
        raise InvalidUniformity(f"need n >= 1, got {n}")
    rows = _balance_rows(n)
    return linalg.RationalMatrix(rows) if rows else None


def in_subspace_V(v, n, k):
    v = list(v)
    if len(v) != 2 * n:
        raise DimensionMismatch(f"expected a vector of length {2 * n}, got {len(v)}")
    return all(x == 0 for x in build_T(n, k).dot(v))


def sign_split(coeffs):
    """Indices of the positive and of the negative coefficients."""
    coeffs = list(coeffs)
    if all(c == 0 for c in coeffs):
        raise OneSidedRelation("all coefficients are zero")
    i1 = tuple(i for i, c in enumerate(coeffs) if c > 0)
    i2 = tuple(i for i, c in enumerate(coeffs) if c < 0)
    if not i1 or not i2:
        raise OneSidedRelation("relation has coefficients of one sign only")
    return i1, i2


def intersection_via_complements(family, indices):
    """Intersection read off the y-coordinates: complement of the union of complements."""
    n = family.n
    acc = 0
    for i in indices:
        acc |= complement(family.members[i], n)
    return complement(acc, n)


def _require_distinct(family):
    if family.has_duplicates():
        raise DuplicateMember("finders need pairwise distinct members")


def _relation(columns):
    coeffs = linalg.kernel_vector(linalg.RationalMatrix.from_columns(columns))
    # callers guarantee more columns than the ambient dimension
    assert coeffs is not None
    return sign_split(coeffs)


def _balanced_certificate(family, i1, i2):
    return BalanceCertificate(
        mode=BALANCED,
        i1=i1,
        i2=i2,
        union=aggregate(family, i1, "union"),
        intersection=intersection_via_complements(family, i1),
    )


def find_balanced_uniform(family):
    """Balanced certificate for a k-uniform family (k >= 1) with at least n + 1 members."""
    _require_distinct(family)
    n, m = family.n, len(family)
    if m == 0:
        raise InsufficientFamily(f"need at least {n + 1} members, got 0")
    k = is_uniform(family)
    if k is None:
        raise NotUniform("members have differing sizes")
    if k == 0:
        raise EmptyUniformity("the only 0-uniform family is {empty set}")
    if m <= n:
        raise InsufficientFamily(f"need at least {n + 1} members, got {m}")
    T = build_T(n, k)
    columns = [extended_incidence(a, n) for a in family.members]
    for v in columns:
        assert all(x == 0 for x in T.dot(v))
    return _balanced_certificate(family, *_relation(columns))


def find_balanced_general(family):
    """Balanced certificate for any family of distinct sets with at least n + 2 members."""
    _require_distinct(family)
    n, m = family.n, len(family)
    if m <= n + 1:
        raise InsufficientFamily(f"need at least {n + 2} members, got {m}")
    columns = [extended_incidence(a, n) for a in family.members]
    B = build_balance_matrix(n)
    if B is not None:
        for v in columns:
            assert all(x == 0 for x in B.dot(v))
    return _balanced_certificate(family, *_relation(columns))


def find_union_balanced(family):
    """Union-only certificate for distinct nonempty sets with at least n + 1 members."""
    _require_distinct(family)
    n, m = family.n, len(family)
    if m <= n:
        raise InsufficientFamily(f"need at least {n + 1} members, got {m}")
    if 0 in family.members:
        raise EmptySetMember("the empty set has a zero incidence vector")
    columns = [incidence(a, n) for a in family.members]
    i1, i2 = _relation(columns)
    return BalanceCertificate(UNION, i1, i2, aggregate(family, i1, "union"), None)


FINDERS = {
    "uniform": find_balanced_uniform,
    "general": find_balanced_general,
    "union": find_union_balanced,
}


def verify_certificate(family, cert):
    """Recompute everything the certificate claims; never raises."""
    try:
        m = len(family.members)
        i1, i2 = list(cert.i1), list(cert.i2)
        if not i1 or not i2:
            return False
        for i in i1 + i2:
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < m:
                return False
        if set(i1) & set(i2) or len(set(i1)) != len(i1) or len(set(i2)) != len(i2):
            return False
        u1 = aggregate(family, i1, "union")
        if u1 != aggregate(family, i2, "union") or u1 != cert.union:
            return False
        if cert.mode == UNION:
            return cert.intersection is None
        if cert.mode != BALANCED or cert.intersection is None:
            return False
        n1 = aggregate(family, i1, "intersection")
        return n1 == aggregate(family, i2, "intersection") == cert.intersection
    except Exception:
        return False

