"""
Exhaustive small-n sweeps over the families covered by the three theorems
and over Sperner families for the open conjecture.

Only families at the threshold size are generated.  Balancedness is
monotone under adding members, and any larger (Sperner, uniform, ...) family
contains a threshold-size subfamily of the same kind, so this is enough.

Families are emitted in canonical form (members ascending by bitmask) and in
lexicographic order of that member tuple.  The work splits cleanly by the
value of the first member; chunk reports merged in ascending chunk order are
identical to a single pass, apart from timing.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb

from .balancer import (
    BALANCED,
    UNION,
    find_balanced_general,
    find_balanced_uniform,
    find_union_balanced,
    verify_certificate,
)
from .errors import BalfamError, GroundSetTooLarge, GroundSetTooSmall, InvalidUniformity
from .family import SetFamily, family_to_json, is_subset, popcount
from .oracle import brute_force_find

MAX_ANTICHAIN_N = 6
MAX_THEOREM_N = 5


class ScanKind(str, Enum):
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    THEOREM3 = "theorem3"
    CONJECTURE = "conjecture"


@dataclass(frozen=True)
class ScanReport:
    kind: ScanKind
    n: int
    families_checked: int
    counterexamples: tuple = ()
    elapsed: float = field(default=0.0, compare=False)

    @property
    def ok(self):
        return not self.counterexamples

    def to_json(self, timing=True):
        return {
            "kind": ScanKind(self.kind).value,
            "n": self.n,
            "families_checked": self.families_checked,
            "counterexamples": [family_to_json(f) for f in self.counterexamples],
            "elapsed_ms": int(round(self.elapsed * 1000)) if timing else 0,
        }

    def summary(self):
        kind = ScanKind(self.kind)
        if self.counterexamples:
            return (f"{kind.value} n={self.n}: {len(self.counterexamples)} counterexample(s) "
                    f"among {self.families_checked} families")
        if kind is ScanKind.CONJECTURE:
            if not self.families_checked:
                return f"conjecture n={self.n}: no Sperner family of size {self.n + 1} exists (vacuous)"
            return (f"conjecture n={self.n}: every one of {self.families_checked} Sperner "
                    f"families of size {self.n + 1} is balanced (evidence only, not a proof)")
        return f"{kind.value} n={self.n}: all {self.families_checked} families pass"


def merge_reports(reports):
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    head = reports[0]
    return ScanReport(
        kind=head.kind,
        n=head.n,
        families_checked=sum(r.families_checked for r in reports),
        counterexamples=tuple(f for r in reports for f in r.counterexamples),
        elapsed=sum(r.elapsed for r in reports),
    )


# --- antichains --------------------------------------------------------------


def enumerate_antichains(n, size, first_members=None):
    """
    Yield every Sperner family of exactly ``size`` distinct subsets of [n].

    ``first_members`` optionally restricts the smallest member to the given
    bitmask values, which is how the work is chunked.
    """
    if n > MAX_ANTICHAIN_N:
        raise GroundSetTooLarge(f"antichain enumeration is limited to n <= {MAX_ANTICHAIN_N}")
    if n < 1:
        raise GroundSetTooSmall("n must be positive")
    if size < 1:
        raise ValueError("size must be at least 1")
    top = 1 << n
    firsts = range(top) if first_members is None else sorted(set(first_members))

    chosen = []

    def extend(start):
        if len(chosen) == size:
            yield SetFamily(n, tuple(chosen))
            return
        need = size - len(chosen)
        for s in range(start, top - need + 1):
            if all(not is_subset(c, s) and not is_subset(s, c) for c in chosen):
                chosen.append(s)
                yield from extend(s + 1)
                chosen.pop()

    for f in firsts:
        if not 0 <= f < top:
            continue
        chosen.append(f)
        yield from extend(f + 1)
        chosen.pop()


def _check_conjecture(family):
    return brute_force_find(family, BALANCED).found is not None


def _conjecture_chunk(n, firsts, progress=None):
    start = time.perf_counter()
    checked = 0
    bad = []
    for fam in enumerate_antichains(n, n + 1, firsts):
        checked += 1
        if not _check_conjecture(fam):
            bad.append(fam)
        if progress is not None:
            progress(checked)
    return ScanReport(ScanKind.CONJECTURE, n, checked, tuple(bad), time.perf_counter() - start)


def scan_conjecture(n, first_members=None, jobs=1, progress=None):
    """Check every Sperner family of size n + 1 on [n] with the brute-force oracle."""
    if n > MAX_ANTICHAIN_N:
        raise GroundSetTooLarge(f"conjecture scans are limited to n <= {MAX_ANTICHAIN_N}")
    if n < 2:
        raise GroundSetTooSmall("conjecture scans need n >= 2")
    firsts = list(range(1 << n)) if first_members is None else sorted(set(first_members))
    return _run_chunks(_conjecture_chunk, (n,), firsts, jobs, progress, ScanKind.CONJECTURE, n)


# --- theorem sweeps ------------------------------------------------------------


def _theorem_pool(kind, n, k):
    if kind is ScanKind.THEOREM1:
        return [s for s in range(1, 1 << n)], n + 1
    if kind is ScanKind.THEOREM2:
        return list(range(1 << n)), n + 2
    return [s for s in range(1 << n) if popcount(s) == k], n + 1


def _check_theorem(kind, family):
    """Return True when finder, verifier and oracle all agree the family balances."""
    finder, mode = {
        ScanKind.THEOREM1: (find_union_balanced, UNION),
        ScanKind.THEOREM2: (find_balanced_general, BALANCED),
        ScanKind.THEOREM3: (find_balanced_uniform, BALANCED),
    }[kind]
    try:
        cert = finder(family)
    except BalfamError:
        return False
    if cert.mode != mode or not verify_certificate(family, cert):
        return False
    return brute_force_find(family, mode).found is not None


def _theorem_chunk(kind, n, k, firsts, progress=None):
    start = time.perf_counter()
    pool, size = _theorem_pool(kind, n, k)
    index = {s: i for i, s in enumerate(pool)}
    checked = 0
    bad = []
    for f in firsts:
        i = index.get(f)
        if i is None:
            continue
        for rest in combinations(pool[i + 1:], size - 1):
            fam = SetFamily(n, (f,) + rest)
            checked += 1
            if not _check_theorem(kind, fam):
                bad.append(fam)
            if progress is not None:
                progress(checked)
    return ScanReport(kind, n, checked, tuple(bad), time.perf_counter() - start)


def scan_theorem(kind, n, k=None, first_members=None, jobs=1, progress=None):
    """
    Run the matching finder, the certificate verifier and the oracle on every
    threshold-size family a theorem covers; any disagreement is a counterexample.
    """
    kind = ScanKind(kind)
    if kind is ScanKind.CONJECTURE:
        raise ValueError("use scan_conjecture for the conjecture")
    if n > MAX_THEOREM_N:
        raise GroundSetTooLarge(f"theorem scans are limited to n <= {MAX_THEOREM_N}")
    if n < 1:
        raise GroundSetTooSmall("n must be positive")
    if kind is ScanKind.THEOREM3:
        if k is None or not 1 <= k <= n - 1 or comb(n, k) < n + 1:
            raise InvalidUniformity(f"theorem3 needs 1 <= k <= n-1 and C(n,k) >= n+1, got k={k}")
    else:
        k = None
    pool, _ = _theorem_pool(kind, n, k)
    firsts = pool if first_members is None else sorted(set(first_members))
    return _run_chunks(_theorem_chunk, (kind, n, k), firsts, jobs, progress, kind, n)


def _run_chunks(fn, args, firsts, jobs, progress, kind, n):
    start = time.perf_counter()
    if jobs <= 1 or len(firsts) <= 1:
        report = fn(*args, firsts, progress)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn, *args, [f]) for f in firsts]
            report = merge_reports([fut.result() for fut in futures])
    return ScanReport(kind, n, report.families_checked, report.counterexamples,
                      time.perf_counter() - start)
