"""Explicit families witnessing the lower bounds and exact values.

Every construction returns a canonical, byte-reproducible SetFamily and a
deterministic member order.  Point encodings are fixed: affine grid points
(x, y) with 0 <= x, y < p map to the label x*p + y + 1; projective points
are normalized homogeneous triples (first nonzero coordinate 1) enumerated
in lexicographic order of their integer-encoded coordinates.

The `distinct_required` flag on each output records the actual pairwise
distinctness of the members, so verification is honest even in degenerate
parameter corners where the classical witnesses repeat members.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from .arith import is_prime
from .errors import InputError
from .families import IntersectionLaw, SetFamily
from .galois import gf


def _family(n: int, sets: list[tuple[int, ...]]) -> SetFamily:
    distinct = len(set(sets)) == len(sets)
    return SetFamily(n, tuple(sets), distinct_required=distinct)


def sunflower(m: int, l: int) -> SetFamily:
    """m petals of size l+1 sharing an l-element core, on n = m + l points.

    Member i is {i} together with the core {m+1, ..., m+l}; every pairwise
    (indeed every t-wise) intersection is exactly the core.
    """
    if m < 1 or l < 0:
        raise InputError("sunflower needs m >= 1 and l >= 0")
    core = tuple(range(m + 1, m + l + 1))
    return _family(m + l, [(i,) + core for i in range(1, m + 1)])


def polynomial_curves(p: int, l: int) -> SetFamily:
    """Graphs of all degree-<=l polynomials over the p*p grid, p prime >= l.

    p^(l+1) members of size p on n = p**2 points; two members meet in at
    most l points because distinct polynomials of degree <= l < p cannot
    agree at l+1 distinct abscissas.  For l = p the members are not all
    distinct (x^p collapses onto x) and the flag records that.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if not 1 <= l <= p:
        raise InputError(f"need 1 <= l <= p, got l={l}, p={p}")
    sets = []
    for coeffs in product(range(p), repeat=l + 1):
        member = []
        for x in range(p):
            y = 0
            for a in reversed(coeffs):
                y = (y * x + a) % p
            member.append(x * p + y + 1)
        sets.append(tuple(sorted(member)))
    return _family(p * p, sets)


def affine_strip_trim(p: int, t: int) -> SetFamily:
    """All p**2 affine lines y = a + b*x restricted to the strip x < p - t.

    Members have size p - t on n = (p - t) * p points and pairwise meet in
    at most one point; the first p**2 - t*p of them witness the lower bound
    for families with as many members as points.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if not 1 <= t < p:
        raise InputError(f"need 1 <= t < p, got t={t}, p={p}")
    width = p - t
    sets = []
    for a, b in product(range(p), repeat=2):
        sets.append(tuple(sorted(x * p + (a + b * x) % p + 1 for x in range(width))))
    return _family(width * p, sets)


def projective_plane(q: int) -> SetFamily:
    """The lines of the order-q projective plane as subsets of its points.

    n = q**2 + q + 1 points and equally many lines, each of size q + 1;
    any two lines meet in exactly one point.  A point lies on a line iff
    the dot product of their coordinate triples vanishes in GF(q).
    """
    field = gf(q)
    points = (
        [(0, 0, 1)]
        + [(0, 1, z) for z in field.elements()]
        + [(1, y, z) for y in field.elements() for z in field.elements()]
    )
    points.sort()
    index = {pt: i + 1 for i, pt in enumerate(points)}
    sets = []
    for line in points:  # lines use the same normalized triples
        members = []
        for pt in points:
            acc = 0
            for u, x in zip(line, pt):
                acc = field.add(acc, field.mul(u, x))
            if acc == 0:
                members.append(index[pt])
        sets.append(tuple(sorted(members)))
    return _family(q * q + q + 1, sets)


def projective_trim(q: int, n: int) -> SetFamily:
    """First n plane lines with their point on a designated line removed.

    The designated line is the lexicographically last one in canonical
    order; points are relabeled so it occupies the top q + 1 labels, hence
    every trimmed line is a q-subset of [q**2].  The result witnesses the
    exact value q for n in [q**2, q**2 + q].
    """
    if not q * q <= n <= q * q + q:
        raise InputError(f"n must lie in [q^2, q^2+q] = [{q * q}, {q * q + q}], got {n}")
    plane = projective_plane(q)
    designated = set(plane.sets[-1])
    relabel = {}
    for old in range(1, plane.n + 1):
        if old not in designated:
            relabel[old] = len(relabel) + 1
    for old in sorted(designated):
        relabel[old] = len(relabel) + 1
    sets = []
    for line in plane.sets[:-1]:
        sets.append(tuple(sorted(relabel[e] for e in line if e not in designated)))
    return _family(n, sets[:n])


def _packing(size: int, m: int, t: int, offset: int, quota: int) -> list[list[int]]:
    """Round-robin B-families: `size` elements, each in at most t-1 members.

    Slots are assigned in row-major order over (element, replica) pairs,
    replica r of element j targeting member (j*(t-1)+r) mod m; a slot aimed
    at a full member is discarded.  Every member ends with exactly `quota`
    elements.
    """
    members: list[list[int]] = [[] for _ in range(m)]
    slot = 0
    for j in range(size):
        for _ in range(t - 1):
            i = slot % m
            slot += 1
            if len(members[i]) < quota:
                members[i].append(offset + j + 1)
    return members


def twise_shared_core(n: int, m: int, t: int, l_s: int) -> SetFamily:
    """One shared l_s-core plus a packing: every t members meet exactly in it.

    The core is the top l_s labels; the rest of [n] is spread so that no
    element lies in t members, giving the uniform size
    floor((n-l_s)(t-1)/m) + l_s.
    """
    if m < t or t < 2 or l_s < 0:
        raise InputError("need m >= t >= 2 and l_s >= 0")
    if (n - l_s) * (t - 1) < m:
        raise InputError(f"need n >= l_s + m/(t-1), got n={n}")
    quota = (n - l_s) * (t - 1) // m
    core = tuple(range(n - l_s + 1, n + 1))
    members = _packing(n - l_s, m, t, 0, quota)
    return _family(n, [tuple(sorted(b)) + core for b in members])


def twise_disjoint_cores(n: int, m: int, t: int, l_s: int) -> SetFamily:
    """One private l_s-core per t-subset of members, plus a packing.

    Core A_T (for the t-subsets T in lexicographic order) takes the next
    l_s labels; member i receives every A_T with i in T plus its packing
    share, so each t-wise intersection is exactly one core.  The uniform
    size is floor(n(t-1)/m + l_s*C(m,t)/m), matching the exact value for
    n >= C(m,t)*l_s.
    """
    if m < t or t < 2 or l_s < 0:
        raise InputError("need m >= t >= 2 and l_s >= 0")
    ncores = comb(m, t)
    if n < ncores * l_s:
        raise InputError(f"need n >= C(m,t)*l_s = {ncores * l_s}, got {n}")
    cores: dict[tuple[int, ...], range] = {}
    base = 0
    for T in combinations(range(1, m + 1), t):
        cores[T] = range(base + 1, base + l_s + 1)
        base += l_s
    quota = (n - ncores * l_s) * (t - 1) // m
    members = _packing(n - ncores * l_s, m, t, base, quota)
    sets = []
    for i in range(1, m + 1):
        member = list(members[i - 1])
        for T, labels in cores.items():
            if i in T:
                member.extend(labels)
        sets.append(tuple(sorted(member)))
    return _family(n, sets)


# Advertised law per construction kind, used by the CLI to re-verify every
# emitted family and recorded in provenance side-records.
def advertised_law(kind: str, params: dict) -> IntersectionLaw:
    if kind == "sunflower":
        return IntersectionLaw.exact(params["l"])
    if kind == "curves":
        return IntersectionLaw.at_most(params["l"])
    if kind in ("strip", "trim"):
        return IntersectionLaw.at_most(1)
    if kind == "plane":
        return IntersectionLaw.exact(1)
    if kind in ("twise-core", "twise-disjoint"):
        return IntersectionLaw.exact(params["l"], t=params["t"])
    raise InputError(f"unknown construction kind {kind!r}")
