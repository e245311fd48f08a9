"""Set families with restricted intersections, and their verifier.

A :class:`SetFamily` is an ordered list of subsets of {1..n}; an
:class:`IntersectionLaw` prescribes which intersection sizes are allowed
for every t distinct members.  :func:`verify` certifies uniformity,
distinctness (when required) and the law, reporting every violating
tuple up to a configurable cap.

All values are immutable and safe to share across threads; every
operation is a pure function of its inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from functools import cached_property
from itertools import combinations

from .errors import InputError, ParseError

DEFAULT_VIOLATION_CAP = 100


@dataclass(frozen=True)
class IntersectionLaw:
    """Allowed t-wise intersection sizes.

    kind "exact"    -- size must belong to `sizes` (strictly increasing)
    kind "atmost"   -- size must be <= `bound` (same as exact 0..bound)
    kind "positive" -- size must be >= 1 (the classical intersecting case)

    `t` is the wiseness: the law constrains every t distinct members.
    """

    kind: str
    sizes: tuple[int, ...] = ()
    bound: int = 0
    t: int = 2

    def __post_init__(self):
        if self.kind not in ("exact", "atmost", "positive"):
            raise InputError(f"unknown law kind {self.kind!r}")
        if not isinstance(self.t, int) or self.t < 2:
            raise InputError(f"wiseness t must be an integer >= 2, got {self.t!r}")
        if self.kind == "exact":
            s = self.sizes
            if not s or any(not isinstance(v, int) or v < 0 for v in s):
                raise InputError("exact law needs a nonempty tuple of integers >= 0")
            if any(a >= b for a, b in zip(s, s[1:])):
                raise InputError("exact law sizes must be strictly increasing")
        elif self.kind == "atmost":
            if not isinstance(self.bound, int) or self.bound < 0:
                raise InputError("atmost law needs an integer bound >= 0")

    @classmethod
    def exact(cls, *sizes: int, t: int = 2) -> "IntersectionLaw":
        return cls(kind="exact", sizes=tuple(sizes), t=t)

    @classmethod
    def at_most(cls, bound: int, t: int = 2) -> "IntersectionLaw":
        return cls(kind="atmost", bound=bound, t=t)

    @classmethod
    def positive(cls, t: int = 2) -> "IntersectionLaw":
        return cls(kind="positive", t=t)

    @classmethod
    def parse(cls, text: str, t: int = 2) -> "IntersectionLaw":
        """Parse the CLI grammar: "exact:1,3" | "atmost:2" | "positive"."""
        text = text.strip()
        if text == "positive":
            return cls.positive(t=t)
        head, sep, tail = text.partition(":")
        if not sep:
            raise InputError(f"bad law {text!r}: expected exact:..., atmost:... or positive")
        if head == "exact":
            try:
                sizes = tuple(int(v) for v in tail.split(","))
            except ValueError:
                raise InputError(f"bad exact law sizes {tail!r}") from None
            return cls.exact(*sizes, t=t)
        if head == "atmost":
            try:
                bound = int(tail)
            except ValueError:
                raise InputError(f"bad atmost bound {tail!r}") from None
            return cls.at_most(bound, t=t)
        raise InputError(f"unknown law kind {head!r}")

    def __str__(self) -> str:
        if self.kind == "exact":
            return "exact:" + ",".join(str(v) for v in self.sizes)
        if self.kind == "atmost":
            return f"atmost:{self.bound}"
        return "positive"

    def admits(self, size: int) -> bool:
        if self.kind == "exact":
            return size in self.sizes
        if self.kind == "atmost":
            return size <= self.bound
        return size >= 1

    def max_size(self) -> int | None:
        """Largest admitted size l_s, or None for the unbounded positive law."""
        if self.kind == "exact":
            return self.sizes[-1]
        if self.kind == "atmost":
            return self.bound
        return None

    def explicit_sizes(self) -> tuple[int, ...] | None:
        """The admitted sizes as an explicit tuple, or None for positive."""
        if self.kind == "exact":
            return self.sizes
        if self.kind == "atmost":
            return tuple(range(self.bound + 1))
        return None


@dataclass(frozen=True)
class SetFamily:
    """m subsets of {1..n}, each stored as a strictly increasing tuple.

    `distinct_required` records whether the family is meant to consist of
    pairwise distinct members; duplicate members are a verification
    failure, not a construction failure, so the flag does not forbid them.
    """

    n: int
    sets: tuple[tuple[int, ...], ...]
    distinct_required: bool = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"ground-set size must be an integer >= 0, got {self.n!r}")
        object.__setattr__(self, "sets", tuple(tuple(s) for s in self.sets))
        for i, s in enumerate(self.sets):
            for e in s:
                if not isinstance(e, int) or not 1 <= e <= self.n:
                    raise InputError(f"set {i + 1}: element {e!r} outside 1..{self.n}")
            if any(a >= b for a, b in zip(s, s[1:])):
                raise InputError(f"set {i + 1}: elements must strictly increase")

    @classmethod
    def from_iterables(cls, n, sets, distinct_required=True) -> "SetFamily":
        """Build a family, sorting each member (duplicate elements rejected)."""
        return cls(n, tuple(tuple(sorted(s)) for s in sets), distinct_required)

    @property
    def m(self) -> int:
        return len(self.sets)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """One bitmask per member; element e sits at bit e-1."""
        return tuple(sum(1 << (e - 1) for e in s) for s in self.sets)


@dataclass(frozen=True)
class Violation:
    kind: str  # "size" | "duplicate" | "intersection"
    indices: tuple[int, ...]  # 1-based member indices
    size: int | None = None  # offending member or intersection size


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    uniform_k: int | None
    violations: tuple[Violation, ...]
    truncated: bool = False


def verify(
    family: SetFamily,
    law: IntersectionLaw,
    violation_cap: int = DEFAULT_VIOLATION_CAP,
) -> VerificationReport:
    """Certify that `family` is uniform and t-wise law-intersecting.

    Valid iff all members share one size, members are pairwise distinct when
    the family requires it, and every t-subset of members has an admitted
    intersection size.  All C(m, t) tuples are checked; no sampling.  The
    report keeps at most `violation_cap` violation records (the `truncated`
    flag marks overflow) but the `valid` verdict is always exact.

    Empty and single-member families are vacuously valid; `uniform_k` is
    absent for the empty family.
    """
    m = family.m
    violations: list[Violation] = []
    count = 0

    def record(v: Violation):
        nonlocal count
        count += 1
        if len(violations) < violation_cap:
            violations.append(v)

    sizes = [len(s) for s in family.sets]
    uniform_k = None
    if m > 0:
        if all(sz == sizes[0] for sz in sizes):
            uniform_k = sizes[0]
        else:
            for i, sz in enumerate(sizes):
                if sz != sizes[0]:
                    record(Violation("size", (i + 1,), sz))

    if family.distinct_required:
        first_seen: dict[tuple[int, ...], int] = {}
        for i, s in enumerate(family.sets):
            if s in first_seen:
                record(Violation("duplicate", (first_seen[s] + 1, i + 1)))
            else:
                first_seen[s] = i

    t = law.t
    if m >= t:
        masks = family.masks
        for idx in combinations(range(m), t):
            inter = masks[idx[0]]
            for j in idx[1:]:
                inter &= masks[j]
            size = inter.bit_count()
            if not law.admits(size):
                record(Violation("intersection", tuple(i + 1 for i in idx), size))

    return VerificationReport(
        valid=count == 0,
        uniform_k=uniform_k,
        violations=tuple(violations),
        truncated=count > len(violations),
    )


def intersection_profile(family: SetFamily, t: int) -> list[int]:
    """|F_i1 ∩ ... ∩ F_it| for every t-subset of member indices, in
    lexicographic index order."""
    if not 2 <= t <= family.m:
        raise InputError(f"t must satisfy 2 <= t <= m={family.m}, got {t}")
    masks = family.masks
    out = []
    for idx in combinations(range(family.m), t):
        inter = masks[idx[0]]
        for j in idx[1:]:
            inter &= masks[j]
        out.append(inter.bit_count())
    return out


def canonicalize(family: SetFamily) -> SetFamily:
    """Sort the member list lexicographically; idempotent, verdict-preserving."""
    return replace(family, sets=tuple(sorted(family.sets)))


# ---------------------------------------------------------------------------
# File formats.
#
# JSON:  {"n": int, "sets": [[int, ...], ...], "distinct": bool (optional,
#        default true; emitted only when false)}
# Text:  first line n, then one member per line as space-separated elements;
#        blank lines are ignored and '#' starts a comment line.  The text
#        format carries no distinct flag and cannot express empty members.
# ---------------------------------------------------------------------------


def family_to_json(family: SetFamily) -> str:
    obj: dict = {"n": family.n, "sets": [list(s) for s in family.sets]}
    if not family.distinct_required:
        obj["distinct"] = False
    return json.dumps(obj, separators=(",", ":")) + "\n"


def family_from_json(text: str) -> SetFamily:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad family JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError("family JSON must be an object")
    unknown = set(obj) - {"n", "sets", "distinct"}
    if unknown:
        raise ParseError(f"unknown family JSON fields: {sorted(unknown)}")
    if "n" not in obj or "sets" not in obj:
        raise ParseError('family JSON needs fields "n" and "sets"')
    n, sets, distinct = obj["n"], obj["sets"], obj.get("distinct", True)
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError('"n" must be an integer')
    if not isinstance(sets, list) or any(not isinstance(s, list) for s in sets):
        raise ParseError('"sets" must be an array of arrays')
    if not isinstance(distinct, bool):
        raise ParseError('"distinct" must be a boolean')
    return SetFamily(n, tuple(tuple(s) for s in sets), distinct)


def family_to_text(family: SetFamily) -> str:
    lines = [str(family.n)]
    for s in family.sets:
        if not s:
            raise InputError("text format cannot express an empty member; use JSON")
        lines.append(" ".join(str(e) for e in s))
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> SetFamily:
    n = None
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(v) for v in line.split()]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise ParseError(f"line {lineno}: first data line must be the ground-set size")
            n = values[0]
        else:
            sets.append(tuple(values))
    if n is None:
        raise ParseError("empty family file")
    return SetFamily(n, tuple(sets))


def read_family(data: str | bytes, fmt: str | None = None) -> SetFamily:
    """Parse a family from JSON or text; `fmt` in {"json", "text", None-auto}."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if fmt is None:
        stripped = data.lstrip()
        fmt = "json" if stripped.startswith("{") else "text"
    if fmt == "json":
        return family_from_json(data)
    if fmt == "text":
        return family_from_text(data)
    raise InputError(f"unknown family format {fmt!r}")


def write_family(family: SetFamily, fmt: str = "json") -> str:
    if fmt == "json":
        return family_to_json(family)
    if fmt == "text":
        return family_to_text(family)
    raise InputError(f"unknown family format {fmt!r}")
