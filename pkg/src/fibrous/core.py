"""Finite fibrous preorders: exact representation and exhaustive checks.

A finite instance is a projection ``p`` from fibre elements to base points,
a related-points bitset ``R[a]`` per element, and a refinement table ``d``
defined on exactly the related pairs.  The checks here are exhaustive, so a
passing report is a proof at this carrier size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import bits, from_points, is_subset, to_points
from .report import AxiomReport, Collector, FormatError, StructureError


@dataclass(frozen=True)
class FinFibrousPreorder:
    """Finite carrier with base points ``0..nB-1`` and elements ``0..nA-1``.

    ``p[a]`` is the point of element ``a``; ``R[a]`` the bitset of points
    related to ``a``; ``d[(a, b)]`` a refining element, present for exactly
    the pairs with ``b`` set in ``R[a]``.  Values are immutable once built;
    the constructor enforces the structural invariants and raises
    :class:`StructureError` otherwise.
    """

    nB: int
    nA: int
    p: tuple[int, ...]
    R: tuple[int, ...]
    d: dict[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "R", tuple(self.R))
        if self.nB < 0 or self.nA < 0:
            raise StructureError("sizes must be non-negative")
        if len(self.p) != self.nA:
            raise StructureError(f"p has {len(self.p)} entries, expected {self.nA}")
        if len(self.R) != self.nA:
            raise StructureError(f"R has {len(self.R)} rows, expected {self.nA}")
        top = (1 << self.nB) - 1
        for a, x in enumerate(self.p):
            if not 0 <= x < self.nB:
                raise StructureError(f"p[{a}]={x} out of range")
        for a, row in enumerate(self.R):
            if not 0 <= row <= top:
                raise StructureError(f"R[{a}] has bits outside the base set")
        expected = {(a, b) for a in range(self.nA) for b in bits(self.R[a])}
        actual = set(self.d)
        if actual != expected:
            missing = sorted(expected - actual)
            extra = sorted(actual - expected)
            raise StructureError(
                "refinement table must cover exactly the related pairs"
                f" (missing {missing[:3]}, extra {extra[:3]})"
            )
        for (a, b), t in self.d.items():
            if not 0 <= t < self.nA:
                raise StructureError(f"d[{(a, b)}]={t} out of range")

    def fiber(self, x: int) -> tuple[int, ...]:
        """Indices of the elements sitting over point ``x``."""
        return tuple(a for a in range(self.nA) if self.p[a] == x)


@dataclass(frozen=True)
class SpatialWitness:
    """Section ``s`` of the projection plus a fiberwise meet table ``m``.

    ``m`` must be defined for exactly the ordered element pairs with equal
    projection; this is validated against a carrier by :func:`check_axioms`.
    """

    s: tuple[int, ...]
    m: dict[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))


@dataclass(frozen=True)
class EquivalenceWitness:
    """Fiber maps ``phi`` and ``gamma`` certifying two carriers present the
    same neighborhoods over a shared base (checked by
    :func:`verify_equivalence`)."""

    phi: tuple[int, ...]
    gamma: tuple[int, ...]


def validate_witness(X: FinFibrousPreorder, w: SpatialWitness) -> None:
    """Raise :class:`StructureError` unless ``w`` is structurally valid for ``X``."""
    if len(w.s) != X.nB:
        raise StructureError(f"s has {len(w.s)} entries, expected {X.nB}")
    for y, t in enumerate(w.s):
        if not 0 <= t < X.nA:
            raise StructureError(f"s[{y}]={t} out of range")
    expected = {
        (a, a2)
        for a in range(X.nA)
        for a2 in range(X.nA)
        if X.p[a] == X.p[a2]
    }
    if set(w.m) != expected:
        raise StructureError("meet table must cover exactly the same-fiber pairs")
    for key, t in w.m.items():
        if not 0 <= t < X.nA:
            raise StructureError(f"m[{key}]={t} out of range")


def check_axioms(
    X: FinFibrousPreorder,
    w: SpatialWitness | None = None,
    verbose: bool = False,
) -> AxiomReport:
    """Exhaustively check F1-F3 on ``X`` and, if ``w`` is given, F4-F6.

    F1: the refinement of (a, b) projects to b.
    F2: every element is related to its own point.
    F3: the refinement's neighborhood is contained in the original one.
    F4: the section is a section.
    F5: meets stay in their fiber.
    F6: a meet's neighborhood is contained in both arguments' neighborhoods.

    Each violation carries a witness tuple of indices.  Structural problems
    raise :class:`StructureError` instead of being reported as violations.
    """
    col = Collector(verbose)
    for (a, b), t in sorted(X.d.items()):
        if X.p[t] != b:
            col.add("F1", (a, b))
        escaped = X.R[t] & ~X.R[a]
        if escaped:
            col.add("F3", (a, b, next(bits(escaped))))
    for a in range(X.nA):
        if not X.R[a] >> X.p[a] & 1:
            col.add("F2", (a,))
    if w is not None:
        validate_witness(X, w)
        for y, t in enumerate(w.s):
            if X.p[t] != y:
                col.add("F4", (y,))
        for (a, a2), t in sorted(w.m.items()):
            if X.p[t] != X.p[a]:
                col.add("F5", (a, a2))
            escaped = X.R[t] & ~(X.R[a] & X.R[a2])
            if escaped:
                col.add("F6", (a, a2, next(bits(escaped))))
    return col.report()


def neighborhood(X: FinFibrousPreorder, a: int) -> int:
    """Bitset of points related to element ``a``."""
    if not 0 <= a < X.nA:
        raise IndexError(f"element {a} out of range 0..{X.nA - 1}")
    return X.R[a]


def _cover(src: FinFibrousPreorder, dst: FinFibrousPreorder) -> tuple[int, ...] | None:
    # For each src element, least dst element over the same point whose
    # neighborhood is contained in the src neighborhood.
    out = []
    for a in range(src.nA):
        for a2 in range(dst.nA):
            if dst.p[a2] == src.p[a] and is_subset(dst.R[a2], src.R[a]):
                out.append(a2)
                break
        else:
            return None
    return tuple(out)


def find_equivalence(
    X: FinFibrousPreorder, Xp: FinFibrousPreorder
) -> EquivalenceWitness | None:
    """Search for an equivalence witness between two carriers over one base.

    Returns a witness iff every element on each side is covered by one on
    the other side (same point, smaller-or-equal neighborhood); the search
    is complete, so ``None`` means no witness exists.  Choice rule: when the
    two carriers have identical projection and neighborhood tables the
    identity maps are returned, otherwise the least admissible index.
    """
    if X.nB != Xp.nB:
        raise ValueError(f"base sizes differ ({X.nB} vs {Xp.nB})")
    if X.nA == Xp.nA and X.p == Xp.p and X.R == Xp.R:
        ident = tuple(range(X.nA))
        return EquivalenceWitness(ident, ident)
    phi = _cover(X, Xp)
    if phi is None:
        return None
    gamma = _cover(Xp, X)
    if gamma is None:
        return None
    return EquivalenceWitness(phi, gamma)


def verify_equivalence(
    X: FinFibrousPreorder,
    Xp: FinFibrousPreorder,
    w: EquivalenceWitness,
    verbose: bool = False,
) -> AxiomReport:
    """Check the commuting squares and the F9/F10 neighborhood inclusions."""
    if X.nB != Xp.nB:
        raise ValueError(f"base sizes differ ({X.nB} vs {Xp.nB})")
    if len(w.phi) != X.nA or any(not 0 <= t < Xp.nA for t in w.phi):
        raise StructureError("phi is not a total map into the second carrier")
    if len(w.gamma) != Xp.nA or any(not 0 <= t < X.nA for t in w.gamma):
        raise StructureError("gamma is not a total map into the first carrier")
    col = Collector(verbose)
    for a, t in enumerate(w.phi):
        if Xp.p[t] != X.p[a]:
            col.add("P-PHI", (a,))
        escaped = Xp.R[t] & ~X.R[a]
        if escaped:
            col.add("F9", (a, next(bits(escaped))))
    for a2, t in enumerate(w.gamma):
        if X.p[t] != Xp.p[a2]:
            col.add("P-GAMMA", (a2,))
        escaped = X.R[t] & ~Xp.R[a2]
        if escaped:
            col.add("F10", (a2, next(bits(escaped))))
    return col.report()


def find_umap(
    X: FinFibrousPreorder,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Look for a section picking a minimum-neighborhood element per fiber.

    Returns ``(u, R0)`` where ``u[x]`` is the least element over ``x`` whose
    neighborhood is contained in every neighborhood in that fiber, and
    ``R0[x]`` is that neighborhood (a reflexive transitive relation on the
    base when ``X`` passes F1-F3).  ``None`` iff some fiber is empty or has
    no minimum.
    """
    u = []
    for x in range(X.nB):
        fiber = X.fiber(x)
        if not fiber:
            return None
        meet = ~0
        for a in fiber:
            meet &= X.R[a]
        for a in fiber:
            if X.R[a] == meet:
                u.append(a)
                break
        else:
            return None
    return tuple(u), tuple(X.R[u[x]] for x in range(X.nB))


def preorder_to_json(
    X: FinFibrousPreorder, w: SpatialWitness | None = None
) -> dict:
    """JSON object form; indices canonical, rows as sorted point lists."""
    obj = {
        "nB": X.nB,
        "nA": X.nA,
        "p": list(X.p),
        "R": [to_points(row) for row in X.R],
        "d": [[a, b, t] for (a, b), t in sorted(X.d.items())],
    }
    if w is not None:
        obj["s"] = list(w.s)
        obj["m"] = [[a, a2, t] for (a, a2), t in sorted(w.m.items())]
    return obj


def _expect_int_list(obj, key: str) -> list[int]:
    val = obj.get(key)
    if not isinstance(val, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in val
    ):
        raise FormatError(f'"{key}" must be a list of integers')
    return val


def _expect_triples(obj, key: str) -> list[list[int]]:
    val = obj.get(key)
    if not isinstance(val, list) or not all(
        isinstance(row, list)
        and len(row) == 3
        and all(isinstance(v, int) and not isinstance(v, bool) for v in row)
        for row in val
    ):
        raise FormatError(f'"{key}" must be a list of [int, int, int] triples')
    return val


def preorder_from_json(obj) -> tuple[FinFibrousPreorder, SpatialWitness | None]:
    """Parse the JSON object form; schema errors raise :class:`FormatError`,
    semantic breaches :class:`StructureError`."""
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    for key in ("nB", "nA", "p", "R", "d"):
        if key not in obj:
            raise FormatError(f'missing key "{key}"')
    nB, nA = obj["nB"], obj["nA"]
    if not isinstance(nB, int) or not isinstance(nA, int):
        raise FormatError('"nB" and "nA" must be integers')
    p = _expect_int_list(obj, "p")
    rows = obj["R"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError('"R" must be a list of point lists')
    try:
        R = tuple(from_points(row, nB) for row in rows)
    except (ValueError, TypeError) as exc:
        raise FormatError(f'bad "R" row: {exc}') from None
    d = {(a, b): t for a, b, t in _expect_triples(obj, "d")}
    X = FinFibrousPreorder(nB, nA, tuple(p), R, d)
    has_s, has_m = "s" in obj, "m" in obj
    if has_s != has_m:
        raise FormatError('"s" and "m" must be given together')
    if not has_s:
        return X, None
    s = tuple(_expect_int_list(obj, "s"))
    m = {(a, a2): t for a, a2, t in _expect_triples(obj, "m")}
    w = SpatialWitness(s, m)
    validate_witness(X, w)
    return X, w
