"""Suitable subsets of the unit square and the subconstructs they cut out.

A suitable set S is closed under pairwise joins and meets (S1), under
swap (S2) and under componentwise & (S3); it determines the full
subconstruct of categories whose value pairs (r(x,y), r(y,x)) all lie
in S.  This module decides membership, checks suitability with failure
witnesses, computes the coreflector C(r) and reflector R(r), and hosts
the cartesian-closedness criteria together with the finite witness
construction for failures of the distributivity identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidWitness, NonterminationError, ProductIrrational
from .intervals import IntervalSet
from .qcat import (
    DEFAULT_ROUND_CAP,
    QCat,
    final_lift,
    product,
    two_point,
)
from .tnorm import (
    CheckResult,
    TNorm,
    k_subset_of_m,
    sqrt_with,
    subquantale_check,
    tnorm_eval,
)
from .values import ONE, ZERO, unit

Pair = tuple[Fraction, Fraction]


class SuitableVariant(str, Enum):
    K_SQUARE = "k_square"
    K_DIAGONAL = "k_diagonal"
    SQRT_BAND = "sqrt_band"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class SuitableSet:
    """Symbolic description of a subset of [0,1]^2.

    k is required for the K_SQUARE / K_DIAGONAL variants, pairs for
    EXPLICIT; SQRT_BAND is fully determined by the t-norm.
    """

    tnorm: TNorm
    variant: SuitableVariant
    k: Optional[IntervalSet] = None
    pairs: Optional[frozenset] = None

    def __post_init__(self):
        if self.variant in (SuitableVariant.K_SQUARE, SuitableVariant.K_DIAGONAL):
            if self.k is None:
                raise ValueError(f"{self.variant.value} needs a carrier set K")
        if self.variant is SuitableVariant.EXPLICIT:
            if self.pairs is None:
                raise ValueError("explicit variant needs a pair set")
            object.__setattr__(
                self,
                "pairs",
                frozenset((unit(a), unit(b)) for a, b in self.pairs),
            )


def k_square(t: TNorm, k: IntervalSet) -> SuitableSet:
    return SuitableSet(t, SuitableVariant.K_SQUARE, k=k)


def k_diagonal(t: TNorm, k: IntervalSet) -> SuitableSet:
    return SuitableSet(t, SuitableVariant.K_DIAGONAL, k=k)


def sqrt_band(t: TNorm) -> SuitableSet:
    return SuitableSet(t, SuitableVariant.SQRT_BAND)


def explicit(t: TNorm, pairs) -> SuitableSet:
    return SuitableSet(t, SuitableVariant.EXPLICIT, pairs=frozenset(pairs))


def contains(s: SuitableSet, pair: Pair) -> bool:
    """Exact membership.  The square-root band is decided without
    computing roots, via the Galois characterization
    (x, y) in S  iff  x & x <= y and y & y <= x."""
    a, b = unit(pair[0]), unit(pair[1])
    if s.variant is SuitableVariant.K_SQUARE:
        return a in s.k and b in s.k
    if s.variant is SuitableVariant.K_DIAGONAL:
        return a == b and a in s.k
    if s.variant is SuitableVariant.SQRT_BAND:
        t = s.tnorm
        return tnorm_eval(t, a, a) <= b and tnorm_eval(t, b, b) <= a
    return (a, b) in s.pairs


def _pair_join(p: Pair, q: Pair) -> Pair:
    return (max(p[0], q[0]), max(p[1], q[1]))


def _pair_meet(p: Pair, q: Pair) -> Pair:
    return (min(p[0], q[0]), min(p[1], q[1]))


def _pair_tensor(t: TNorm, p: Pair, q: Pair) -> Pair:
    return (tnorm_eval(t, p[0], q[0]), tnorm_eval(t, p[1], q[1]))


def _closure_check(s: SuitableSet, members: Sequence[Pair]) -> CheckResult:
    """S1-S3 on a finite sample of members; first violation wins."""
    t = s.tnorm
    for p in members:
        if not contains(s, (p[1], p[0])):
            return CheckResult(False, f"S2 fails: swap of {p} missing", witness=p)
    for p in members:
        for q in members:
            j, m, w = _pair_join(p, q), _pair_meet(p, q), _pair_tensor(t, p, q)
            if not contains(s, j):
                return CheckResult(
                    False, f"S1 fails: join of {p}, {q} = {j} missing", witness=(p, q)
                )
            if not contains(s, m):
                return CheckResult(
                    False, f"S1 fails: meet of {p}, {q} = {m} missing", witness=(p, q)
                )
            if not contains(s, w):
                return CheckResult(
                    False, f"S3 fails: {p} & {q} = {w} missing", witness=(p, q)
                )
    return CheckResult(True, "S1-S3 hold on the tested members")


def check_suitable(
    s: SuitableSet, grid: Optional[Sequence[Fraction]] = None
) -> CheckResult:
    """Verify S1-S3.

    EXPLICIT sets are checked exhaustively.  K_SQUARE and K_DIAGONAL
    reduce to the subquantale check on K (join/meet and swap closure
    are automatic for those shapes).  The square-root band is verified
    on canonical members generated from the grid and block endpoints:
    for each grid value x, the extremal members (x, x & x) and
    (x, sqrt x), which generate the band under S1.
    """
    if s.variant is SuitableVariant.EXPLICIT:
        return _closure_check(s, sorted(s.pairs))
    if s.variant in (SuitableVariant.K_SQUARE, SuitableVariant.K_DIAGONAL):
        return subquantale_check(s.tnorm, s.k)
    # SQRT_BAND
    values = set(grid or ())
    for b in s.tnorm.blocks:
        values.update((b.lo, b.hi))
    values.update((ZERO, ONE))
    members = []
    ordered = sorted(values)
    t = s.tnorm
    for x in ordered:
        members.append((x, tnorm_eval(t, x, x)))
        try:
            members.append((x, sqrt_with(t, x)))
        except ProductIrrational:
            # the extremal member (x, sqrt x) is irrational; substitute
            # the largest rational band partner available in the sample
            partners = [
                v
                for v in ordered
                if tnorm_eval(t, v, v) <= x and tnorm_eval(t, x, x) <= v
            ]
            members.append((x, max(partners)))
    return _closure_check(s, members)


def is_in_cat_s(s: SuitableSet, c: QCat) -> bool:
    n = len(c.points)
    return all(
        contains(s, (c.matrix[i][j], c.matrix[j][i]))
        for i in range(n)
        for j in range(n)
    )


def _largest_below(s: SuitableSet, a: Fraction, b: Fraction) -> Pair:
    """The componentwise-largest S-pair below (a, b); exists by S1/S2."""
    if s.variant is SuitableVariant.K_SQUARE:
        p, q = s.k.max_below(a), s.k.max_below(b)
        if p is None or q is None:
            raise ValueError("K has no member below a structure value")
        return (p, q)
    if s.variant is SuitableVariant.K_DIAGONAL:
        p = s.k.max_below(min(a, b))
        if p is None:
            raise ValueError("K has no member below a structure value")
        return (p, p)
    if s.variant is SuitableVariant.SQRT_BAND:
        t = s.tnorm
        return (min(a, sqrt_with(t, b)), min(b, sqrt_with(t, a)))
    candidates = [m for m in s.pairs if m[0] <= a and m[1] <= b]
    if not candidates:
        raise ValueError(f"no explicit member below ({a}, {b})")
    best = (max(m[0] for m in candidates), max(m[1] for m in candidates))
    if best not in s.pairs:
        raise ValueError("explicit set is not join-closed below the target")
    return best


def _least_above(s: SuitableSet, a: Fraction, b: Fraction) -> Pair:
    """The componentwise-least S-pair above (a, b); exists by S1/S2."""
    if s.variant is SuitableVariant.K_SQUARE:
        p, q = s.k.min_above(a), s.k.min_above(b)
        if p is None or q is None:
            raise ValueError("K has no member above a structure value")
        return (p, q)
    if s.variant is SuitableVariant.K_DIAGONAL:
        p = s.k.min_above(max(a, b))
        if p is None:
            raise ValueError("K has no member above a structure value")
        return (p, p)
    if s.variant is SuitableVariant.SQRT_BAND:
        t = s.tnorm
        return (
            max(a, tnorm_eval(t, b, b)),
            max(b, tnorm_eval(t, a, a)),
        )
    candidates = [m for m in s.pairs if m[0] >= a and m[1] >= b]
    if not candidates:
        raise ValueError(f"no explicit member above ({a}, {b})")
    best = (min(m[0] for m in candidates), min(m[1] for m in candidates))
    if best not in s.pairs:
        raise ValueError("explicit set is not meet-closed above the target")
    return best


def coreflect_c(s: SuitableSet, c: QCat) -> QCat:
    """C(r): per point pair, the largest S-pair componentwise below
    (r(x,y), r(y,x)).  The output lies in Cat_S, is <= r entrywise and
    is a valid category."""
    n = len(c.points)
    m = [[c.matrix[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p, q = _largest_below(s, c.matrix[i][j], c.matrix[j][i])
            m[i][j], m[j][i] = p, q
    return QCat(c.tnorm, c.points, tuple(tuple(row) for row in m))


def reflect_r(
    s: SuitableSet, c: QCat, max_rounds: int = DEFAULT_ROUND_CAP
) -> QCat:
    """R(r): least Cat_S structure above r.

    Alternates raising each pair to the least S-pair above it with one
    path-closure sweep until fixpoint.  Terminates exactly whenever all
    blocks are Lukasiewicz (the generated value set is finite); product
    blocks fall under the round cap.
    """
    t = c.tnorm
    n = len(c.points)
    m = [[c.matrix[i][j] for j in range(n)] for i in range(n)]
    for _ in range(max_rounds):
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                p, q = _least_above(s, m[i][j], m[j][i])
                if (p, q) != (m[i][j], m[j][i]):
                    m[i][j], m[j][i] = p, q
                    changed = True
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                best = m[i][j]
                for k in range(n):
                    via = tnorm_eval(t, m[k][j], m[i][k])
                    if via > best:
                        best = via
                if best != m[i][j]:
                    m[i][j] = best
                    changed = True
        if not changed:
            return QCat(t, c.points, tuple(tuple(row) for row in m))
    raise NonterminationError(
        f"reflector did not stabilize within {max_rounds} rounds"
    )


def ccc_criterion(t: TNorm, k: IntervalSet) -> bool:
    """Decidable cartesian-closedness criterion for K-Cat: every a in K
    has a & a idempotent, i.e. K is contained in M."""
    return k_subset_of_m(t, k)


def ccc_identity_check(
    t: TNorm, k: IntervalSet, grid: Sequence[Fraction]
) -> CheckResult:
    """Exhaustively test (u & v) ^ r = ((u ^ r) & v) v ((v ^ r) & u)
    over grid^3.  Enumeration is lexicographic with each coordinate
    scanned downward from 1, so the reported witness is the greatest
    failing triple; near the top of K is where the idempotency of a & a
    breaks, so this yields the canonical textbook instances."""
    for a in grid:
        if a not in k:
            raise ValueError(f"grid value {a} outside K")
    ordered = sorted(set(grid), reverse=True)
    for u in ordered:
        for v in ordered:
            for r in ordered:
                lhs = min(tnorm_eval(t, u, v), r)
                rhs = max(
                    tnorm_eval(t, min(u, r), v),
                    tnorm_eval(t, min(v, r), u),
                )
                if lhs != rhs:
                    return CheckResult(
                        False,
                        f"identity fails at (u,v,r)=({u},{v},{r}): "
                        f"lhs={lhs}, rhs={rhs}",
                        witness=(u, v, r),
                    )
    return CheckResult(True, "identity holds on the grid cube")


@dataclass(frozen=True)
class CCCWitness:
    """Finite witness that A x - fails to preserve a final sink.

    lhs is the product structure value (u & v) ^ r at the pair
    ((0,x),(1,y)); rhs is the final-lift value there.  lhs != rhs."""

    u: Fraction
    v: Fraction
    r: Fraction
    lhs: Fraction
    rhs: Fraction
    cat_a: QCat
    cat_b: QCat
    cat_c: QCat
    cat_d: QCat


def ccc_witness(t: TNorm, u, v, r) -> CCCWitness:
    """Build the four categories of the failure construction and show
    that the final lift of {A x B -> A x D, A x C -> A x D} disagrees
    with the product structure at ((0,x),(1,y))."""
    u, v, r = unit(u), unit(v), unit(r)
    uv = tnorm_eval(t, u, v)
    lhs = min(uv, r)
    rhs = max(
        tnorm_eval(t, min(u, r), v),
        tnorm_eval(t, min(v, r), u),
    )
    if lhs == rhs:
        raise InvalidWitness(
            f"the identity holds at (u,v,r)=({u},{v},{r}); no witness"
        )
    a = two_point(t, r, r)
    b = QCat(t, ("x", "z"), ((ONE, u), (u, ONE)))
    c = QCat(t, ("z", "y"), ((ONE, v), (v, ONE)))
    d = QCat(
        t,
        ("x", "z", "y"),
        ((ONE, u, uv), (u, ONE, v), (uv, v, ONE)),
    )
    ab, ac, ad = product(a, b), product(a, c), product(a, d)
    sink_b = {p: p for p in ab.points}
    sink_c = {p: p for p in ac.points}
    lifted = final_lift(t, [(ab, sink_b), (ac, sink_c)], ad.points)
    assert ad.r(("0", "x"), ("1", "y")) == lhs
    assert lifted.r(("0", "x"), ("1", "y")) == rhs
    return CCCWitness(u, v, r, lhs, rhs, a, b, c, d)


def power_existence_check(
    c: QCat, k: IntervalSet, grid: Sequence[Fraction]
) -> CheckResult:
    """Test the power-object existence inequality
    (u & v) ^ r(x,y) <= join_z (u ^ r(x,z)) & (v ^ r(z,y))
    for all grid u, v and point pairs.  The grid approximates the
    quantifier over all of K; the exact decision is ccc_criterion."""
    t = c.tnorm
    n = len(c.points)
    for a in grid:
        if a not in k:
            raise ValueError(f"grid value {a} outside K")
    for u in grid:
        for v in grid:
            for i in range(n):
                for j in range(n):
                    lhs = min(tnorm_eval(t, u, v), c.matrix[i][j])
                    rhs = max(
                        tnorm_eval(
                            t,
                            min(u, c.matrix[i][z]),
                            min(v, c.matrix[z][j]),
                        )
                        for z in range(n)
                    )
                    if lhs > rhs:
                        return CheckResult(
                            False,
                            f"inequality fails at u={u}, v={v}, pair "
                            f"({c.points[i]},{c.points[j]}): {lhs} > {rhs}",
                            witness=(u, v, c.points[i], c.points[j]),
                        )
    return CheckResult(True, "power existence inequality holds on the grid")
