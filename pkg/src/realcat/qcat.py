"""Finite real-enriched categories and their constructions.

A category is a finite point list with an exact rational structure
matrix r satisfying r(x,x) = 1 and r(y,z) & r(x,y) <= r(x,z) over an
ambient t-norm.  Points may be strings or tuples (products and hom
objects build tuple-shaped points); all constructions are pure and
return new immutable values, with point orders fixed lexicographically
or row-major so reports are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import NonterminationError, SizeLimitExceeded
from .tnorm import CheckResult, TNorm, meet_residual, tnorm_eval
from .values import ONE, ZERO, unit

Point = object  # str | tuple, hashable

DEFAULT_MAP_CAP = 10**6
DEFAULT_ROUND_CAP = 64


@dataclass(frozen=True)
class QCat:
    """Finite real-enriched category: points + structure matrix + norm."""

    tnorm: TNorm
    points: tuple
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.points)
        if len(set(self.points)) != n:
            raise ValueError("duplicate points")
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix shape does not match point list")
        object.__setattr__(
            self,
            "matrix",
            tuple(tuple(unit(v) for v in row) for row in self.matrix),
        )

    def index(self, p) -> int:
        return self.points.index(p)

    def r(self, p, q) -> Fraction:
        return self.matrix[self.index(p)][self.index(q)]

    def value_set(self) -> set[Fraction]:
        return {v for row in self.matrix for v in row}

    def relabel(self, labels: Sequence) -> "QCat":
        return QCat(self.tnorm, tuple(labels), self.matrix)

    def __len__(self):
        return len(self.points)


def singleton(t: TNorm, point="*") -> QCat:
    """The terminal category on one point."""
    return QCat(t, (point,), ((ONE,),))


def two_point(t: TNorm, a, b, points=("0", "1")) -> QCat:
    """The two-point category with r(0,1) = a and r(1,0) = b.  Every
    pair (a, b) is valid: a & b <= 1 always."""
    a, b = unit(a), unit(b)
    return QCat(t, tuple(points), ((ONE, a), (b, ONE)))


def validate_qcat(c: QCat) -> CheckResult:
    """Check reflexivity and the composition inequality exactly.  A
    failure reports the violating triple and both sides."""
    n = len(c.points)
    for i in range(n):
        if c.matrix[i][i] != ONE:
            return CheckResult(
                False,
                f"r({c.points[i]},{c.points[i]}) = {c.matrix[i][i]} != 1",
                witness=(c.points[i],),
            )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = tnorm_eval(c.tnorm, c.matrix[j][k], c.matrix[i][j])
                if lhs > c.matrix[i][k]:
                    return CheckResult(
                        False,
                        f"r({c.points[j]},{c.points[k]}) & "
                        f"r({c.points[i]},{c.points[j]}) = {lhs} > "
                        f"r({c.points[i]},{c.points[k]}) = {c.matrix[i][k]}",
                        witness=(c.points[i], c.points[j], c.points[k]),
                    )
    return CheckResult(True, "valid")


def is_symmetric(c: QCat) -> bool:
    n = len(c.points)
    return all(
        c.matrix[i][j] == c.matrix[j][i] for i in range(n) for j in range(i)
    )


@dataclass(frozen=True)
class QFunctor:
    """A structure-preserving map between categories."""

    dom: QCat
    cod: QCat
    mapping: tuple  # image of dom.points[i] at position i

    def __post_init__(self):
        if len(self.mapping) != len(self.dom.points):
            raise ValueError("mapping length does not match domain")
        for img in self.mapping:
            if img not in self.cod.points:
                raise ValueError(f"image {img!r} not a codomain point")

    @staticmethod
    def from_dict(dom: QCat, cod: QCat, table: Mapping) -> "QFunctor":
        return QFunctor(dom, cod, tuple(table[p] for p in dom.points))

    def __call__(self, p):
        return self.mapping[self.dom.index(p)]

    def compose_after(self, other: "QFunctor") -> "QFunctor":
        """self o other (other first)."""
        if other.cod.points != self.dom.points:
            raise ValueError("composition mismatch")
        return QFunctor(
            other.dom, self.cod, tuple(self(q) for q in other.mapping)
        )


def is_functor(f: QFunctor) -> bool:
    n = len(f.dom.points)
    cod_idx = [f.cod.index(img) for img in f.mapping]
    for i in range(n):
        for j in range(n):
            if f.dom.matrix[i][j] > f.cod.matrix[cod_idx[i]][cod_idx[j]]:
                return False
    return True


def enumerate_functors(
    a: QCat, b: QCat, max_maps: int = DEFAULT_MAP_CAP
) -> list[QFunctor]:
    """All functors A -> B in lexicographic order of the image table
    (codomain point index order)."""
    total = len(b.points) ** len(a.points)
    if total > max_maps:
        raise SizeLimitExceeded(
            f"{total} candidate maps exceed the cap {max_maps}"
        )
    out = []
    for images in itertools.product(b.points, repeat=len(a.points)):
        f = QFunctor(a, b, images)
        if is_functor(f):
            out.append(f)
    return out


def _pair_points(a: QCat, b: QCat) -> tuple:
    return tuple((p, q) for p in a.points for q in b.points)


def product(a: QCat, b: QCat) -> QCat:
    """Cartesian product: structure is the pointwise meet."""
    _require_same_norm(a, b)
    points = _pair_points(a, b)
    matrix = tuple(
        tuple(
            min(a.r(p1, p2), b.r(q1, q2))
            for (p2, q2) in points
        )
        for (p1, q1) in points
    )
    return QCat(a.tnorm, points, matrix)


def tensor(a: QCat, b: QCat) -> QCat:
    """Tensor product: structure is the pointwise &."""
    _require_same_norm(a, b)
    points = _pair_points(a, b)
    matrix = tuple(
        tuple(
            tnorm_eval(a.tnorm, a.r(p1, p2), b.r(q1, q2))
            for (p2, q2) in points
        )
        for (p1, q1) in points
    )
    return QCat(a.tnorm, points, matrix)


def _require_same_norm(a: QCat, b: QCat):
    if a.tnorm != b.tnorm:
        raise ValueError("categories live over different t-norms")


def hom_tensor(a: QCat, b: QCat, max_maps: int = DEFAULT_MAP_CAP) -> QCat:
    """Function space for the tensor: points are the functors A -> B
    (as image tuples), structure d(f,g) = meet_x s(f x, g x)."""
    functors = enumerate_functors(a, b, max_maps)
    points = tuple(f.mapping for f in functors)
    matrix = tuple(
        tuple(
            min(b.r(f.mapping[i], g.mapping[i]) for i in range(len(a.points)))
            if a.points
            else ONE
            for g in functors
        )
        for f in functors
    )
    return QCat(a.tnorm, points, matrix)


def hom_power(a: QCat, b: QCat, max_maps: int = DEFAULT_MAP_CAP) -> QCat:
    """Power-object candidate for the cartesian product: points are the
    functors A -> B, structure d(f,g) = meet over x,y of
    r(x,y) -> s(f x, g y) with -> the residual of the meet."""
    functors = enumerate_functors(a, b, max_maps)
    points = tuple(f.mapping for f in functors)
    n = len(a.points)
    matrix = tuple(
        tuple(
            min(
                (
                    meet_residual(
                        a.matrix[i][j], b.r(f.mapping[i], g.mapping[j])
                    )
                    for i in range(n)
                    for j in range(n)
                ),
                default=ONE,
            )
            for g in functors
        )
        for f in functors
    )
    return QCat(a.tnorm, points, matrix)


def hom_point_functor(a: QCat, b: QCat, point) -> QFunctor:
    """Rebuild the functor a hom-object point stands for."""
    return QFunctor(a, b, tuple(point))


@dataclass(frozen=True)
class Preord:
    """Crisp preorder: points plus a reflexive transitive relation."""

    points: tuple
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.points)
        for i in range(n):
            if not self.leq[i][i]:
                raise ValueError("relation is not reflexive")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.leq[i][j] and self.leq[j][k] and not self.leq[i][k]:
                        raise ValueError("relation is not transitive")

    def holds(self, p, q) -> bool:
        return self.leq[self.points.index(p)][self.points.index(q)]

    def pairs(self) -> set:
        return {
            (p, q)
            for i, p in enumerate(self.points)
            for j, q in enumerate(self.points)
            if self.leq[i][j]
        }


def por_coreflection(c: QCat) -> Preord:
    """Greatest preorder below r: x <= y iff r(x,y) = 1."""
    n = len(c.points)
    leq = tuple(
        tuple(c.matrix[i][j] == ONE for j in range(n)) for i in range(n)
    )
    return Preord(c.points, leq)


def por_reflection(c: QCat) -> Preord:
    """Least preorder above r: reflexive-transitive closure of
    {(x,y) : r(x,y) != 0}."""
    n = len(c.points)
    leq = [[c.matrix[i][j] != ZERO or i == j for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True
    return Preord(c.points, tuple(tuple(row) for row in leq))


def initial_lift(
    t: TNorm,
    carrier: Sequence,
    sources: Sequence[tuple[Mapping, QCat]],
) -> QCat:
    """Initial structure on the carrier for maps f_i into (X_i, r_i):
    d(x,y) = meet_i r_i(f_i x, f_i y)."""
    carrier = tuple(carrier)
    matrix = []
    for x in carrier:
        row = []
        for y in carrier:
            vals = [cod.r(f[x], f[y]) for f, cod in sources]
            row.append(min(vals) if vals else ONE)
        matrix.append(tuple(row))
    return QCat(t, carrier, tuple(matrix))


def final_lift(
    t: TNorm,
    sinks: Sequence[tuple[QCat, Mapping]],
    carrier: Sequence,
    max_rounds: int = DEFAULT_ROUND_CAP,
) -> QCat:
    """Final structure on the carrier for maps f_i from (X_i, r_i).

    Computed as the least transitive structure above the pushed-forward
    values: seed with joins of r_i over preimage pairs (1 on the
    diagonal, 0 elsewhere) and close under the composition rule
    m(x,z) >= m(y,z) & m(x,y) until fixpoint -- an algebraic path
    closure over the quantale (join, &).  Lukasiewicz-only and crisp
    inputs reach the fixpoint in finitely many rounds; product blocks
    may not, hence the round cap.
    """
    carrier = tuple(carrier)
    idx = {p: i for i, p in enumerate(carrier)}
    n = len(carrier)
    m = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for cat, f in sinks:
        for p in cat.points:
            for q in cat.points:
                i, j = idx[f[p]], idx[f[q]]
                m[i][j] = max(m[i][j], cat.r(p, q))
    for _ in range(max_rounds):
        changed = False
        for i in range(n):
            for j in range(n):
                best = m[i][j]
                for k in range(n):
                    via = tnorm_eval(t, m[k][j], m[i][k])
                    if via > best:
                        best = via
                if best != m[i][j]:
                    m[i][j] = best
                    changed = True
        if not changed:
            return QCat(t, carrier, tuple(tuple(row) for row in m))
    raise NonterminationError(
        f"path closure did not stabilize within {max_rounds} rounds"
    )


def tensor_transpose(a: QCat, b: QCat, c: QCat, f: QFunctor) -> QFunctor:
    """Canonical transposition of f : A (x) B -> C to A -> [B, C] with
    the tensor hom: p maps to the partial functor q |-> f(p, q)."""
    hom_bc = hom_tensor(b, c)
    images = tuple(
        tuple(f((p, q)) for q in b.points) for p in a.points
    )
    return QFunctor(a, hom_bc, images)


def tensor_untranspose(a: QCat, b: QCat, c: QCat, g: QFunctor) -> QFunctor:
    """Inverse of :func:`tensor_transpose`."""
    ab = tensor(a, b)
    images = tuple(g(p)[b.index(q)] for (p, q) in ab.points)
    return QFunctor(ab, c, images)
