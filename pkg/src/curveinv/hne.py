"""Branch decomposition of a reduced plane curve germ.

The germ is resolved by iterated point blow-ups; each multiplicity-one end is
solved as a power series graph and the parametrization is lifted back down
the chart maps, so every branch comes with an exact parametrization
(x(t), y(t)), its chain of infinitely near multiplicities, and its contact
orders with the axes.  Pairwise intersection numbers fall out of the shared
part of the chains.

Every decomposition is certified before it is returned: the parametrization
annihilates the input to past the Bezout bound, the exponent window up to
the conductor proves primitivity, and the multiplicity chains reproduce the
blow-up tree's delta two ways.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import MPoly, squarefree_part
from .blowup import InfinitelyNearTree, run_with_restarts, strict_transform
from .errors import (
    DegenerateDirection,
    InternalCheckError,
    NotReduced,
    NotSingularAtOrigin,
)
from .field import FieldCtx, FieldElement
from .series import (
    ImplicitSeries,
    LazySeries,
    PolySeries,
    Product,
    Sum,
    series_order,
    substitute_series,
)

# An edge in the blow-up tree: (chart, center); the root carries None.
Edge = tuple[str, FieldElement | None] | None


@dataclass
class Branch:
    """One analytically irreducible component through the origin.

    ``ix`` and ``iy`` are the contact orders with the axes x = 0 and y = 0;
    None means the coordinate vanishes identically on the branch (the branch
    is that axis).  ``path`` lists (edge, multiplicity) pairs root-first
    along the branch's chain of infinitely near points.
    """

    x: LazySeries
    y: LazySeries
    path: list[tuple[Edge, int]]
    ix: int | None
    iy: int | None
    mt: int
    tangent: tuple[FieldElement, FieldElement]
    delta: int

    def param(self, prec: int) -> tuple[list[FieldElement], list[FieldElement]]:
        return self.x.truncation(prec), self.y.truncation(prec)


@dataclass
class BranchSet:
    f: MPoly
    ctx: FieldCtx
    branches: list[Branch]
    tree: InfinitelyNearTree
    _pairwise: dict[tuple[int, int], int]

    @property
    def r(self) -> int:
        return len(self.branches)

    @property
    def mt(self) -> int:
        return self.f.order()

    def pairwise(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("a branch has no self-intersection number")
        a, b = min(i, j), max(i, j)
        return self._pairwise[(a, b)]

    def pairwise_total(self) -> int:
        return sum(self._pairwise.values())


@dataclass
class _Raw:
    x: LazySeries
    y: LazySeries
    path: list[tuple[Edge, int]]


def _solve_leaf(g: MPoly) -> _Raw:
    ctx = g.ctx
    t = PolySeries(ctx, [ctx.zero, ctx.one])
    if not g.partial(1).constant_term().is_zero():
        return _Raw(t, ImplicitSeries(g, solve_for="y"), [(None, 1)])
    return _Raw(ImplicitSeries(g, solve_for="x"), t, [(None, 1)])


def _decompose(g: MPoly, prefer: str) -> tuple[InfinitelyNearTree, list[_Raw]]:
    m = g.order()
    node = InfinitelyNearTree(m)
    if m == 1:
        return node, [_solve_leaf(g)]
    ctx = g.ctx
    out: list[_Raw] = []
    total_here = 0
    for ch in strict_transform(g, prefer):
        subtree, subs = _decompose(ch.local_eq, prefer)
        node.children.append((ch.chart, ch.center, subtree))
        c = ctx.zero if ch.center is None else ch.center
        shift = PolySeries(ctx, [c])
        for raw in subs:
            if ch.chart == "x":
                x_new: LazySeries = raw.x
                y_new: LazySeries = Product(raw.x, Sum(raw.y, shift))
            else:
                x_new = Product(raw.y, Sum(raw.x, shift))
                y_new = raw.y
            ox = series_order(x_new, m)
            oy = series_order(y_new, m)
            orders = [o for o in (ox, oy) if o is not None]
            if not orders:
                raise InternalCheckError("lifted parametrization lost its order")
            m_here = min(orders)
            total_here += m_here
            path = [(None, m_here), ((ch.chart, ch.center), raw.path[0][1])]
            path.extend(raw.path[1:])
            out.append(_Raw(x_new, y_new, path))
    if total_here != m:
        raise InternalCheckError("branch multiplicities do not add up to the node order")
    return node, out


def _tangent(
    ctx: FieldCtx, x: LazySeries, y: LazySeries, ix: int | None, iy: int | None
) -> tuple[FieldElement, FieldElement]:
    if ix is None:
        return ctx.zero, ctx.one
    if iy is None or ix < iy:
        return ctx.one, ctx.zero
    if ix > iy:
        return ctx.zero, ctx.one
    return ctx.one, y.coefficient(iy) / x.coefficient(ix)


def _certify(f: MPoly, raw: _Raw, delta_b: int, mt_b: int) -> None:
    bound = (f.degree() + 1) ** 2
    bad = series_order(substitute_series(f, raw.x, raw.y), bound)
    if bad is not None:
        raise InternalCheckError(
            f"parametrization does not annihilate the curve (order {bad})"
        )
    window = 2 * delta_b + mt_b + 1
    exps = [
        n
        for n in range(1, window + 1)
        if not raw.x.coefficient(n).is_zero() or not raw.y.coefficient(n).is_zero()
    ]
    if math.gcd(*exps) != 1:
        raise InternalCheckError("parametrization is not primitive")


def branch_decompose(f: MPoly, *, prefer: str = "x_first", certify: bool = True) -> BranchSet:
    """All branches of the reduced germ f at the origin, over one common field.

    Tangent directions met during resolution that are not rational over the
    coefficient field trigger a field extension and a clean restart, so the
    returned :class:`BranchSet` lives over a single (possibly larger) context.
    """
    if f.is_zero():
        raise NotReduced("the zero polynomial is not reduced")
    if not f.constant_term().is_zero():
        raise NotSingularAtOrigin(
            "branch decomposition was requested for a curve missing the origin"
        )
    _, reduced = squarefree_part(f)
    if not reduced:
        raise NotReduced("the curve has a repeated component")

    f2, (tree, raws) = run_with_restarts(f, lambda g: _decompose(g, prefer))
    ctx = f2.ctx
    deg = f2.degree()

    branches: list[Branch] = []
    for raw in raws:
        ix = series_order(raw.x, deg + 1)
        iy = series_order(raw.y, deg + 1)
        finite = [o for o in (ix, iy) if o is not None]
        if not finite:
            raise InternalCheckError("branch parametrization is identically zero")
        mt_b = min(finite)
        delta_b = sum(m * (m - 1) // 2 for _, m in raw.path)
        if certify:
            _certify(f2, raw, delta_b, mt_b)
        branches.append(
            Branch(
                x=raw.x,
                y=raw.y,
                path=raw.path,
                ix=ix,
                iy=iy,
                mt=mt_b,
                tangent=_tangent(ctx, raw.x, raw.y, ix, iy),
                delta=delta_b,
            )
        )

    if sum(b.mt for b in branches) != f2.order():
        raise InternalCheckError("branch multiplicities do not sum to the germ order")

    pairwise: dict[tuple[int, int], int] = {}
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            pairwise[(i, j)] = _contact(branches[i].path, branches[j].path)

    total = sum(b.delta for b in branches) + sum(pairwise.values())
    if total != tree.delta_contribution():
        raise InternalCheckError("Noether's formula failed on the blow-up tree")

    return BranchSet(f=f2, ctx=ctx, branches=branches, tree=tree, _pairwise=pairwise)


def _contact(pa: list[tuple[Edge, int]], pb: list[tuple[Edge, int]]) -> int:
    """Intersection number of two branches from their multiplicity chains:
    the sum of products of multiplicities over shared infinitely near points."""
    total = pa[0][1] * pb[0][1]
    for (ea, ma), (eb, mb) in zip(pa[1:], pb[1:]):
        if ea != eb:
            break
        total += ma * mb
    return total


def shear(f: MPoly, direction: tuple[FieldElement, FieldElement]) -> MPoly:
    """Coordinate change aligning the tangent line beta*y = alpha*x with y = 0.

    For direction (beta, alpha) returns g(x, z) = f(x, (alpha*x - z)/beta),
    so that g(x, alpha*x - beta*y) = f(x, y) identically; beta = 0 is
    rejected since the line is then vertical.
    """
    beta, alpha = direction
    if beta.is_zero():
        raise DegenerateDirection("the tangent line is the y-axis")
    ctx, vars = f.ctx, f.vars
    x = MPoly.variable(ctx, vars, vars[0])
    y = MPoly.variable(ctx, vars, vars[1])
    inv = beta.inverse()
    g = f.substitute([x, x.scale(alpha * inv) - y.scale(inv)])
    if g.substitute([x, x.scale(alpha) - y.scale(beta)]) != f:
        raise InternalCheckError("shear did not invert exactly")
    return g
