"""Interval-module calculus over disjoint unions of type-A quivers.

Indecomposable representations of a type-A quiver are interval modules:
a module with the 0/1 indicator of a contiguous vertex set as dimension
vector, identity maps on arrows inside the support and zero elsewhere.
A homomorphism is a vertexwise family of scalars commuting with the arrow
maps; the constraints chain all scalars on the support overlap together,
so every Hom space is 0- or 1-dimensional.  Over a hereditary algebra
dim Hom - dim Ext^1 is the Euler form of the dimension vectors, which
makes Ext computable from Hom, and tilting modules are exactly the rigid
sets with one summand per vertex.  Everything here is exact integer
arithmetic on supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .matrices import IntVector
from .quiver import UNIT, ValuedQuiver


class UnsupportedComponentError(ValueError):
    """A quiver component falls outside simply-laced type A."""

    def __init__(self, message: str, component: tuple[int, ...] | None = None,
                 signs: tuple[int, ...] | None = None):
        super().__init__(message)
        self.component = component
        self.signs = signs


def _paths_of(
    vertices: tuple[int, ...], arrows: tuple[tuple[int, int], ...]
) -> tuple[tuple[int, ...], ...]:
    """Split into components and return each as a path-ordered vertex tuple."""
    neighbours: dict[int, set[int]] = {v: set() for v in vertices}
    pair_multiplicity: dict[tuple[int, int], int] = {}
    for u, v in arrows:
        if u == v:
            raise UnsupportedComponentError(f"loop at vertex {u}", component=(u,))
        key = (min(u, v), max(u, v))
        pair_multiplicity[key] = pair_multiplicity.get(key, 0) + 1
        neighbours[u].add(v)
        neighbours[v].add(u)
    for (u, v), mult in pair_multiplicity.items():
        if mult > 1:
            raise UnsupportedComponentError(
                f"multiple arrows between {u} and {v}", component=(u, v)
            )
    paths = []
    seen: set[int] = set()
    for start in vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in neighbours[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        edge_count = sum(1 for (u, v) in pair_multiplicity if u in comp)
        if edge_count != len(comp) - 1 or any(len(neighbours[w]) > 2 for w in comp):
            raise UnsupportedComponentError(
                f"component {sorted(comp)} is not a path",
                component=tuple(sorted(comp)),
            )
        first = min(w for w in comp if len(neighbours[w]) <= 1)
        order = [first]
        prev = None
        while True:
            nxt = [w for w in neighbours[order[-1]] if w != prev]
            if not nxt:
                break
            prev = order[-1]
            order.append(nxt[0])
        paths.append(tuple(order))
    return tuple(paths)


@dataclass(frozen=True)
class PathQuiver:
    """Disjoint union of simply-laced type-A quivers on global vertex ids.

    `paths` lists each component's vertices in path order (components by
    minimal vertex, each path starting at its smaller endpoint); it is
    derived from the arrows, never passed in.
    """

    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...] = ()
    paths: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        vset = set(self.vertices)
        for u, v in self.arrows:
            if u not in vset or v not in vset:
                raise ValueError(f"arrow ({u}, {v}) leaves the vertex set")
        object.__setattr__(self, "paths", _paths_of(self.vertices, self.arrows))


def path_quiver(quiver: ValuedQuiver) -> PathQuiver:
    """View a valued quiver as a PathQuiver; rejects anything outside type A."""
    for a in quiver.arrows:
        if a.val != UNIT:
            raise UnsupportedComponentError(
                f"valued arrow {a.src}->{a.tgt} "
                f"({a.val.d_prime},{a.val.d_dprime}) is not simply laced",
                component=(min(a.src, a.tgt), max(a.src, a.tgt)),
            )
    return PathQuiver(
        tuple(quiver.vertices), tuple((a.src, a.tgt) for a in quiver.arrows)
    )


def delete_vertex(quiver: PathQuiver, v: int) -> PathQuiver:
    if v not in quiver.vertices:
        raise ValueError(f"vertex {v} not in the quiver")
    return PathQuiver(
        tuple(w for w in quiver.vertices if w != v),
        tuple(a for a in quiver.arrows if v not in a),
    )


@dataclass(frozen=True)
class IntervalModule:
    """Indecomposable module, identified by its contiguous support set."""

    support: frozenset[int]

    def __post_init__(self) -> None:
        if not self.support:
            raise ValueError("interval support must be non-empty")

    def __repr__(self) -> str:
        return f"Interval({{{','.join(map(str, sorted(self.support)))}}})"


def _interval_key(m: IntervalModule) -> tuple[int, int, tuple[int, ...]]:
    return min(m.support), len(m.support), tuple(sorted(m.support))


def interval(quiver: PathQuiver, support: Iterable[int]) -> IntervalModule:
    """Build an interval module, checking contiguity within one path component."""
    sup = frozenset(support)
    for path in quiver.paths:
        positions = [i for i, w in enumerate(path) if w in sup]
        if not positions:
            continue
        if len(positions) != len(sup) or positions[-1] - positions[0] + 1 != len(sup):
            raise ValueError(f"support {sorted(sup)} is not contiguous")
        return IntervalModule(sup)
    raise ValueError(f"support {sorted(sup)} not inside the quiver")


def intervals(quiver: PathQuiver) -> tuple[IntervalModule, ...]:
    """All interval modules: m(m+1)/2 per m-vertex path, ordered by (min, size)."""
    out = []
    for path in quiver.paths:
        for start in range(len(path)):
            for stop in range(start + 1, len(path) + 1):
                out.append(IntervalModule(frozenset(path[start:stop])))
    return tuple(sorted(out, key=_interval_key))


def indicator(quiver: PathQuiver, support: frozenset[int]) -> IntVector:
    return tuple(1 if v in support else 0 for v in quiver.vertices)


def euler_form(quiver: PathQuiver, x: Sequence[int], y: Sequence[int]) -> int:
    """Hereditary Euler form: sum of x_v y_v minus x_u y_v over arrows u -> v."""
    if len(x) != len(quiver.vertices) or len(y) != len(quiver.vertices):
        raise ValueError("vector length must match the vertex count")
    pos = {v: i for i, v in enumerate(quiver.vertices)}
    total = sum(a * b for a, b in zip(x, y))
    for u, v in quiver.arrows:
        total -= x[pos[u]] * y[pos[v]]
    return total


def _check_over(quiver: PathQuiver, m: IntervalModule) -> None:
    if not m.support <= set(quiver.vertices):
        raise ValueError(f"{m!r} is not a module over this quiver")


def hom_dim(quiver: PathQuiver, m: IntervalModule, n: IntervalModule) -> int:
    """Dimension (0 or 1) of the space of homomorphisms m -> n.

    Solves the commutation system in closed form: scalars on the support
    overlap are chained equal by the arrows inside it, and an arrow u -> v
    forces zero when it maps the overlap outside one of the supports the
    wrong way round (u, v in m with v in n but u not, or u, v in n with
    u in m but v not).
    """
    _check_over(quiver, m)
    _check_over(quiver, n)
    sm, sn = m.support, n.support
    if sm.isdisjoint(sn):
        return 0
    for u, v in quiver.arrows:
        if u in sm and v in sm and v in sn and u not in sn:
            return 0
        if u in sn and v in sn and u in sm and v not in sm:
            return 0
    return 1


def ext_dim(quiver: PathQuiver, m: IntervalModule, n: IntervalModule) -> int:
    """dim Ext^1(m, n) = dim Hom(m, n) - <dim m, dim n>; never negative."""
    value = hom_dim(quiver, m, n) - euler_form(
        quiver, indicator(quiver, m.support), indicator(quiver, n.support)
    )
    if value < 0:
        raise ArithmeticError(
            f"negative Ext dimension between {m!r} and {n!r}: internal bug"
        )
    return value


@dataclass(frozen=True)
class TiltingModule:
    """Rigid module with one indecomposable summand per vertex."""

    summands: tuple[IntervalModule, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.summands, key=_interval_key))
        if len(set(ordered)) != len(ordered):
            raise ValueError("tilting summands must be pairwise distinct")
        object.__setattr__(self, "summands", ordered)

    def supports(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(m.support)) for m in self.summands)


def _rigid(quiver: PathQuiver, m: IntervalModule, n: IntervalModule) -> bool:
    return ext_dim(quiver, m, n) == 0 and ext_dim(quiver, n, m) == 0


def tilting_modules(quiver: PathQuiver) -> tuple[TiltingModule, ...]:
    """Enumerate all tilting modules by backtracking, per component.

    Within each path component the rigid sets with one summand per vertex
    are found over the pairwise Ext-compatibility graph; components are
    then combined as products.  Order is deterministic.
    """
    per_component: list[list[tuple[IntervalModule, ...]]] = []
    for path in quiver.paths:
        path_set = set(path)
        ivs = [m for m in intervals(quiver) if m.support <= path_set]
        need = len(path)
        # compatibility graph as bitmasks: bit j of mask[i] says i, j are rigid
        masks = [0] * len(ivs)
        for i in range(len(ivs)):
            for j in range(i + 1, len(ivs)):
                if _rigid(quiver, ivs[i], ivs[j]):
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        found: list[tuple[IntervalModule, ...]] = []

        def extend(start: int, chosen: list[int], allowed: int) -> None:
            if len(chosen) == need:
                found.append(tuple(ivs[i] for i in chosen))
                return
            if (allowed >> start).bit_count() < need - len(chosen):
                return
            for k in range(start, len(ivs)):
                if (allowed >> k) & 1:
                    chosen.append(k)
                    extend(k + 1, chosen, allowed & masks[k])
                    chosen.pop()

        extend(0, [], (1 << len(ivs)) - 1)
        per_component.append(found)
    return tuple(
        TiltingModule(tuple(m for part in combo for m in part))
        for combo in product(*per_component)
    )


def fac_contains(quiver: PathQuiver, tilt: TiltingModule, x: IntervalModule) -> bool:
    """Whether x lies in the torsion class generated by a tilting module.

    For tilting T over a hereditary algebra, Fac T = {X : Ext^1(T, X) = 0}.
    """
    return all(ext_dim(quiver, t, x) == 0 for t in tilt.summands)


def tilting_hasse(
    quiver: PathQuiver, modules: Sequence[TiltingModule] | None = None
) -> tuple[tuple[int, int], ...]:
    """Mutation arrows between tilting modules, as index pairs.

    Two tilting modules are adjacent when they share all but one summand;
    the arrow points towards the smaller torsion class.  Indices refer to
    the order of tilting_modules(quiver).
    """
    if modules is None:
        modules = tilting_modules(quiver)
    edges: list[tuple[int, int]] = []
    summand_sets = [set(t.summands) for t in modules]
    for i in range(len(modules)):
        for j in range(i + 1, len(modules)):
            diff = summand_sets[i] ^ summand_sets[j]
            if len(diff) != 2:
                continue
            (xi,) = diff & summand_sets[i]
            (xj,) = diff & summand_sets[j]
            forward = fac_contains(quiver, modules[i], xj)
            backward = fac_contains(quiver, modules[j], xi)
            if forward == backward:
                raise ArithmeticError(
                    f"adjacent tilting modules {modules[i]} and {modules[j]} "
                    "have incomparable torsion classes: internal bug"
                )
            edges.append((i, j) if forward else (j, i))
    return tuple(edges)


def bongartz_complete(
    quiver: PathQuiver, summands: Iterable[IntervalModule], missing: int
) -> TiltingModule:
    """Unique completion of an almost-complete rigid module avoiding one vertex.

    `summands` must be tilting over the quiver with `missing` deleted;
    being non-sincere it has exactly one complement, which is returned
    together with the input.  Zero or several complements signal a bug or
    a violated precondition.
    """
    base = tuple(sorted(set(summands), key=_interval_key))
    if missing not in quiver.vertices:
        raise ValueError(f"vertex {missing} not in the quiver")
    if len(base) != len(quiver.vertices) - 1:
        raise ValueError(
            f"expected {len(quiver.vertices) - 1} summands, got {len(base)}"
        )
    for m in base:
        _check_over(quiver, m)
        if missing in m.support:
            raise ValueError(f"{m!r} meets the deleted vertex {missing}")
    for i, m in enumerate(base):
        for n in base[i + 1:]:
            if not _rigid(quiver, m, n):
                raise ValueError(f"{m!r} and {n!r} are not rigid: bad input")
    complements = [
        x
        for x in intervals(quiver)
        if x not in base and all(_rigid(quiver, x, m) for m in base)
    ]
    if len(complements) != 1:
        raise ValueError(
            f"expected exactly one complement, found {len(complements)}"
        )
    return TiltingModule(base + (complements[0],))


def total_dim_vector(quiver: PathQuiver, tilt: TiltingModule) -> IntVector:
    """Dimension vector of a tilting module: sum of the summand indicators."""
    totals = [0] * len(quiver.vertices)
    for m in tilt.summands:
        for i, bit in enumerate(indicator(quiver, m.support)):
            totals[i] += bit
    return tuple(totals)
