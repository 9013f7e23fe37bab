"""Valued quivers presenting radical-square-zero algebras.

Vertices are numbered 1..n.  Every arrow carries a valuation, a pair
(d', d'') of positive integers; an ordinary quiver is encoded by merging m
parallel arrows into a single arrow valued (m, m).  After normalization a
quiver holds at most one arrow per ordered vertex pair; loops are allowed.

All values are immutable and every operation is a pure function, so shared
instances are safe to use concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

SignVector = tuple[int, ...]


class QuiverError(ValueError):
    """Malformed quiver data, sign vector, or quiver file."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def check_signs(signs: Sequence[int], n: int) -> SignVector:
    """Validate a +/-1 vector of length n and return it as a tuple."""
    out = tuple(signs)
    if len(out) != n:
        raise QuiverError(f"sign vector has length {len(out)}, expected {n}")
    if any(s not in (1, -1) for s in out):
        raise QuiverError(f"sign vector entries must be +1 or -1, got {out}")
    return out


@dataclass(frozen=True, order=True)
class Valuation:
    """Arrow valuation (d', d'').

    d' counts the multiplicity of the target simple in the radical of the
    source projective; d'' is the dimension on the other side.
    """

    d_prime: int
    d_dprime: int

    def __post_init__(self) -> None:
        if self.d_prime < 1 or self.d_dprime < 1:
            raise QuiverError(
                f"valuation entries must be positive, got ({self.d_prime}, {self.d_dprime})"
            )

    def transposed(self) -> Valuation:
        return Valuation(self.d_dprime, self.d_prime)

    def unordered(self) -> tuple[int, int]:
        lo, hi = sorted((self.d_prime, self.d_dprime))
        return lo, hi


UNIT = Valuation(1, 1)


@dataclass(frozen=True, order=True)
class Arrow:
    src: int
    tgt: int
    val: Valuation = UNIT


@dataclass(frozen=True)
class ValuedQuiver:
    """Finite valued quiver on vertices 1..n, at most one arrow per ordered pair."""

    n: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise QuiverError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        seen: set[tuple[int, int]] = set()
        for a in self.arrows:
            if not (1 <= a.src <= self.n and 1 <= a.tgt <= self.n):
                raise QuiverError(f"arrow {a.src}->{a.tgt} outside vertex range 1..{self.n}")
            if (a.src, a.tgt) in seen:
                raise QuiverError(
                    f"two arrows on the ordered pair ({a.src}, {a.tgt}); merge with normalize()"
                )
            seen.add((a.src, a.tgt))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow_map(self) -> dict[tuple[int, int], Valuation]:
        return {(a.src, a.tgt): a.val for a in self.arrows}


RawArrow = tuple  # (src, tgt) for a unit arrow or (src, tgt, d', d'')


def normalize(n: int, raw_arrows: Iterable[RawArrow]) -> ValuedQuiver:
    """Merge parallel unit arrows into valued ones and build a quiver.

    For each ordered pair, m plain arrows become one arrow valued (m, m).
    An explicitly valued arrow must be the only entry on its pair; mixing
    it with plain duplicates (or another valued arrow) is rejected as
    ambiguous.
    """
    units: dict[tuple[int, int], int] = {}
    valued: dict[tuple[int, int], list[Valuation]] = {}
    for raw in raw_arrows:
        if len(raw) == 2:
            src, tgt = raw
            units[(src, tgt)] = units.get((src, tgt), 0) + 1
        elif len(raw) == 4:
            src, tgt, dp, dd = raw
            valued.setdefault((src, tgt), []).append(Valuation(dp, dd))
        else:
            raise QuiverError(f"arrow entry must have 2 or 4 fields, got {raw!r}")
    arrows: list[Arrow] = []
    for pair, vals in valued.items():
        if len(vals) > 1 or pair in units:
            raise QuiverError(
                f"pair ({pair[0]}, {pair[1]}) mixes an explicit valuation with parallel arrows"
            )
        arrows.append(Arrow(pair[0], pair[1], vals[0]))
    for pair, mult in units.items():
        arrows.append(Arrow(pair[0], pair[1], Valuation(mult, mult)))
    return ValuedQuiver(n, tuple(arrows))


def parse_quiver(text: str) -> ValuedQuiver:
    """Parse the line-based quiver file format.

    `n <count>` must be the first non-comment line, exactly once;
    `a <src> <tgt>` adds a unit arrow (repetition allowed), and
    `a <src> <tgt> <d'> <d''>` a valued one.  '#' starts a comment.
    Errors carry 1-based line numbers.
    """
    n: int | None = None
    raw: list[RawArrow] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        keyword, rest = fields[0], fields[1:]
        try:
            values = [int(f) for f in rest]
        except ValueError:
            raise QuiverError(f"non-integer field in {body!r}", line=lineno) from None
        if keyword == "n":
            if n is not None:
                raise QuiverError("repeated 'n' line", line=lineno)
            if len(values) != 1:
                raise QuiverError("'n' takes exactly one integer", line=lineno)
            if values[0] < 1:
                raise QuiverError(f"vertex count must be positive, got {values[0]}", line=lineno)
            n = values[0]
        elif keyword == "a":
            if n is None:
                raise QuiverError("'a' line before the 'n' line", line=lineno)
            if len(values) not in (2, 4):
                raise QuiverError("'a' takes 2 or 4 integers", line=lineno)
            if not (1 <= values[0] <= n and 1 <= values[1] <= n):
                raise QuiverError(
                    f"vertex index outside 1..{n} in {body!r}", line=lineno
                )
            if len(values) == 4 and (values[2] < 1 or values[3] < 1):
                raise QuiverError(f"non-positive valuation in {body!r}", line=lineno)
            raw.append(tuple(values))
        else:
            raise QuiverError(f"unknown directive {keyword!r}", line=lineno)
    if n is None:
        raise QuiverError("missing 'n' line")
    return normalize(n, raw)


def quiver_file_text(quiver: ValuedQuiver) -> str:
    """Serialize a quiver in the file format accepted by parse_quiver."""
    lines = [f"n {quiver.n}"]
    for a in quiver.arrows:
        lines.append(f"a {a.src} {a.tgt} {a.val.d_prime} {a.val.d_dprime}")
    return "\n".join(lines) + "\n"


def sign_subquiver(quiver: ValuedQuiver, signs: Sequence[int]) -> ValuedQuiver:
    """Keep exactly the arrows running from a +1 vertex to a -1 vertex.

    The result presents the hereditary algebra attached to this sign
    vector; loops never survive.
    """
    signs = check_signs(signs, quiver.n)
    kept = tuple(
        a for a in quiver.arrows if signs[a.src - 1] == 1 and signs[a.tgt - 1] == -1
    )
    return ValuedQuiver(quiver.n, kept)


def opposite(quiver: ValuedQuiver) -> ValuedQuiver:
    """Reverse all arrows, transposing each valuation."""
    return ValuedQuiver(
        quiver.n, tuple(Arrow(a.tgt, a.src, a.val.transposed()) for a in quiver.arrows)
    )


def components(quiver: ValuedQuiver) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the weakly connected components, sorted by minimal vertex."""
    parent = {v: v for v in quiver.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in quiver.arrows:
        ra, rb = find(a.src), find(a.tgt)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in quiver.vertices:
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))


Edge = tuple[int, int, tuple[int, int]]  # (u, v, (lo, hi)) with u < v


@dataclass(frozen=True)
class ValuedGraph:
    """Undirected valued graph; each edge carries an unordered valuation pair."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        vset = set(self.vertices)
        seen: set[tuple[int, int]] = set()
        for u, v, _ in self.edges:
            if u == v:
                raise QuiverError(f"self-edge at vertex {u} is not allowed in a valued graph")
            if not (u < v and u in vset and v in vset):
                raise QuiverError(f"bad edge ({u}, {v})")
            if (u, v) in seen:
                raise QuiverError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))


def underlying_graph(quiver: ValuedQuiver) -> ValuedGraph:
    """Forget orientation; valuations become unordered pairs.

    Only defined for loop-free quivers without 2-cycles, i.e. the output
    of sign_subquiver.
    """
    edges: list[Edge] = []
    pairs: set[tuple[int, int]] = set()
    for a in quiver.arrows:
        if a.src == a.tgt:
            raise QuiverError(f"loop at vertex {a.src} has no underlying edge")
        key = (min(a.src, a.tgt), max(a.src, a.tgt))
        if key in pairs:
            raise QuiverError(f"arrows both ways between {key[0]} and {key[1]}")
        pairs.add(key)
        edges.append((key[0], key[1], a.val.unordered()))
    return ValuedGraph(tuple(quiver.vertices), tuple(edges))


def graph_components(graph: ValuedGraph) -> tuple[ValuedGraph, ...]:
    """Connected components as induced subgraphs, sorted by minimal vertex."""
    parent = {v: v for v in graph.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v, _ in graph.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in graph.vertices:
        groups.setdefault(find(v), []).append(v)
    out = []
    for _, verts in sorted(groups.items()):
        vset = set(verts)
        out.append(
            ValuedGraph(
                tuple(verts), tuple(e for e in graph.edges if e[0] in vset)
            )
        )
    return tuple(out)


def source_sink_signs(quiver: ValuedQuiver) -> SignVector | None:
    """Sign vector +1 on sources, -1 on sinks, when the quiver is bipartite.

    Returns None as soon as some vertex has both incoming and outgoing
    arrows (a loop counts as both).  Isolated vertices get +1.
    """
    has_out = {a.src for a in quiver.arrows}
    has_in = {a.tgt for a in quiver.arrows}
    signs = []
    for v in quiver.vertices:
        if v in has_out and v in has_in:
            return None
        signs.append(-1 if v in has_in else 1)
    return tuple(signs)


def two_term_tilting(quiver: ValuedQuiver, signs: Sequence[int]) -> bool:
    """Whether the two-term silting complexes in this sign class are tilting.

    True exactly when no arrow runs from a -1 vertex to a +1 vertex; for a
    radical-square-zero algebra those arrows span the obstruction space.
    """
    signs = check_signs(signs, quiver.n)
    return not any(
        signs[a.src - 1] == -1 and signs[a.tgt - 1] == 1 for a in quiver.arrows
    )


def separated_quiver(quiver: ValuedQuiver) -> ValuedQuiver:
    """Separated quiver on 2n vertices: arrow i->j becomes i -> n+j."""
    n = quiver.n
    return ValuedQuiver(
        2 * n, tuple(Arrow(a.src, n + a.tgt, a.val) for a in quiver.arrows)
    )
