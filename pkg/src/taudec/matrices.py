"""Exact integer matrices: Cartan matrices, sign diagonals, sink reflections.

Matrices are dense tuples of tuples of Python ints; sizes stay tiny, so
exactness wins over any numeric library.
"""

from __future__ import annotations

from typing import Sequence

from .quiver import QuiverError, ValuedQuiver, check_signs

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def diagonal_matrix(entries: Sequence[int]) -> IntMatrix:
    n = len(entries)
    return tuple(
        tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)
    )


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_vec(a: IntMatrix, x: Sequence[int]) -> IntVector:
    return tuple(sum(row[k] * x[k] for k in range(len(x))) for row in a)


def _assert_acyclic(quiver: ValuedQuiver) -> None:
    outgoing: dict[int, list[int]] = {v: [] for v in quiver.vertices}
    indegree = {v: 0 for v in quiver.vertices}
    for a in quiver.arrows:
        if a.src == a.tgt:
            raise QuiverError(f"loop at vertex {a.src}; quiver is not hereditary")
        outgoing[a.src].append(a.tgt)
        indegree[a.tgt] += 1
    queue = [v for v in quiver.vertices if indegree[v] == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in outgoing[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    if removed != quiver.n:
        raise QuiverError("oriented cycle; quiver is not hereditary")


def cartan_matrix(quiver: ValuedQuiver) -> IntMatrix:
    """Cartan matrix of the presented hereditary algebra.

    Column i is e_i plus d'_{ij} e_j over the arrows i -> j (the radical of
    the i-th projective is semisimple).  Requires a loop-free acyclic quiver.
    """
    _assert_acyclic(quiver)
    n = quiver.n
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for a in quiver.arrows:
        rows[a.tgt - 1][a.src - 1] = a.val.d_prime
    return tuple(tuple(row) for row in rows)


def sign_diagonal(signs: Sequence[int]) -> IntMatrix:
    """Diagonal matrix of a +/-1 vector; an involution."""
    signs = check_signs(signs, len(signs))
    return diagonal_matrix(signs)


def reflect_at(quiver: ValuedQuiver, a: int, x: Sequence[int]) -> IntVector:
    """Reflection of an integer vector at a sink: negate there, add weighted inflow."""
    if not 1 <= a <= quiver.n:
        raise QuiverError(f"vertex {a} outside 1..{quiver.n}")
    if len(x) != quiver.n:
        raise QuiverError(f"vector has length {len(x)}, expected {quiver.n}")
    if any(arrow.src == a for arrow in quiver.arrows):
        raise QuiverError(f"vertex {a} is not a sink")
    y = list(x)
    y[a - 1] = -x[a - 1] + sum(
        arrow.val.d_prime * x[arrow.src - 1]
        for arrow in quiver.arrows
        if arrow.tgt == a
    )
    return tuple(y)


def sink_reflection_matrix(quiver: ValuedQuiver, signs: Sequence[int]) -> IntMatrix:
    """Matrix of the simultaneous reflection at all -1 vertices.

    The sign vector must orient the quiver source-to-sink: every arrow
    runs from a +1 vertex to a -1 vertex (so -1 vertices are sinks and the
    reflections commute).  Equals the Cartan matrix times the sign diagonal.
    """
    signs = check_signs(signs, quiver.n)
    for arrow in quiver.arrows:
        if signs[arrow.src - 1] != 1 or signs[arrow.tgt - 1] != -1:
            raise QuiverError(
                f"arrow {arrow.src}->{arrow.tgt} violates the source/sink signs"
            )
    return mat_mul(cartan_matrix(quiver), sign_diagonal(signs))


def g_from_dim_vector(signs: Sequence[int], c: Sequence[int]) -> IntVector:
    """g-vector from a dimension vector: flip the sign of each -1 coordinate.

    This coordinatewise involution translates dimension vectors of tilting
    modules over a sign slice into g-vectors of the support tilting
    modules they index, and back.
    """
    signs = check_signs(signs, len(signs))
    if len(c) != len(signs):
        raise QuiverError(f"length mismatch: {len(c)} vs {len(signs)}")
    return tuple(s * x for s, x in zip(signs, c))
