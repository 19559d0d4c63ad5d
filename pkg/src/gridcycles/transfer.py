"""Transfer digraphs for column codes: full, reduced, and glued forms.

Three digraph granularities drive the counting routes:

* ``full``    — vertices are the valid column words over ``a..f``; there is
  an arc v -> u exactly when outlet(v) = inlet(u).  Arcs are 0/1.
* ``reduced`` — vertices are all 2^m binary words; the arc u -> w carries
  the number of column words with inlet u and outlet w (0, 1 or 2).  The
  matrix is symmetric and its entries sum to 3^m + (-1)^m.
* ``glued``   — vertices are the orbits of the all-zero component of the
  reduced digraph under rotation and reversal; sufficient for the
  thin-cylinder count alone.

Digraphs are immutable once built and may be shared across threads.
Construction is single-threaded; the reduced matrix build dispatches to
:mod:`gridcycles._kernels`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import _kernels
from .alphabet import (
    enumerate_column_words,
    first_column_words,
    horizontal_convert,
    inlet,
    last_column_words,
    outlet,
    reverse_binary,
    rotate,
    words_with_inlet,
)

# Documented practical limits (see README): the dense reduced matrix is
# 2^m square, the dense full matrix (3^m + (-1)^m) square.  Counting on
# single components (glued route) stretches further than either.
FULL_MATRIX_LIMIT = 8
REDUCED_DENSE_LIMIT = 14
GLUED_LIMIT = 18


class ResourceLimitError(ValueError):
    """Requested width exceeds the documented practical limit of a method."""


@dataclass(eq=False)
class TransferDigraph:
    """A vertex list plus arc multiplicities.

    ``adj`` is a dense numpy matrix for reduced/glued digraphs; for full
    digraphs it is materialised only up to FULL_MATRIX_LIMIT (otherwise
    ``None``) and arcs are derived from outlet/inlet words on demand.
    """

    kind: str  # "full" | "reduced" | "glued"
    m: int
    vertices: tuple[str, ...]
    adj: np.ndarray | None
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._index = {w: i for i, w in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, word: str) -> int:
        return self._index[word]

    def successor_lists(self) -> list[list[int]]:
        """Adjacency lists (multiplicity ignored)."""
        if self.adj is not None:
            return [list(np.nonzero(row)[0]) for row in self.adj]
        # full digraph without matrix: group vertices by inlet word
        by_inlet: dict[str, list[int]] = defaultdict(list)
        for i, w in enumerate(self.vertices):
            by_inlet[inlet(w)].append(i)
        return [by_inlet.get(outlet(w), []) for w in self.vertices]

    def predecessor_lists(self) -> list[list[int]]:
        if self.adj is not None:
            return [list(np.nonzero(col)[0]) for col in self.adj.T]
        by_outlet: dict[str, list[int]] = defaultdict(list)
        for i, w in enumerate(self.vertices):
            by_outlet[outlet(w)].append(i)
        return [by_outlet.get(inlet(w), []) for w in self.vertices]

    def to_json_dict(self) -> dict:
        if self.adj is None:
            raise ResourceLimitError(
                f"adjacency matrix not materialised for kind={self.kind}, m={self.m}"
            )
        return {
            "kind": self.kind,
            "m": self.m,
            "vertices": list(self.vertices),
            "adj": [int(x) for x in self.adj.reshape(-1)],
        }


@dataclass
class VertexRelation:
    """Rotation or reversal relation on a digraph's vertex order.

    Stored as the permutation ``perm[i] = j`` with relation(v_i) = v_j; the
    0/1 matrix form has r[i, j] = 1 at exactly those positions.  Rotation is
    a permutation of order dividing m; the conversion flavor is an involution
    and its matrix is symmetric.
    """

    flavor: str  # "rotation" | "hconversion"
    perm: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        n = len(self.perm)
        mat = np.zeros((n, n), dtype=np.uint8)
        mat[np.arange(n), self.perm] = 1
        return mat

    def apply(self, i: int, times: int = 1) -> int:
        for _ in range(times):
            i = int(self.perm[i])
        return i


@dataclass
class ComponentCensus:
    """Connected components of a transfer digraph, each verified strongly
    connected, with the named components identified."""

    labels: list[int]
    sizes: list[int]
    zero_id: int | None  # component of b^m (full) / 0^m (reduced)
    ones_id: int | None  # component of e^m (full) / 1^m (reduced)
    rest_ids: list[int]  # remaining components, largest first

    @property
    def n_components(self) -> int:
        return len(self.sizes)

    def rest_sizes(self) -> list[int]:
        return [self.sizes[c] for c in self.rest_ids]

    def members(self, comp_id: int) -> list[int]:
        return [i for i, c in enumerate(self.labels) if c == comp_id]


def build_full(m: int, with_matrix: bool | None = None) -> TransferDigraph:
    """Full transfer digraph on the 3^m + (-1)^m valid column words.

    Vertex order: b^m first, then the remaining words lexicographically.
    The dense arc matrix is built only up to m = FULL_MATRIX_LIMIT (43 MB at
    m = 8); censuses and walk counts never need it.
    """
    words = enumerate_column_words(m)
    bword = "b" * m
    vertices = tuple([bword] + [w for w in words if w != bword])
    if with_matrix is None:
        with_matrix = m <= FULL_MATRIX_LIMIT
    adj = None
    if with_matrix:
        if m > FULL_MATRIX_LIMIT:
            raise ResourceLimitError(
                f"dense full matrix limited to m <= {FULL_MATRIX_LIMIT}, got {m}"
            )
        outs = np.array([int(outlet(w), 2) for w in vertices])
        ins = np.array([int(inlet(w), 2) for w in vertices])
        adj = (outs[:, None] == ins[None, :]).astype(np.uint8)
    return TransferDigraph("full", m, vertices, adj)


def build_reduced(m: int) -> TransferDigraph:
    """Reduced transfer digraph on all 2^m binary words, dense multiplicity
    matrix.  Vertex order: 0^m first, then lexicographic (= numeric)."""
    if m > REDUCED_DENSE_LIMIT:
        raise ResourceLimitError(
            f"dense reduced matrix limited to m <= {REDUCED_DENSE_LIMIT}, got {m}"
        )
    adj = _kernels.reduced_adjacency(m)
    vertices = tuple(format(i, f"0{m}b") for i in range(1 << m))
    return TransferDigraph("reduced", m, vertices, adj)


def zero_component_words(m: int) -> set[str]:
    """Vertex set of the reduced-digraph component containing 0^m, computed
    by BFS with arcs enumerated on the fly (no dense matrix; works past the
    dense limit).  The matrix symmetry makes forward reach sufficient."""
    if m > GLUED_LIMIT:
        raise ResourceLimitError(f"component walk limited to m <= {GLUED_LIMIT}, got {m}")
    start = "0" * m
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for word in words_with_inlet(v):
                w = outlet(word)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def _dihedral_orbit(word: str) -> set[str]:
    orbit = set()
    w = word
    for _ in range(len(word)):
        orbit.add(w)
        orbit.add(reverse_binary(w))
        w = rotate(w, 1)
    return orbit


def build_glued(m: int) -> TransferDigraph:
    """Glue the 0^m component of the reduced digraph along rotation and
    reversal orbits; arcs from a representative are summed over each orbit.

    Vertex order: orbit of 0^m, then orbit of 1^m when present, then the
    remaining orbits by their lexicographically least member.
    """
    words = zero_component_words(m)
    reps: list[str] = []
    orbit_of: dict[str, list[str]] = {}
    assigned: set[str] = set()
    for w in sorted(words):
        if w in assigned:
            continue
        orbit = _dihedral_orbit(w)
        if not orbit <= words:
            raise AssertionError(f"component of 0^{m} not closed under rotation/reversal")
        rep = min(orbit)
        reps.append(rep)
        orbit_of[rep] = sorted(orbit)
        assigned |= orbit

    def rank(rep: str) -> tuple:
        return (rep != "0" * m, rep != "1" * m, rep)

    reps.sort(key=rank)
    k = len(reps)
    adj = np.zeros((k, k), dtype=np.int64)
    for i, rep in enumerate(reps):
        # multiplicities out of the representative, summed per target orbit
        row: dict[str, int] = defaultdict(int)
        for word in words_with_inlet(rep):
            row[outlet(word)] += 1
        for j, target in enumerate(reps):
            adj[i, j] = sum(row.get(y, 0) for y in orbit_of[target])
    return TransferDigraph("glued", m, tuple(reps), adj)


def _conversion(d: TransferDigraph) -> Callable[[str], str]:
    return horizontal_convert if d.kind == "full" else reverse_binary


def rotation_matrix(d: TransferDigraph) -> VertexRelation:
    """Permutation relation v_i -> rotate(v_i) over the digraph's vertices."""
    if d.kind == "glued":
        raise ValueError("rotation relation is not defined on glued digraphs")
    perm = np.array([d.index(rotate(v, 1)) for v in d.vertices])
    return VertexRelation("rotation", perm)


def hconversion_matrix(d: TransferDigraph) -> VertexRelation:
    """Involution relation v_i -> horizontal conversion of v_i (word reversal
    on the reduced digraph)."""
    if d.kind == "glued":
        raise ValueError("conversion relation is not defined on glued digraphs")
    conv = _conversion(d)
    perm = np.array([d.index(conv(v)) for v in d.vertices])
    return VertexRelation("hconversion", perm)


def _reach(start: Iterable[int], lists: list[list[int]], allowed: set[int]) -> set[int]:
    seen = set(start)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for u in lists[v]:
            if u in allowed and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def components(d: TransferDigraph) -> ComponentCensus:
    """Weakly connected components, each verified strongly connected.

    A violation of strong connectivity aborts: every component of these
    digraphs is strongly connected by construction, so a mismatch would mean
    a construction bug.
    """
    n = len(d.vertices)
    succ = d.successor_lists()
    pred = d.predecessor_lists()
    labels = [-1] * n
    sizes: list[int] = []
    for root in range(n):
        if labels[root] != -1:
            continue
        comp = len(sizes)
        seen = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in succ[v] + pred[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        for v in seen:
            labels[v] = comp
        sizes.append(len(seen))
        forward = _reach([root], succ, seen)
        backward = _reach([root], pred, seen)
        if len(forward) != len(seen) or len(backward) != len(seen):
            raise AssertionError(
                f"component {comp} of {d.kind} digraph m={d.m} is not strongly connected"
            )

    def comp_of(word: str) -> int | None:
        i = d._index.get(word)
        return None if i is None else labels[i]

    if d.kind == "full":
        zero_id = comp_of("b" * d.m)
        ones_id = comp_of("e" * d.m)
    else:
        zero_id = comp_of("0" * d.m)
        ones_id = comp_of("1" * d.m)
    named = {zero_id, ones_id}
    least_member = {}
    for i, c in enumerate(labels):
        if c not in least_member or d.vertices[i] < least_member[c]:
            least_member[c] = d.vertices[i]
    rest = [c for c in range(len(sizes)) if c not in named]
    # largest first; ties broken by the smallest member word
    rest.sort(key=lambda c: (-sizes[c], least_member[c]))
    return ComponentCensus(labels, sizes, zero_id, ones_id, rest)


def component_subdigraph(d: TransferDigraph, census: ComponentCensus, comp_id: int) -> TransferDigraph:
    """Restriction of a digraph (with matrix) to one component.

    The component's anchor word (0^m / 1^m on reduced digraphs, b^m / e^m on
    full ones) is moved to index 0 when present; other vertices keep their
    relative order.
    """
    if d.adj is None:
        raise ResourceLimitError("component restriction needs a materialised matrix")
    idx = census.members(comp_id)
    anchors = ("0" * d.m, "1" * d.m) if d.kind != "full" else ("b" * d.m, "e" * d.m)
    for anchor in anchors:
        j = d._index.get(anchor)
        if j in idx:
            idx.remove(j)
            idx.insert(0, j)
            break
    sub = d.adj[np.ix_(idx, idx)]
    return TransferDigraph(d.kind, d.m, tuple(d.vertices[i] for i in idx), sub)


def column_sets(m: int) -> tuple[list[str], list[str]]:
    """Admissible first-column and last-column words, lexicographic.

    Both lists have Lucas(m) elements (1, 3, 4, 7, 11, ...).
    """
    return first_column_words(m), last_column_words(m)


def lucas(m: int) -> int:
    a, b = 2, 1  # L_0, L_1
    for _ in range(m):
        a, b = b, a + b
    return a


def reduced_edge_total(d: TransferDigraph) -> int:
    """Sum of all multiplicities of a reduced digraph (= 3^m + (-1)^m)."""
    if d.adj is None:
        raise ValueError("matrix required")
    return int(d.adj.astype(np.int64).sum())
