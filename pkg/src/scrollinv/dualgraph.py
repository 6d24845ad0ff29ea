"""Dual graph of the limit one-dimensional unisecant family, and the monodromy model.

Vertex ids are dense: ``0 .. 2^g - 1`` are the pencil components ``xi``
indexed by labeling word, followed by the conic components ``xip`` ordered
by quadric ``l`` then partial labeling word. Edges are an ``(e, 2)`` int64
array, smaller id first, rows sorted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .degeneration import ComponentKind, Labeling, LimitComponent, Parity, lambda_dim, w_degree
from .errors import DomainError, InvariantError, ParameterError, ResourceError

MAX_GRAPH_G = 16
MAX_BRUTE_FORCE_SYMBOLS = 8


def _check_g(g: int, cap: int | None = None) -> None:
    if isinstance(g, bool) or not isinstance(g, int):
        raise ParameterError(f"g must be an integer, got {g!r}")
    if g < 1:
        raise ParameterError(f"g must be >= 1, got {g}")
    if g > MAX_GRAPH_G:
        raise ResourceError(f"g = {g} exceeds the graph cap g <= {MAX_GRAPH_G}")
    if cap is not None and (g + 2) << (g - 1) > cap:
        raise ResourceError(f"graph for g = {g} has more than {cap} vertices")


def _normalise_edges(edges) -> np.ndarray:
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    arr = np.sort(arr, axis=1)
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    return np.ascontiguousarray(arr[order])


@dataclass(frozen=True, eq=False)
class DualGraph:
    """A simple graph whose vertices are rational curves."""

    n_vertices: int
    edges: np.ndarray
    g: int | None = None  # set for limit graphs, enables component lookup
    component_genera: np.ndarray = field(default=None)

    def __post_init__(self):
        edges = _normalise_edges(self.edges)
        if len(edges):
            if edges.min() < 0 or edges.max() >= self.n_vertices:
                raise ParameterError("edge endpoint out of range")
            if np.any(edges[:, 0] == edges[:, 1]):
                raise ParameterError("loops are not allowed")
            if len(edges) > 1 and np.any(np.all(edges[1:] == edges[:-1], axis=1)):
                raise ParameterError("multiple edges are not allowed")
        genera = self.component_genera
        if genera is None:
            genera = np.zeros(self.n_vertices, dtype=np.int64)
        genera = np.asarray(genera, dtype=np.int64)
        if genera.shape != (self.n_vertices,) or np.any(genera != 0):
            raise DomainError("only configurations of rational curves are supported")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "component_genera", genera)

    @classmethod
    def from_edges(cls, n_vertices: int, edges) -> DualGraph:
        return cls(n_vertices, np.asarray(edges, dtype=np.int64))

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n_vertices)

    def n_components(self) -> int:
        return _backend.kernels.count_components(self.n_vertices, self.edges)

    def is_connected(self) -> bool:
        return self.n_vertices > 0 and self.n_components() == 1

    def relabel(self, perm) -> DualGraph:
        """Image under the vertex bijection ``i -> perm[i]``."""
        perm = np.asarray(perm, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.n_vertices)):
            raise ParameterError("relabeling must be a permutation of the vertices")
        return DualGraph(self.n_vertices, perm[self.edges])

    # limit-graph specific
    def component(self, vid: int, d: int | None = None) -> LimitComponent:
        """The limit component behind vertex ``vid``; W-degrees need the scroll degree ``d``."""
        if self.g is None:
            raise DomainError("component lookup needs a limit graph")
        return vertex_component(self.g, vid, d)

    def name(self, vid: int) -> str:
        if self.g is None:
            return f"v{vid}"
        return vertex_name(self.g, vid)


def vertex_component(g: int, vid: int, d: int | None = None) -> LimitComponent:
    """Component for a vertex id. Without ``d`` the W-degree is reported as -1."""
    n_xi = 1 << g
    half = n_xi >> 1
    if 0 <= vid < n_xi:
        k, lab, l = 0, Labeling(g, vid), None
        kind = ComponentKind.XI
    elif n_xi <= vid < n_xi + g * half:
        l, p = divmod(vid - n_xi, half)
        k, lab, l = 1, Labeling(g - 1, p), l + 1
        kind = ComponentKind.XI_PRIME
    else:
        raise ParameterError(f"vertex id {vid} out of range")
    deg = -1 if d is None else w_degree(d, g, k, Parity.EVEN)
    return LimitComponent(kind, lab, k, deg, lambda_dim(g, k, Parity.EVEN), l)


def vertex_name(g: int, vid: int) -> str:
    return vertex_component(g, vid).ident


def vertex_names(g: int) -> list[str]:
    n_xi = 1 << g
    names = [f"xi_{w:0{g}b}" for w in range(n_xi)]
    width = g - 1
    for l in range(1, g + 1):
        names.extend(f"xip_{l}_{format(p, f'0{width}b') if width else ''}" for p in range(n_xi >> 1))
    return names


def build_limit_graph(g: int, cap: int | None = None) -> DualGraph:
    """Dual graph of the limit of the one-dimensional minimal family on ``Y``.

    Pencils whose labelings differ in one place meet; each conic component
    meets exactly the two pencils extending its partial labeling; conic
    components are pairwise disjoint.
    """
    _check_g(g, cap)
    n = (g + 2) << (g - 1)
    return DualGraph(n, _backend.kernels.limit_graph_edges(g), g=g)


def euler_char(graph: DualGraph) -> int:
    return graph.n_vertices - graph.n_edges


def arithmetic_genus(graph: DualGraph) -> int:
    """``1 - chi`` for a connected nodal union of rational curves."""
    if not graph.is_connected():
        raise DomainError("arithmetic genus via 1 - chi needs a connected graph")
    return 1 - euler_char(graph)


def genus_formula(g: int) -> int:
    """Genus ``2^g (g - 1) + 1`` of the curve of unisecants through ``d_m - 1`` points."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 0:
        raise ParameterError(f"g must be a non-negative integer, got {g!r}")
    return 2**g * (g - 1) + 1


def genus_both_ways(g: int) -> dict:
    """Closed form and graph route side by side; disagreement is an invariant breach."""
    graph = build_limit_graph(g)
    via_graph = arithmetic_genus(graph)
    formula = genus_formula(g)
    if via_graph != formula:
        raise InvariantError(f"genus mismatch at g = {g}: graph {via_graph}, formula {formula}")
    return {
        "v": graph.n_vertices,
        "e": graph.n_edges,
        "chi": euler_char(graph),
        "genus_graph": via_graph,
        "genus_formula": formula,
    }


# -- monodromy ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TranspositionSet:
    """Transpositions on the ``2^g`` labelings; each swaps two labelings differing once."""

    g: int
    swaps: np.ndarray

    @property
    def n_symbols(self) -> int:
        return 1 << self.g

    @property
    def symbols(self) -> list[Labeling]:
        return [Labeling(self.g, w) for w in range(self.n_symbols)]

    def check(self) -> None:
        for a, b in self.swaps.tolist():
            if (a ^ b).bit_count() != 1:
                raise InvariantError(f"swap {a}<->{b} changes more than one position")


def monodromy_transpositions(g: int) -> TranspositionSet:
    """Each conic component of the limit joins the two pencils it meets,
    interchanging the corresponding minimal sections: the edges of the g-cube."""
    _check_g(g)
    return TranspositionSet(g, _backend.kernels.hypercube_edges(g))


def is_full_symmetric(t: TranspositionSet) -> bool:
    """Transpositions generate the whole symmetric group iff their graph is connected."""
    n = t.n_symbols
    if n <= 1:
        return True
    if len(t.swaps) == 0:
        return False
    return _backend.kernels.count_components(n, t.swaps) == 1


def generated_group_order(t: TranspositionSet, max_symbols: int = MAX_BRUTE_FORCE_SYMBOLS) -> int:
    """Order of the generated permutation group by explicit closure (small cases only)."""
    n = t.n_symbols
    if n > max_symbols:
        raise ResourceError(f"brute-force closure limited to {max_symbols} symbols, got {n}")
    gens = []
    for a, b in t.swaps.tolist():
        p = list(range(n))
        p[a], p[b] = p[b], p[a]
        gens.append(tuple(p))
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(p[i] for i in s)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def symmetric_group_order(n: int) -> int:
    return math.factorial(n)


# -- export ---------------------------------------------------------------------


def to_dot(graph: DualGraph) -> str:
    names = vertex_names(graph.g) if graph.g is not None else [f"v{i}" for i in graph.vertices]
    title = f"limit_g{graph.g}" if graph.g is not None else "G"
    lines = [f"graph {title} {{"]
    lines.extend(f"  {nm};" for nm in names)
    lines.extend(f"  {names[u]} -- {names[v]};" for u, v in graph.edges.tolist())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(graph: DualGraph) -> dict:
    names = vertex_names(graph.g) if graph.g is not None else [f"v{i}" for i in graph.vertices]
    return {
        "nodes": names,
        "edges": [[names[u], names[v]] for u, v in graph.edges.tolist()],
    }
