import numpy as np

from functools import cached_property
from typing import Collection, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple
from scipy import sparse
from scipy.sparse import csgraph

from hyperci.errors import HypergraphError

from .types import Component, DatasetStats, Normalization


class Hypergraph:
    """
    Immutable node/hyperedge incidence structure.

    Nodes are dense ids ``0..n-1`` with a label table; hyperedges are sorted
    tuples of node ids. Nodes that belong to no hyperedge are allowed, they are
    what is left of a node once all its hyperedges have been dropped.
    """

    def __init__(self, hyperedges: Iterable[Iterable[int]], labels: Sequence[str]):
        self._labels: Tuple[str, ...] = tuple(labels)
        n = len(self._labels)

        if len(set(self._labels)) != n:
            raise HypergraphError("Node labels must be unique")

        edges = []
        for edge_id, edge in enumerate(hyperedges):
            members = tuple(sorted(set(edge)))
            if not members:
                raise HypergraphError(f"Hyperedge {edge_id} is empty")
            if members[0] < 0 or members[-1] >= n:
                raise HypergraphError(
                    f"Hyperedge {edge_id} references a node outside 0..{n - 1}"
                )
            edges.append(members)
        self._hyperedges: Tuple[Tuple[int, ...], ...] = tuple(edges)

        incident: List[List[int]] = [[] for _ in range(n)]
        for edge_id, members in enumerate(self._hyperedges):
            for v in members:
                incident[v].append(edge_id)
        self._node_to_edges: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(edge_ids) for edge_ids in incident
        )

    @classmethod
    def empty(cls) -> "Hypergraph":
        return cls(hyperedges=[], labels=[])

    @property
    def num_nodes(self) -> int:
        return len(self._labels)

    @property
    def num_edges(self) -> int:
        return len(self._hyperedges)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def hyperedges(self) -> Tuple[Tuple[int, ...], ...]:
        return self._hyperedges

    @property
    def node_to_edges(self) -> Tuple[Tuple[int, ...], ...]:
        return self._node_to_edges

    def __len__(self) -> int:
        return self.num_nodes

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._labels == other._labels and self._hyperedges == other._hyperedges

    def __hash__(self) -> int:
        return hash((self._labels, self._hyperedges))

    def __repr__(self) -> str:
        return f"Hypergraph(nodes={self.num_nodes}, hyperedges={self.num_edges})"

    def check_node(self, v: int) -> int:
        if not 0 <= v < self.num_nodes:
            raise HypergraphError(f"Unknown node id {v}")
        return v

    def label(self, v: int) -> str:
        return self._labels[self.check_node(v)]

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise HypergraphError(f"Unknown node label '{label}'") from None

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {label: v for v, label in enumerate(self._labels)}

    @cached_property
    def degrees(self) -> np.ndarray:
        """Hyper-degree of every node, the row sums of the incidence matrix."""
        return np.array([len(edges) for edges in self._node_to_edges], dtype=np.int64)

    @cached_property
    def incidence(self) -> sparse.csr_matrix:
        rows = np.fromiter(
            (v for members in self._hyperedges for v in members), dtype=np.int64
        )
        cols = np.fromiter(
            (e for e, members in enumerate(self._hyperedges) for _ in members),
            dtype=np.int64,
        )
        data = np.ones(len(rows), dtype=np.int64)
        return sparse.csr_matrix(
            (data, (rows, cols)), shape=(self.num_nodes, self.num_edges)
        )

    @cached_property
    def adjacency(self) -> sparse.csr_matrix:
        """Projected adjacency ``I @ I.T - D``: shared-hyperedge counts, zero diagonal."""
        n = self.num_nodes
        if n == 0:
            return sparse.csr_matrix((0, 0), dtype=np.int64)

        product = (self.incidence @ self.incidence.T).tocsr()
        degree_diagonal = sparse.diags(product.diagonal(), 0, shape=(n, n))
        adjacency = (product - degree_diagonal).tocsr()
        adjacency.eliminate_zeros()
        adjacency.sort_indices()
        return adjacency

    @cached_property
    def binary_adjacency(self) -> sparse.csr_matrix:
        """Simple-graph view of the projection (1 where nodes share any hyperedge)."""
        binary = self.adjacency.copy()
        binary.data = np.ones_like(binary.data)
        return binary

    def neighbor_ids(self, v: int) -> np.ndarray:
        self.check_node(v)
        adjacency = self.adjacency
        return adjacency.indices[adjacency.indptr[v] : adjacency.indptr[v + 1]]


def build(
    hyperedges: Iterable[Iterable[str]], lines: Optional[Sequence[int]] = None
) -> Hypergraph:
    """
    Build a hypergraph from label sets.

    Labels get dense ids in first-seen order, repeated labels inside a hyperedge
    are collapsed and identical hyperedges are kept as distinct hyperedges.
    `lines` optionally gives the input line of every hyperedge for error messages.
    """
    index: Dict[str, int] = {}
    edges: List[List[int]] = []

    for position, edge in enumerate(hyperedges):
        members: List[int] = []
        for label in edge:
            v = index.setdefault(label, len(index))
            if v not in members:
                members.append(v)

        if not members:
            where = f"line {lines[position]}" if lines is not None else f"position {position}"
            raise HypergraphError(f"Empty hyperedge at {where}")
        edges.append(members)

    return Hypergraph(hyperedges=edges, labels=list(index))


def hhd(hypergraph: Hypergraph, v: int) -> int:
    """Hyper-degree: number of hyperedges incident to `v`."""
    return len(hypergraph.node_to_edges[hypergraph.check_node(v)])


def project_adjacency(hypergraph: Hypergraph) -> sparse.csr_matrix:
    return hypergraph.adjacency


def neighbors(hypergraph: Hypergraph, v: int) -> FrozenSet[int]:
    return frozenset(int(u) for u in hypergraph.neighbor_ids(v))


def bfs_layers(hypergraph: Hypergraph, v: int) -> Iterator[FrozenSet[int]]:
    """Yield the nodes at distance 1, 2, ... from `v` in the projection."""
    hypergraph.check_node(v)
    visited = {v}
    frontier = {v}

    while frontier:
        reached = set()
        for u in frontier:
            reached.update(int(w) for w in hypergraph.neighbor_ids(u))
        frontier = reached - visited
        visited |= frontier
        if frontier:
            yield frozenset(frontier)


def ball_boundary(hypergraph: Hypergraph, v: int, radius: int) -> FrozenSet[int]:
    """Nodes at shortest-path distance exactly `radius` from `v`."""
    if radius < 1:
        raise HypergraphError(f"Radius must be at least 1, got {radius}")

    for distance, layer in enumerate(bfs_layers(hypergraph, v), start=1):
        if distance == radius:
            return layer
    return frozenset()


def components(hypergraph: Hypergraph) -> List[Component]:
    n = hypergraph.num_nodes
    if n == 0:
        return []

    _, membership = csgraph.connected_components(
        hypergraph.adjacency, directed=False
    )

    nodes_by_label: Dict[int, List[int]] = {}
    for v, label in enumerate(membership):
        nodes_by_label.setdefault(int(label), []).append(v)

    edges_by_label: Dict[int, List[int]] = {label: [] for label in nodes_by_label}
    for edge_id, members in enumerate(hypergraph.hyperedges):
        edges_by_label[int(membership[members[0]])].append(edge_id)

    result = [
        Component(
            node_ids=frozenset(nodes_by_label[label]),
            hyperedge_ids=frozenset(edges_by_label[label]),
        )
        for label in nodes_by_label
    ]
    result.sort(key=lambda component: component.min_node)
    return result


def gcc(hypergraph: Hypergraph) -> Component:
    """
    Giant component: most contained hyperedges, then most nodes, then the
    smallest minimum node id.
    """
    found = components(hypergraph)
    if not found:
        raise HypergraphError("The giant component of an empty hypergraph is undefined")

    return max(
        found,
        key=lambda c: (c.hyperedge_count, c.node_count, -c.min_node),
    )


def connectivity(
    hypergraph: Hypergraph,
    norm: Normalization = Normalization.REMAINING,
    original_nodes: Optional[int] = None,
) -> float:
    """Share of nodes in the giant component, over remaining or original node count."""
    norm = Normalization(norm)
    if norm == Normalization.ORIGINAL and (original_nodes is None or original_nodes <= 0):
        raise HypergraphError("Original normalization needs a positive original node count")

    if hypergraph.num_nodes == 0:
        return 0.0

    denominator = (
        hypergraph.num_nodes if norm == Normalization.REMAINING else original_nodes
    )
    return gcc(hypergraph).node_count / denominator


def remove_nodes(hypergraph: Hypergraph, victims: Collection[int]) -> Hypergraph:
    """
    Delete `victims` from every hyperedge. Hyperedges left empty are dropped,
    singletons are kept; survivors are renumbered in their original order.
    """
    victims = set(victims)
    for v in victims:
        hypergraph.check_node(v)

    if not victims:
        return hypergraph

    survivors = [v for v in range(hypergraph.num_nodes) if v not in victims]
    renumber = {old: new for new, old in enumerate(survivors)}

    edges = []
    for members in hypergraph.hyperedges:
        shrunk = [renumber[v] for v in members if v in renumber]
        if shrunk:
            edges.append(shrunk)

    return Hypergraph(
        hyperedges=edges, labels=[hypergraph.labels[v] for v in survivors]
    )


def stats(hypergraph: Hypergraph) -> DatasetStats:
    if hypergraph.num_nodes == 0 or hypergraph.num_edges == 0:
        raise HypergraphError("Statistics need at least one node and one hyperedge")

    return DatasetStats(
        node_count=hypergraph.num_nodes,
        hyperedge_count=hypergraph.num_edges,
        incidence_count=int(hypergraph.degrees.sum()),
    )
