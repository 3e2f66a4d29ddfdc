import numpy as np

from scipy import sparse


def frontier_sums(
    adjacency: sparse.csr_matrix,
    weights: np.ndarray,
    radius: int,
    block_size: int = 256,
) -> np.ndarray:
    """
    For every node v, sum `weights` over the nodes at distance exactly `radius`
    from v in the simple graph given by the symmetric 0/1 `adjacency`
    (``Hypergraph.binary_adjacency``).

    Breadth-first frontiers are propagated for a block of source nodes at a
    time, so memory stays at ``block_size * n`` booleans.
    """
    n = adjacency.shape[0]
    weights = np.asarray(weights, dtype=np.float64)

    if radius == 1:
        return np.asarray(adjacency @ weights, dtype=np.float64)

    sums = np.zeros(n, dtype=np.float64)
    for start in range(0, n, block_size):
        sources = np.arange(start, min(start + block_size, n))

        visited = np.zeros((len(sources), n), dtype=bool)
        visited[np.arange(len(sources)), sources] = True
        frontier = visited.copy()

        for _ in range(radius):
            # adjacency is symmetric, so (A @ F^T)^T is the next layer of each row
            reached = np.asarray(adjacency @ frontier.T.astype(np.int64)).T > 0
            frontier = reached & ~visited
            visited |= frontier
            if not frontier.any():
                break

        sums[sources] = frontier.astype(np.float64) @ weights

    return sums
