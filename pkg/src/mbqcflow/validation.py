"""Input coercion for the estimator front end."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

import numpy as np
from sklearn.utils.validation import check_array

from mbqcflow.graph import GraphFormatError, OpenGraph, mask_of, parse_open_graph

__all__ = ["check_open_graph", "check_vertex_mask"]


def check_vertex_mask(vertices: Iterable[int] | np.ndarray, n: int, what: str = "vertex set") -> int:
    """Accept vertex indices or a boolean mask of length ``n``."""
    arr = np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices)
    if arr.dtype == bool:
        if arr.shape != (n,):
            raise GraphFormatError(f"{what}: boolean mask must have length {n}")
        return mask_of(np.flatnonzero(arr).tolist())
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise GraphFormatError(f"{what}: expected integer vertex indices")
    idx = arr.astype(np.int64).ravel().tolist()
    bad = [i for i in idx if not 0 <= i < n]
    if bad:
        raise GraphFormatError(f"{what}: vertex index {bad[0]} out of range for {n} vertices")
    return mask_of(idx)


def check_open_graph(X) -> OpenGraph:
    """Coerce ``X`` into an :class:`OpenGraph`.

    Accepted forms:

    * an ``OpenGraph`` (returned as is);
    * a graph document, either a JSON string or the decoded mapping;
    * a triple ``(adjacency, inputs, outputs)`` where ``adjacency`` is a
      square symmetric 0/1 array with zero diagonal and ``inputs`` /
      ``outputs`` are index lists or boolean masks.  Vertices are named by
      their index.
    """
    if isinstance(X, OpenGraph):
        return X
    if isinstance(X, (str, bytes, Mapping)):
        return parse_open_graph(X)
    if isinstance(X, tuple) and len(X) == 3:
        adjacency, inputs, outputs = X
        a = check_array(adjacency, dtype=np.int64, ensure_min_samples=1, ensure_min_features=1)
        n = a.shape[0]
        if a.shape != (n, n):
            raise GraphFormatError(f"adjacency matrix must be square, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise GraphFormatError("adjacency matrix must be 0/1")
        if not (a == a.T).all():
            raise GraphFormatError("adjacency matrix must be symmetric")
        if np.diag(a).any():
            raise GraphFormatError(f"self-loop on vertex {int(np.flatnonzero(np.diag(a))[0])}")
        adj = [mask_of(np.flatnonzero(row).tolist()) for row in a]
        return OpenGraph.from_masks(
            [str(i) for i in range(n)],
            adj,
            check_vertex_mask(inputs, n, "inputs"),
            check_vertex_mask(outputs, n, "outputs"),
        )
    raise TypeError(f"cannot interpret {type(X).__name__} as an open graph")
