"""Open graphs: vertices with designated input and output subsets.

Vertices are mapped to dense indices ``0..n-1`` in the order they are declared,
and every vertex set is stored as an ``int`` bitmask (bit ``i`` set iff vertex
``i`` is a member).  Adjacency is kept both as bitmasks and as sorted
neighbour tuples so that set algebra and neighbour iteration are both cheap.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from mbqcflow.gf2 import Gf2Matrix

__all__ = [
    "GraphFormatError",
    "OpenGraph",
    "gamma_submatrix",
    "flags_of",
    "iter_bits",
    "mask_of",
    "odd_mask",
    "odd_neighborhood",
    "parse_open_graph",
    "random_open_graph",
    "serialize_open_graph",
]


class GraphFormatError(ValueError):
    """Raised when a graph document or constructor argument is invalid."""


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    if mask.bit_length() <= 512:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low
        return
    # clearing bits one at a time on a long int is quadratic; scan its binary text instead
    digits = bin(mask)[:1:-1]
    i = digits.find("1")
    while i != -1:
        yield i
        i = digits.find("1", i + 1)


def flags_of(mask: int, n: int) -> list[bool]:
    flags = [False] * n
    for i in iter_bits(mask):
        flags[i] = True
    return flags


@dataclass(frozen=True)
class OpenGraph:
    """Simple undirected graph with input set ``I`` and output set ``O``.

    Build instances with :meth:`from_edges` or :func:`parse_open_graph`; the
    raw constructor trusts its arguments.  ``inputs`` and ``outputs`` are
    bitmasks over dense indices and may overlap.
    """

    names: tuple[str, ...]
    adj: tuple[int, ...]
    inputs: int
    outputs: int
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    index: dict[str, int] = field(repr=False, compare=False)

    @classmethod
    def from_edges(
        cls,
        names: Sequence[str],
        edges: Iterable[tuple[str, str]],
        inputs: Iterable[str] = (),
        outputs: Iterable[str] = (),
    ) -> OpenGraph:
        names = tuple(str(x) for x in names)
        if not names:
            raise GraphFormatError("graph has no vertices")
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if name in index:
                raise GraphFormatError(f"duplicate vertex name {name!r}")
            index[name] = i

        def lookup(name: str, what: str) -> int:
            try:
                return index[name]
            except (KeyError, TypeError):
                raise GraphFormatError(f"{what} {name!r} is not a declared vertex") from None

        adj = [0] * len(names)
        for edge in edges:
            if len(edge) != 2:
                raise GraphFormatError(f"edge {list(edge)!r} does not have two endpoints")
            a, b = edge
            u = lookup(a, "edge endpoint")
            v = lookup(b, "edge endpoint")
            if u == v:
                raise GraphFormatError(f"self-loop on vertex {a!r}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        imask = mask_of(lookup(x, "input") for x in inputs)
        omask = mask_of(lookup(x, "output") for x in outputs)
        return cls.from_masks(names, adj, imask, omask)

    @classmethod
    def from_masks(cls, names: Sequence[str], adj: Sequence[int], inputs: int, outputs: int) -> OpenGraph:
        nbrs = tuple(tuple(iter_bits(a)) for a in adj)
        return cls(
            names=tuple(names),
            adj=tuple(adj),
            inputs=inputs,
            outputs=outputs,
            neighbors=nbrs,
            index={name: i for i, name in enumerate(names)},
        )

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.neighbors) for v in nb if u < v]

    def input_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.inputs))

    def output_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.outputs))

    def vertex(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"unknown vertex {name!r}") from None

    def with_outputs(self, outputs: int) -> OpenGraph:
        """Same graph and inputs, different output mask."""
        return OpenGraph(self.names, self.adj, self.inputs, outputs, self.neighbors, self.index)

    def to_document(self) -> dict:
        return {
            "vertices": list(self.names),
            "edges": [[self.names[u], self.names[v]] for u, v in self.edges()],
            "inputs": [self.names[i] for i in iter_bits(self.inputs)],
            "outputs": [self.names[i] for i in iter_bits(self.outputs)],
        }


def parse_open_graph(text: str | bytes | dict) -> OpenGraph:
    """Parse a graph JSON document (or an already-decoded mapping)."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"malformed JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    missing = [k for k in ("vertices", "edges") if k not in doc]
    if missing:
        raise GraphFormatError(f"graph document lacks field {missing[0]!r}")
    for key in ("vertices", "edges", "inputs", "outputs"):
        if not isinstance(doc.get(key, []), list):
            raise GraphFormatError(f"field {key!r} must be a list")
    for name in doc["vertices"]:
        if not isinstance(name, str):
            raise GraphFormatError(f"vertex name {name!r} is not a string")
    for edge in doc["edges"]:
        if not isinstance(edge, list):
            raise GraphFormatError(f"edge {edge!r} must be a two-element list")
    return OpenGraph.from_edges(
        doc["vertices"],
        [tuple(e) for e in doc["edges"]],
        doc.get("inputs", []),
        doc.get("outputs", []),
    )


def serialize_open_graph(graph: OpenGraph, *, canonical: bool = True) -> str:
    """Dump ``graph`` as JSON.

    The canonical form sorts vertex names, orients each edge with the
    lexicographically smaller endpoint first and sorts the edge list, so
    parsing it back yields a graph whose dense indices follow name order.
    """
    doc = graph.to_document()
    if canonical:
        doc["vertices"] = sorted(doc["vertices"])
        doc["edges"] = sorted(sorted(e) for e in doc["edges"])
        doc["inputs"] = sorted(doc["inputs"])
        doc["outputs"] = sorted(doc["outputs"])
    return json.dumps(doc, indent=2) + "\n"


def odd_mask(graph: OpenGraph, k: int) -> int:
    """Odd neighbourhood of the vertex set ``k`` (a bitmask)."""
    odd = 0
    for v in iter_bits(k):
        odd ^= graph.adj[v]
    return odd


def odd_neighborhood(graph: OpenGraph, k: Iterable[int]) -> frozenset[int]:
    """Vertices with an odd number of neighbours in ``k``.

    A member of ``k`` can itself belong to the result.
    """
    return frozenset(iter_bits(odd_mask(graph, mask_of(k))))


def gamma_submatrix(graph: OpenGraph, rows: int | Iterable[int], cols: int | Iterable[int]) -> tuple[Gf2Matrix, list[int], list[int]]:
    """Adjacency submatrix restricted to ``rows`` x ``cols``.

    Rows and columns are listed in ascending vertex order; the two index lists
    are returned alongside the matrix so solutions can be mapped back.
    """
    rmask = rows if isinstance(rows, int) else mask_of(rows)
    cmask = cols if isinstance(cols, int) else mask_of(cols)
    row_ids = list(iter_bits(rmask))
    col_ids = list(iter_bits(cmask))
    position = {v: j for j, v in enumerate(col_ids)}
    data = []
    for r in row_ids:
        bits = 0
        for w in graph.neighbors[r]:
            j = position.get(w)
            if j is not None:
                bits |= 1 << j
        data.append(bits)
    return Gf2Matrix(len(row_ids), len(col_ids), tuple(data)), row_ids, col_ids


def random_open_graph(n: int, m: int, k_in: int, k_out: int, seed: int) -> OpenGraph:
    """Seeded random open graph with exactly ``m`` distinct edges.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``.
    Edges are drawn as ordered endpoint pairs ``randrange(n)``, rejecting
    self-loops and duplicates.  Inputs and then outputs are drawn with
    ``Random.sample`` over ``range(n)`` independently, so they may overlap.
    Vertex names are ``v0 .. v{n-1}``.
    """
    if n < 1:
        raise GraphFormatError("n must be at least 1")
    if not 0 <= m <= n * (n - 1) // 2:
        raise GraphFormatError(f"cannot place {m} edges on {n} vertices")
    if not (0 <= k_in <= n and 0 <= k_out <= n):
        raise GraphFormatError("input/output counts must lie in [0, n]")
    rng = random.Random(seed)
    adj = [0] * n
    placed = 0
    while placed < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or adj[u] >> v & 1:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        placed += 1
    inputs = mask_of(rng.sample(range(n), k_in))
    outputs = mask_of(rng.sample(range(n), k_out))
    return OpenGraph.from_masks([f"v{i}" for i in range(n)], adj, inputs, outputs)
