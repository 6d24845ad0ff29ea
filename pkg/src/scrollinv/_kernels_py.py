"""Pure-Python implementations of the hot kernels.

Every function here has a twin with the same signature in the compiled
``_kernels`` extension; ``scrollinv._backend`` picks one at import time.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def sqfree_mul(a: dict, b: dict) -> dict:
    """Product of two square-free term maps ``{bitmask: coeff}``.

    Monomials sharing a generator vanish; zero coefficients are dropped.
    """
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            if ka & kb:
                continue
            k = ka | kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def transversal_keys(g: int) -> list:
    """Monomial bitmasks of ``prod_i (r_{1,i} + r_{2,i})``, ordered by labeling word.

    Word bit ``g - i`` holds the choice at factor ``i`` (0 means ruling 1);
    the monomial uses bit ``2(i-1) + choice``.
    """
    keys = []
    for w in range(1 << g):
        key = 0
        for i in range(1, g + 1):
            key |= 1 << (2 * (i - 1) + ((w >> (g - i)) & 1))
        keys.append(key)
    return keys


def first_non_transversal(keys, g: int) -> int:
    """Index of the first key not picking exactly one generator per factor, or -1."""
    for idx, key in enumerate(keys):
        if key >> (2 * g):
            return idx
        for i in range(g):
            if (key >> (2 * i)) & 3 not in (1, 2):
                return idx
    return -1


def hypercube_edges(g: int) -> np.ndarray:
    """Edges of the g-cube on words ``0..2^g-1``, smaller end first, sorted."""
    edges = []
    for w in range(1 << g):
        for b in range(g):
            if not (w >> b) & 1:
                edges.append((w, w | (1 << b)))
    return np.array(edges, dtype=np.int64).reshape(-1, 2)


def limit_graph_edges(g: int) -> np.ndarray:
    """Edges of the limit dual graph, smaller id first, sorted.

    Ids ``0..2^g-1`` are pencil components indexed by labeling word;
    ``2^g + (l-1) 2^(g-1) + p`` is the conic component at quadric ``l``
    with partial labeling word ``p``.
    """
    n_xi = 1 << g
    half = n_xi >> 1
    edges = []
    for w in range(n_xi):
        for b in range(g):
            if not (w >> b) & 1:
                edges.append((w, w | (1 << b)))
        for l in range(1, g + 1):
            b = g - l
            p = ((w >> (b + 1)) << b) | (w & ((1 << b) - 1))
            edges.append((w, n_xi + (l - 1) * half + p))
    return np.array(edges, dtype=np.int64).reshape(-1, 2)


def count_components(n: int, edges) -> int:
    """Number of connected components of a graph on ``0..n-1`` (union-find)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if pairs.size and (pairs.min() < 0 or pairs.max() >= n):
        raise IndexError("edge endpoint out of range")
    comps = n
    for u, v in pairs.tolist():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps
