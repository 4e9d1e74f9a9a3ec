"""Vectorized pure-numpy subset tables.

Uses the doubling layout of the subset lattice: subsets of {0..v} occupy
indices [0, 2^(v+1)), so each table extends by one OR/AND over the
existing prefix per vertex.  Connectivity is a fixpoint of fancy-indexed
neighborhood expansion; it needs at most n rounds.
"""

from __future__ import annotations

import numpy as np


def subset_tables(n: int, adj: np.ndarray):
    size = 1 << n
    idx = np.arange(size, dtype=np.uint32)
    closed = adj | (np.uint32(1) << np.arange(n, dtype=np.uint32))

    nbh = np.zeros(size, dtype=np.uint32)
    pop = np.zeros(size, dtype=np.uint8)
    ind = np.ones(size, dtype=np.bool_)
    for v in range(n):
        b = 1 << v
        nbh[b : 2 * b] = nbh[:b] | closed[v]
        pop[b : 2 * b] = pop[:b] + 1
        ind[b : 2 * b] = ind[:b] & ((idx[:b] & adj[v]) == 0)

    irr = np.ones(size, dtype=np.bool_)
    for v in range(n):
        b = np.uint32(1 << v)
        has = (idx & b) != 0
        without = idx[has] ^ b
        private = closed[v] & ~nbh[without]
        irr[has] &= private != 0

    # reach starts at the lowest member and floods within the subset
    reach = idx & (~idx + np.uint32(1))
    for _ in range(n):
        grown = nbh[reach] & idx
        if np.array_equal(grown, reach):
            break
        reach = grown
    conn = (reach == idx) & (idx != 0)

    return nbh, pop, ind, irr, conn
