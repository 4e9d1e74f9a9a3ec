"""Numba-jitted subset tables: one tight loop pass per table."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _kernel(n, adj):  # pragma: no cover - exercised through subset_tables
    size = 1 << n
    closed = np.empty(n, dtype=np.uint32)
    for v in range(n):
        closed[v] = adj[v] | (1 << v)

    nbh = np.zeros(size, dtype=np.uint32)
    pop = np.zeros(size, dtype=np.uint8)
    ind = np.ones(size, dtype=np.bool_)
    for s in range(1, size):
        low = s & (-s)
        t = s ^ low
        v = 0
        while (low >> v) & 1 == 0:
            v += 1
        nbh[s] = nbh[t] | closed[v]
        pop[s] = pop[t] + 1
        ind[s] = ind[t] and (adj[v] & t) == 0

    irr = np.ones(size, dtype=np.bool_)
    for s in range(1, size):
        rest = s
        ok = True
        while rest:
            low = rest & (-rest)
            rest ^= low
            v = 0
            while (low >> v) & 1 == 0:
                v += 1
            if closed[v] & ~nbh[s ^ low] == 0:
                ok = False
                break
        irr[s] = ok

    conn = np.zeros(size, dtype=np.bool_)
    for s in range(1, size):
        reach = np.uint32(s & (-s))
        while True:
            grown = nbh[reach] & np.uint32(s)
            if grown == reach:
                break
            reach = grown
        conn[s] = reach == np.uint32(s)

    return nbh, pop, ind, irr, conn


def subset_tables(n: int, adj: np.ndarray):
    return _kernel(n, adj)
