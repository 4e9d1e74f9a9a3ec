"""Subset-table kernels with a numba fast path and a pure-numpy fallback.

For a graph on n vertices the kernels produce, for every one of the 2^n
vertex subsets, the closed neighborhood, cardinality, independence,
irredundance, and induced-subgraph connectivity.  Everything downstream
(solvers, lab scans) is built from these five arrays.

Backend selection: set SPLITDOM_BACKEND=numpy or SPLITDOM_BACKEND=numba.
Unset, the numba backend is used when importable, else numpy.  Both
backends return identical arrays; tests assert that equivalence.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ..errors import TooLargeForSolver
from ..graph import Graph

MAX_SOLVER_VERTICES = 16

_ENV_FLAG = "SPLITDOM_BACKEND"


def _pick_backend() -> str:
    choice = os.environ.get(_ENV_FLAG, "").strip().lower()
    if choice in ("numpy", "numba"):
        return choice
    if choice:
        raise ValueError(f"{_ENV_FLAG} must be 'numpy' or 'numba', got {choice!r}")
    try:
        import numba  # noqa: F401
        return "numba"
    except ImportError:
        return "numpy"


_BACKEND = _pick_backend()


def active_backend() -> str:
    """Name of the backend selected at import time."""
    return _BACKEND


@dataclass(frozen=True)
class SubsetTables:
    """Per-subset tables over all 2^n subsets of a graph's vertex set.

    nbh[s]  closed neighborhood N[S] as a bitmask
    pop[s]  cardinality of s
    ind[s]  s induces no edges
    irr[s]  every member of s keeps a private neighbor
    conn[s] the subgraph induced by s is connected (False for s = 0)
    """

    n: int
    nbh: np.ndarray
    pop: np.ndarray
    ind: np.ndarray
    irr: np.ndarray
    conn: np.ndarray


def _raw_tables(n: int, adj: np.ndarray):
    if _BACKEND == "numba":
        from . import numba_backend
        return numba_backend.subset_tables(n, adj)
    from . import numpy_backend
    return numpy_backend.subset_tables(n, adj)


def subset_tables(g: Graph) -> SubsetTables:
    """Compute the five base tables for a graph (n <= 16)."""
    if g.n > MAX_SOLVER_VERTICES:
        raise TooLargeForSolver(
            f"subset tables need 2^n entries; n={g.n} exceeds {MAX_SOLVER_VERTICES}"
        )
    adj = np.array(g.adj, dtype=np.uint32)
    nbh, pop, ind, irr, conn = _raw_tables(g.n, adj)
    return SubsetTables(g.n, nbh, pop, ind, irr, conn)
