"""Search kernels with a compiled core and a pure-Python fallback.

The compiled module is used when it imports and the graph has at most 64
vertices. Set ``BCHROMATIC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from typing import Optional

from . import _pykernels

try:
    if os.environ.get("BCHROMATIC_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
COMPILED_MAX_N = 64


class SearchBudgetExceeded(RuntimeError):
    """An exact search hit its node budget before reaching an answer."""


def _impl(n: int, backend: Optional[str]):
    choice = backend or BACKEND
    if choice == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if n <= COMPILED_MAX_N:
            return _ckernels
    return _pykernels


def max_clique(adj: list[int], backend: Optional[str] = None) -> int:
    return _impl(len(adj), backend).max_clique(list(adj))


def greedy_coloring(adj: list[int], backend: Optional[str] = None) -> list[int]:
    return _impl(len(adj), backend).greedy_coloring(list(adj))


def color_k(adj: list[int], k: int, budget: int, backend: Optional[str] = None) -> Optional[list[int]]:
    impl = _impl(len(adj), backend)
    try:
        res = impl.color_k(list(adj), k, budget)
    except _pykernels._Budget:
        res = _pykernels.BUDGET_EXCEEDED
    if isinstance(res, int):
        raise SearchBudgetExceeded(f"{k}-colouring search exceeded {budget} nodes")
    return res


def b_coloring(adj: list[int], k: int, budget: int, backend: Optional[str] = None):
    impl = _impl(len(adj), backend)
    try:
        res = impl.b_coloring(list(adj), k, budget)
    except _pykernels._Budget:
        res = _pykernels.BUDGET_EXCEEDED
    if isinstance(res, int):
        raise SearchBudgetExceeded(f"b-colouring search with {k} colours exceeded {budget} nodes")
    return res
