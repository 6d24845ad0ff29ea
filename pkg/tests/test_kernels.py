"""The compiled and pure-Python kernels must agree on every input."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scrollinv import _backend, _kernels_py

KERNELS = [pytest.param(_kernels_py, id="python")]
if _backend.compiled_kernels is not None:
    KERNELS.append(pytest.param(_backend.compiled_kernels, id="cython"))

needs_compiled = pytest.mark.skipif(_backend.compiled_kernels is None, reason="extension not built")

terms = st.dictionaries(st.integers(0, 2**12 - 1), st.integers(-(2**20), 2**20), max_size=30)


@needs_compiled
@settings(max_examples=300, deadline=None)
@given(terms, terms)
def test_sqfree_mul_agrees(a, b):
    assert _backend.compiled_kernels.sqfree_mul(a, b) == _kernels_py.sqfree_mul(a, b)


@needs_compiled
@pytest.mark.parametrize("g", range(1, 11))
def test_graph_kernels_agree(g):
    c, p = _backend.compiled_kernels, _kernels_py
    assert np.array_equal(c.hypercube_edges(g), p.hypercube_edges(g))
    assert np.array_equal(c.limit_graph_edges(g), p.limit_graph_edges(g))
    edges = p.limit_graph_edges(g)
    n = (g + 2) << (g - 1)
    assert c.count_components(n, edges) == p.count_components(n, edges) == 1


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(st.integers(1, 40).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=60))))
def test_count_components_agree(case):
    n, pairs = case
    edges = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    assert _backend.compiled_kernels.count_components(n, edges) == _kernels_py.count_components(n, edges)


@pytest.mark.parametrize("k", KERNELS)
def test_transversal_keys(k):
    keys = sorted(k.transversal_keys(3))
    assert len(keys) == 8
    assert k.first_non_transversal(keys, 3) == -1
    assert k.first_non_transversal(keys + [0b000011], 3) == 8


@pytest.mark.parametrize("k", KERNELS)
def test_count_components_rejects_bad_endpoint(k):
    with pytest.raises((IndexError, ValueError)):
        k.count_components(2, np.array([[0, 5]], dtype=np.int64))


@needs_compiled
def test_compiled_overflow_raises_and_wrapper_falls_back():
    a, b = {1: 2**40}, {2: 2**40}
    with pytest.raises(OverflowError):
        _backend.compiled_kernels.sqfree_mul(a, b)
    assert _backend.sqfree_mul(a, b) == {3: 2**80}
    with pytest.raises(OverflowError):
        _backend.compiled_kernels.sqfree_mul({1: 2**70}, {2: 1})
    assert _backend.sqfree_mul({1: 2**70}, {2: 1}) == {3: 2**70}


def test_backend_name():
    assert _backend.BACKEND in {"cython", "python"}
    if _backend.compiled_kernels is None:
        assert _backend.BACKEND == "python"


def test_pure_python_switch(monkeypatch):
    import importlib

    monkeypatch.setenv("SCROLLINV_PURE_PYTHON", "1")
    reloaded = importlib.reload(_backend)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.kernels is _kernels_py
    finally:
        monkeypatch.delenv("SCROLLINV_PURE_PYTHON")
        importlib.reload(_backend)
