import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hexid import _kernels_py, kernels
from hexid.code import make_params
from hexid.verifier import _offset_tables, verify

try:
    from hexid import _kernels
except ImportError:  # extension not built
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.get_backend("python") is _kernels_py
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


def test_splitmix64_reference_values():
    # first outputs of the reference generator seeded with 0
    assert _kernels_py.splitmix64(0) == 0xE220A8397B1DCDAF
    assert _kernels_py.splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4


@needs_ext
@given(st.integers(0, 2**64 - 1))
def test_splitmix64_backends_agree(z):
    assert _kernels.splitmix64(z) == _kernels_py.splitmix64(z)


@needs_ext
@settings(max_examples=40, deadline=None)
@given(
    arrays(np.uint8, st.tuples(st.integers(9, 16), st.integers(9, 16)), elements=st.integers(0, 1)),
    st.integers(0, 1),
    st.integers(1, 2),
)
def test_signature_and_scan_backends_agree(mask, parity0, r):
    even, odd = _offset_tables(r, drop_center=False)
    a = _kernels_py.signatures(mask, parity0, even, odd, r)
    b = _kernels.signatures(mask, parity0, even, odd, r)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])

    even2, odd2 = _offset_tables(2 * r, drop_center=True)
    H, W = mask.shape
    m = 3 * r
    if H <= 2 * m or W <= 2 * m:
        return
    dom = (m, H - m, m, W - m)
    pa = _kernels_py.scan_pairs(a[0], a[1], parity0, even2, odd2, dom, (dom[0], dom[1]))
    pb = _kernels.scan_pairs(b[0], b[1], parity0, even2, odd2, dom, (dom[0], dom[1]))
    assert pa == pb


def test_signature_count_is_ball_codeword_count():
    mask = np.ones((11, 11), dtype=np.uint8)
    even, odd = _offset_tables(2, drop_center=False)
    count, sig = _kernels_py.signatures(mask, 0, even, odd, 2)
    assert count[5, 5] == 10  # |B_2| at a vertex of even parity
    assert count[0, 0] == 0 and sig[0, 0] == 0


@needs_ext
@pytest.mark.parametrize("r", [2, 5, 8])
def test_verify_backends_agree(r):
    p = make_params(r)
    assert verify(p, backend="python") == verify(p, backend="cython")


def test_fallback_selected_without_extension(monkeypatch):
    import importlib
    import sys

    monkeypatch.setitem(sys.modules, "hexid._kernels", None)
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
        assert reloaded.signatures is _kernels_py.signatures
    finally:
        monkeypatch.undo()
        importlib.reload(kernels)
