import pytest

from tilekit.hyper import (
    BitWindow,
    digit_sum_parity,
    standard_offsets,
    sum2d_window,
    tm_window,
    verify_witness,
)


def test_tm_window_values():
    assert tm_window(0, 7).bits == (0, 1, 1, 0, 1, 0, 0, 1)
    assert tm_window(8, 11).bits == (1, 0, 0, 1)


def test_tm_window_even():
    w = tm_window(-16, 16)
    for i in range(17):
        assert w.value(-i) == w.value(i)


def test_digit_sum_parity():
    assert [digit_sum_parity(i) for i in range(8)] == [0, 1, 1, 0, 1, 0, 0, 1]
    assert digit_sum_parity(-5) == digit_sum_parity(5)


def test_sum2d_rows_copy_when_one_factor_constant():
    x = BitWindow(1, (0,), (0, 0, 0), (3,))
    y = tm_window(0, 4)
    xy = sum2d_window(x, y)
    for i in range(3):
        for j in range(5):
            assert xy.value((i, j)) == y.value(j)


def test_sum2d_formula_and_symmetry():
    x = tm_window(0, 3)
    xy = sum2d_window(x, x)
    for i in range(4):
        for j in range(4):
            assert xy.value((i, j)) == (x.value(i) + x.value(j)) % 2
            assert xy.value((i, j)) == xy.value((j, i))


def test_witness_standard_offsets():
    w = tm_window(-256, 256)
    assert verify_witness(w, 1, [(t,) for t in range(-4, 5)])


def test_witness_constant_window_fails():
    w = BitWindow(1, (-20,), (0,) * 41, (41,))
    assert not verify_witness(w, 1, [(t,) for t in range(-4, 5)])


def test_witness_window_too_small():
    w = tm_window(0, 3)
    with pytest.raises(ValueError):
        verify_witness(w, 1, [(t,) for t in range(-8, 9)])


def test_witness_all_small_shifts():
    for s in list(range(1, 9)) + [-s for s in range(1, 9)]:
        window = tm_window(-64 * abs(s), 64 * abs(s))
        assert verify_witness(window, s, standard_offsets(s))


def test_witness_translation_invariant():
    T = standard_offsets(2)
    for lo in (-80, -64, -100):
        w = tm_window(lo, lo + 160)
        assert verify_witness(w, 2, T)


def test_witness_product_construction():
    x = tm_window(-24, 24)
    xy = sum2d_window(x, x)
    T = [(a, b) for a in range(-8, 10) for b in range(-8, 10)]
    assert verify_witness(xy, (1, 1), T)


def test_witness_2d_constant_fails():
    flat = BitWindow(2, (-6, -6), (0,) * (13 * 13), (13, 13))
    assert not verify_witness(flat, (1, 1), [(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)])


def _verify_orthogonality(wx, wy, T):
    """Two-window variant: some offset distinguishes every position pair."""
    offs = sorted(t for (t,) in T)
    lo_t, hi_t = offs[0], offs[-1]

    def interior(w):
        (lo,) = w.lo
        (ext,) = w.extents
        return range(max(0, -lo_t), min(ext, ext - hi_t))

    tested = 0
    for i in interior(wx):
        for j in interior(wy):
            tested += 1
            if all(wx.bits[i + t] == wy.bits[j + t] for t in offs):
                return False
    if tested == 0:
        raise ValueError("windows too small")
    return True


def test_orthogonality_two_window_variant():
    x = tm_window(-64, 64)
    zero = BitWindow(1, (-64,), (0,) * 129, (129,))
    T = [(t,) for t in range(-8, 9)]
    # every 17-cell stretch of the parity word contains a one
    assert _verify_orthogonality(x, zero, T)
    assert not _verify_orthogonality(zero, zero, T)
    assert not _verify_orthogonality(x, x, T)
