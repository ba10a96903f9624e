import math
from fractions import Fraction

import pytest

from holonet.weights import AffineWeight, enumerate_weights, weight_count, weight_from_text


def stars_and_bars(n, k):
    # independent count: label vectors with sum s for s = 0..k
    return sum(math.comb(s + n - 2, n - 2) for s in range(k + 1))


@pytest.mark.parametrize(
    "n,k,expected",
    [(2, 10, 11), (10, 2, 55), (8, 4, 330), (9, 3, 165), (4, 8, 165), (3, 9, 55)],
)
def test_enumeration_counts(n, k, expected):
    ws = enumerate_weights(n, k)
    assert len(ws) == expected == stars_and_bars(n, k) == weight_count(n, k)


def test_enumeration_order_and_vacuum():
    ws = enumerate_weights(3, 2)
    assert ws[0].labels == (0, 0)
    assert [w.labels for w in ws] == sorted(w.labels for w in ws)
    assert len(set(ws)) == len(ws)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        enumerate_weights(1, 3)
    with pytest.raises(ValueError):
        enumerate_weights(3, 0)
    with pytest.raises(ValueError):
        AffineWeight(3, 2, (2, 1))
    with pytest.raises(ValueError):
        AffineWeight(3, 2, (-1, 0))
    with pytest.raises(ValueError):
        AffineWeight(3, 2, (1,))


def test_simple_current_basics():
    vac = AffineWeight(10, 2, (0,) * 9)
    assert vac.simple_current().labels == (2,) + (0,) * 8
    e3 = AffineWeight(10, 2, (0, 0, 1, 0, 0, 0, 0, 0, 0))
    assert e3.simple_current(3).labels == (0, 0, 1, 0, 0, 1, 0, 0, 0)
    for w in enumerate_weights(10, 2):
        assert w.simple_current(10) == w


def test_conjugate_examples():
    vac = AffineWeight(4, 3, (0, 0, 0))
    assert vac.conjugate() == vac
    palindromic = AffineWeight(10, 2, (0, 0, 1, 0, 0, 0, 1, 0, 0))
    assert palindromic.conjugate() == palindromic
    w = AffineWeight(9, 3, (0, 0, 0, 1, 0, 1, 0, 1))
    assert w.conjugate().labels == (1, 0, 1, 0, 1, 0, 0, 0)
    assert w.conjugate().conjugate() == w


def test_color_examples():
    assert AffineWeight(5, 3, (0, 0, 0, 0)).color == 0
    assert AffineWeight(10, 2, (2,) + (0,) * 8).color == 2
    assert AffineWeight(9, 3, (0, 0, 0, 1, 0, 1, 0, 1)).color == 0


def sweep_pairs():
    return [(n, k) for n in range(2, 11) for k in range(1, 11)]


@pytest.mark.parametrize(
    "n,k", [(2, 10), (3, 9), (4, 8), (10, 2), (9, 3), (8, 4), (5, 5), (2, 3)]
)
def test_current_color_and_closure(n, k):
    ws = enumerate_weights(n, k)
    seen = set(ws)
    for w in ws:
        j = w.simple_current()
        assert j in seen
        assert j.color == (w.color + k) % n
        assert w.conjugate() in seen
        assert w.conjugate().color == (-w.color) % n
    # J and conjugation are permutations
    assert len({w.simple_current() for w in ws}) == len(ws)
    assert len({w.conjugate() for w in ws}) == len(ws)


def test_current_color_shift_full_sweep():
    # every weight of every (n, k) up to (10, 10), on raw label tuples
    import numpy as np

    for n, k in sweep_pairs():
        labels = np.array(
            [w.labels for w in enumerate_weights(n, k)], dtype=np.int64
        )
        ext = np.column_stack([k - labels.sum(axis=1), labels])
        rotated = np.roll(ext, 1, axis=1)
        coeff = np.arange(1, n)
        color = labels @ coeff % n
        color_j = rotated[:, 1:] @ coeff % n
        assert (color_j == (color + k) % n).all()
        color_conj = labels[:, ::-1] @ coeff % n
        assert (color_conj == (-color) % n).all()
        # rotation stays inside the weight set: nonnegative affine label
        assert rotated[:, 1:].sum(axis=1).max() <= k


def test_current_orbit_weights():
    for n, k in sweep_pairs():
        vac = AffineWeight(n, k, (0,) * (n - 1))
        for a in range(n):
            h = vac.simple_current(a).conformal_weight()
            assert h == Fraction(a * (n - a) * k, 2 * n)


def test_text_round_trip():
    w = weight_from_text(4, 8, "1,2,1")
    assert w.labels == (1, 2, 1)
    assert str(w) == "1,2,1"
    assert w.label_zero == 4
