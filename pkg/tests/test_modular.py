import numpy as np
import pytest
from fractions import Fraction

from holonet.modular import (
    NumericalIntegrityError,
    SectorVector,
    central_charge,
    s_matrix,
    sun_datum,
)
from holonet.weights import AffineWeight, enumerate_weights

RNG_SEED = 20240811


def su2_closed_form_s(k):
    kk = k + 2
    return np.array(
        [
            [np.sqrt(2.0 / kk) * np.sin((a + 1) * (b + 1) * np.pi / kk) for b in range(k + 1)]
            for a in range(k + 1)
        ]
    )


def su2_fusion_rule(k, a, b):
    # combinatorial truncated Clebsch-Gordan rule, as an independent oracle
    out = {}
    for c in range(abs(a - b), min(a + b, 2 * k - a - b) + 1, 2):
        out[c] = 1
    return out


def test_su2_s_matrix_matches_closed_form():
    for k in (1, 4, 10):
        assert np.abs(s_matrix(2, k) - su2_closed_form_s(k)).max() < 1e-12


def test_su2_conformal_weights_closed_form():
    for k in (3, 10):
        for a in range(k + 1):
            w = AffineWeight(2, k, (a,))
            assert w.conformal_weight() == Fraction(a * (a + 2), 4 * (k + 2))


def test_su2_10_fusion_against_two_oracles(wzw_data):
    datum = wzw_data[(2, 10)]
    S = su2_closed_form_s(10)
    for a in range(11):
        for b in range(a, 11):
            # oracle 1: Verlinde sum over the closed-form S
            verlinde = {}
            for c in range(11):
                val = sum(S[a, d] * S[b, d] * S[c, d] / S[0, d] for d in range(11))
                r = int(round(val))
                assert abs(val - r) < 1e-9
                if r:
                    verlinde[c] = r
            # oracle 2: the truncated angular-momentum rule
            rule = su2_fusion_rule(10, a, b)
            got = {
                label.labels[0]: m
                for label, m in datum.fuse(
                    AffineWeight(2, 10, (a,)), AffineWeight(2, 10, (b,))
                ).items()
            }
            assert got == verlinde == rule


def test_central_charges():
    assert central_charge(10, 2) == Fraction(33, 2)
    assert central_charge(2, 1) == 1
    assert central_charge(9, 3) == 20
    assert central_charge(8, 4) == 21
    with pytest.raises(ValueError):
        central_charge(1, 1)


def test_printed_exact_weights_su10_2():
    expected = [
        ((0, 0, 1, 0, 0, 0, 0, 0, 0), Fraction(77, 80)),
        ((1, 0, 0, 1, 0, 0, 0, 0, 0), Fraction(25, 16)),
        ((0, 0, 0, 0, 1, 0, 0, 1, 0), Fraction(157, 80)),
        ((0, 0, 1, 0, 0, 1, 0, 0, 0), Fraction(173, 80)),
        ((0, 0, 0, 1, 0, 0, 1, 0, 0), Fraction(173, 80)),
        ((0, 0, 1, 0, 0, 0, 1, 0, 0), Fraction(2)),
    ]
    for labels, h in expected:
        assert AffineWeight(10, 2, labels).conformal_weight() == h
    seed = AffineWeight(10, 2, (0, 0, 1, 0, 0, 0, 0, 0, 0))
    sigma_values = [seed.simple_current(i).conformal_weight() for i in range(5)]
    assert sigma_values == [
        Fraction(77, 80),
        Fraction(25, 16),
        Fraction(157, 80),
        Fraction(173, 80),
        Fraction(173, 80),
    ]


def test_printed_exact_weights_su9_3_su4_8():
    assert AffineWeight(9, 3, (3, 0, 0, 0, 0, 0, 0, 0)).conformal_weight() == Fraction(4, 3)
    assert AffineWeight(9, 3, (0, 3, 0, 0, 0, 0, 0, 0)).conformal_weight() == Fraction(7, 3)
    assert AffineWeight(9, 3, (0, 0, 0, 1, 0, 1, 0, 1)).conformal_weight() == Fraction(7, 3)
    assert AffineWeight(9, 3, (0, 0, 1, 0, 0, 0, 1, 1)).conformal_weight() == 2
    assert AffineWeight(4, 8, (1, 1, 3)).conformal_weight() == Fraction(5, 4)
    assert AffineWeight(4, 8, (1, 2, 1)).conformal_weight() == 1
    assert AffineWeight(2, 10, (6,)).conformal_weight() == 1


@pytest.mark.parametrize("pair", [(2, 10), (10, 2), (9, 3), (8, 4), (4, 8), (3, 9)])
def test_wzw_datum_invariants(pair, wzw_data):
    datum = wzw_data[pair]
    r = datum.residuals
    assert r["unitarity"] < 1e-9
    assert r["symmetry"] < 1e-9
    assert r["s_squared"] < 1e-9
    assert r["modular_relation"] < 1e-8
    assert (datum.S[0].real > 0).all()
    assert datum.h[0] == 0
    assert (datum.d >= 1 - 1e-9).all()
    # mu = sum of squared dimensions
    assert abs(datum.mu - (datum.d**2).sum()) / datum.mu < 1e-6


def test_mu_values_closed_form(wzw_data):
    mu_su2_10 = 48 + 24 * np.sqrt(3.0)
    assert abs(wzw_data[(2, 10)].mu - mu_su2_10) < 1e-9
    assert abs(wzw_data[(10, 2)].mu - 5 * mu_su2_10) < 1e-8


def _sample_pairs(datum, count):
    rng = np.random.default_rng(RNG_SEED)
    size = datum.size
    return {
        (int(i), int(j))
        for i, j in zip(rng.integers(0, size, count), rng.integers(0, size, count))
    }


@pytest.mark.parametrize("pair", [(2, 10), (10, 2), (9, 3), (8, 4), (4, 8), (3, 9)])
def test_fusion_properties(pair, wzw_data):
    datum = wzw_data[pair]
    if datum.size <= 60:
        pairs = {(i, j) for i in range(datum.size) for j in range(i, datum.size)}
    else:
        pairs = _sample_pairs(datum, 120)
    for i, j in pairs:
        a, b = datum.labels[i], datum.labels[j]
        coeffs = datum.fusion_coeffs(a, b)
        assert coeffs.min() >= 0
        assert (coeffs == datum.fusion_coeffs(b, a)).all()
        total = float(coeffs @ datum.d)
        ref = datum.dim(a) * datum.dim(b)
        assert abs(total - ref) / ref < 1e-6
    vac = datum.vacuum
    for i in range(0, datum.size, max(1, datum.size // 25)):
        label = datum.labels[i]
        assert datum.fuse(vac, label) == {label: 1}


def test_simple_current_fusion_rows(wzw_data):
    datum = wzw_data[(10, 2)]
    j = datum.labels[0].simple_current()
    for mu in datum.labels:
        assert datum.fuse(j, mu) == {mu.simple_current(): 1}


def test_univalence_and_quantum_dim(wzw_data):
    datum = wzw_data[(2, 10)]
    vac = datum.vacuum
    assert datum.univalence(vac) == 1
    assert datum.quantum_dim(vac) == 1
    six = AffineWeight(2, 10, (6,))
    assert abs(datum.quantum_dim(six) - (2 + np.sqrt(3.0))) < 1e-12
    lam3 = AffineWeight(10, 2, (0, 0, 1, 0, 0, 0, 0, 0, 0))
    w10 = wzw_data[(10, 2)]
    assert abs(w10.univalence(lam3) - np.exp(2j * np.pi * 77 / 80)) < 1e-12


def test_fusion_integrity_error():
    datum = sun_datum(2, 3)
    broken = type(datum).__new__(type(datum))
    broken.__dict__.update(datum.__dict__)
    broken._fusion_cache = {}
    broken.S = datum.S + 0.01
    with pytest.raises(NumericalIntegrityError):
        broken.fusion_coeffs(broken.labels[1], broken.labels[1])


def test_sector_vector_arithmetic(wzw_data):
    datum = wzw_data[(2, 10)]
    a = SectorVector(datum, {AffineWeight(2, 10, (0,)): 1})
    b = SectorVector(datum, {AffineWeight(2, 10, (6,)): 1})
    both = a + b
    assert both.total() == 2
    assert abs(both.total_dim() - (3 + np.sqrt(3.0))) < 1e-12
    assert both.conjugate() == both
    with pytest.raises(ValueError):
        SectorVector(datum, {AffineWeight(2, 10, (0,)): -1})
    with pytest.raises(KeyError):
        SectorVector(datum, {AffineWeight(2, 3, (0,)): 1})
