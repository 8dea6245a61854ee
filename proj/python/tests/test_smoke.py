from fractions import Fraction
import math

import pytest

import rgspectra as rg


def interaction(terms, lattice="original", dimension=1):
    return {
        "dimension": dimension,
        "lattice": lattice,
        "terms": [{"sites": s, "value": v} for s, v in terms],
    }


def test_blocks():
    assert rg.block([0], 3) == [[-1], [0], [1]]
    assert rg.block([1], 2) == [[2], [3]]
    assert rg.block_index([4], 3) == [1]
    assert len(rg.region([[0, 0]], 3)) == 9


def test_nu_and_chi():
    assert rg.nu(3) == Fraction(1, 2)
    assert rg.nu(5) == Fraction(3, 8)
    assert rg.nu(3, 2) == Fraction(35, 128)
    assert rg.chi([[-1], [0], [1]], 3) == Fraction(-1, 2)
    assert rg.chi([[-1], [1]], 3) == 0
    with pytest.raises(rg.RgError):
        rg.nu(4)


def test_rg_map():
    zero = rg.rg_map(interaction([]), window=[[0], [1]])
    assert zero["terms"] == []
    field = interaction([([[x]], 0.1) for x in (-1, 0, 1)])
    out = rg.rg_map(field, transform="majority")
    expected = 0.5 * math.log((math.exp(0.3) + 3 * math.exp(0.1)) / (math.exp(-0.3) + 3 * math.exp(-0.1)))
    assert abs(out["terms"][0]["value"] - expected) < 1e-12
    with pytest.raises(rg.RgError, match="escapes"):
        rg.rg_map(interaction([([[0], [5]], 0.2)]))


def test_jacobian_methods_agree():
    z, w = [[0]], [[-1], [0], [1]]
    assert rg.jacobian(z, w, "majority") == Fraction(-1, 2)
    assert rg.jacobian(z, w, "majority", method="brute") == Fraction(-1, 2)
    assert abs(rg.jacobian(z, w, "majority", method="fd") + 0.5) < 1e-6


def test_linearizations_and_adjoint():
    out = rg.apply_L(interaction([([[3]], 5)]))
    assert out["lattice"] == "image"
    assert out["terms"] == [{"sites": [[1]], "value": 5.0}]
    back = rg.apply_Lstar(interaction([([[0]], 2)], lattice="image"))
    assert back["terms"] == []
    kept = rg.apply_Lstar(interaction([([[0]], 2)], lattice="image"), keep_origin=True)
    assert kept["terms"] == [{"sites": [[0]], "value": 2.0}]


def test_spectral_certificates():
    assert rg.eigen_residual(0.5, depth=8) == 0.0
    assert rg.eigen_residual("snu", "majority", depth=4) == 0.0
    assert rg.eigen_residual(complex(0.3, -0.8)) < 1e-12
    empty = interaction([], lattice="image")
    assert rg.witness_distance(0.2, empty, "majority") == 1.0
    with pytest.raises(rg.RgError):
        rg.witness_distance(0.9, empty, "majority")
    assert rg.operator_norm_probe("decimation", "adjoint", r=0.5, samples=50) <= 1 + 1e-12
    rows = rg.stirling([3, 9, 25])
    assert abs(rows[0]["ratio"] - 1.08540) < 5e-5
    assert rows[1]["nu"] == Fraction(35, 128)


def test_verify_report():
    report = rg.verify("kernels")
    assert report["pass"] is True
    assert all(c["status"] == "pass" for c in report["checks"])
    with pytest.raises(rg.RgError):
        rg.verify("nonsense")
