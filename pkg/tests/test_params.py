"""Cyclotomic parameters: 𝐟, the ω recursion, and the derived 𝐠."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cyclobrauer.errors import ParameterError
from cyclobrauer.params import Parameters, poly_from_roots, rational_roots, typical


def test_poly_from_roots_ascending():
    assert poly_from_roots([Fraction(1), Fraction(-2)]) == [-2, 1, 1]
    assert rational_roots([Fraction(-2), Fraction(1), Fraction(1)]) == [-2, 1]


def test_schur_weyl_parameters():
    params = Parameters.schur_weyl(2, 2, 0, 2)
    assert params.u == (0, 0)
    assert params.f_coeffs == [0, 0, 1]
    assert params.omega_sequence(3) == [0, 4, 0, 0]
    assert params.g_coeffs == [-4, 0, 1]
    assert params.ubar == (2, -2)


def test_derived_ubar_without_input():
    params = Parameters.create([0, 0], [0, 4])
    assert params.ubar is not None
    assert sorted(params.ubar) == [-2, 2]


@pytest.mark.parametrize(("m", "n", "p", "q"), [(2, 2, 0, 2), (3, 1, Fraction(1, 2), 2), (1, 2, -3, 1)])
def test_level_two_recursion(m: int, n: int, p: Fraction, q: Fraction):
    p, q = Fraction(p), Fraction(q)
    omega = Parameters.schur_weyl(m, n, p, q).omega_sequence(10)
    assert omega[0] == m - n
    assert omega[1] == n * q - m * p
    for a in range(2, 11):
        assert omega[a] == (m - p - q) * omega[a - 1] - p * (q - m) * omega[a - 2]


def test_bar_omega_starts_with_omega_zero():
    params = Parameters.schur_weyl(2, 2, 0, 2)
    assert params.bar_omega_sequence(3)[0] == params.omega(0)


def test_non_admissible_omega_is_rejected():
    with pytest.raises(ParameterError, match="ω_2"):
        Parameters.create([0, 0], [0, 4, 5])


def test_inconsistent_ubar_is_rejected():
    with pytest.raises(ParameterError):
        Parameters.create([0, 0], [0, 4], [1, 1])


def test_root_count_must_match_k():
    with pytest.raises(ParameterError):
        Parameters(k=2, u=(Fraction(0),), omega_seed=(Fraction(0), Fraction(0)))


def test_typicality():
    assert typical(2, 2, Fraction(0), Fraction(2))
    assert not typical(2, 2, Fraction(0), Fraction(1))
    assert typical(2, 2, Fraction(1, 2), Fraction(0))
    assert typical(2, 2, Fraction(2), Fraction(0))


def test_digest_tracks_parameters():
    a = Parameters.create([0, 0], [0, 4])
    assert a.digest == Parameters.create([0, 0], [0, 4]).digest
    assert a.digest != Parameters.create([0, 1], [0, 4]).digest
