import math

import pytest

import _fqhe as fq


@pytest.fixture(scope="module")
def si():
    return fq.constants_for(fq.UnitSystem.SI)


def test_constants(si):
    assert si.e == 1.602176634e-19
    assert si.h == pytest.approx(2 * math.pi * si.hbar, rel=1e-12)


def test_series_fractions():
    psi1, psi2 = fq.conjugate_series(4)
    assert [(f.num, f.den) for f in psi1] == [(1, 3), (2, 5), (3, 7), (4, 9)]
    assert [(f.num, f.den) for f in psi2] == [(1, 1), (2, 3), (3, 5), (4, 7)]


def test_oscillator_roundtrip(si):
    nat = fq.constants_for(fq.UnitSystem.Natural)
    params = fq.OscillatorParams.make(1.0, 1.0, nat)
    assert fq.energy(3, params, nat) == pytest.approx(4.0)
    assert fq.angular_momentum_hbar(fq.StateLabel(fq.Branch.Psi1, 3)) == -3
    psi = fq.wavefunction(fq.StateLabel(fq.Branch.Psi2, 0), params, 0.5, 1.0)
    assert psi.imag == pytest.approx(0.0)


def test_transport(si):
    geom = fq.SampleGeometry(1e-3, 1e-6, 1e15)
    assert fq.characteristic_current(geom, si.m_e, si) == pytest.approx(
        2.952e-9, rel=1e-3
    )
    assert fq.hall_resistance(fq.Branch.Psi2, 1, si) == pytest.approx(
        25812.807, rel=1e-6
    )
    with pytest.raises(ValueError):
        fq.fractional_charge(fq.Branch.Psi1, 0)


def test_sweep(si):
    geom = fq.SampleGeometry(1e-3, 1e-6, 1e15)
    config = fq.SweepConfig(0.1, 3.0, 50, geom, 1e-3, fq.Branch.Psi2)
    records = fq.run_sweep(config, si)
    assert len(records) == 50
    assert records[0].b == pytest.approx(0.1)
    assert all(r.r_hall is not None for r in records if r.n_cont >= 0)


def test_phases():
    assert fq.electron_composition(5) == fq.Fraction(1, 1)
    assert fq.conjugation_check(7)
    assert fq.flux_quantization(fq.Branch.Psi1, 1, 1) == fq.Fraction(3, 1)
