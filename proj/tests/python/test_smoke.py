"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import uzalc


def test_koebe_coefficients_and_evaluation():
    f = uzalc.ClassUFunction.koebe()
    for n in range(2, 9):
        assert abs(f.coefficient(n) - n) < 1e-12
    assert f.membership_margin == 0.0
    assert f.pole_free
    assert abs(f.eval(0.5) - 2.0) < 1e-14  # z/(1-z)^2 at 1/2


def test_functional_evaluation_and_bounds():
    spec = uzalc.FunctionalSpec.parse("Z:3")
    assert str(spec) == "Z:3"
    assert uzalc.bound(spec) == 4.0
    f = uzalc.ClassUFunction.koebe(0.7)
    assert abs(uzalc.evaluate(spec, f) - 4.0) < 1e-12
    assert abs(uzalc.excess(spec, f)) < 1e-12
    assert len(uzalc.proven_specs()) == 6
    assert uzalc.is_proven_case(spec)
    assert not uzalc.is_proven_case(uzalc.FunctionalSpec.gen_zalcman(3, 3))


def test_certification():
    cert = uzalc.certify_max(uzalc.AuxKind.f2, 3.0)
    assert cert.status == uzalc.CertStatus.proven
    assert 3.0 <= cert.certified_sup_hi <= 3.0 + 1e-6
    assert cert.attained_lo >= 3.0 - 1e-6

    pos = uzalc.certify_dy_positive(uzalc.AuxKind.f2)
    assert pos.status == uzalc.CertStatus.proven
    assert pos.certified_inf_lo >= 2.0 / 3.0 - 1e-9

    reps = uzalc.edge_profiles(uzalc.AuxKind.g)
    assert [round(r.closed_form_max, 9) for r in reps] == [2.0, 11.0, 11.0]

    assert abs(uzalc.aux_eval(uzalc.AuxKind.f1, 1.0, 0.0) - 4.0) < 1e-14
    assert uzalc.aux_sharp_bound(uzalc.AuxKind.g) == 11.0
    assert uzalc.grid_oracle(uzalc.AuxKind.f1, 501).max == pytest.approx(4.0, abs=1e-12)


def test_sampling_and_lemma1():
    s = uzalc.sample(seed=11, degree=3)
    assert s.fn.membership_margin >= 1e-6
    assert s.fn.pole_free
    assert abs(s.a2) <= 2.0 + 1e-9
    rep = s.fn.omega().lemma1()
    assert rep.ok
    assert all(slack >= -1e-9 for slack in rep.slacks)
    for spec in uzalc.proven_specs():
        assert uzalc.excess(spec, s.fn) <= 1e-9

    batch = uzalc.samples(seed=11, count=3, degree=3)
    assert len(batch) == 3
    assert batch[0].a2 == s.a2


def test_search_reproducibility():
    cfg = uzalc.SearchConfig()
    cfg.spec = uzalc.FunctionalSpec.zalcman(2)
    cfg.degree = 1
    cfg.restarts = 1
    cfg.iterations = 0
    cfg.seed = 99
    rec = uzalc.maximize(cfg)
    assert rec.evaluations == 1
    fn = uzalc.rebuild(rec.a2, rec.gammas, cfg.order)
    assert uzalc.evaluate(rec.spec, fn) == rec.value
    assert rec.excess == rec.value - rec.bound


def test_series_arithmetic():
    s = uzalc.TruncatedSeries([1.0, 1.0, 1.0])
    assert s[2] == 1.0
    # geometric partial sum at 1/2
    assert abs(s.eval(0.5) - 1.75) < 1e-15

    omega = uzalc.SchwarzFunction.from_schur(uzalc.SchurParams([0.5, 0.5]), order=8)
    assert abs(omega.c(1) - 0.5) < 1e-14
    assert abs(omega.c(2) - 0.375) < 1e-14
    assert omega.deriv_sup() <= 2.0
