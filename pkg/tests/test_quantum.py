import math
import random

import numpy as np
import pytest

from bellgen.core import Scenario, evaluate
from bellgen.iterate import (
    caf,
    chsh,
    emabk,
    iterate_2m,
    mabk,
    sliwa,
)
from bellgen.local import lhv_bound
from bellgen.quantum import (
    QuantumModel,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    bell_operator,
    bloch_observable,
    check_observable,
    emabk_analytic_model,
    emabk_closed_form,
    emabk_peak_model,
    expectation,
    ghz_optimize,
    ghz_state,
    ghz_sweep,
    mabk_matrix_check,
    mabk_settings,
    seesaw,
    verify_dual_use,
)
from test_core import rand_functional

SQRT2 = math.sqrt(2)


class TestObservables:
    def test_paulis_pass(self):
        for op in (SIGMA_X, SIGMA_Y, SIGMA_Z, np.eye(2)):
            check_observable(op, 2)

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError):
            check_observable(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_non_involutive_rejected(self):
        with pytest.raises(ValueError):
            check_observable(0.5 * SIGMA_X)

    def test_bloch_parameterization(self):
        rng = random.Random(0)
        for _ in range(20):
            op = bloch_observable(rng.uniform(0, math.pi), rng.uniform(-3, 3))
            check_observable(op, 2)


class TestExpectation:
    def test_chsh_at_equatorial_settings(self):
        model = QuantumModel(mabk_settings(2), ghz_state(2), 2)
        assert expectation(chsh(), model) == pytest.approx(SQRT2, abs=1e-12)

    def test_mabk_peak_values(self):
        for n in (2, 3, 4, 5):
            model = QuantumModel(mabk_settings(n), ghz_state(n), 2)
            assert expectation(mabk(n), model) == pytest.approx(
                2 ** ((n - 1) / 2), abs=1e-10)

    def test_classical_embedding_matches_evaluate(self):
        rng = random.Random(1)
        s = Scenario((2, 2, 2))
        for _ in range(10):
            f = rand_functional(rng, s)
            strategy = tuple(
                tuple(rng.choice((1, -1)) for _ in range(2)) for _ in range(3))
            obs = [[v * np.eye(2, dtype=complex) for v in row] for row in strategy]
            psi = np.zeros(8, dtype=complex)
            psi[rng.randrange(8)] = 1.0
            model = QuantumModel(obs, psi, 2)
            assert expectation(f, model) == pytest.approx(
                float(evaluate(f, strategy)), abs=1e-12)

    def test_unitary_invariance(self):
        rng = np.random.default_rng(2)
        f = mabk(3)
        model = QuantumModel(mabk_settings(3), ghz_state(3, 0.9), 2)
        base = expectation(f, model)
        # one random unitary per party, applied to observables and state
        unitaries = []
        for _ in range(3):
            z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            q, r = np.linalg.qr(z)
            unitaries.append(q * (np.diagonal(r) / np.abs(np.diagonal(r))))
        obs = [
            [u @ op @ u.conj().T for op in row]
            for u, row in zip(unitaries, model.observables)
        ]
        full = unitaries[0]
        for u in unitaries[1:]:
            full = np.kron(full, u)
        rotated = QuantumModel(obs, full @ model.state, 2)
        assert expectation(f, rotated) == pytest.approx(base, abs=1e-10)

    def test_dimension_mismatch(self):
        model = QuantumModel(mabk_settings(2), ghz_state(2), 2)
        with pytest.raises(ValueError):
            expectation(mabk(3), model)


class TestMatrixForm:
    def test_antidiagonal_corners(self):
        for n in (2, 3, 4, 5, 6):
            assert mabk_matrix_check(n)

    def test_operator_agrees_with_expectation(self):
        f = mabk(3)
        obs = mabk_settings(3)
        op = bell_operator(f, obs, 2)
        psi = ghz_state(3, 0.7)
        model = QuantumModel(obs, psi, 2)
        assert np.vdot(psi, op @ psi).real == pytest.approx(
            expectation(f, model), abs=1e-12)


class TestSeesaw:
    def test_chsh_reaches_tsirelson(self):
        result = seesaw(chsh(), 2, restarts=20, seed=0)
        assert result.value == pytest.approx(SQRT2, abs=1e-6)

    def test_zero_functional(self):
        from bellgen.core import zero

        assert seesaw(zero(Scenario((2, 2))), 2, restarts=1).value == 0.0

    def test_monotone_history(self):
        result = seesaw(sliwa(7), 2, restarts=5, seed=3)
        hist = result.history
        assert all(b >= a - 1e-9 for a, b in zip(hist, hist[1:]))

    def test_at_most_algebraic_bound(self):
        rng = random.Random(4)
        for _ in range(5):
            f = rand_functional(rng, Scenario((2, 2)))
            result = seesaw(f, 2, restarts=4, seed=1)
            assert result.value <= float(f.one_norm()) + 1e-9

    def test_at_least_classical_bound(self):
        rng = random.Random(5)
        for _ in range(5):
            f = rand_functional(rng, Scenario((2, 2)))
            if f.is_zero():
                continue
            result = seesaw(f, 2, restarts=6, seed=2)
            assert result.value >= float(lhv_bound(f).lhv_bound) - 1e-9

    def test_construction_dominates_pieces(self):
        base = sliwa(7)
        from bellgen.core import parse_transform, apply_transform

        pm = apply_transform(base, parse_transform(base.scenario, "flip C1"))
        mp = apply_transform(base, parse_transform(base.scenario, "flip C2"))
        built = iterate_2m(base, pm, mp)
        v_built = seesaw(built, 2, restarts=12, seed=0).value
        v_piece = max(
            seesaw(p, 2, restarts=12, seed=0).value for p in (base, pm, mp))
        assert v_built >= v_piece - 1e-6

    def test_model_is_valid(self):
        result = seesaw(chsh(), 2, restarts=4, seed=0)
        result.model.validate(chsh().scenario)

    def test_dimension_gate(self):
        with pytest.raises(ValueError):
            seesaw(chsh(), d=5)

    def test_power_iteration_state_path(self, monkeypatch):
        import bellgen.quantum as quantum_mod

        monkeypatch.setattr(quantum_mod, "DENSE_OPERATOR_CAP", 2)
        result = quantum_mod.seesaw(chsh(), 2, restarts=8, seed=0)
        assert result.value == pytest.approx(SQRT2, abs=1e-6)

    def test_caf_ceiling(self):
        # the constant-partner family peaks one level below the full one
        for n in (3, 4):
            value = seesaw(caf(n), 2, restarts=16, seed=0).value
            assert value == pytest.approx(2 ** ((n - 2) / 2), abs=1e-4)

    def test_extension_row_reaches_mabk_level(self):
        from bellgen.iterate import sliwa4

        value = seesaw(sliwa4(2, 3), 2, restarts=12, seed=0,
                       warm_from_pieces=True).value
        assert value == pytest.approx(2 * SQRT2, abs=1e-4)

    def test_piece_warm_start_dominates_restrictions(self):
        from bellgen.iterate import sliwa4

        f = sliwa4(4, 1)
        value = seesaw(f, 2, restarts=4, seed=9, warm_from_pieces=True).value
        assert value >= 2 * SQRT2 - 1 - 1e-6


class TestGhz:
    def test_mabk_peak_at_balanced_angle(self):
        for n in (3, 4, 5):
            best = ghz_optimize(mabk(n), math.pi / 4, restarts=6, seed=0)
            assert best.value >= 2 ** ((n - 1) / 2) - 1e-4

    def test_sweep_never_below_classical(self):
        pts = ghz_sweep(chsh(), [0.1, 0.5, 1.0], restarts=3, seed=0)
        assert all(v >= 1 - 1e-9 for _, v in pts)

    def test_caf_interior_violation(self):
        f = caf(3)
        for theta in (0.05, 0.5, math.pi / 4):
            best = ghz_optimize(f, theta, restarts=8, seed=0)
            assert best.value > 1 + 1e-7


class TestClosedForms:
    def test_even_peak_amplitude(self):
        # four parties at the balanced state: sqrt(1 + 1/4) = sqrt5 / 2
        _, optimal = emabk_closed_form(4, math.pi / 4, 0.0)
        value, _ = emabk_closed_form(4, math.pi / 4, optimal)
        assert value == pytest.approx(math.sqrt(5) / 2, abs=1e-12)

    def test_three_party_quarter_angle(self):
        value, _ = emabk_closed_form(3, math.pi / 4, math.pi / 2)
        assert value == pytest.approx(SQRT2, abs=1e-12)

    def test_separable_limit(self):
        for n in (3, 4, 5):
            value, _ = emabk_closed_form(n, 1e-9, 0.0)
            assert value <= 1 + 1e-8

    def test_odd_sign_alternation(self):
        # the five-party slope carries the opposite sign of the three-party
        _, opt3 = emabk_closed_form(3, 0.3, 0.0)
        _, opt5 = emabk_closed_form(5, 0.3, 0.0)
        assert opt3 > 0 > opt5

    def test_matches_contraction(self):
        rng = random.Random(6)
        for n in (3, 4):
            f = emabk(n)
            for _ in range(5):
                theta = rng.uniform(0.1, math.pi / 2 - 0.1)
                angle = rng.uniform(-math.pi, math.pi)
                want, _ = emabk_closed_form(n, theta, angle)
                model = QuantumModel(
                    emabk_analytic_model(n, angle), ghz_state(n, theta), 2)
                assert expectation(f, model) == pytest.approx(want, abs=1e-12)

    def test_peak_settings(self):
        for n in (3, 4):
            model = QuantumModel(emabk_peak_model(n), ghz_state(n), 2)
            assert expectation(emabk(n), model) == pytest.approx(
                2 ** ((n - 1) / 2), abs=1e-9)


class TestDualUse:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_reports(self, n):
        rep = verify_dual_use(n)
        assert rep.peak_ok
        assert rep.grid_ok
        assert rep.contraction_ok
        assert rep.ok
