"""Quantum-value estimation for Bell functionals.

See-saw alternating optimization over dichotomic observables (eigenvalues
+-1) and a shared pure state gives certified lower bounds on the quantum
value.  Fixed-state sweeps probe the generalized GHZ family
cos(t)|0..0> + sin(t)|1..1>, and closed-form expectation profiles for the
extended-MABK inequalities are cross-checked against tensor contraction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

HERMITICITY_TOL = 1e-12
INVOLUTION_TOL = 1e-10
STATE_NORM_TOL = 1e-12
IMAG_TOL = 1e-10
DENSE_OPERATOR_CAP = 4096  # largest d**n materialized as a full matrix


def check_observable(op, d=None):
    op = np.asarray(op, dtype=complex)
    if d is not None and op.shape != (d, d):
        raise ValueError(f"observable has shape {op.shape}, wanted ({d},{d})")
    if np.max(np.abs(op - op.conj().T)) > HERMITICITY_TOL:
        raise ValueError("observable is not Hermitian")
    if np.max(np.abs(op @ op - np.eye(op.shape[0]))) > INVOLUTION_TOL:
        raise ValueError("observable does not square to the identity")
    return op


@dataclass
class QuantumModel:
    """Per-party dichotomic observables (one per setting, common dimension)
    plus a shared pure state of dimension d**n."""

    observables: list  # observables[i][j-1] is party i's setting-j operator
    state: np.ndarray
    dim: int

    def validate(self, scenario=None):
        if scenario is not None:
            if len(self.observables) != scenario.n:
                raise ValueError("wrong number of parties")
            for i, ops in enumerate(self.observables):
                if len(ops) != scenario.settings[i]:
                    raise ValueError(f"party {i} has wrong setting count")
        for ops in self.observables:
            for op in ops:
                check_observable(op, self.dim)
        n = len(self.observables)
        if self.state.shape != (self.dim**n,):
            raise ValueError("state has wrong dimension")
        if abs(np.linalg.norm(self.state) - 1.0) > STATE_NORM_TOL:
            raise ValueError("state is not normalized")
        return self


def bloch_observable(theta, phi=0.0):
    """Qubit observable with Bloch vector (sin t cos p, sin t sin p, cos t)."""
    return (
        math.sin(theta) * math.cos(phi) * SIGMA_X
        + math.sin(theta) * math.sin(phi) * SIGMA_Y
        + math.cos(theta) * SIGMA_Z
    )


def xy_observable(phi):
    """Equatorial qubit observable [[0, e^-ip], [e^ip, 0]]."""
    return np.array([[0, np.exp(-1j * phi)], [np.exp(1j * phi), 0]])


def ghz_state(n, theta=math.pi / 4):
    """cos(theta)|0..0> + sin(theta)|1..1> on n qubits."""
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = math.cos(theta)
    psi[-1] = math.sin(theta)
    return psi


def _apply_one(op, tensor, axis):
    moved = np.tensordot(op, tensor, axes=([1], [axis]))
    return np.moveaxis(moved, 0, axis)


def expectation(f, model):
    """<psi| B |psi> by factored tensor contraction, one term at a time;
    the full d**n x d**n operator is never required."""
    model.validate(f.scenario)
    return _expectation_raw(f, model.observables, model.state, model.dim)


def _expectation_raw(f, observables, state, d):
    n = f.scenario.n
    psi = state.reshape((d,) * n)
    total = 0.0 + 0.0j
    for mono, coeff in f.terms.items():
        phi = psi
        for i, j in enumerate(mono):
            if j:
                phi = _apply_one(observables[i][j - 1], phi, i)
        total += complex(coeff) * np.vdot(psi, phi)
    if abs(total.imag) > IMAG_TOL:
        raise AssertionError(f"expectation has imaginary part {total.imag}")
    return float(total.real)


def bell_operator(f, observables, dim):
    """Dense d**n-dimensional operator; only for small systems."""
    n = f.scenario.n
    size = dim**n
    if size > DENSE_OPERATOR_CAP:
        raise ValueError("system too large to materialize")
    out = np.zeros((size, size), dtype=complex)
    for mono, coeff in f.terms.items():
        term = np.eye(1, dtype=complex)
        for i, j in enumerate(mono):
            factor = observables[i][j - 1] if j else np.eye(dim, dtype=complex)
            term = np.kron(term, factor)
        out += complex(coeff) * term
    return out


def _apply_all(f, observables, psi_tensor):
    """B psi as a tensor, term by term, without materializing B."""
    out = np.zeros_like(psi_tensor)
    for mono, coeff in f.terms.items():
        phi = psi_tensor
        for i, j in enumerate(mono):
            if j:
                phi = _apply_one(observables[i][j - 1], phi, i)
        out += complex(coeff) * phi
    return out


def _top_eigenstate(f, observables, d, psi0, iterations=200, tol=1e-12):
    """Dominant eigenpair of the shifted operator B + |B|_1 I by power
    iteration with factored application; for systems past the dense cap."""
    shift = float(f.one_norm())
    n = f.scenario.n
    psi = psi0.reshape((d,) * n).copy()
    value = None
    for _ in range(iterations):
        nxt = _apply_all(f, observables, psi) + shift * psi
        norm = np.linalg.norm(nxt)
        if norm == 0:
            break
        nxt /= norm
        new_value = np.vdot(nxt, _apply_all(f, observables, nxt)).real
        if value is not None and abs(new_value - value) < tol:
            psi = nxt
            value = new_value
            break
        psi = nxt
        value = new_value
    return psi.reshape(-1), float(value)


def _sign_of(matrix):
    """Optimal dichotomic observable for the environment matrix: the sign of
    its eigenvalues (zeros toward +1)."""
    herm = (matrix + matrix.conj().T) / 2
    if np.max(np.abs(matrix - herm)) > 1e-8 * max(1.0, np.max(np.abs(matrix))):
        raise AssertionError("environment matrix is not Hermitian")
    if herm.shape == (2, 2):
        # closed form: H = a*I + v.sigma has eigenvalues a +- |v|
        a = (herm[0, 0].real + herm[1, 1].real) / 2
        vx = herm[0, 1].real
        vy = -herm[0, 1].imag
        vz = (herm[0, 0].real - herm[1, 1].real) / 2
        norm = math.sqrt(vx * vx + vy * vy + vz * vz)
        hi = 1.0 if a + norm >= 0 else -1.0
        lo = 1.0 if a - norm >= 0 else -1.0
        if hi == lo or norm == 0.0:
            return hi * _I2.copy()
        u = np.array([[vz, vx - 1j * vy], [vx + 1j * vy, -vz]]) / norm
        return (hi + lo) / 2 * _I2 + (hi - lo) / 2 * u
    vals, vecs = np.linalg.eigh(herm)
    signs = np.where(vals >= 0, 1.0, -1.0)
    return (vecs * signs) @ vecs.conj().T


def _environment(f, observables, psi_tensor, party, dim):
    """Per-setting environment matrices G_j with value = sum_j Tr(O_j G_j)
    plus the slot-independent offset."""
    n = f.scenario.n
    bra = psi_tensor.conj()
    envs = [np.zeros((dim, dim), dtype=complex) for _ in range(f.scenario.settings[party])]
    offset = 0.0 + 0.0j
    other_axes = [ax for ax in range(n) if ax != party]
    for mono, coeff in f.terms.items():
        phi = psi_tensor
        for i, j in enumerate(mono):
            if j and i != party:
                phi = _apply_one(observables[i][j - 1], phi, i)
        j = mono[party]
        if j == 0:
            offset += complex(coeff) * np.vdot(psi_tensor, phi)
            continue
        w = np.tensordot(bra, phi, axes=(other_axes, other_axes))
        envs[j - 1] += complex(coeff) * w.T
    return envs, offset


def _random_observable(rng, d):
    if d == 2:
        # uniform Bloch vector
        v = rng.normal(size=3)
        v /= np.linalg.norm(v)
        return v[0] * SIGMA_X + v[1] * SIGMA_Y + v[2] * SIGMA_Z
    # Haar-random rotation of a random +-1 template
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    diag = rng.choice([1.0, -1.0], size=d)
    return (q * diag) @ q.conj().T


def _random_state(rng, size):
    v = rng.normal(size=size) + 1j * rng.normal(size=size)
    return v / np.linalg.norm(v)


@dataclass
class SeesawResult:
    value: float
    model: QuantumModel
    history: list  # per-round objective of the winning restart


def _seesaw_once(f, d, rng, state=None, rounds=500, tol=1e-10, init=None,
                 init_state=None):
    """One see-saw run from a random start (or a warm start).  Each update is
    the exact maximizer of the objective with everything else fixed, so the
    value is monotone non-decreasing round to round."""
    scenario = f.scenario
    n = scenario.n
    if init is None:
        observables = [
            [_random_observable(rng, d) for _ in range(m)] for m in scenario.settings
        ]
    else:
        observables = [[op.copy() for op in row] for row in init]
    fixed_state = state is not None
    if fixed_state:
        psi = state
    elif init_state is not None:
        psi = init_state
    else:
        psi = _random_state(rng, d**n)
    history = []
    value = -math.inf
    for _ in range(rounds):
        psi_tensor = psi.reshape((d,) * n)
        for party in range(n):
            envs, offset = _environment(f, observables, psi_tensor, party, d)
            for j, env in enumerate(envs):
                observables[party][j] = _sign_of(env)
        if not fixed_state:
            if d**n <= DENSE_OPERATOR_CAP:
                op = bell_operator(f, observables, d)
                vals, vecs = np.linalg.eigh(op)
                psi = vecs[:, -1]
                new_value = float(vals[-1])
            else:
                psi, new_value = _top_eigenstate(f, observables, d, psi)
        else:
            new_value = _expectation_raw(f, observables, psi, d)
        if new_value < value - 1e-9:
            raise AssertionError("see-saw objective decreased")
        history.append(new_value)
        if new_value - value < tol:
            value = new_value
            break
        value = new_value
    return SeesawResult(value, QuantumModel(observables, psi, d), history)


def _classical_embedding(f, d):
    """A deterministic-strategy model: observables +-identity along a
    maximizing strategy; its value is the LHV bound for any state."""
    from .local import lhv_bound

    report = lhv_bound(f)
    strategy = report.maximizers[0] if report.maximizers else None
    if strategy is None:
        return None
    eye = np.eye(d, dtype=complex)
    return [[v * eye for v in row] for row in strategy]


def _piece_embedded_starts(f, d, seed, restarts=8):
    """Warm starts from the last party's restrictions: solve each n-1 party
    restriction, then set the last party's observables to the matching signed
    identities.  The embedded value equals the restriction's value, so the
    full functional's optimum dominates every restriction's optimum."""
    from .iterate import restrict, sign_vectors

    if f.scenario.n < 2:
        return []
    m = f.scenario.settings[-1]
    eye = np.eye(d, dtype=complex)
    basis0 = np.zeros(d, dtype=complex)
    basis0[0] = 1.0
    starts = []
    for s in sign_vectors(m):
        piece = restrict(f, s)
        if piece.is_zero():
            continue
        sub = seesaw(piece, d, restarts=restarts, seed=seed)
        obs = [list(row) for row in sub.model.observables]
        obs.append([float(sk) * eye for sk in s])
        state = np.kron(sub.model.state, basis0)
        starts.append((obs, state))
    return starts


def seesaw(f, d=2, restarts=50, seed=0, rounds=500, tol=1e-10,
           warm_from_pieces=False):
    """Best see-saw value over independently seeded restarts; a certified
    lower bound on the quantum value.  Deterministic for a fixed seed.

    With warm_from_pieces, the restarts are preceded by runs seeded from the
    optimized last-party restrictions, so the result also dominates the
    restrictions' values (useful for iteratively built functionals)."""
    if d not in (2, 3, 4):
        raise ValueError("dimension must be 2, 3, or 4")
    if restarts < 1:
        raise ValueError("need at least one restart")
    if f.is_zero():
        psi = np.zeros(d**f.scenario.n, dtype=complex)
        psi[0] = 1.0
        eye = np.eye(d, dtype=complex)
        model = QuantumModel(
            [[eye.copy() for _ in range(m)] for m in f.scenario.settings], psi, d
        )
        return SeesawResult(0.0, model, [0.0])
    best = None
    if warm_from_pieces:
        for i, (obs, state) in enumerate(_piece_embedded_starts(f, d, seed)):
            result = _seesaw_once(
                f, d, np.random.default_rng((seed, 10**6 + i)),
                rounds=rounds, tol=tol, init=obs, init_state=state)
            if best is None or result.value > best.value:
                best = result
    for r in range(restarts):
        rng = np.random.default_rng((seed, r))
        result = _seesaw_once(f, d, rng, rounds=rounds, tol=tol)
        if best is None or result.value > best.value:
            best = result
    return best


def _seesaw_restart_job(args):
    f, d, seed, r, rounds, tol = args
    result = _seesaw_once(
        f, d, np.random.default_rng((seed, r)), rounds=rounds, tol=tol)
    return r, result


def seesaw_parallel(f, d=2, restarts=50, seed=0, rounds=500, tol=1e-10,
                    threads=1):
    """seesaw() with the restarts fanned out over worker processes; the
    merge prefers higher values and breaks ties by restart index, so the
    result is independent of scheduling."""
    if threads <= 1:
        return seesaw(f, d, restarts=restarts, seed=seed, rounds=rounds, tol=tol)
    from concurrent.futures import ProcessPoolExecutor

    if f.is_zero():
        return seesaw(f, d, restarts=1, seed=seed)
    jobs = [(f, d, seed, r, rounds, tol) for r in range(restarts)]
    best = None
    best_key = None
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for r, result in pool.map(_seesaw_restart_job, jobs):
            key = (result.value, -r)
            if best is None or key > best_key:
                best, best_key = result, key
    return best


def ghz_optimize(f, theta, restarts=8, seed=0, rounds=150, tol=1e-10,
                 warm=None):
    """Observable-only see-saw at the fixed generalized GHZ state.  Start
    points: the classical embedding (so the result never falls below the LHV
    bound), any warm-start observable sets supplied, and `restarts` random
    restarts on top."""
    scenario = f.scenario
    n = scenario.n
    psi = ghz_state(n, theta)
    best = None
    starts = [_classical_embedding(f, 2)] + list(warm or [])
    starts += [None] * restarts
    salt = int(round(theta * 1e12))  # decorrelates restarts across angles
    for r, init in enumerate(starts):
        result = _seesaw_once(
            f, 2, np.random.default_rng((seed, salt, r)), state=psi,
            rounds=rounds, tol=tol, init=init)
        if best is None or result.value > best.value:
            best = result
    return best


def ghz_sweep(f, thetas, restarts=8, seed=0):
    """Max expectation over measurement angles at each fixed GGHZ angle.

    Two continuation passes: a forward sweep warm-starting each point from
    the previous winner, then a backward refinement pass; optimal branches
    propagate both ways while the classical embedding and random restarts
    guard against branch switches.  Deterministic for a fixed seed.
    """
    results = {}
    models = {}
    warm = []
    for t in thetas:
        best = ghz_optimize(f, t, restarts=restarts, seed=seed, warm=warm)
        warm = [best.model.observables]
        results[t] = best.value
        models[t] = best.model.observables
    warm = []
    for t in reversed(thetas):
        best = ghz_optimize(f, t, restarts=0, seed=seed,
                            warm=warm + [models[t]])
        warm = [best.model.observables]
        if best.value > results[t]:
            results[t] = best.value
            models[t] = best.model.observables
    return [(t, results[t]) for t in thetas]


# -- extended-MABK analytics ----------------------------------------------


def emabk_closed_form(n, theta, last_angle):
    """Expectation profile of the n-party extended-MABK inequality at its
    analytic measurement family, as a function of the last party's angle.

    Returns (value_at_angle, optimal_angle); the optimum over the last angle
    is value_at(optimal_angle) = sqrt of the squared-amplitude sum.
    """
    if n < 3:
        raise ValueError("defined for n >= 3")
    if n % 2 == 0:
        a = 1.0
        b = -math.sin(2 * theta) / 2 ** ((n - 2) / 2)
        value = a * math.cos(last_angle) + b * math.sin(last_angle)
        optimal = math.atan2(b, a)
        return value, optimal
    sign = (-1) ** ((n + 1) // 2)
    a = math.cos(2 * theta)
    b = sign * 2 ** ((n - 2) / 2) * math.sin(2 * theta)
    value = a * math.cos(last_angle) + b * math.sin(last_angle)
    optimal = math.atan2(b, a)
    return value, optimal


def emabk_analytic_model(n, last_angle):
    """The measurement settings behind the closed forms: z/x/y-plane
    observables for the first n-1 parties and a tilted pair for the last."""
    if n % 2 == 0:
        first = [SIGMA_X, SIGMA_X, SIGMA_Z]
        middle = [SIGMA_Z, SIGMA_X, SIGMA_Z]
        c, s = math.cos(last_angle), math.sin(last_angle)
        last = [
            np.array([[c, s], [s, -c]], dtype=complex),
            np.array([[-c, s], [s, c]], dtype=complex),
        ]
    else:
        sign = (-1) ** ((n - 1) // 2)
        base = [SIGMA_Z, SIGMA_Z, SIGMA_X, SIGMA_Y]
        first = middle = base
        c, s = math.cos(last_angle), math.sin(last_angle)
        off = s * (1 - 1j * sign) / math.sqrt(2)
        last = [
            np.array([[c, off], [np.conj(off), -c]]),
            np.array([[c, -off], [-np.conj(off), -c]]),
        ]
    obs = [list(first)] + [list(middle) for _ in range(n - 2)] + [list(last)]
    return obs


def emabk_peak_model(n):
    """The equatorial settings at which the n-party extended MABK reaches
    the MABK-level value 2**((n-1)/2) on the n-qubit GHZ state."""
    if n % 2 == 0:
        first = [xy_observable(0), xy_observable(math.pi / 2), xy_observable(math.pi / 2)]
        middle = [
            xy_observable(-math.pi / 4),
            xy_observable(math.pi / 4),
            xy_observable(math.pi / 4),
        ]
    else:
        first = [
            xy_observable(0),
            xy_observable(math.pi / 2),
            xy_observable(math.pi / 2),
            xy_observable(0),
        ]
        middle = [
            xy_observable(-math.pi / 4),
            xy_observable(math.pi / 4),
            xy_observable(math.pi / 4),
            xy_observable(-math.pi / 4),
        ]
    last = [xy_observable(-math.pi / 4), xy_observable(math.pi / 4)]
    return [list(first)] + [list(middle) for _ in range(n - 2)] + [list(last)]


def mabk_settings(n):
    """Standard equatorial MABK settings: party 1 measures x and y, the rest
    measure at -pi/4 and pi/4 on the equator."""
    first = [xy_observable(0), xy_observable(math.pi / 2)]
    rest = [xy_observable(-math.pi / 4), xy_observable(math.pi / 4)]
    return [list(first)] + [list(rest) for _ in range(n - 1)]


def mabk_matrix_check(n, tol=1e-10):
    """The MABK operator at the standard settings equals 2**((n-1)/2) times
    the matrix with 1s in the antidiagonal corners and 0 elsewhere."""
    from .iterate import mabk

    f = mabk(n)
    op = bell_operator(f, mabk_settings(n), 2)
    size = 2**n
    want = np.zeros((size, size), dtype=complex)
    want[0, -1] = want[-1, 0] = 2 ** ((n - 1) / 2)
    return bool(np.max(np.abs(op - want)) <= tol)


@dataclass
class DualUseReport:
    n: int
    peak_value: float
    peak_target: float
    peak_ok: bool
    grid_violations: int
    grid_points: int
    grid_ok: bool
    worst_theta: float
    contraction_max_err: float
    contraction_ok: bool

    @property
    def ok(self):
        return self.peak_ok and self.grid_ok and self.contraction_ok


def verify_dual_use(n, grid_points=999, samples=25, seed=0,
                    peak_tol=1e-9, contraction_tol=1e-12):
    """Three checks on the n-party extended MABK inequality: the analytic
    peak value 2**((n-1)/2) at the GHZ point, violation of the bound at
    every grid angle in (0, pi/2) via the optimized closed form, and
    closed form == tensor contraction at random (state, last-angle) pairs."""
    from .iterate import emabk

    f = emabk(n)
    target = 2 ** ((n - 1) / 2)
    model = QuantumModel(
        emabk_peak_model(n), ghz_state(n, math.pi / 4), 2
    )
    peak = expectation(f, model)
    peak_ok = abs(peak - target) <= peak_tol

    violations = 0
    worst = (math.inf, math.nan)
    for k in range(1, grid_points + 1):
        theta = k * (math.pi / 2) / (grid_points + 1)
        _, optimal = emabk_closed_form(n, theta, 0.0)
        value, _ = emabk_closed_form(n, theta, optimal)
        if value > 1.0:
            violations += 1
        if value < worst[0]:
            worst = (value, theta)

    rng = np.random.default_rng(seed)
    max_err = 0.0
    for _ in range(samples):
        theta = float(rng.uniform(0.05, math.pi / 2 - 0.05))
        angle = float(rng.uniform(-math.pi, math.pi))
        want, _ = emabk_closed_form(n, theta, angle)
        model = QuantumModel(
            emabk_analytic_model(n, angle), ghz_state(n, theta), 2
        )
        got = expectation(f, model)
        max_err = max(max_err, abs(got - want))

    return DualUseReport(
        n=n,
        peak_value=peak,
        peak_target=target,
        peak_ok=peak_ok,
        grid_violations=violations,
        grid_points=grid_points,
        grid_ok=(violations == grid_points),
        worst_theta=worst[1],
        contraction_max_err=max_err,
        contraction_ok=(max_err <= contraction_tol),
    )
