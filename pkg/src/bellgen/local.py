"""Exact LHV bounds and the facet (tightness) test on the local polytope.

Deterministic strategies are enumerated exhaustively (2**sum(m_i) product
vertices).  All arithmetic that feeds the reported bound or rank is exact:
coefficients are cleared to integers before vectorized enumeration, and the
affine rank of the saturating set is computed over the rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import evaluate

_CHUNK = 1 << 18
_MOD_PRIME = (1 << 31) - 1


@dataclass
class VertexReport:
    lhv_bound: Fraction
    maximizers: list  # deterministic strategies, enumeration order; None if capped
    saturating_count: int


@dataclass
class TightnessReport:
    dimension: int
    affine_rank: int
    is_facet: bool
    saturating_count: int


def _bit_positions(scenario):
    """Flat bit position of (party, setting); party 0 setting 1 is the most
    significant bit so that enumeration runs parties outermost-to-innermost,
    settings low-to-high, +1 before -1."""
    total = sum(scenario.settings)
    positions = {}
    p = 0
    for i, m in enumerate(scenario.settings):
        for j in range(1, m + 1):
            positions[(i, j)] = total - 1 - p
            p += 1
    return positions


def _strategy_from_index(scenario, index):
    strategy = []
    p = sum(scenario.settings)
    for m in scenario.settings:
        row = []
        for _ in range(m):
            p -= 1
            row.append(1 - 2 * ((index >> p) & 1))
        strategy.append(tuple(row))
    return tuple(strategy)


def _scaled_integer_terms(f):
    """Clear denominators: returns (scale, [(int_coeff, [bit_pos...])...])."""
    scale = math.lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
    pos = _bit_positions(f.scenario)
    terms = []
    for mono, coeff in f.terms.items():
        bits = [pos[(i, j)] for i, j in enumerate(mono) if j]
        terms.append((int(coeff * scale), bits))
    return scale, terms


def lhv_bound(f, max_vertices=1 << 30, maximizer_cap=10**6):
    """Exact maximum of f over all deterministic strategies plus the full
    list of maximizers (count only past maximizer_cap)."""
    scenario = f.scenario
    n_vertices = scenario.vertex_count
    if n_vertices > max_vertices:
        raise ValueError(
            f"{scenario} has {n_vertices} vertices, above the cap {max_vertices}"
        )
    if not f.terms:
        return VertexReport(Fraction(0), None, n_vertices)

    scale, terms = _scaled_integer_terms(f)
    const = sum(c for c, bits in terms if not bits)
    var_terms = [(c, bits) for c, bits in terms if bits]

    best = None
    n_sat = 0
    max_indices = []
    for start in range(0, n_vertices, _CHUNK):
        stop = min(start + _CHUNK, n_vertices)
        idx = np.arange(start, stop, dtype=np.int64)
        obj = np.full(stop - start, const, dtype=np.int64)
        for c, bits in var_terms:
            prod = np.ones(stop - start, dtype=np.int64)
            for b in bits:
                prod *= 1 - 2 * ((idx >> b) & 1)
            obj += c * prod
        chunk_best = int(obj.max())
        if best is None or chunk_best > best:
            best = chunk_best
            n_sat = 0
            max_indices = []
        if chunk_best == best:
            hits = np.nonzero(obj == best)[0]
            n_sat += int(hits.size)
            if len(max_indices) <= maximizer_cap:
                max_indices.extend((start + hits).tolist())

    bound = Fraction(best, scale)
    if n_sat > maximizer_cap:
        return VertexReport(bound, None, n_sat)
    maximizers = [_strategy_from_index(scenario, i) for i in max_indices]
    return VertexReport(bound, maximizers, n_sat)


def naive_lhv_bound(f):
    """Independent reference enumerator: plain nested iteration and exact
    Fraction evaluation, no vectorization.  Used as an oracle in tests."""
    from .core import strategies

    best = None
    for strategy in strategies(f.scenario):
        value = evaluate(f, strategy)
        if best is None or value > best:
            best = value
    return best


# -- exact rank ----------------------------------------------------------


def _rank_mod_p(mat, p=_MOD_PRIME):
    """Row-echelon rank of an integer matrix modulo a prime (numpy int64)."""
    a = np.ascontiguousarray(mat % p, dtype=np.int64)
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = None
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        rest = np.nonzero(a[rank + 1:, col])[0] + rank + 1
        if rest.size:
            a[rest] = (a[rest] - a[rest, col:col + 1] * a[rank]) % p
        rank += 1
    return rank


def _rank_exact_int(rows):
    """Exact rank over Q of integer rows via gcd-normalized elimination."""
    mat = [list(map(int, r)) for r in rows]
    cols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        pval = prow[col]
        for r in range(rank + 1, len(mat)):
            v = mat[r][col]
            if not v:
                continue
            row = mat[r]
            for c in range(col, cols):
                row[c] = row[c] * pval - prow[c] * v
            g = math.gcd(*row)
            if g > 1:
                mat[r] = [x // g for x in row]
        rank += 1
        if rank == len(mat):
            break
    return rank


def exact_rank(mat, upper_bound=None):
    """Rank over the rationals of an integer matrix, always exact.

    Small matrices go straight to integer elimination.  Larger ones are
    ranked modulo a prime first: that is a rigorous lower bound (a nonzero
    minor mod p is nonzero over Z), so whenever it meets the known upper
    bound (`upper_bound`, or min(shape)) the answer is certified and the
    slow exact elimination is skipped.
    """
    mat = np.asarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    rows, cols = mat.shape
    cap = min(rows, cols)
    if upper_bound is not None:
        cap = min(cap, upper_bound)
    if cols <= 128:
        return _rank_exact_int(mat.tolist())
    r = _rank_mod_p(mat)
    if r >= cap:
        return cap
    return _rank_exact_int(mat.tolist())


def correlation_vector(scenario, strategy, monomials=None):
    """Embed a strategy as its vector of monomial expectation values (+-1),
    over all non-constant monomials in canonical order."""
    if monomials is None:
        monomials = [m for m in scenario.monomials() if any(m)]
    out = []
    for mono in monomials:
        sign = 1
        for i, j in enumerate(mono):
            if j:
                sign *= strategy[i][j - 1]
        out.append(sign)
    return out


def is_tight(f, max_vertices=1 << 30):
    """Facet test: do the saturating vertices affinely span a face of
    dimension dim-1?  Exact rational rank of the difference set."""
    if f.is_zero():
        raise ValueError("degenerate (zero) functional has no facet structure")
    report = lhv_bound(f, max_vertices=max_vertices)
    if report.maximizers is None:
        raise ValueError("too many saturating vertices to embed exactly")
    if not report.maximizers:
        raise ValueError("no saturating vertex (degenerate functional)")
    scenario = f.scenario
    monomials = [m for m in scenario.monomials() if any(m)]
    dimension = scenario.correlation_dimension
    assert dimension == len(monomials)

    vectors = np.array(
        [correlation_vector(scenario, s, monomials) for s in report.maximizers],
        dtype=np.int64,
    )
    diffs = (vectors[1:] - vectors[0]) // 2  # entries in {-1, 0, 1}
    # a non-constant functional pins its saturators to a hyperplane, capping
    # the achievable rank at dimension - 1
    has_linear_part = any(any(m) for m in f.terms)
    upper = dimension - 1 if has_linear_part else None
    rank = exact_rank(diffs, upper_bound=upper) if len(diffs) else 0
    return TightnessReport(
        dimension=dimension,
        affine_rank=rank,
        is_facet=(rank == dimension - 1),
        saturating_count=report.saturating_count,
    )
