"""Iterative construction of multipartite Bell functionals.

An (n+1)-party functional decomposes into 2**m n-party restrictions, one per
sign vector of the last party's m settings.  Conversely, a family of
restrictions satisfying the vanishing conditions on all products of two or
more signs assembles into a normalized (n+1)-party functional.  This module
implements both directions, the two- and three-setting specializations, and
the named families built on them.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from importlib import resources

from .core import (
    BellFunctional,
    Scenario,
    apply_transform,
    constant,
    parse_blocks,
    parse_transform,
    setting_perm,
    zero,
)

SignVector = tuple  # tuple of +-1, one per setting of the appended party


def sign_vectors(m):
    return list(itertools.product((1, -1), repeat=m))


def restrict(f, s):
    """Substitute the last party's settings by the signs in s; the result
    lives on the scenario with the last party removed."""
    scenario = f.scenario
    if scenario.n < 2:
        raise ValueError("cannot restrict a single-party functional")
    m = scenario.settings[-1]
    s = tuple(int(v) for v in s)
    if len(s) != m or any(v not in (1, -1) for v in s):
        raise ValueError(f"sign vector {s} does not match {m} settings")
    reduced = Scenario(scenario.settings[:-1])
    terms = {}
    for mono, coeff in f.terms.items():
        head, last = mono[:-1], mono[-1]
        if last:
            coeff = coeff * s[last - 1]
        terms[head] = terms.get(head, Fraction(0)) + coeff
    return BellFunctional(reduced, terms)


def lift(f, m_new, slot):
    """Append a party with m_new settings; every monomial gets `slot` there
    (0 keeps the new party out of the term)."""
    wide = Scenario(f.scenario.settings + (m_new,))
    if not 0 <= slot <= m_new:
        raise ValueError("bad slot for the appended party")
    return BellFunctional(wide, {m + (slot,): c for m, c in f.terms.items()})


def embed(f, settings):
    """Reinterpret f on a scenario with at least as many settings per party."""
    target = Scenario(tuple(settings))
    if target.n != f.scenario.n or any(
        a > b for a, b in zip(f.scenario.settings, target.settings)
    ):
        raise ValueError("target scenario does not contain the source")
    return BellFunctional(target, dict(f.terms))


def decompose(f):
    """All restrictions of f, keyed by sign vector; the reconstruction
    identity sum_s B^s prod_k (1+s_k C_k)/2 == f is verified before return."""
    m = f.scenario.settings[-1]
    pieces = {s: restrict(f, s) for s in sign_vectors(m)}
    if reconstruct(pieces, m) != f:
        raise AssertionError("reconstruction identity failed")  # pragma: no cover
    return pieces


def reconstruct(pieces, m):
    """sum_s B^s prod_k (1 + s_k C_k)/2 as an (n+1)-party functional.

    The product expansion creates C_k C_k' cross terms that have no slot in
    a multilinear monomial; they are tracked on (monomial, subset) keys and
    must all cancel in the sum over sign vectors, which is exactly the
    vanishing-constraint condition.  Raises when they survive.
    """
    some = next(iter(pieces.values()))
    weight = Fraction(1, 2**m)
    acc = {}  # (mono, frozenset of settings) -> coefficient
    for s, piece in pieces.items():
        for subset in itertools.product((0, 1), repeat=m):
            sign = 1
            used = []
            for k, flag in enumerate(subset):
                if flag:
                    sign *= s[k]
                    used.append(k + 1)
            key_part = frozenset(used)
            for mono, coeff in piece.terms.items():
                key = (mono, key_part)
                acc[key] = acc.get(key, Fraction(0)) + sign * coeff * weight
    terms = {}
    for (mono, used), coeff in acc.items():
        if coeff == 0:
            continue
        if len(used) > 1:
            raise ValueError(
                "pieces are not the restrictions of any multilinear functional"
            )
        slot = next(iter(used)) if used else 0
        terms[mono + (slot,)] = coeff
    return BellFunctional(Scenario(some.scenario.settings + (m,)), terms)


def check_constraints(pieces, m=None):
    """True iff sum_s B^s prod_{k in K} s_k == 0 for every subset K of the
    appended party's settings with |K| >= 2; exact."""
    if m is None:
        m = len(next(iter(pieces.keys())))
    vectors = sign_vectors(m)
    if set(pieces.keys()) != set(vectors):
        raise ValueError("pieces must cover all sign vectors")
    scenario = next(iter(pieces.values())).scenario
    if any(p.scenario != scenario for p in pieces.values()):
        raise ValueError("pieces live on different scenarios")
    for size in range(2, m + 1):
        for K in itertools.combinations(range(m), size):
            acc = zero(scenario)
            for s in vectors:
                sign = 1
                for k in K:
                    sign *= s[k]
                acc = acc + pieces[s].scale(sign)
            if not acc.is_zero():
                return False
    return True


def iterate(pieces, m=None):
    """(1/2**m) sum_s B^s (1 + sum_k s_k C_k); refuses to build when the
    vanishing constraints fail.  decompose(result) == pieces."""
    if m is None:
        m = len(next(iter(pieces.keys())))
    if not check_constraints(pieces, m):
        raise ValueError("pieces violate the vanishing constraints")
    scenario = next(iter(pieces.values())).scenario
    out = Scenario(scenario.settings + (m,))
    terms = {}
    weight = Fraction(1, 2**m)
    for s, piece in pieces.items():
        for mono, coeff in piece.terms.items():
            w = coeff * weight
            key = mono + (0,)
            terms[key] = terms.get(key, Fraction(0)) + w
            for k in range(m):
                key = mono + (k + 1,)
                terms[key] = terms.get(key, Fraction(0)) + w * s[k]
    return BellFunctional(out, terms)


def iterate_2m(bpp, bpm, bmp):
    """Two-setting specialization: completes B(--) = B(+-) + B(-+) - B(++),
    the unique solution of the single constraint, then assembles; equal to
    (1/2)[B(++)(C1+C2) + B(+-)(1-C2) + B(-+)(1-C1)]."""
    bmm = bpm + bmp - bpp
    return iterate({(1, 1): bpp, (1, -1): bpm, (-1, 1): bmp, (-1, -1): bmm}, 2)


def iterate_sym(bpp, bpm):
    """Antisymmetric two-setting solution B(--) = -B(++), B(-+) = -B(+-):
    (1/2)[B(++)(C1+C2) + B(+-)(C1-C2)]."""
    return iterate(
        {(1, 1): bpp, (1, -1): bpm, (-1, 1): -bpm, (-1, -1): -bpp}, 2
    )


def iterate_3m(bppp, bppm, bpmp, bmmm):
    """Three-setting specialization: the four remaining restrictions are the
    unique linear completion of the given ones, then the general assembly;
    equal to (1/2)[B(+++)(1-C1+C2+C3) + B(++-)(C1-C3) + B(+-+)(C1-C2)
    + B(---)(1-C1)].  Passing bmmm == -bppp removes the constant and bare-C1
    terms (the full-correlation variant)."""
    pieces = {
        (1, 1, 1): bppp,
        (1, 1, -1): bppm,
        (1, -1, 1): bpmp,
        (-1, -1, -1): bmmm,
        (1, -1, -1): -bppp + bppm + bpmp,
        (-1, 1, 1): bppp.scale(2) - bppm - bpmp + bmmm,
        (-1, 1, -1): bppp - bpmp + bmmm,
        (-1, -1, 1): bppp - bppm + bmmm,
    }
    return iterate(pieces, 3)


# -- named families -------------------------------------------------------


def chsh():
    """(A1B1 + A1B2 + A2B1 - A2B2)/2, the normalized two-party seed."""
    s = Scenario((2, 2))
    h = Fraction(1, 2)
    return BellFunctional(
        s, {(1, 1): h, (1, 2): h, (2, 1): h, (2, 2): -h}
    )


def _swap_all_settings(f):
    g = f
    for i in range(f.scenario.n):
        if f.scenario.settings[i] == 2:
            g = apply_transform(g, setting_perm(f.scenario, i, (2, 1)))
    return g


def mabk(n):
    """n-party MABK: seeded by CHSH, extended with the antisymmetric rule
    against its all-settings-swapped partner."""
    if n < 2:
        raise ValueError("mabk needs n >= 2")
    f = chsh()
    for _ in range(n - 2):
        f = iterate_sym(f, _swap_all_settings(f))
    return f


def caf(n):
    """n-party CAF: the MABK seed paired with the constant functional 1."""
    if n < 3:
        raise ValueError("caf needs n >= 3")
    base = mabk(n - 1)
    return iterate_sym(base, constant(base.scenario))


def emabk(n):
    """n-party extended MABK: MABK(n-1) paired with its image under
    setting 1 -> 3 and setting 2 -> t per party, t = 1 for odd n-1 and
    t = 4 otherwise.  Dual-use: MABK-level maximal violation plus
    violation on the whole entangled range of the generalized GHZ state."""
    if n < 3:
        raise ValueError("emabk needs n >= 3")
    base = mabk(n - 1)
    if (n - 1) % 2 == 1:
        wide_m, images = 3, (3, 1, 2)  # 1->3, 2->1
    else:
        wide_m, images = 4, (3, 4, 1, 2)  # 1->3, 2->4
    wide = embed(base, (wide_m,) * (n - 1))
    partner = wide
    for i in range(n - 1):
        partner = apply_transform(partner, setting_perm(wide.scenario, i, images))
    return iterate_sym(wide, partner)


def i3322_seed():
    """Normalized two-party three-setting seed:
    [A1 - A2 + B1 - B2 - (A1-A2)(B1-B2) + (A1+A2)B3 + A3(B1+B2)]/4."""
    s = Scenario((3, 3))
    q = Fraction(1, 4)
    terms = {
        (1, 0): q, (2, 0): -q, (0, 1): q, (0, 2): -q,
        (1, 1): -q, (1, 2): q, (2, 1): q, (2, 2): -q,
        (1, 3): q, (2, 3): q, (3, 1): q, (3, 2): q,
    }
    return BellFunctional(s, terms)


def i3322(n):
    """n-party three-setting family grown from the two-party seed with the
    three-setting iteration; stays tight at every level."""
    if n < 2:
        raise ValueError("i3322 needs n >= 2")
    f = i3322_seed()
    for _ in range(n - 2):
        sc = f.scenario
        bppm = apply_transform(f, _flip(sc, 1, (3,)))        # B3 -> -B3
        bpmp = apply_transform(f, _flip(sc, 0, (3,)))        # A3 -> -A3
        bmmm = apply_transform(f, _flip(sc, 0, (1, 2, 3)))   # all A -> -A
        f = iterate_3m(f, bppm, bpmp, bmmm)
    return f


def _flip(scenario, party, settings):
    from .core import setting_flip

    return setting_flip(scenario, party, settings)


# -- the (3,2,2) catalog and its extensions -------------------------------

_CATALOG = None


def _catalog():
    global _CATALOG
    if _CATALOG is None:
        text = resources.files("bellgen.data").joinpath("sliwa.txt").read_text()
        entries = {}
        for comment, functional in parse_blocks(text):
            k = int(comment.split()[-1])
            entries[k] = functional
        _CATALOG = entries
    return _CATALOG


def sliwa(k):
    """Entry k of the 46-inequality (3,2,2) catalog, normalized."""
    if not 1 <= int(k) <= 46:
        raise ValueError("catalog index must be in 1..46")
    return _catalog()[int(k)]


def sliwa_q(k):
    """Catalog quantum value: (float, exact_display_string, is_decimal)."""
    from .data.extensions import CATALOG_Q

    return CATALOG_Q[int(k)]


def sliwa4_variants(k):
    """Row numbers available for the four-party extensions of entry k."""
    from .data.extensions import EXTENSIONS

    return sorted(EXTENSIONS[int(k)].keys())


def sliwa4_pieces(k, variant):
    """The four restrictions of extension (k, variant), built from the
    recipe transforms on the catalog entry."""
    from .data.extensions import EXTENSIONS

    row = EXTENSIONS[int(k)][int(variant)]
    base = sliwa(k)
    s = base.scenario
    return {
        (1, 1): base,
        (1, -1): apply_transform(base, parse_transform(s, row["pm"])),
        (-1, 1): apply_transform(base, parse_transform(s, row["mp"])),
        (-1, -1): apply_transform(base, parse_transform(s, row["mm"])),
    }


def sliwa4(k, variant):
    """Four-party extension of catalog entry k, keyed by the source table's
    row number; built by the two-setting iteration from the recipe pieces."""
    pieces = sliwa4_pieces(k, variant)
    return iterate_2m(pieces[(1, 1)], pieces[(1, -1)], pieces[(-1, 1)])


def sliwa4_q(k, variant):
    """Target quantum value for the extension, when one is on record:
    (float, display_string, is_decimal) or None."""
    from .data.extensions import EXTENSIONS

    return EXTENSIONS[int(k)][int(variant)].get("q")


def sliwa5_variants():
    from .data.extensions import FIVE_PARTY

    return sorted(FIVE_PARTY.keys())


def sliwa5(variant):
    """Five-party extension rows, grown from the four-party extension
    sliwa4(3, 3) by the same two-setting iteration."""
    from .data.extensions import FIVE_PARTY

    row = FIVE_PARTY[int(variant)]
    base = sliwa4(3, 3)
    s = base.scenario
    return iterate_2m(
        base,
        apply_transform(base, parse_transform(s, row["pm"])),
        apply_transform(base, parse_transform(s, row["mp"])),
    )


def sliwa5_q(variant):
    from .data.extensions import FIVE_PARTY

    return FIVE_PARTY[int(variant)].get("q")
