"""Exact-arithmetic Bell functionals for dichotomic measurement scenarios.

A Bell functional is a sparse multilinear polynomial in the +-1-valued
observables of n parties.  Monomials are tuples with one slot per party:
0 means the identity (the party does not appear in the term), j >= 1 means
the party's j-th measurement setting.  Coefficients are exact rationals so
that classical bounds and facet ranks are exact statements.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

PARTY_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"

Monomial = tuple  # tuple[int, ...], one entry per party, 0 = identity slot


class FormatError(ValueError):
    """Malformed functional text; carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Scenario:
    """Party count and per-party setting counts (outcomes are fixed to 2)."""

    settings: tuple

    def __post_init__(self):
        object.__setattr__(self, "settings", tuple(int(m) for m in self.settings))
        if len(self.settings) < 1:
            raise ValueError("scenario needs at least one party")
        if any(m < 1 for m in self.settings):
            raise ValueError("every party needs at least one setting")
        if len(self.settings) > len(PARTY_LETTERS):
            raise ValueError("too many parties")

    @property
    def n(self):
        return len(self.settings)

    @property
    def vertex_count(self):
        return 1 << sum(self.settings)

    @property
    def correlation_dimension(self):
        return math.prod(m + 1 for m in self.settings) - 1

    def monomials(self):
        """All monomials in canonical (lexicographic) order, constant first."""
        return itertools.product(*(range(m + 1) for m in self.settings))

    def party_letter(self, i):
        return PARTY_LETTERS[i]

    def __str__(self):
        return f"({self.n},{','.join(map(str, self.settings))},2)"


def _check_monomial(scenario, mono):
    mono = tuple(int(j) for j in mono)
    if len(mono) != scenario.n:
        raise ValueError(f"monomial {mono} has wrong arity for {scenario}")
    for i, j in enumerate(mono):
        if not 0 <= j <= scenario.settings[i]:
            raise ValueError(f"monomial {mono} exceeds settings of {scenario}")
    return mono


class BellFunctional:
    """Immutable sparse polynomial over a scenario; zero coefficients dropped."""

    __slots__ = ("scenario", "terms", "_hash")

    def __init__(self, scenario, terms):
        object_terms = {}
        for mono, coeff in dict(terms).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            object_terms[_check_monomial(scenario, mono)] = coeff
        object.__setattr__(self, "scenario", scenario)
        object.__setattr__(self, "terms", object_terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BellFunctional is immutable")

    def __reduce__(self):
        return (BellFunctional, (self.scenario, self.terms))

    # -- basic queries -------------------------------------------------

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def sorted_terms(self):
        return tuple(sorted(self.terms.items()))

    def one_norm(self):
        """Sum of |coefficients|; an algebraic upper bound on any value."""
        return sum((abs(c) for c in self.terms.values()), Fraction(0))

    def is_zero(self):
        return not self.terms

    def is_full_correlation(self):
        """True when every monomial involves every party (no identity slot)."""
        return all(all(j != 0 for j in m) for m in self.terms)

    def __eq__(self, other):
        if not isinstance(other, BellFunctional):
            return NotImplemented
        return self.scenario == other.scenario and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.scenario, frozenset(self.terms.items())))
            )
        return self._hash

    # -- rational-linear algebra ----------------------------------------

    def __add__(self, other):
        if not isinstance(other, BellFunctional):
            return NotImplemented
        if other.scenario != self.scenario:
            raise ValueError("scenario mismatch")
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return BellFunctional(self.scenario, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        factor = Fraction(factor)
        return BellFunctional(
            self.scenario, {m: factor * c for m, c in self.terms.items()}
        )

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def __repr__(self):
        return f"BellFunctional({self.scenario}, {len(self.terms)} terms)"

    def __str__(self):
        return render(self)


def zero(scenario):
    return BellFunctional(scenario, {})


def constant(scenario, value=1):
    return BellFunctional(scenario, {(0,) * scenario.n: Fraction(value)})


# -- deterministic strategies ------------------------------------------


def check_strategy(scenario, strategy):
    strategy = tuple(tuple(int(v) for v in row) for row in strategy)
    if len(strategy) != scenario.n:
        raise ValueError("strategy has wrong number of parties")
    for i, row in enumerate(strategy):
        if len(row) != scenario.settings[i]:
            raise ValueError(f"party {i} strategy has wrong number of settings")
        if any(v not in (1, -1) for v in row):
            raise ValueError("strategy entries must be +-1")
    return strategy


def evaluate(f, strategy):
    """Exact value of f at a deterministic strategy (a local-polytope vertex)."""
    strategy = check_strategy(f.scenario, strategy)
    total = Fraction(0)
    for mono, coeff in f.terms.items():
        sign = 1
        for i, j in enumerate(mono):
            if j:
                sign *= strategy[i][j - 1]
        total += coeff * sign
    return total


def strategies(scenario):
    """All deterministic strategies, parties outermost, settings low-to-high,
    +1 before -1, so lists built from this order are reproducible."""
    per_setting = [(1, -1)] * sum(scenario.settings)
    splits = list(itertools.accumulate(scenario.settings))
    for flat in itertools.product(*per_setting):
        yield tuple(
            flat[start:stop]
            for start, stop in zip([0] + splits[:-1], splits)
        )


# -- symmetry transforms -----------------------------------------------


@dataclass(frozen=True)
class Transform:
    """Element of the equivalence group: party permutation (between parties
    with equal setting counts), per-party setting relabelings, per-setting
    sign flips, and a global sign.

    party_perm[i] is the new position of party i; setting_perms[i][j-1] is
    the new label of party i's setting j; sign_flips[i][j-1] multiplies every
    occurrence of that setting.
    """

    party_perm: tuple
    setting_perms: tuple
    sign_flips: tuple
    global_sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "party_perm", tuple(self.party_perm))
        object.__setattr__(
            self, "setting_perms", tuple(tuple(p) for p in self.setting_perms)
        )
        object.__setattr__(
            self, "sign_flips", tuple(tuple(s) for s in self.sign_flips)
        )
        if self.global_sign not in (1, -1):
            raise ValueError("global_sign must be +-1")

    @classmethod
    def identity(cls, scenario):
        return cls(
            tuple(range(scenario.n)),
            tuple(tuple(range(1, m + 1)) for m in scenario.settings),
            tuple((1,) * m for m in scenario.settings),
        )

    def validate(self, scenario):
        n = scenario.n
        if sorted(self.party_perm) != list(range(n)):
            raise ValueError("party_perm is not a permutation")
        if len(self.setting_perms) != n or len(self.sign_flips) != n:
            raise ValueError("per-party data has wrong arity")
        for i in range(n):
            m = scenario.settings[i]
            if scenario.settings[self.party_perm[i]] != m:
                raise ValueError("party_perm mixes unequal setting counts")
            if sorted(self.setting_perms[i]) != list(range(1, m + 1)):
                raise ValueError(f"setting_perms[{i}] is not a permutation")
            if any(s not in (1, -1) for s in self.sign_flips[i]):
                raise ValueError("sign flips must be +-1")

    def compose(self, first):
        """Transform equal to applying `first`, then self."""
        n = len(self.party_perm)
        if len(first.party_perm) != n:
            raise ValueError("arity mismatch")
        party = tuple(self.party_perm[first.party_perm[i]] for i in range(n))
        perms = []
        signs = []
        for i in range(n):
            k = first.party_perm[i]
            perm = tuple(
                self.setting_perms[k][first.setting_perms[i][j] - 1]
                for j in range(len(first.setting_perms[i]))
            )
            sign = tuple(
                first.sign_flips[i][j]
                * self.sign_flips[k][first.setting_perms[i][j] - 1]
                for j in range(len(first.setting_perms[i]))
            )
            perms.append(perm)
            signs.append(sign)
        return Transform(
            party, tuple(perms), tuple(signs), self.global_sign * first.global_sign
        )

    def inverse(self):
        n = len(self.party_perm)
        inv_party = [0] * n
        for i, p in enumerate(self.party_perm):
            inv_party[p] = i
        perms = []
        signs = []
        for p in range(n):
            i = inv_party[p]
            m = len(self.setting_perms[i])
            inv_perm = [0] * m
            inv_sign = [1] * m
            for j in range(1, m + 1):
                image = self.setting_perms[i][j - 1]
                inv_perm[image - 1] = j
                inv_sign[image - 1] = self.sign_flips[i][j - 1]
            perms.append(tuple(inv_perm))
            signs.append(tuple(inv_sign))
        return Transform(tuple(inv_party), tuple(perms), tuple(signs), self.global_sign)


def apply_transform(f, t):
    """Relabel settings, flip signs, permute parties, apply the global sign."""
    t.validate(f.scenario)
    n = f.scenario.n
    terms = {}
    for mono, coeff in f.terms.items():
        new_mono = [0] * n
        sign = t.global_sign
        for i, j in enumerate(mono):
            if j:
                new_mono[t.party_perm[i]] = t.setting_perms[i][j - 1]
                sign *= t.sign_flips[i][j - 1]
        key = tuple(new_mono)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
    return BellFunctional(f.scenario, terms)


# convenience constructors used by the CLI grammar and family recipes


def party_swap(scenario, a, b):
    perm = list(range(scenario.n))
    perm[a], perm[b] = perm[b], perm[a]
    t = Transform.identity(scenario)
    return Transform(tuple(perm), t.setting_perms, t.sign_flips)


def setting_perm(scenario, party, images):
    t = Transform.identity(scenario)
    perms = list(t.setting_perms)
    perms[party] = tuple(images)
    return Transform(t.party_perm, tuple(perms), t.sign_flips)


def setting_flip(scenario, party, settings=None):
    t = Transform.identity(scenario)
    flips = list(t.sign_flips)
    m = scenario.settings[party]
    which = range(1, m + 1) if settings is None else settings
    row = list(flips[party])
    for j in which:
        row[j - 1] = -1
    flips[party] = tuple(row)
    return Transform(t.party_perm, t.setting_perms, tuple(flips))


def negation(scenario):
    t = Transform.identity(scenario)
    return Transform(t.party_perm, t.setting_perms, t.sign_flips, -1)


_OP_RE = re.compile(r"\s*(swap|perm|flip|neg)\b\s*([^;,]*)")


def parse_transform(scenario, expr):
    """Parse a transform expression, ops applied left to right.

    Grammar: `swap A B` (party swap), `perm A 2 1` (setting relabeling by
    image list), `flip C1` / `flip C` (sign flips), `neg` (global negation);
    ops separated by `;` or `,`.
    """
    result = Transform.identity(scenario)
    for chunk in re.split(r"[;,]", expr):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split()
        op, args = parts[0], parts[1:]
        if op == "swap":
            if len(args) != 2:
                raise ValueError(f"swap needs two parties: {chunk!r}")
            a, b = (_party_index(scenario, x) for x in args)
            step = party_swap(scenario, a, b)
        elif op == "perm":
            if len(args) < 2:
                raise ValueError(f"perm needs a party and images: {chunk!r}")
            party = _party_index(scenario, args[0])
            images = [int(x) for x in args[1:]]
            if sorted(images) != list(range(1, scenario.settings[party] + 1)):
                raise ValueError(f"bad permutation images in {chunk!r}")
            step = setting_perm(scenario, party, images)
        elif op == "flip":
            if len(args) != 1:
                raise ValueError(f"flip needs one target: {chunk!r}")
            m = re.fullmatch(r"([A-Z])(\d*)", args[0])
            if not m:
                raise ValueError(f"bad flip target {args[0]!r}")
            party = _party_index(scenario, m.group(1))
            settings = [int(m.group(2))] if m.group(2) else None
            step = setting_flip(scenario, party, settings)
        elif op == "neg":
            step = negation(scenario)
        else:
            raise ValueError(f"unknown op {op!r}")
        result = step.compose(result)
    result.validate(scenario)
    return result


def _party_index(scenario, letter):
    letter = letter.strip().upper()
    idx = PARTY_LETTERS.find(letter)
    if not 0 <= idx < scenario.n:
        raise ValueError(f"no party {letter!r} in {scenario}")
    return idx


# -- canonical form over the full orbit ----------------------------------


class OrbitTooLarge(ValueError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"transform group has {size} elements (cap {cap})")


def group_size(scenario):
    classes = {}
    for m in scenario.settings:
        classes[m] = classes.get(m, 0) + 1
    size = 2  # global sign
    for m, count in classes.items():
        size *= math.factorial(count)
    for m in scenario.settings:
        size *= math.factorial(m) << m
    return size


def _party_perms(scenario):
    """Permutations moving parties only within equal-setting-count classes."""
    classes = {}
    for i, m in enumerate(scenario.settings):
        classes.setdefault(m, []).append(i)
    per_class = [itertools.permutations(v) for v in classes.values()]
    members = [v for v in classes.values()]
    for combo in itertools.product(*per_class):
        perm = [0] * scenario.n
        for original, permuted in zip(members, combo):
            for src, dst in zip(original, permuted):
                perm[src] = dst
        yield tuple(perm)


def transform_group(scenario, cap=10**7):
    """Yield every Transform of the scenario's equivalence group."""
    size = group_size(scenario)
    if size > cap:
        raise OrbitTooLarge(size, cap)
    setting_choices = []
    for m in scenario.settings:
        perms = list(itertools.permutations(range(1, m + 1)))
        flips = list(itertools.product((1, -1), repeat=m))
        setting_choices.append([(p, s) for p in perms for s in flips])
    for party in _party_perms(scenario):
        for per_party in itertools.product(*setting_choices):
            perms = tuple(p for p, _ in per_party)
            signs = tuple(s for _, s in per_party)
            for g in (1, -1):
                yield Transform(party, perms, signs, g)


def equivalent(f, g, cap=10**7):
    """True when g lies in f's transform orbit (early-exit group scan)."""
    if f.scenario != g.scenario:
        return False
    if sorted(map(abs, f.terms.values())) != sorted(map(abs, g.terms.values())):
        return False
    return any(apply_transform(f, t) == g for t in transform_group(f.scenario, cap))


def canonical_form(f, cap=10**7):
    """Lexicographically minimal functional over the full transform orbit.

    Constant on orbits and idempotent; raises OrbitTooLarge past the cap.
    """
    n = f.scenario.n
    items = list(f.terms.items())
    best = None
    for t in transform_group(f.scenario, cap):
        party_perm = t.party_perm
        candidate = {}
        for mono, coeff in items:
            new_mono = [0] * n
            sign = t.global_sign
            for i, j in enumerate(mono):
                if j:
                    new_mono[party_perm[i]] = t.setting_perms[i][j - 1]
                    sign *= t.sign_flips[i][j - 1]
            key = tuple(new_mono)
            candidate[key] = candidate.get(key, Fraction(0)) + sign * coeff
        ordered = tuple(sorted((m, c) for m, c in candidate.items() if c != 0))
        if best is None or ordered < best:
            best = ordered
    return BellFunctional(f.scenario, dict(best))


# -- text format ----------------------------------------------------------


def render(f):
    """Serialize to the line-oriented text format.

    Header `scenario n=<n> m=<m_1>,...`; one `<sign><num>[/<den>] <slots>`
    line per term in canonical order; the constant term's slot field is `1`.
    """
    lines = [
        f"scenario n={f.scenario.n} m={','.join(map(str, f.scenario.settings))}"
    ]
    for mono, coeff in f.sorted_terms():
        num, den = coeff.numerator, coeff.denominator
        coeff_s = f"{num:+d}" if den == 1 else f"{num:+d}/{den}"
        slots = [
            f"{PARTY_LETTERS[i]}{j}" for i, j in enumerate(mono) if j
        ]
        lines.append(f"{coeff_s} {' '.join(slots) if slots else '1'}")
    return "\n".join(lines) + "\n"


_COEFF_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse(text):
    """Parse the text format; raises FormatError with a line number."""
    scenario = None
    terms = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("scenario"):
            if scenario is not None:
                raise FormatError("duplicate scenario header", lineno)
            m = re.fullmatch(
                r"scenario\s+n\s*=\s*(\d+)\s+m\s*=\s*([\d,\s]+)", line
            )
            if not m:
                raise FormatError(f"bad scenario header {line!r}", lineno)
            n = int(m.group(1))
            settings = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
            if len(settings) != n:
                raise FormatError("n does not match the settings list", lineno)
            scenario = Scenario(tuple(settings))
            continue
        if scenario is None:
            raise FormatError("term before scenario header", lineno)
        fields = line.split()
        if not _COEFF_RE.fullmatch(fields[0]):
            raise FormatError(f"bad coefficient {fields[0]!r}", lineno)
        coeff = Fraction(fields[0])
        mono = [0] * scenario.n
        slots = fields[1:]
        if slots == ["1"]:
            slots = []
        elif not slots:
            raise FormatError("missing slots (use 1 for the constant)", lineno)
        for slot in slots:
            m = re.fullmatch(r"([A-Z])(\d+)", slot)
            if not m:
                raise FormatError(f"bad slot {slot!r}", lineno)
            try:
                party = _party_index(scenario, m.group(1))
            except ValueError as exc:
                raise FormatError(str(exc), lineno) from None
            j = int(m.group(2))
            if not 1 <= j <= scenario.settings[party]:
                raise FormatError(f"setting {slot!r} out of range", lineno)
            if mono[party]:
                raise FormatError(f"party {m.group(1)} repeated in term", lineno)
            mono[party] = j
        key = tuple(mono)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    if scenario is None:
        raise FormatError("no scenario header found")
    return BellFunctional(scenario, terms)


def parse_blocks(text):
    """Parse a catalog file: blocks separated by blank lines, `#` comments
    allowed; returns a list of (comment, functional) pairs."""
    blocks = []
    current = []
    comment = None
    pending_comment = None
    for raw in text.splitlines():
        stripped = raw.strip()
        if stripped.startswith("#"):
            pending_comment = stripped.lstrip("# ").strip()
            continue
        if not stripped:
            if current:
                blocks.append((comment, parse("\n".join(current))))
                current = []
            comment = None
            continue
        if not current:
            comment = pending_comment
            pending_comment = None
        current.append(raw)
    if current:
        blocks.append((comment, parse("\n".join(current))))
    return blocks
