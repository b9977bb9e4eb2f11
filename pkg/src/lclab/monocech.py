"""Sign-pattern engine for graded pieces of torsion cohomology of monomial ideals.

The ambient ring is K[Y_1..Y_d][X_1..X_m] with deg Y = 0 and deg X = 1,
char K = 0.  Variables are indexed 0..d-1 (the Y block) then d..d+m-1
(the X block).  Every multidegree α sees, inside the generator-indexed
covering complex, a finite subcomplex that depends only on the sign
pattern N(α) = {v : α_v < 0}; this module enumerates those slices,
takes their cohomology, and derives nonvanishing shapes, dimensions,
Hilbert data, localizations and supports from the resulting profile.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exactlin import (
    ExactMatrix,
    FiniteComplex,
    IntegerPolynomial,
    binom_ext,
    cohomology_dims,
)


class UnitIdealError(ValueError):
    """A generator is the constant 1, so the ideal is the whole ring."""


class InfiniteDimsError(ValueError):
    """A requested closed form does not exist because some piece is infinite-dimensional."""


class ShapeViolationError(AssertionError):
    """A nonvanishing set escaped the five admissible shapes.

    This must never fire: raising it means either an engine bug or a
    counterexample to the classification it encodes.
    """


@dataclass(frozen=True)
class VariableContext:
    """Named variables with the (0,1)-degree split: deg0 = Y block, deg1 = X block."""

    deg0: tuple
    deg1: tuple

    def __post_init__(self):
        object.__setattr__(self, "deg0", tuple(self.deg0))
        object.__setattr__(self, "deg1", tuple(self.deg1))
        if len(self.deg1) < 1:
            raise ValueError("need at least one degree-1 variable")
        names = self.deg0 + self.deg1
        if any(not isinstance(s, str) or not s for s in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")

    @property
    def d(self):
        return len(self.deg0)

    @property
    def m(self):
        return len(self.deg1)

    @property
    def names(self):
        return self.deg0 + self.deg1

    @property
    def nvars(self):
        return self.d + self.m

    @property
    def y_indices(self):
        return frozenset(range(self.d))

    @property
    def x_indices(self):
        return frozenset(range(self.d, self.d + self.m))

    def index_of(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def coarse_degree(self, alpha):
        """Sum of the degree-1 coordinates of a multidegree."""
        return sum(alpha[v] for v in range(self.d, self.d + self.m))

    def sign_pattern(self, alpha):
        """N(α) = the set of variables with strictly negative exponent."""
        if len(alpha) != self.nvars:
            raise ValueError("multidegree length mismatch")
        return frozenset(v for v, a in enumerate(alpha) if a < 0)


class MonomialIdeal:
    """A monomial ideal given by generator exponent vectors.

    Exponents are kept as written (for display and for the brute-force
    oracle); everything cohomological only reads the squarefree supports.
    """

    __slots__ = ("context", "generators", "_supports")

    def __init__(self, context, generators):
        generators = tuple(tuple(int(e) for e in g) for g in generators)
        if not generators:
            raise ValueError("need at least one generator (the zero ideal is rejected)")
        for g in generators:
            if len(g) != context.nvars:
                raise ValueError(f"generator {g} has wrong length for {context.nvars} variables")
            if any(e < 0 for e in g):
                raise ValueError(f"generator {g} has a negative exponent")
            if not any(g):
                raise UnitIdealError("a generator is the constant 1")
        self.context = context
        self.generators = generators
        self._supports = tuple(
            frozenset(v for v, e in enumerate(g) if e > 0) for g in generators
        )

    @property
    def supports(self):
        return self._supports

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.context == other.context and self.generators == other.generators

    def __hash__(self):
        return hash((self.context, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({', '.join(self.render_generator(j) for j in range(len(self.generators)))})"

    def render_generator(self, j):
        names = self.context.names
        parts = [
            names[v] if e == 1 else f"{names[v]}^{e}"
            for v, e in enumerate(self.generators[j])
            if e
        ]
        return "*".join(parts)

    def spec_dict(self):
        """Round-trippable plain-data form (the CLI input format)."""
        return {
            "deg0_vars": list(self.context.deg0),
            "deg1_vars": list(self.context.deg1),
            "generators": [self.render_generator(j) for j in range(len(self.generators))],
        }


class _UnitIdeal:
    """Flag value for the unit ideal (all cohomology vanishes by definition)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UnitIdeal"


UNIT_IDEAL = _UnitIdeal()


def normalize(ideal):
    """Radical-and-prune normal form: squarefree generators, deduplicated,
    supports strictly containing another support dropped.

    Torsion cohomology only depends on the radical, and a generator whose
    support contains another's is redundant after taking radicals; the
    brute-force oracle independently tests that pruning changes nothing.
    """
    supports = set(ideal.supports)
    kept = sorted(
        (s for s in supports if not any(t < s for t in supports)),
        key=lambda s: (len(s), sorted(s)),
    )
    gens = [
        tuple(1 if v in s else 0 for v in range(ideal.context.nvars)) for s in kept
    ]
    return MonomialIdeal(ideal.context, gens)


# ---------------------------------------------------------------------------
# Slice complexes and cohomology profiles
# ---------------------------------------------------------------------------


def _union_support(supports, sigma):
    acc = frozenset()
    for j in sigma:
        acc |= supports[j]
    return acc


def _alive_masks(supports, pattern):
    """Bitmasks (over generators) of the subsets σ with pattern ⊆ supp(m_σ).

    The empty σ (the ring summand) is alive exactly when the pattern is
    empty; aliveness is upward-closed since supports only grow along σ.
    """
    g = len(supports)
    alive = set()
    for mask in range(1 << g):
        sigma = [j for j in range(g) if mask >> j & 1]
        if pattern <= _union_support(supports, sigma):
            alive.add(mask)
    return frozenset(alive)


def _basis_from_alive(alive, g):
    """Alive subsets grouped by size, each level in lexicographic order."""
    basis = [[] for _ in range(g + 1)]
    for mask in alive:
        sigma = tuple(j for j in range(g) if mask >> j & 1)
        basis[len(sigma)].append(sigma)
    for level in basis:
        level.sort()
    return basis


def _complex_from_alive(alive, g):
    basis = _basis_from_alive(alive, g)
    index = [{sigma: col for col, sigma in enumerate(level)} for level in basis]
    diffs = []
    for p in range(g):
        entries = {}
        for row, tau in enumerate(basis[p + 1]):
            for t in range(len(tau)):
                sigma = tau[:t] + tau[t + 1 :]
                col = index[p].get(sigma)
                if col is not None:
                    entries[(row, col)] = -1 if t % 2 else 1
        diffs.append(ExactMatrix(len(basis[p + 1]), len(basis[p]), entries))
    return FiniteComplex([len(level) for level in basis], diffs)


@lru_cache(maxsize=65536)
def _cech_dims(alive, g):
    """Cohomology dimensions for an upward-closed family of generator subsets.

    Keyed only by the alive family so distinct multidegrees (and distinct
    ideals) with the same combinatorics share one rank computation.
    """
    return cohomology_dims(_complex_from_alive(alive, g))


def slice_complex(ideal, pattern):
    """The finite complex seen at any multidegree with sign pattern ``pattern``.

    Level p has one basis element per p-subset σ of the generators with
    pattern ⊆ supp(m_σ); the differential carries the usual (−1)^position
    signs under the fixed generator order.
    """
    ideal = normalize(ideal)
    g = len(ideal.supports)
    return _complex_from_alive(_alive_masks(ideal.supports, frozenset(pattern)), g)


def slice_basis(ideal, pattern):
    """Per-level generator subsets underlying slice_complex, in basis order."""
    ideal = normalize(ideal)
    g = len(ideal.supports)
    return _basis_from_alive(_alive_masks(ideal.supports, frozenset(pattern)), g)


class CohomologyProfile:
    """Map from sign patterns to slice cohomology rank vectors (h^0..h^g).

    Only patterns with some nonzero rank are stored; everything else is
    zero, including every pattern containing a variable outside all
    generator supports.
    """

    __slots__ = ("ideal", "gen_count", "by_pattern")

    def __init__(self, ideal, gen_count, by_pattern):
        self.ideal = ideal
        self.gen_count = gen_count
        self.by_pattern = dict(by_pattern)

    def h(self, pattern, i):
        dims = self.by_pattern.get(frozenset(pattern))
        if dims is None or i >= len(dims):
            return 0
        return dims[i]

    def patterns(self):
        return sorted(self.by_pattern, key=lambda s: (len(s), sorted(s)))

    def contributors(self, i):
        """All (pattern, rank, k) with h^i ≠ 0, k = the degree-1 part size."""
        x_vars = self.ideal.context.x_indices
        out = []
        for pattern in self.patterns():
            h = self.h(pattern, i)
            if h:
                out.append(Contributor(pattern, h, len(pattern & x_vars)))
        return out

    def __repr__(self):
        return f"CohomologyProfile({self.ideal!r}, {len(self.by_pattern)} patterns)"


@lru_cache(maxsize=None)
def _profile_normalized(ideal):
    supports = ideal.supports
    g = len(supports)
    union = sorted(frozenset().union(*supports))
    by_pattern = {}
    for r in range(len(union) + 1):
        for subset in combinations(union, r):
            pattern = frozenset(subset)
            dims = _cech_dims(_alive_masks(supports, pattern), g)
            if any(dims):
                by_pattern[pattern] = dims
    return CohomologyProfile(ideal, g, by_pattern)


def cohomology_profile(ideal):
    """Full sign-pattern profile of an ideal (computed on its normal form)."""
    return _profile_normalized(normalize(ideal))


# ---------------------------------------------------------------------------
# Nonvanishing shapes
# ---------------------------------------------------------------------------


class PatternShape(enum.Enum):
    """The five admissible Z-degree nonvanishing sets of a component family."""

    EMPTY = "Empty"
    NONNEG_ONLY = "NonnegOnly"
    NEG_TAIL_ONLY = "NegTailOnly"
    ALL_Z = "AllZ"
    TWO_TAILS = "TwoTails"

    def describe(self, m):
        if self is PatternShape.EMPTY:
            return "none"
        if self is PatternShape.NONNEG_ONLY:
            return "n >= 0"
        if self is PatternShape.NEG_TAIL_ONLY:
            return f"n <= {-m}"
        if self is PatternShape.ALL_Z:
            return "all n"
        return f"n <= {-m} or n >= 0"

    def contains(self, n, m):
        if self is PatternShape.EMPTY:
            return False
        if self is PatternShape.NONNEG_ONLY:
            return n >= 0
        if self is PatternShape.NEG_TAIL_ONLY:
            return n <= -m
        if self is PatternShape.ALL_Z:
            return True
        return n <= -m or n >= 0


class Contributor(tuple):
    """A (pattern, rank, k) triple: a sign pattern with nonzero slice rank."""

    __slots__ = ()

    def __new__(cls, pattern, rank, k):
        return super().__new__(cls, (frozenset(pattern), rank, k))

    @property
    def pattern(self):
        return self[0]

    @property
    def rank(self):
        return self[1]

    @property
    def k(self):
        return self[2]

    def degree_range_contains(self, n, m):
        """Whether coarse degree n is realized by a multidegree with this pattern."""
        if self.k == 0:
            return n >= 0
        if self.k == m:
            return n <= -m
        return True


@dataclass(frozen=True)
class PatternReport:
    """Nonvanishing classification of one cohomological index."""

    ideal: MonomialIdeal
    i: int
    shape: PatternShape
    contributors: tuple

    def describe(self):
        return self.shape.describe(self.ideal.context.m)


def pattern_report(ideal, i):
    """Classify the Z-degree nonvanishing set of the index-i components.

    The shape is the union, over patterns with nonzero rank, of the coarse
    degree ranges their k = |pattern ∩ X| allows: k=0 gives {n ≥ 0}, k=m
    gives {n ≤ −m}, anything in between covers all of Z.
    """
    ideal = normalize(ideal)
    m = ideal.context.m
    contributors = tuple(cohomology_profile(ideal).contributors(i))
    has_nonneg = any(c.k == 0 for c in contributors)
    has_negtail = any(c.k == m for c in contributors)
    has_mixed = any(0 < c.k < m for c in contributors)
    if has_mixed:
        shape = PatternShape.ALL_Z
    elif has_nonneg and has_negtail:
        # for m = 1 the tails {n ≤ −1} and {n ≥ 0} exhaust Z
        shape = PatternShape.ALL_Z if m == 1 else PatternShape.TWO_TAILS
    elif has_nonneg:
        shape = PatternShape.NONNEG_ONLY
    elif has_negtail:
        shape = PatternShape.NEG_TAIL_ONLY
    else:
        shape = PatternShape.EMPTY
    if shape is PatternShape.TWO_TAILS and m < 2:
        raise ShapeViolationError(f"two tails with m={m} on {ideal!r}")
    if shape is not PatternShape.EMPTY and not contributors:
        raise ShapeViolationError(f"nonempty shape without contributors on {ideal!r}")
    return PatternReport(ideal, i, shape, contributors)


def piece_nonzero(ideal, i, n):
    """Whether the coarse-degree-n component of the index-i module is nonzero."""
    report = pattern_report(ideal, i)
    return report.shape.contains(n, report.ideal.context.m)


# ---------------------------------------------------------------------------
# Dimension counting
# ---------------------------------------------------------------------------


class DimValue:
    """An exact K-dimension: a nonnegative integer or Infinite.

    Infinite is an expected first-class answer (free-module components),
    never an error.  value is None exactly in the infinite case.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError(f"dimension must be a nonnegative integer or None: {value!r}")
        self.value = value

    @classmethod
    def finite(cls, n):
        return cls(n)

    @property
    def is_infinite(self):
        return self.value is None

    def __add__(self, other):
        if self.is_infinite or other.is_infinite:
            return INFINITE
        return DimValue(self.value + other.value)

    def scaled(self, c):
        """Multiply by a nonnegative integer count; 0 · Infinite = 0."""
        if c < 0:
            raise ValueError("negative multiplicity")
        if c == 0:
            return DimValue(0)
        if self.is_infinite:
            return INFINITE
        return DimValue(self.value * c)

    def to_json(self):
        return "infinite" if self.is_infinite else self.value

    def __eq__(self, other):
        if not isinstance(other, DimValue):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("DimValue", self.value))

    def __repr__(self):
        return "Infinite" if self.is_infinite else f"Finite({self.value})"


INFINITE = DimValue(None)


def x_lattice_count(m, k, n):
    """Number of α ∈ Z^m with a fixed set of exactly k negative coordinates
    and coordinate sum n, as a DimValue.

    All-nonnegative (k=0) counts compositions; all-negative (k=m) counts
    them after reflection; a mixed fixed set has solutions at every n and
    infinitely many of them.
    """
    if not 0 <= k <= m:
        raise ValueError("k out of range")
    if m == 0:
        return DimValue(1 if n == 0 else 0)
    if k == 0:
        return DimValue(binom_ext(n + m - 1, m - 1) if n >= 0 else 0)
    if k == m:
        return DimValue(binom_ext(-n - 1, m - 1) if n <= -m else 0)
    return INFINITE


def degree_count(y_count, m, k, n):
    """Number of multidegrees with a fixed sign pattern and coarse degree n,
    where the variable set carries ``y_count`` degree-0 variables (free in
    either sign direction) and m degree-1 variables, k of them negative.
    """
    xc = x_lattice_count(m, k, n)
    if xc == DimValue(0):
        return DimValue(0)
    if y_count >= 1:
        return INFINITE
    return xc


def piece_dimension(ideal, i, n):
    """Exact K-dimension of the coarse-degree-n component (d = 0 only).

    With degree-0 variables present the components are modules over the
    coefficient ring and K-dimension is the wrong measure; use
    strand_dimension with a pinned Y-multidegree instead.
    """
    ideal = normalize(ideal)
    ctx = ideal.context
    if ctx.d != 0:
        raise ValueError("piece_dimension needs d = 0; use strand_dimension for d >= 1")
    total = DimValue(0)
    for c in cohomology_profile(ideal).contributors(i):
        total = total + x_lattice_count(ctx.m, c.k, n).scaled(c.rank)
    return total


def strand_dimension(ideal, i, y_part, n):
    """K-dimension of the components with a fixed Y-multidegree and coarse degree n."""
    ideal = normalize(ideal)
    ctx = ideal.context
    y_part = tuple(int(a) for a in y_part)
    if len(y_part) != ctx.d:
        raise ValueError(f"y_part must have length d = {ctx.d}")
    neg_y = frozenset(j for j, a in enumerate(y_part) if a < 0)
    total = DimValue(0)
    for c in cohomology_profile(ideal).contributors(i):
        if c.pattern & ctx.y_indices == neg_y:
            total = total + x_lattice_count(ctx.m, c.k, n).scaled(c.rank)
    return total


def hilbert_pair(ideal, i):
    """The two counting polynomials (f for the n ≤ −m tail, g for n ≥ 0).

    Both are exact on their whole validity half-lines, not just
    asymptotically; both have degree ≤ m − 1.  Demands d = 0 and finite
    dimensions everywhere.
    """
    ideal = normalize(ideal)
    ctx = ideal.context
    if ctx.d != 0:
        raise ValueError("hilbert_pair needs d = 0")
    m = ctx.m
    contributors = cohomology_profile(ideal).contributors(i)
    mixed = [c for c in contributors if 0 < c.k < m]
    if mixed:
        witness = ",".join(ctx.names[v] for v in sorted(mixed[0].pattern))
        raise InfiniteDimsError(
            f"infinite dimensions at every degree (pattern {{{witness}}})"
        )
    h_neg = sum(c.rank for c in contributors if c.k == m)
    h_pos = sum(c.rank for c in contributors if c.k == 0)
    # counts in the binomial basis: the k=m tail is (−1)^{m−1} binom(n+m−1, m−1)
    sign = -1 if (m - 1) % 2 else 1
    f = IntegerPolynomial([0] * (m - 1) + [sign * h_neg], "le", -m)
    g = IntegerPolynomial([0] * (m - 1) + [h_pos], "ge", 0)
    return f, g


# ---------------------------------------------------------------------------
# Localization and supports
# ---------------------------------------------------------------------------


def localize(ideal, invert):
    """Delete inverted degree-0 variables from every generator support.

    Returns UNIT_IDEAL when some support is wiped out entirely (that
    generator became a unit, so the localized ideal is the whole ring).
    """
    ideal = normalize(ideal)
    ctx = ideal.context
    invert = frozenset(invert)
    if not invert <= ctx.y_indices:
        raise ValueError("can only invert degree-0 variables")
    new_supports = [s - invert for s in ideal.supports]
    if any(not s for s in new_supports):
        return UNIT_IDEAL
    gens = [tuple(1 if v in s else 0 for v in range(ctx.nvars)) for s in new_supports]
    return normalize(MonomialIdeal(ctx, gens))


def support_min_primes(ideal, i, n):
    """Minimal T ⊆ Y-variables such that the (i, n) piece survives
    inverting the complement Y∖T; T = ∅ encodes the zero ideal.

    The piece survives inverting W exactly when some contributing pattern
    avoids W and allows coarse degree n, so the minimal primes are the
    inclusion-minimal Y-parts of the active contributors.
    """
    ideal = normalize(ideal)
    ctx = ideal.context
    active = [
        c.pattern & ctx.y_indices
        for c in cohomology_profile(ideal).contributors(i)
        if c.degree_range_contains(n, ctx.m)
    ]
    minimal = {t for t in active if not any(u < t for u in active)}
    return frozenset(minimal)


def support_dim(ideal, i, n):
    """Krull dimension of the coefficient-ring support of the (i, n) piece;
    −1 for the zero piece."""
    primes = support_min_primes(ideal, i, n)
    if not primes:
        return -1
    d = normalize(ideal).context.d
    return max(d - len(t) for t in primes)
