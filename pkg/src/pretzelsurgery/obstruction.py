"""Surgery obstruction predicates.

Four independent obstructions to cyclic or finite Dehn surgeries:

* the alternating +-1 coefficient form that the Alexander polynomial of
  any knot with an L-space surgery must take (Ozsvath-Szabo);
* the weaker all-coefficients-+-1 test and the monic leading-coefficient
  test (a fibered knot has monic Alexander polynomial, and knots with
  L-space surgeries are fibered, by Ni);
* a sutured-surface fiberedness certificate for the (-1,-1,2m,p,q)
  pretzel family, following Gabai's classification of fibered pretzel
  links;
* arithmetic verification of the Heegaard Floer rank-formula implication
  that integral L-space slopes follow from non-integral ones.  The
  Floer-theoretic inputs (the invariant nu and the total reduced rank Y)
  are symbolic; nothing here computes Floer homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .laurent import LaurentPoly
from .pretzel import PretzelLink


class ObstructionError(ValueError):
    """Invalid input to an obstruction predicate."""


# ----------------------------------------------------------------------
# the alternating +-1 coefficient form

@dataclass(frozen=True)
class OSFormDecomposition:
    """Data of an Alexander polynomial written in the symmetric form

        (-1)^k + sum_{j=1..k} (-1)^(k-j) (t^(n_j) + t^(-n_j))

    for a strictly increasing sequence 0 < n_1 < ... < n_k."""

    k: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0 or len(self.exponents) != self.k:
            raise ObstructionError("exponent count must equal k")
        if any(e <= 0 for e in self.exponents):
            raise ObstructionError("exponents must be positive")
        if any(a >= b for a, b in zip(self.exponents, self.exponents[1:])):
            raise ObstructionError("exponents must be strictly increasing")


def symmetrize(delta: LaurentPoly) -> LaurentPoly:
    """The unit multiple of ``delta`` with Delta(t) = Delta(1/t) exactly and
    positive leading coefficient.  Raises if no unit achieves symmetry."""
    if delta.is_zero:
        raise ObstructionError("zero polynomial cannot be symmetrized")
    lo, hi = delta.mindeg, delta.maxdeg
    if (lo + hi) % 2 != 0:
        raise ObstructionError("polynomial has no symmetric centering")
    centered = delta.shifted(-(lo + hi) // 2)
    if centered != centered.conj():
        raise ObstructionError("polynomial is not symmetric up to units")
    if centered.s_coefficient(centered.maxdeg) < 0:
        centered = -centered
    return centered


def os_form_polynomial(decomp: OSFormDecomposition) -> LaurentPoly:
    """The symmetric Laurent polynomial encoded by a decomposition."""
    k = decomp.k
    value = LaurentPoly.from_int((-1) ** k)
    for j, n in enumerate(decomp.exponents, start=1):
        sign = (-1) ** (k - j)
        value = value + LaurentPoly.t_term(sign, n) + LaurentPoly.t_term(sign, -n)
    return value


def os_form_check(delta: LaurentPoly) -> OSFormDecomposition | None:
    """Match ``delta`` against the alternating +-1 form, up to units.

    Returns the decomposition when the symmetrized polynomial is exactly
    (-1)^k + sum (-1)^(k-j)(t^(n_j) + t^(-n_j)), and None otherwise.
    Asymmetric input (not a knot polynomial) raises ObstructionError.
    """
    centered = symmetrize(delta)
    exps = [e for e in centered.support if e > 0]
    if any(e % 2 != 0 for e in centered.support):
        return None  # half-integer powers of t cannot occur in the form
    k = len(exps)
    exponents = tuple(e // 2 for e in exps)
    if centered != os_form_polynomial(OSFormDecomposition(k, exponents)):
        return None
    return OSFormDecomposition(k, exponents)


def pm1_coefficients(delta: LaurentPoly) -> bool:
    """True iff every non-zero coefficient of ``delta`` is +1 or -1."""
    return all(c in (1, -1) for _, c in delta.items())


def monic_check(delta: LaurentPoly) -> bool:
    """True iff the leading coefficient of ``delta`` is +-1 (a necessary
    condition for fiberedness).  Rejects the zero polynomial."""
    if delta.is_zero:
        raise ObstructionError("zero polynomial has no leading coefficient")
    return abs(delta.s_coefficient(delta.maxdeg)) == 1


# ----------------------------------------------------------------------
# fiberedness certificate for the (-1,-1,2m,p,q) family

@dataclass(frozen=True)
class GabaiCaseTrace:
    """Audit record of the fiberedness decision for P(-1,-1,2m,p,q).

    The decision walks the case analysis for pretzel surfaces of type II:
    the spanning surface has band data (m_1, m_11, m_2, m_3, m_4) =
    (-1, 2m, p, q, -1), whose sign sum vanishes, so fiberedness is
    equivalent to that of the associated link L' = P(2m,-2,-2); for m > 1
    that link matches none of the fibered patterns, hence not fibered.
    """

    input: PretzelLink
    surface_type: str
    band_data: tuple[int, ...]
    case_path: tuple[str, ...]
    associated_link: PretzelLink
    verdict: str  # "fibered" or "not-fibered"


def gabai_not_fibered(m: int, p: int, q: int) -> GabaiCaseTrace:
    """Fiberedness certificate for the pretzel knot P(-1,-1,2m,p,q).

    Requires m >= 2 and odd 3 <= p <= q; the case chain below is only
    valid as instantiated (at m = 1 the associated link degenerates to a
    fibered pattern and the argument breaks).
    """
    if m < 2:
        raise ObstructionError(
            "certificate requires m >= 2: P(2m,-2,-2) with m=1 matches the "
            "fibered pattern +-(2,-2,...,n)"
        )
    if p % 2 == 0 or q % 2 == 0 or not 3 <= p <= q:
        raise ObstructionError("certificate requires odd 3 <= p <= q")
    link = PretzelLink((-1, -1, 2 * m, p, q))
    band_data = (-1, 2 * m, p, q, -1)
    # type II surface: one doubled band (2m) among signed bands whose
    # sign sum is -1 + 1 + 1 - 1 = 0
    sign_sum = sum(b // abs(b) for b in (-1, 2 * m, p, -1))
    if sign_sum != 0:
        raise ObstructionError("band sign sum must vanish for this chain")
    associated = PretzelLink((2 * m, -2, -2))
    return GabaiCaseTrace(
        input=link,
        surface_type="TYPE-II",
        band_data=band_data,
        case_path=("CASE 2", "CASE 2B", "CASE 1"),
        associated_link=associated,
        verdict="not-fibered",
    )


# ----------------------------------------------------------------------
# Heegaard Floer rank-formula arithmetic

@dataclass(frozen=True)
class SurgerySlope:
    """A surgery slope alpha/beta in lowest terms, beta >= 1."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.beta < 1:
            raise ObstructionError("slope denominator must be positive")
        if gcd(self.alpha, self.beta) != 1:
            raise ObstructionError("slope must be in lowest terms")

    def __str__(self) -> str:
        return f"{self.alpha}/{self.beta}" if self.beta != 1 else str(self.alpha)


@dataclass(frozen=True)
class HFRankParams:
    """Symbolic inputs to the rank formula: the invariant nu, the total
    reduced rank Y = sum_s (rk H(A_s) - 1), and the surgery slope."""

    nu: int
    Y: int
    slope: SurgerySlope


def _x(nu: int, alpha: int, beta: int) -> int:
    return max(0, (2 * nu - 1) * abs(beta) - abs(alpha))


def hf_rank(params: HFRankParams) -> int:
    """Total rank of the surgered manifold's hat Floer homology:
    |alpha| + 2 max(0, (2 nu - 1)|beta| - |alpha|) + |beta| Y."""
    a, b = params.slope.alpha, params.slope.beta
    return abs(a) + 2 * _x(params.nu, a, b) + abs(b) * params.Y


@dataclass(frozen=True)
class CheckResult:
    """Outcome of the integral-slope L-space implication check.

    ``hypothesis`` records whether 2 X(nu, alpha, beta) + |beta| Y = 0
    (the alpha/beta surgery is an L-space); ``a_holds`` is Y <= 0 and
    ``b_holds`` is 2 X(nu, alpha, 1) + Y <= 0, which together force the
    integral alpha surgery to be an L-space as well.
    """

    params: HFRankParams
    x_beta: int
    x_one: int
    hypothesis: bool
    a_holds: bool
    b_holds: bool

    @property
    def implication_holds(self) -> bool:
        return not self.hypothesis or (self.a_holds and self.b_holds)


def claim2_implication(params: HFRankParams) -> CheckResult:
    """Arithmetic skeleton of the non-integral-to-integral L-space step.

    Requires beta >= 2 (the non-integral hypothesis).  Evaluates both
    proof inequalities at the given symbolic (nu, Y, alpha/beta).
    """
    a, b = params.slope.alpha, params.slope.beta
    if b < 2:
        raise ObstructionError("implication applies to non-integral slopes only")
    x_beta = _x(params.nu, a, b)
    x_one = _x(params.nu, a, 1)
    hypothesis = 2 * x_beta + abs(b) * params.Y == 0
    return CheckResult(
        params=params,
        x_beta=x_beta,
        x_one=x_one,
        hypothesis=hypothesis,
        a_holds=params.Y <= 0,
        b_holds=2 * x_one + params.Y <= 0,
    )


__all__ = [
    "ObstructionError",
    "OSFormDecomposition",
    "SurgerySlope",
    "HFRankParams",
    "GabaiCaseTrace",
    "CheckResult",
    "symmetrize",
    "os_form_polynomial",
    "os_form_check",
    "pm1_coefficients",
    "monic_check",
    "gabai_not_fibered",
    "hf_rank",
    "claim2_implication",
]
