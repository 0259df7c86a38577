"""Alexander polynomials of pretzel knots by twist-region skein resolution.

The engine works with the Conway-consistent representatives that satisfy
the skein relation Delta(L+) - Delta(L-) = (t^(-1/2) - t^(1/2)) Delta(L0)
exactly; results are therefore "Delta up to units", with unit choices kept
coherent inside a single computation so that resolving-tree recombination
is an exact identity.  Normalization is left to the caller.

One twist region at a time is resolved down to parameter 0 or +-1.  How a
region resolves depends on the flow of its two strands, which is computed
once from the root diagram and never changes under crossing changes or
oriented smoothings:

* parallel strands: smoothing removes one crossing, so the region obeys
  the torus-link recursion and splits into two sub-links with torus-link
  polynomial multipliers;
* antiparallel strands: smoothing replaces the region by a horizontal bar,
  fusing the remaining regions into a single (2, m)-torus chain, so each
  crossing change peels off one copy of the chain polynomial.

Terminal links (all parameters in {-1, 0, 1}, or containing a 0 region)
are evaluated by closed torus-link / connected-sum forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .laurent import SKEIN_FACTOR, LaurentPoly
from .pretzel import PretzelLink, RegionFlags, is_knot, orientation_flags


class UnsupportedLinkError(ValueError):
    """A leaf or region configuration outside the engine's rewrite table."""


# ----------------------------------------------------------------------
# torus link polynomials

@lru_cache(maxsize=None)
def _torus(l: int) -> LaurentPoly:
    """Conway-consistent Delta of the (2, l)-torus link, any integer l.

    Delta_0 = 0, Delta_1 = 1, Delta_{l+1} = Delta_{l-1} + w Delta_l with
    w = t^(-1/2) - t^(1/2); negative indices extend the same recursion
    (the mirror image), giving Delta_{-l} = (-1)^(l+1) Delta_l.
    """
    if l == 0:
        return LaurentPoly.zero()
    if l == 1:
        return LaurentPoly.one()
    if l > 1:
        return _torus(l - 2) + SKEIN_FACTOR * _torus(l - 1)
    return _torus(l + 2) - SKEIN_FACTOR * _torus(l + 1)


def torus_link_alexander(l: int) -> LaurentPoly:
    """Delta of the (2, l)-torus link, l >= 1."""
    if l < 1:
        raise ValueError("torus link parameter must be a positive integer")
    return _torus(l)


# ----------------------------------------------------------------------
# resolving trace

@dataclass(frozen=True)
class SkeinStep:
    """One resolution: link_before splits at region_index into branches,
    each a (multiplier, sub-link) pair."""

    link_before: PretzelLink
    region_index: int
    branches: tuple[tuple[LaurentPoly, PretzelLink], ...]


@dataclass
class SkeinTrace:
    """Resolving tree audit record.

    ``value`` is the exact recursion result; ``final`` maps each terminal
    leaf link to its accumulated multiplier and ``leaf_values`` to its
    closed-form polynomial, so that
    sum(final[L] * leaf_values[L]) == value exactly.
    """

    root: PretzelLink
    value: LaurentPoly = field(default_factory=LaurentPoly.zero)
    steps: list[SkeinStep] = field(default_factory=list)
    final: dict[PretzelLink, LaurentPoly] = field(default_factory=dict)
    leaf_values: dict[PretzelLink, LaurentPoly] = field(default_factory=dict)

    def recombined(self) -> LaurentPoly:
        total = LaurentPoly.zero()
        for leaf, mult in self.final.items():
            total = total + mult * self.leaf_values[leaf]
        return total


# ----------------------------------------------------------------------
# the engine

def _tbar(l: int) -> LaurentPoly:
    """The (2, l)-torus value with parallel strands and reversed crossing
    orientation signs: _torus(l) with w replaced by -w."""
    value = _torus(l)
    return value if l % 2 != 0 else -value


def _twist_value(m: int, parallel: bool, *, horizontal: bool = False) -> LaurentPoly:
    """Exact Conway value of the closed (2, m) twist with the two strands
    running parallel or antiparallel.

    A quarter turn of the picture exchanges the roles of the two smoothing
    conventions, so twists read along a horizontal braid axis take the
    opposite sign convention from vertical twist regions.
    """
    if m % 2 != 0:
        return _torus(abs(m))
    if m == 0:
        return LaurentPoly.zero()
    if parallel:
        return _torus(m) if horizontal else _tbar(m)
    half = (m // 2) * SKEIN_FACTOR
    return -half if horizontal else half


def _chain_value(params, flags, skip: int) -> LaurentPoly:
    """Conway value of the link obtained by fusing all regions but ``skip``
    into one (2, m) twist chain, m the remaining twist total.  The chain's
    two strands thread the remaining regions vertically, so the region
    flags there decide parallel versus antiparallel."""
    rest = [j for j in range(len(params)) if j != skip]
    if not rest:
        return LaurentPoly.one()  # smoothing a lone region leaves an unknot
    if len(rest) > 3:
        # with four or more remaining regions the smoothed link is no
        # longer a (2, m) twist chain, so this rewrite would be unsound
        raise UnsupportedLinkError(
            "antiparallel smoothing with more than three remaining regions"
        )
    m = sum(params[j] for j in rest)
    if m % 2 != 0:
        return _torus(abs(m))
    if m == 0:
        return LaurentPoly.zero()
    kinds = {flags[j].parallel for j in rest}
    if len(kinds) != 1:
        raise UnsupportedLinkError("mixed strand flows in fused twist chain")
    return _twist_value(m, kinds.pop())


def _factor_value(a: int, flag: RegionFlags) -> LaurentPoly:
    """Conway value of one closed (2, a) twist connected-sum factor."""
    return _twist_value(a, flag.parallel)


def _leaf_value(params, flags) -> LaurentPoly | None:
    """Closed form for terminal links, or None when a region still needs
    resolving."""
    if len(params) == 1:
        # side-arc closure of a lone region: the (2, a)-torus link
        return _factor_value(params[0], flags[0])
    zeros = [i for i, a in enumerate(params) if a == 0]
    if len(zeros) >= 2:
        return LaurentPoly.zero()  # split link
    if len(zeros) == 1:
        # a 0 region cuts the necklace: connected sum of (2, a_j) factors
        value = LaurentPoly.one()
        for j, a in enumerate(params):
            if j != zeros[0]:
                value = value * _factor_value(a, flags[j])
        return value
    if all(abs(a) == 1 for a in params):
        # a necklace of single crossings is a closed (2, m) braid whose two
        # strands run horizontally, so parallelism is read across the
        # left-hand ports, not down each region
        m = sum(params)
        if m % 2 != 0:
            return _torus(abs(m))
        if m == 0:
            return LaurentPoly.zero()
        kinds = {flags[j].tl == flags[j].bl for j in range(len(params))}
        if len(kinds) != 1:
            raise UnsupportedLinkError("mixed strand flows in +-1 necklace")
        return _twist_value(m, kinds.pop(), horizontal=True)
    return None


def _pick_region(params) -> int:
    """Region to resolve next: leftmost even with |a| >= 2, else leftmost
    with |a| >= 2 (mirrors the resolution order of the closed forms)."""
    for i, a in enumerate(params):
        if a % 2 == 0 and abs(a) >= 2:
            return i
    for i, a in enumerate(params):
        if abs(a) >= 2:
            return i
    raise AssertionError("no resolvable region in a non-leaf link")


def _branches(params, flags, i) -> tuple[tuple[LaurentPoly, tuple | None], ...]:
    """The (multiplier, replacement-params-or-chain) pairs for resolving
    region i.  A None replacement denotes the fused torus-chain leaf."""
    a = params[i]
    sub = list(params)
    if flags[i].parallel:
        # parallel strands drawn as positive twists carry negative crossings
        # (and vice versa), fixing which twist recursion applies
        z, o = list(sub), list(sub)
        if a > 0:
            z[i], o[i] = 0, 1
            return (
                (_tbar(a - 1), tuple(z)),
                (_tbar(a), tuple(o)),
            )
        b = -a
        z[i], o[i] = 0, -1
        return (
            (_torus(b - 1), tuple(z)),
            (_torus(b), tuple(o)),
        )
    # antiparallel: crossing changes walk a to 0 (even) or sign(a) (odd),
    # each step splitting off one copy of the fused chain
    r = 0 if a % 2 == 0 else (1 if a > 0 else -1)
    k = (abs(a) - abs(r)) // 2
    sgn = 1 if a > 0 else -1
    z = list(sub)
    z[i] = r
    chain_mult = (sgn * k) * SKEIN_FACTOR
    return ((LaurentPoly.one(), tuple(z)), (chain_mult, None))


def _chain_leaf_link(params, skip: int) -> PretzelLink:
    rest = [params[j] for j in range(len(params)) if j != skip]
    return PretzelLink((sum(rest),)) if rest else PretzelLink((0,))


def alexander_skein(
    link: PretzelLink, *, memoize: bool = True
) -> LaurentPoly:
    """Delta of a supported pretzel knot, up to units (Conway-consistent
    representative; apply LaurentPoly.normalize for the paper's form)."""
    value, _ = _run(link, memoize=memoize, trace=None)
    return value


def alexander_with_trace(
    link: PretzelLink, *, memoize: bool = True
) -> tuple[LaurentPoly, SkeinTrace]:
    trace = SkeinTrace(root=link)
    value, leafmap = _run(link, memoize=memoize, trace=trace)
    trace.value = value
    trace.final = leafmap
    return value, trace


def _run(link, *, memoize, trace):
    if not is_knot(link):
        raise UnsupportedLinkError(f"{link} is not a knot")
    flags = orientation_flags(link)
    memo: dict | None = {} if memoize else None
    leafmaps: dict | None = None
    expanded: set | None = None
    if trace is not None:
        leafmaps = {}
        expanded = set()

    def rec(params) -> tuple[LaurentPoly, dict]:
        if memo is not None and params in memo:
            return memo[params]
        leaf = _leaf_value(params, flags)
        if leaf is not None:
            result = (leaf, {PretzelLink(params): LaurentPoly.one()})
            if trace is not None:
                trace.leaf_values[PretzelLink(params)] = leaf
        else:
            i = _pick_region(params)
            total = LaurentPoly.zero()
            combined: dict[PretzelLink, LaurentPoly] = {}
            step_branches = []
            for mult, sub in _branches(params, flags, i):
                if sub is None:
                    chain = _chain_leaf_link(params, i)
                    chain_val = _chain_value(params, flags, i)
                    total = total + mult * chain_val
                    step_branches.append((mult, chain))
                    if trace is not None:
                        combined[chain] = combined.get(
                            chain, LaurentPoly.zero()
                        ) + mult
                        trace.leaf_values[chain] = chain_val
                else:
                    sub_val, sub_leaves = rec(sub)
                    total = total + mult * sub_val
                    step_branches.append((mult, PretzelLink(sub)))
                    if trace is not None:
                        for lf, m in sub_leaves.items():
                            combined[lf] = combined.get(
                                lf, LaurentPoly.zero()
                            ) + mult * m
            if trace is not None and params not in expanded:
                expanded.add(params)
                trace.steps.append(
                    SkeinStep(PretzelLink(params), i, tuple(step_branches))
                )
            result = (total, combined)
        if memo is not None:
            memo[params] = result
        return result

    value, leafmap = rec(link.params)
    if trace is not None:
        leafmap = {k: v for k, v in leafmap.items() if not v.is_zero}
    return value, leafmap


def supports(link: PretzelLink) -> bool:
    """True when the engine can resolve this link without leaving its
    rewrite table."""
    try:
        alexander_skein(link)
        return True
    except UnsupportedLinkError:
        return False


# ----------------------------------------------------------------------
# closed forms from the twist-resolution identities

def claim_formula(tag) -> LaurentPoly:
    """Direct evaluation of the closed-form Delta for the (-1, 2n, p, q)
    family (all three sign cases of n), as an internal consistency oracle
    for the recursive engine.  Result is up to units.
    """
    from .pretzel import FamilyKind, FamilyTag  # local import avoids cycle

    if not isinstance(tag, FamilyTag) or tag.kind is not FamilyKind.MINUS1_2N:
        raise ValueError("closed forms exist only for the (-1,2n,p,q) family")
    n, p, q = tag.index, tag.p, tag.q
    if n == 0 or p is None or q is None:
        raise ValueError("invalid family parameters")
    w = SKEIN_FACTOR
    if n < 0:
        b = -2 * n
        return (
            _torus(b - 1) * _torus(p) * _torus(q)
            - _torus(b) * _torus(p - 1) * _torus(q)
            - _torus(b) * _torus(p) * _torus(q - 1)
        )
    if n == 1:
        # P(-1,2,p,q) = P(-2,p,q): one antiparallel crossing change
        return _torus(p) * _torus(q) + w * _torus(p + q)
    return (
        _torus(2 * n - 1) * _torus(p) * _torus(q)
        + _torus(2 * n) * _torus(p - 1) * _torus(q)
        + _torus(2 * n) * _torus(p) * _torus(q - 1)
        + w * _torus(2 * n) * _torus(p) * _torus(q)
    )


__all__ = [
    "UnsupportedLinkError",
    "SkeinStep",
    "SkeinTrace",
    "torus_link_alexander",
    "alexander_skein",
    "alexander_with_trace",
    "claim_formula",
    "supports",
]
