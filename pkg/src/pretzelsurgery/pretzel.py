"""Pretzel links P(a_1, ..., a_n) and Montesinos tangle descriptions.

The diagram convention is fixed once and shared with the Wirtinger oracle:
vertical twist regions stand side by side, region i joined to region i+1
(cyclically) by parallel arcs at top and bottom.  Region i carries |a_i|
crossings; an odd a_i swaps its two strands, an even a_i preserves them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class PretzelError(ValueError):
    pass


@dataclass(frozen=True)
class PretzelLink:
    """An ordered tuple of signed twist-region parameters."""

    params: tuple[int, ...]

    def __init__(self, params):
        params = tuple(int(a) for a in params)
        if len(params) < 1:
            raise PretzelError("need at least one twist region")
        object.__setattr__(self, "params", params)

    def __str__(self) -> str:
        return "P(" + ",".join(str(a) for a in self.params) + ")"

    @property
    def n_regions(self) -> int:
        return len(self.params)

    @property
    def crossing_count(self) -> int:
        return sum(abs(a) for a in self.params)


def parse_pretzel(text: str) -> PretzelLink:
    """Parse a comma-separated parameter list such as "-1,-2,3,3"."""
    text = text.strip()
    if text.startswith("P(") and text.endswith(")"):
        text = text[2:-1]
    try:
        params = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise PretzelError(f"bad pretzel parameter list: {text!r}") from exc
    return PretzelLink(params)


# ----------------------------------------------------------------------
# strand tracing.  Each region has four ports: TL, TR, BL, BR.  Ports are
# encoded (region, port).  Internal strands pair TL-BL / TR-BR for even
# regions and TL-BR / TR-BL for odd ones; closure arcs pair TR_i with
# TL_{i+1} and BR_i with BL_{i+1} cyclically.

TL, TR, BL, BR = 0, 1, 2, 3

_EVEN_PAIR = {TL: BL, BL: TL, TR: BR, BR: TR}
_ODD_PAIR = {TL: BR, BR: TL, TR: BL, BL: TR}


def _internal_partner(a: int, port: int) -> int:
    return _EVEN_PAIR[port] if a % 2 == 0 else _ODD_PAIR[port]


def _arc_partner(n: int, region: int, port: int) -> tuple[int, int]:
    if n == 1:
        # a lone region closes with side arcs, giving the (2, a)-torus link
        return (0, {TL: BL, BL: TL, TR: BR, BR: TR}[port])
    if port == TR:
        return ((region + 1) % n, TL)
    if port == TL:
        return ((region - 1) % n, TR)
    if port == BR:
        return ((region + 1) % n, BL)
    return ((region - 1) % n, BR)


def _trace_cycles(link: PretzelLink) -> list[list[tuple[int, int]]]:
    n = link.n_regions
    seen: set[tuple[int, int]] = set()
    cycles = []
    for start_region in range(n):
        for start_port in (TL, TR, BL, BR):
            start = (start_region, start_port)
            if start in seen:
                continue
            cycle = []
            pos = start
            while True:
                cycle.append(pos)
                seen.add(pos)
                region, port = pos
                out = (region, _internal_partner(link.params[region], port))
                cycle.append(out)
                seen.add(out)
                pos = _arc_partner(n, *out)
                if pos == start:
                    break
            cycles.append(cycle)
    return cycles


def component_count(link: PretzelLink) -> int:
    """Number of link components, by tracing strand permutations."""
    return len(_trace_cycles(link))


def is_knot(link: PretzelLink) -> bool:
    return component_count(link) == 1


def canonicalize(link: PretzelLink) -> PretzelLink:
    """Lexicographically least cyclic rotation of params or reversed params.

    A cache key only: never asserted to be a complete isotopy invariant.
    """
    p = link.params
    n = len(p)
    candidates = []
    for seq in (p, p[::-1]):
        for r in range(n):
            candidates.append(seq[r:] + seq[:r])
    return PretzelLink(min(candidates))


# ----------------------------------------------------------------------
# orientation flags.  For a traced link, each port is either an entry (flow
# into the region) or an exit.  A region is "parallel" when both of its
# strands run the same vertical direction, which is exactly when its two
# top ports have the same flow.

@dataclass(frozen=True)
class RegionFlags:
    """Per-region port flow: True = flow enters the region at that port."""

    tl: bool
    tr: bool
    bl: bool
    br: bool

    @property
    def parallel(self) -> bool:
        return self.tl == self.tr


def orientation_flags(link: PretzelLink) -> tuple[RegionFlags, ...]:
    """Trace each component once and record per-port flow directions.

    Component orientations are chosen by trace order; for a knot the result
    is canonical up to reversing every flag at once.
    """
    n = link.n_regions
    inward: dict[tuple[int, int], bool] = {}
    for cycle in _trace_cycles(link):
        # cycle alternates entry-port, exit-port, entry-port, ...
        for idx, pos in enumerate(cycle):
            inward[pos] = idx % 2 == 0
    flags = []
    for i in range(n):
        flags.append(
            RegionFlags(
                tl=inward[(i, TL)],
                tr=inward[(i, TR)],
                bl=inward[(i, BL)],
                br=inward[(i, BR)],
            )
        )
    return tuple(flags)


# ----------------------------------------------------------------------
# family classification

class FamilyKind(Enum):
    MINUS_2L = "MINUS_2L"
    MINUS1_2N = "MINUS1_2N"
    MINUS1_MINUS1_2M = "MINUS1_MINUS1_2M"
    OTHER = "OTHER"


@dataclass(frozen=True)
class FamilyTag:
    """Membership in one of the candidate pretzel families.

    ``index`` holds l for MINUS_2L (l > 1), the nonzero n for MINUS1_2N, or
    m for MINUS1_MINUS1_2M (m > 1); it is None for OTHER.
    """

    kind: FamilyKind
    index: int | None = None
    p: int | None = None
    q: int | None = None

    def __str__(self) -> str:
        if self.kind is FamilyKind.OTHER:
            return "OTHER"
        letter = {
            FamilyKind.MINUS_2L: "l",
            FamilyKind.MINUS1_2N: "n",
            FamilyKind.MINUS1_MINUS1_2M: "m",
        }[self.kind]
        return f"{self.kind.value}({letter}={self.index},p={self.p},q={self.q})"


def _odd_pq(values) -> tuple[int, int] | None:
    vals = sorted(values)
    if len(vals) == 2 and all(v % 2 == 1 and v >= 3 for v in vals):
        return vals[0], vals[1]
    return None


def family_membership(link: PretzelLink) -> FamilyTag:
    """Classify a pretzel knot into the candidate surgery families.

    Parameter lists are treated as unordered: the families are closed under
    the rotations/reversals of the pretzel presentation, and reordering the
    tangles changes none of the invariants this artifact consumes.  The
    stated equivalences P(-2,p,q) = P(-1,2,p,q) and P(-1,-1,2,p,q) =
    P(-1,-2,p,q) are folded in, so l and m are always > 1 in the returned
    tags.
    """
    if not is_knot(link):
        raise PretzelError(f"{link} is not a knot")
    params = sorted(link.params)

    if len(params) == 3:
        evens = [a for a in params if a % 2 == 0]
        odds = [a for a in params if a % 2 == 1]
        pq = _odd_pq(odds)
        if len(evens) == 1 and evens[0] < 0 and pq is not None:
            l = -evens[0] // 2
            if -evens[0] % 2 == 0 and l >= 1:
                p, q = pq
                if l == 1:
                    return FamilyTag(FamilyKind.MINUS1_2N, 1, p, q)
                return FamilyTag(FamilyKind.MINUS_2L, l, p, q)

    if len(params) == 4 and params.count(-1) >= 1:
        rest = list(params)
        rest.remove(-1)
        evens = [a for a in rest if a % 2 == 0 and a != 0]
        # exactly one nonzero even plus two odd p,q >= 3
        if len(evens) == 1:
            others = list(rest)
            others.remove(evens[0])
            pq = _odd_pq(others)
            if pq is not None:
                n = evens[0] // 2
                p, q = pq
                return FamilyTag(FamilyKind.MINUS1_2N, n, p, q)

    if len(params) == 5 and params.count(-1) >= 2:
        rest = list(params)
        rest.remove(-1)
        rest.remove(-1)
        evens = [a for a in rest if a % 2 == 0 and a > 0]
        if len(evens) == 1:
            others = list(rest)
            others.remove(evens[0])
            pq = _odd_pq(others)
            if pq is not None:
                m = evens[0] // 2
                p, q = pq
                if m == 1:
                    return FamilyTag(FamilyKind.MINUS1_2N, -1, p, q)
                return FamilyTag(FamilyKind.MINUS1_MINUS1_2M, m, p, q)

    return FamilyTag(FamilyKind.OTHER)


def family_link(tag: FamilyTag) -> PretzelLink:
    """The standard parameter list for a family tag."""
    if tag.kind is FamilyKind.MINUS_2L:
        return PretzelLink((-2 * tag.index, tag.p, tag.q))
    if tag.kind is FamilyKind.MINUS1_2N:
        return PretzelLink((-1, 2 * tag.index, tag.p, tag.q))
    if tag.kind is FamilyKind.MINUS1_MINUS1_2M:
        return PretzelLink((-1, -1, 2 * tag.index, tag.p, tag.q))
    raise PretzelError("OTHER has no canonical parameter list")


# ----------------------------------------------------------------------
# Montesinos descriptions

@dataclass(frozen=True)
class MontesinosDescription:
    """An ordered list of reduced rational tangles beta_i/alpha_i."""

    tangles: tuple[Fraction, ...]

    def __init__(self, tangles):
        fr = tuple(Fraction(t) for t in tangles)
        if not fr:
            raise PretzelError("need at least one tangle")
        object.__setattr__(self, "tangles", fr)

    def __str__(self) -> str:
        return ";".join(f"{t.numerator}/{t.denominator}" for t in self.tangles)

    def as_pretzel(self) -> PretzelLink | None:
        """The pretzel form when every tangle is literally 1/a, else None."""
        params = []
        for t in self.tangles:
            if t.numerator in (1, -1) and t.denominator >= 1:
                params.append(t.numerator * t.denominator)
            else:
                return None
        return PretzelLink(params)


def parse_montesinos(text: str) -> MontesinosDescription:
    """Parse a semicolon-separated fraction list such as "1/3;-1/2;2/5"."""
    tangles = []
    for tok in text.strip().split(";"):
        tok = tok.strip()
        try:
            if "/" in tok:
                num, den = tok.split("/")
                tangles.append(Fraction(int(num), int(den)))
            else:
                tangles.append(Fraction(int(tok)))
        except (ValueError, ZeroDivisionError) as exc:
            raise PretzelError(f"bad tangle fraction: {tok!r}") from exc
    return MontesinosDescription(tangles)


def montesinos_component_count(desc: MontesinosDescription) -> int:
    """Component count of a Montesinos diagram via tangle parity classes.

    A tangle beta/alpha pairs its ports like a 0-tangle (alpha even), a
    single crossing (alpha, beta both odd), or an infinity tangle (beta
    even), which is all the strand tracing needs.
    """
    n = len(desc.tangles)
    pair_maps = []
    for t in desc.tangles:
        beta, alpha = t.numerator, t.denominator
        if alpha % 2 == 0:
            pair_maps.append(_EVEN_PAIR)
        elif beta % 2 == 1:
            pair_maps.append(_ODD_PAIR)
        else:
            pair_maps.append({TL: TR, TR: TL, BL: BR, BR: BL})
    seen: set[tuple[int, int]] = set()
    count = 0
    for start_region in range(n):
        for start_port in (TL, TR, BL, BR):
            start = (start_region, start_port)
            if start in seen:
                continue
            count += 1
            pos = start
            while True:
                seen.add(pos)
                region, port = pos
                out = (region, pair_maps[region][port])
                seen.add(out)
                pos = _arc_partner(n, *out)
                if pos == start:
                    break
    return count
