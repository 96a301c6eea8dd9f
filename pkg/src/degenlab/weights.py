"""Torus weight calculus for point configurations on expanded fibres.

Each torus factor j of a presentation acts on two exceptional charts: the
first-family chart at cut value ``v_j`` (ratio with valuation ``a - v_j``)
and the second-family chart at ``k - v_j`` (valuation ``b - (k - v_j)``).
A point sits on the ``(1:0)`` side of a chart when the ratio valuation is
negative, on the ``(0:1)`` side when it is positive, and on the component
itself when the ratio is a unit.

A one-parameter subgroup ``s = (s_1, ..., s_n)`` has a limit over the base
point exactly when the chain ``0 >= s_1 >= ... >= s_n >= 0`` holds at every
inequality whose basis direction is invertible.  Under the flow, on-component
points fall to the ``(0:1)`` fixpoint of the first-family chart when
``s_j > 0`` and to ``(1:0)`` when ``s_j < 0``; second-family charts move the
opposite way.

The invariant of a configuration against ``s`` splits as

    total(s) = bounded(s) + l * combinatorial(s),

where the combinatorial part sums the lift weights of the line bundle over
the limit positions (per unit of multiplicity: ``-a_j s_j`` at ``(1:0)`` and
``+b_j s_j`` at ``(0:1)`` for the first family, ``+c_j s_j`` and ``-d_j s_j``
for the second), while the bounded part comes from the local monomial
structure and satisfies ``|b_j| <= 2 m^2`` regardless of the lift.

Stability for a fixed lift and scale factor means a strictly positive
invariant for every admissible nonzero subgroup; by piecewise linearity it
suffices to test sign vectors, since every extreme ray of the admissible
chain cone intersected with a sign orthant has entries in {-1, 0, 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Mapping, NamedTuple, Sequence

from .base import VanishingPattern
from .configurations import PointConfiguration, SupportPoint
from .errors import CriterionViolated, DegenLabError, InvalidInput, InvalidLocalScheme, NoLimit

__all__ = [
    "Side",
    "Chart",
    "LevelLift",
    "Linearization",
    "LocalMonomialScheme",
    "admissible_1ps",
    "admissible_sign_vectors",
    "side_of",
    "flow_limit",
    "combinatorial_level_terms",
    "combinatorial_weight",
    "bounded_weight",
    "hm_invariant",
    "constructive_linearization",
    "is_git_stable",
    "exists_stabilizing_linearization",
    "default_scale",
]


class Side(Enum):
    ONE_ZERO = "1:0"
    ZERO_ONE = "0:1"
    ON_COMPONENT = "on"


class Chart(str, Enum):
    """The two families of exceptional charts."""

    DELTA1 = "delta1"
    DELTA2 = "delta2"


class LevelLift(NamedTuple):
    """Lift exponents (a, b, c, d) of one torus factor."""

    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class Linearization:
    """One lift per torus level; both chart degrees must be positive."""

    levels: tuple[LevelLift, ...]

    def __post_init__(self) -> None:
        for lift in self.levels:
            if min(lift) < 0:
                raise InvalidInput(f"lift exponents must be non-negative: {lift}")
            if lift.a + lift.b < 1 or lift.c + lift.d < 1:
                raise InvalidInput(f"each chart of {lift} needs total degree >= 1")

    def __len__(self) -> int:
        return len(self.levels)


Monomial = tuple[tuple[tuple[int, Chart], int], ...]


def _normalize_monomial(data: Mapping | Monomial) -> Monomial:
    items = data.items() if isinstance(data, Mapping) else data
    out = []
    for key, exp in items:
        level, chart = key
        chart = Chart(chart)
        if exp < 0:
            raise InvalidInput(f"monomial exponent must be >= 0, got {exp}")
        if exp > 0:
            out.append(((int(level), chart), int(exp)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class LocalMonomialScheme:
    """Monomial model of the local structure at a fat point.

    The coordinate ring of a length-r local scheme is spanned by r monomials
    in the chart coordinates through the point, one of which is constant and
    each of degree at most r.
    """

    monomials: tuple[Monomial, ...]

    @staticmethod
    def of(monomials: Sequence[Mapping | Monomial]) -> LocalMonomialScheme:
        return LocalMonomialScheme(tuple(_normalize_monomial(m) for m in monomials))

    @property
    def size(self) -> int:
        return len(self.monomials)

    def validate_for(self, point: SupportPoint) -> None:
        if self.size != point.multiplicity:
            raise InvalidLocalScheme(
                f"scheme has {self.size} monomials but the point has "
                f"multiplicity {point.multiplicity}"
            )
        if not any(len(m) == 0 for m in self.monomials):
            raise InvalidLocalScheme("the constant monomial is required")
        for m in self.monomials:
            if sum(e for _, e in m) > point.multiplicity:
                raise InvalidLocalScheme(
                    f"monomial degree exceeds the multiplicity: {m}"
                )


def admissible_1ps(pattern: VanishingPattern, s: Sequence[int]) -> bool:
    """Does the subgroup have a limit over a point with this vanishing set?

    The chain ``0 >= s_1 >= ... >= s_n >= 0`` is enforced inequality by
    inequality, each one active exactly when its basis direction is nonzero.
    """
    n = pattern.size - 1
    if len(s) != n:
        raise InvalidInput(f"expected {n} weights for size {pattern.size}, got {len(s)}")
    invertible = [i not in pattern.vanishing for i in range(1, pattern.size + 1)]
    chain = (0, *s, 0)
    # Inequality i says chain[i-1] >= chain[i] except the closing one, which
    # says s_n >= 0.
    for i in range(1, pattern.size + 1):
        if not invertible[i - 1]:
            continue
        if i == 1:
            if not 0 >= chain[1]:
                return False
        elif i == pattern.size:
            if not chain[i - 1] >= 0:
                return False
        else:
            if not chain[i - 1] >= chain[i]:
                return False
    return True


def admissible_sign_vectors(pattern: VanishingPattern) -> Iterator[tuple[int, ...]]:
    """All nonzero admissible vectors with entries in {-1, 0, 1}."""
    n = pattern.size - 1
    for s in product((-1, 0, 1), repeat=n):
        if any(s) and admissible_1ps(pattern, s):
            yield s


def side_of(point: SupportPoint, chart: Chart, value: int) -> Side:
    """Side of the point with respect to one chart at the given cut value."""
    coord = point.a if chart is Chart.DELTA1 else point.b
    if coord == value:
        return Side.ON_COMPONENT
    if chart is Chart.DELTA1:
        return Side.ZERO_ONE if coord > value else Side.ONE_ZERO
    return Side.ZERO_ONE if coord > value else Side.ONE_ZERO


def _resolve(side: Side, chart: Chart, s_j: int) -> Side:
    if side is not Side.ON_COMPONENT or s_j == 0:
        return side
    if chart is Chart.DELTA1:
        return Side.ZERO_ONE if s_j > 0 else Side.ONE_ZERO
    return Side.ONE_ZERO if s_j > 0 else Side.ZERO_ONE


def flow_limit(
    cfg: PointConfiguration, s: Sequence[int]
) -> list[list[tuple[Side, Side]]]:
    """Resolved (first-family, second-family) sides per point and level."""
    pattern = cfg.presentation.vanishing_pattern()
    if not admissible_1ps(pattern, s):
        raise NoLimit(f"subgroup {tuple(s)} has no limit over {cfg.presentation.exponents}")
    k = cfg.height
    values = cfg.level_values()
    out = []
    for p in cfg.points:
        row = []
        for j, v in enumerate(values):
            s1 = _resolve(side_of(p, Chart.DELTA1, v), Chart.DELTA1, s[j])
            s2 = _resolve(side_of(p, Chart.DELTA2, k - v), Chart.DELTA2, s[j])
            row.append((s1, s2))
        out.append(row)
    return out


def combinatorial_level_terms(
    cfg: PointConfiguration, s: Sequence[int], lin: Linearization
) -> list[int]:
    """Per-level summands of the combinatorial weight (the values c_j s_j)."""
    if len(lin) != len(cfg.level_values()):
        raise InvalidInput(
            f"linearization has {len(lin)} levels, presentation needs "
            f"{len(cfg.level_values())}"
        )
    flowed = flow_limit(cfg, s)
    terms = [0] * len(lin)
    for p, row in zip(cfg.points, flowed):
        for j, (side1, side2) in enumerate(row):
            lift = lin.levels[j]
            term = 0
            if side1 is Side.ONE_ZERO:
                term -= lift.a * s[j]
            elif side1 is Side.ZERO_ONE:
                term += lift.b * s[j]
            if side2 is Side.ONE_ZERO:
                term += lift.c * s[j]
            elif side2 is Side.ZERO_ONE:
                term -= lift.d * s[j]
            terms[j] += p.multiplicity * term
    return terms


def combinatorial_weight(
    cfg: PointConfiguration, s: Sequence[int], lin: Linearization
) -> int:
    """Lift-weight part of the invariant for the given subgroup."""
    return sum(combinatorial_level_terms(cfg, s, lin))


def bounded_weight(
    cfg: PointConfiguration, s: Sequence[int]
) -> tuple[int, tuple[int, ...]]:
    """Scheme-structure part of the invariant, with its level coefficients.

    Every point carrying a nontrivial local scheme must sit at a vertex, and
    its monomials may only use charts actually passing through the point.
    Returns ``(value, (b_1, ..., b_n))`` with ``value = sum b_j s_j``.
    """
    flowed = flow_limit(cfg, s)
    k = cfg.height
    values = cfg.level_values()
    coeffs = [0] * len(values)
    for idx, (p, row) in enumerate(zip(cfg.points, flowed)):
        scheme = p.scheme
        if scheme is None:
            continue
        if not isinstance(scheme, LocalMonomialScheme):
            raise InvalidLocalScheme(f"unsupported local scheme {scheme!r}")
        scheme.validate_for(p)
        if any(len(m) > 0 for m in scheme.monomials) and not cfg.placements[idx].is_vertex:
            raise InvalidLocalScheme(
                "a nontrivial local scheme must sit at a torus fixpoint"
            )
        for mono in scheme.monomials:
            for (level, chart), exp in mono:
                if not 1 <= level <= len(values):
                    raise InvalidLocalScheme(f"level {level} out of range")
                j = level - 1
                cut_value = values[j] if chart is Chart.DELTA1 else k - values[j]
                if side_of(p, chart, cut_value) is not Side.ON_COMPONENT:
                    raise InvalidLocalScheme(
                        f"monomial uses chart ({level}, {chart.value}) but the "
                        f"point {p.valuations} is not on that component"
                    )
                if s[j] == 0:
                    continue
                side = row[j][0 if chart is Chart.DELTA1 else 1]
                if chart is Chart.DELTA1:
                    coeffs[j] += exp if side is Side.ZERO_ONE else -exp
                else:
                    coeffs[j] += exp if side is Side.ONE_ZERO else -exp
    value = sum(b * sj for b, sj in zip(coeffs, s))
    return value, tuple(coeffs)


def hm_invariant(
    cfg: PointConfiguration, s: Sequence[int], lin: Linearization, l: int
) -> int:
    """Full invariant ``bounded + l * combinatorial`` at scale factor l."""
    if l < 1:
        raise InvalidInput(f"scale factor must be >= 1, got {l}")
    mu_b, _ = bounded_weight(cfg, s)
    mu_c = combinatorial_weight(cfg, s, lin)
    return mu_b + l * mu_c


def default_scale(m: int) -> int:
    """Smallest scale factor guaranteed to dominate the bounded weight."""
    return 2 * m * m + 1


def constructive_linearization(cfg: PointConfiguration) -> Linearization:
    """Lift exponents with per-level strictly positive combinatorial weight.

    For each level: if some point sits on the first-family component, weight
    that chart by ``(m(m - m'), m(m' + 1))`` where m' is the multiplicity
    strictly on its (1:0) side, and give the second chart the neutral pair
    (0, 1).  Otherwise a point must sit on the second-family component;
    mirror the construction with m'' the multiplicity on its (1:0) side.
    """
    m = cfg.m
    k = cfg.height
    lifts = []
    for v in cfg.level_values():
        on_first = sum(p.multiplicity for p in cfg.points if p.a == v)
        if on_first > 0:
            m1 = sum(p.multiplicity for p in cfg.points if p.a < v)
            lifts.append(LevelLift(m * (m - m1), m * (m1 + 1), 0, 1))
            continue
        w = k - v
        on_second = sum(p.multiplicity for p in cfg.points if p.b == w)
        if on_second == 0:
            raise CriterionViolated(
                f"no point of the support occupies the level at cut value {v}"
            )
        m2 = sum(p.multiplicity for p in cfg.points if p.b < w)
        lifts.append(LevelLift(0, 1, m * (m - m2), m * (m2 + 1)))
    return Linearization(tuple(lifts))


def is_git_stable(cfg: PointConfiguration, lin: Linearization, l: int) -> bool:
    """Strict positivity of the invariant on every admissible sign vector.

    Exact for all integer subgroups: the invariant is linear on each sign
    orthant of the admissible cone, whose extreme rays have entries in
    {-1, 0, 1}.
    """
    pattern = cfg.presentation.vanishing_pattern()
    for s in admissible_sign_vectors(pattern):
        if hm_invariant(cfg, s, lin, l) <= 0:
            return False
    return True


def exists_stabilizing_linearization(
    cfg: PointConfiguration,
) -> Linearization | None:
    """The constructive lift when every level is occupied, else None.

    The returned lift is re-verified through the stability test at the
    dominating scale factor.
    """
    try:
        lin = constructive_linearization(cfg)
    except CriterionViolated:
        return None
    if not is_git_stable(cfg, lin, default_scale(cfg.m)):
        raise DegenLabError(
            "internal error: constructive linearization failed verification"
        )
    return lin
