"""Weighted point configurations on expanded fibres and their stability.

A length-m subscheme is modelled by its support points: valuation triples
with multiplicities, placed on the dual complex of a fibre.  A configuration
is admissible when every point sits at a vertex, i.e. in the smooth interior
of a component.

Stability comes in three executable flavours:

* finite-automorphism stability: admissible, and on the normalized
  presentation every cut level is hit by some point (``is_lw_stable``);
* weak strict stability: for the given presentation, every torus level is
  occupied in the chart sense, so some linearization makes the configuration
  invariant-theoretically stable (``is_ws_stable``);
* its smoothly supported refinement (``is_sws_stable``).

Occupancy of a level with cut value v means some point has first coordinate
``a = v`` or second coordinate ``b = k - v``: exactly the points on which the
corresponding torus factor acts through a unit chart coordinate.  Degenerate
levels (``v = 0`` or ``v = k``) are covered by the same rule, which then
selects the ``a = 0`` and ``b = 0`` boundary sides.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .base import BaseTuple, NormalForm, canonical_tuple, normal_form
from .dual_complex import ExpandedFibre, Location, TropPosition, build_fibre, locate
from .errors import HeightMismatch, InvalidInput

__all__ = [
    "SupportPoint",
    "PointConfiguration",
    "StabilityReport",
    "place",
    "is_admissible",
    "occupied_level_values",
    "unoccupied_level_values",
    "stabilizer_rank",
    "is_lw_stable",
    "is_ws_stable",
    "is_sws_stable",
    "normalize_pair",
    "stability_report",
]


@dataclass(frozen=True)
class SupportPoint:
    """A support point: valuation triple, multiplicity, optional local data.

    ``scheme`` is a local monomial structure used only by the weight
    calculus; reduced points leave it as None.
    """

    valuations: tuple[int, int, int]
    multiplicity: int = 1
    scheme: object | None = None

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise InvalidInput(f"multiplicity must be >= 1, got {self.multiplicity}")
        if len(self.valuations) != 3 or min(self.valuations) < 0:
            raise InvalidInput(f"bad valuation triple {self.valuations}")

    @property
    def a(self) -> int:
        return self.valuations[0]

    @property
    def b(self) -> int:
        return self.valuations[1]


@dataclass(frozen=True)
class PointConfiguration:
    """Points placed on a fibre, remembering the presenting base tuple."""

    fibre: ExpandedFibre
    presentation: BaseTuple
    points: tuple[SupportPoint, ...]
    placements: tuple[Location, ...]

    @property
    def m(self) -> int:
        return sum(p.multiplicity for p in self.points)

    @property
    def height(self) -> int:
        return self.fibre.height

    def level_values(self) -> tuple[int, ...]:
        """Partial sums v_1..v_n of the presentation (one per torus factor)."""
        acc = 0
        out = []
        for g in self.presentation.exponents[:-1]:
            acc += g
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class StabilityReport:
    admissible: bool
    stabilizer_rank: int
    lw_stable: bool
    ws_stable: bool
    sws_stable: bool
    unoccupied_levels: tuple[int, ...]


def _as_points(raw: Iterable) -> tuple[SupportPoint, ...]:
    points = []
    for item in raw:
        if isinstance(item, SupportPoint):
            points.append(item)
        else:
            val, mult = item
            points.append(SupportPoint(tuple(val), mult))
    return tuple(points)


def place(fibre_or_presentation, raw_points: Iterable) -> PointConfiguration:
    """Locate every point on the fibre and freeze the configuration.

    Accepts an ExpandedFibre, a NormalForm, or a BaseTuple presentation;
    raw points are SupportPoints or ``(valuations, multiplicity)`` pairs.
    """
    if isinstance(fibre_or_presentation, BaseTuple):
        presentation = fibre_or_presentation
        fibre = build_fibre(normal_form(presentation))
    elif isinstance(fibre_or_presentation, NormalForm):
        presentation = canonical_tuple(fibre_or_presentation)
        fibre = build_fibre(fibre_or_presentation)
    elif isinstance(fibre_or_presentation, ExpandedFibre):
        fibre = fibre_or_presentation
        presentation = canonical_tuple(fibre.nf)
    else:
        raise InvalidInput(
            f"cannot place points on {type(fibre_or_presentation).__name__}"
        )
    points = _as_points(raw_points)
    for p in points:
        if sum(p.valuations) != fibre.height:
            raise HeightMismatch(
                f"point {p.valuations} does not live at height {fibre.height}"
            )
    placements = tuple(locate(fibre, TropPosition(*p.valuations)) for p in points)
    return PointConfiguration(fibre, presentation, points, placements)


def is_admissible(cfg: PointConfiguration) -> bool:
    """True when no point of the support lies on a double curve or worse."""
    return all(loc.is_vertex for loc in cfg.placements)


def _level_occupied(cfg: PointConfiguration, v: int) -> bool:
    k = cfg.height
    return any(p.a == v or p.b == k - v for p in cfg.points)


def occupied_level_values(cfg: PointConfiguration) -> tuple[int, ...]:
    """Distinct level values v_j of the presentation that are occupied."""
    return tuple(sorted({v for v in cfg.level_values() if _level_occupied(cfg, v)}))


def unoccupied_level_values(cfg: PointConfiguration) -> tuple[int, ...]:
    return tuple(sorted({v for v in cfg.level_values() if not _level_occupied(cfg, v)}))


def stabilizer_rank(cfg: PointConfiguration) -> int:
    """Dimension of the torus subgroup fixing the normalized configuration.

    One rank for each cut level that no support point touches: the
    corresponding torus factor then acts trivially on the whole support.
    """
    normalized = normalize_pair(cfg)
    k = normalized.height
    rank = 0
    for s in normalized.fibre.cuts:
        if not any(p.a == s or p.b == k - s for p in normalized.points):
            rank += 1
    return rank


def is_lw_stable(cfg: PointConfiguration) -> bool:
    """Admissible with finite automorphism group."""
    return is_admissible(cfg) and stabilizer_rank(cfg) == 0


def is_ws_stable(cfg: PointConfiguration) -> bool:
    """Every torus level of the presentation is occupied.

    This is the criterion for the existence of a stabilizing linearization;
    see the weight calculus module for the constructive counterpart.
    """
    return all(_level_occupied(cfg, v) for v in cfg.level_values())


def is_sws_stable(cfg: PointConfiguration) -> bool:
    """Smoothly supported and weakly strictly stable."""
    return is_admissible(cfg) and is_ws_stable(cfg)


def normalize_pair(cfg: PointConfiguration) -> PointConfiguration:
    """Replace the presentation by the zero-free one; points are unchanged."""
    canonical = canonical_tuple(cfg.fibre.nf)
    if canonical == cfg.presentation:
        return cfg
    return replace(cfg, presentation=canonical)


def stability_report(cfg: PointConfiguration) -> StabilityReport:
    return StabilityReport(
        admissible=is_admissible(cfg),
        stabilizer_rank=stabilizer_rank(cfg),
        lw_stable=is_lw_stable(cfg),
        ws_stable=is_ws_stable(cfg),
        sws_stable=is_sws_stable(cfg),
        unoccupied_levels=unoccupied_level_values(cfg),
    )
