"""Placement and the three stability notions."""

import pytest

from degenlab import (
    HeightMismatch,
    NormalForm,
    VertexKind,
    is_admissible,
    is_lw_stable,
    is_sws_stable,
    is_ws_stable,
    make_base_tuple,
    normalize_pair,
    place,
    stability_report,
    stabilizer_rank,
    unoccupied_level_values,
)


def vertex_kind(cfg, i):
    loc = cfg.placements[i]
    assert loc.is_vertex
    return cfg.fibre.dual_complex.vertices[loc.index].kind


def test_place_on_normal_form():
    cfg = place(NormalForm(3, (1, 2)), [((1, 2, 0), 1), ((2, 0, 1), 1)])
    assert cfg.m == 2
    assert vertex_kind(cfg, 0) is VertexKind.MIXED
    assert vertex_kind(cfg, 1) is VertexKind.PURE_DELTA1


def test_place_multiplicity_and_edges():
    cfg = place(NormalForm(1, ()), [((0, 0, 1), 5)])
    assert cfg.m == 5
    assert vertex_kind(cfg, 0) is VertexKind.CORNER_Y3

    cfg = place(NormalForm(2, ()), [((1, 0, 1), 1)])
    assert cfg.m == 1
    assert cfg.placements[0].stratum == "edge"


def test_place_rejects_wrong_height():
    with pytest.raises(HeightMismatch):
        place(NormalForm(3, ()), [((1, 1, 0), 1)])


def test_admissibility():
    ok = place(NormalForm(3, (1, 2)), [((1, 2, 0), 1), ((2, 0, 1), 1)])
    assert is_admissible(ok)
    bad = place(NormalForm(2, ()), [((1, 0, 1), 1)])
    assert not is_admissible(bad)
    empty = place(NormalForm(2, (1,)), [])
    assert is_admissible(empty)


def test_stabilizer_rank():
    cfg = place(NormalForm(3, (1, 2)), [((1, 2, 0), 1), ((2, 0, 1), 1)])
    assert stabilizer_rank(cfg) == 0
    cfg = place(NormalForm(2, (1,)), [((0, 0, 2), 1)])
    assert stabilizer_rank(cfg) == 1
    cfg = place(NormalForm(1, ()), [((1, 0, 0), 1)])
    assert stabilizer_rank(cfg) == 0


def test_lw_stability():
    assert is_lw_stable(place(NormalForm(3, (1, 2)), [((1, 2, 0), 1), ((2, 0, 1), 1)]))
    assert not is_lw_stable(place(NormalForm(2, (1,)), [((0, 0, 2), 1)]))
    # presentation with a trailing unit direction, no expanded levels
    assert is_lw_stable(place(make_base_tuple([2, 0]), [((0, 2, 0), 1)]))


class TestWeakStrictStability:
    def test_full_presentation(self):
        cfg = place(make_base_tuple([1, 1, 1, 0]), [((1, 2, 0), 1), ((2, 0, 1), 1)])
        assert is_ws_stable(cfg)

    def test_trailing_zero_needs_b_zero_point(self):
        cfg = place(make_base_tuple([2, 0]), [((0, 2, 0), 1)])
        assert not is_ws_stable(cfg)
        assert unoccupied_level_values(cfg) == (2,)

    def test_leading_zero_needs_a_zero_point(self):
        cfg = place(make_base_tuple([0, 2]), [((0, 2, 0), 1)])
        assert is_ws_stable(cfg)

    def test_sws_needs_admissibility(self):
        cfg = place(make_base_tuple([1, 1, 1, 0]), [((1, 2, 0), 1), ((2, 0, 1), 1)])
        assert is_sws_stable(cfg)
        # both points on one mixed vertex leaves cut level 2 empty
        cfg = place(NormalForm(3, (1, 2)), [((1, 2, 0), 2)])
        assert is_admissible(cfg) and not is_sws_stable(cfg)
        cfg = place(NormalForm(2, ()), [((1, 0, 1), 1)])
        assert not is_sws_stable(cfg)


def test_normalize_pair():
    cfg = place(make_base_tuple([2, 0]), [((0, 2, 0), 1)])
    norm = normalize_pair(cfg)
    assert norm.presentation.exponents == (2,)
    assert norm.points == cfg.points
    assert norm.placements == cfg.placements
    assert normalize_pair(norm) == norm

    cfg = place(make_base_tuple([1, 0, 1]), [((1, 0, 1), 1)])
    norm = normalize_pair(cfg)
    assert norm.presentation.exponents == (1, 1)
    kind = norm.fibre.dual_complex.vertices[norm.placements[0].index].kind
    assert kind is VertexKind.PURE_DELTA1


def test_normalize_preserves_length():
    cfg = place(make_base_tuple([1, 0, 1]), [((1, 0, 1), 2), ((0, 2, 0), 3)])
    assert normalize_pair(cfg).m == cfg.m == 5


def test_mixed_vertex_occupies_both_levels():
    # one point at the mixed vertex covers the level from both sides
    cfg = place(NormalForm(2, (1,)), [((1, 1, 0), 1)])
    assert is_ws_stable(cfg) and is_lw_stable(cfg)


def test_report_shape():
    report = stability_report(
        place(make_base_tuple([2, 0]), [((0, 2, 0), 1)])
    )
    assert report.admissible
    assert report.stabilizer_rank == 0
    assert report.lw_stable
    assert not report.ws_stable
    assert not report.sws_stable
    assert report.unoccupied_levels == (2,)


def test_ws_matches_rank_on_normalized_fibres():
    # on zero-free presentations the two notions coincide, including for
    # non-admissible supports
    import itertools

    for k, cuts in [(2, (1,)), (3, (1,)), (3, (1, 2)), (4, (2,))]:
        nf = NormalForm(k, cuts)
        positions = [
            (a, b, k - a - b) for a in range(k + 1) for b in range(k + 1 - a)
        ]
        for combo in itertools.combinations_with_replacement(positions, 2):
            points = [(pos, 1) for pos in combo]
            cfg = place(nf, points)
            assert is_ws_stable(cfg) == (stabilizer_rank(cfg) == 0)
