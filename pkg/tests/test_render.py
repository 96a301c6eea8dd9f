"""Diagram output: all three formats, determinism, content sanity."""

import pytest

from degenlab import (
    InvalidInput,
    NormalForm,
    build_fibre,
    complex_counts,
    place,
    render_fibre,
)


@pytest.fixture
def fibre():
    return build_fibre(NormalForm(3, (1, 2)))


@pytest.mark.parametrize("fmt", ["svg", "dot", "tikz"])
def test_deterministic(fibre, fmt):
    assert render_fibre(fibre, None, fmt) == render_fibre(fibre, None, fmt)


def test_unknown_format(fibre):
    with pytest.raises(InvalidInput):
        render_fibre(fibre, None, "png")


def test_svg_marks_every_vertex_and_point(fibre):
    cfg = place(fibre, [((1, 1, 1), 2)])
    svg = render_fibre(fibre, cfg, "svg")
    v, e, _ = complex_counts(fibre)
    assert svg.count('r="6"') == v
    assert svg.count("<line") == e
    assert "m=2" in svg
    for label in ("Y1", "Y2", "Y3", "Δ1(1)", "Δ2(2)", "Δ1(1)=Δ2(2)", "Δ1(1)×Δ2(1)"):
        assert label in svg


def test_dot_lists_all_edges(fibre):
    dot = render_fibre(fibre, None, "dot")
    v, e, _ = complex_counts(fibre)
    assert dot.count(" -- ") == e
    assert all(f"v{i} [" in dot for i in range(v))


def test_tikz_brackets(fibre):
    tikz = render_fibre(fibre, None, "tikz")
    assert tikz.startswith("\\begin{tikzpicture}")
    assert tikz.rstrip().endswith("\\end{tikzpicture}")
    v, e, _ = complex_counts(fibre)
    assert tikz.count("\\draw[gray]") == e
    assert tikz.count("circle (2pt)") == v


def test_plain_triangle():
    svg = render_fibre(build_fibre(NormalForm(1, ())), None, "svg")
    assert svg.count('r="6"') == 3
    assert svg.count("<line") == 3
