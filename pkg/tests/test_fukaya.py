import re

import pytest

from helpers import P
from richardson.fukaya import (
    InadmissibleError,
    build_matched,
    cohomological_choices,
    decorate,
    deodhar_decorate,
    gauss_decorate,
    node_counts,
    parse_text,
    render_svg,
    render_text,
)
from richardson.shapes import Shape, comparable_pairs
from richardson.strata import deodhar_strata, gauss_strata

GR23 = Shape(3, (1, 2), (2, 3))
WORKED = Shape(7, (1, 2, 4), (2, 5, 7))


def test_build_matched_examples():
    md = build_matched(GR23, P(2, 1))
    assert md.marks == {(2, 2), (1, 3)} and md.strong
    md = build_matched(GR23, P(1, 2))
    assert md.marks == {(1, 2), (2, 3)} and not md.strong
    diag = build_matched(Shape(5, (2, 4), (2, 4)), P(1, 2))
    assert len(diag.marks) == 2 and diag.strong


def test_build_matched_rejects_monotonicity():
    with pytest.raises(InadmissibleError, match=r"\(<=\)"):
        build_matched(Shape(4, (1, 3), (2, 4)), P(2, 1))


def test_gauss_examples():
    dd = gauss_decorate(build_matched(GR23, P(2, 1)))
    assert dd.gm_nodes == {(1, 3)} and dd.a1_nodes == set()
    counts = {w: node_counts(decorate(WORKED, w, "gauss")) for w in [P(1, 2, 3), P(2, 1, 3), P(1, 3, 2), P(2, 3, 1)]}
    assert counts == {P(1, 2, 3): (3, 4), P(2, 1, 3): (2, 4), P(1, 3, 2): (3, 3), P(2, 3, 1): (2, 3)}
    assert node_counts(decorate(Shape(5, (2, 4), (2, 4)), P(1, 2), "gauss")) == (0, 0)


def test_deodhar_examples():
    dd = deodhar_decorate(build_matched(GR23, P(2, 1)))
    assert dd.gm_nodes == {(1, 3)} and dd.a1_nodes == {(2, 3)}
    dd = decorate(WORKED, P(2, 1, 3), "deodhar")
    assert dd.gm_nodes == {(1, 5), (3, 7)}
    assert dd.a1_nodes == {(1, 3), (1, 4), (2, 5), (3, 6)}
    assert node_counts(decorate(WORKED, P(2, 3, 1), "deodhar")) == (2, 5)


def test_deodhar_rejects_weak_matching():
    with pytest.raises(InadmissibleError, match=r"\(=\)"):
        deodhar_decorate(build_matched(GR23, P(1, 2)))


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (6, 2), (7, 2), (5, 3), (6, 3), (7, 3)])
def test_node_counts_match_formulas(n, d):
    for sh in comparable_pairs(n, d):
        for s in gauss_strata(sh):
            dd = decorate(sh, s.w, "gauss")
            assert node_counts(dd) == (s.alpha, s.beta)
            assert dd.gm_nodes <= dd.base.marks and not dd.gm_nodes & dd.a1_nodes
        for s in deodhar_strata(sh):
            dd = decorate(sh, s.w, "deodhar")
            assert node_counts(dd) == (s.alpha, s.beta)
            assert dd.gm_nodes <= dd.base.marks and not dd.gm_nodes & dd.a1_nodes


def _cell(text, row, col):
    return text.splitlines()[1 + row][2 + col]


def test_render_text_examples():
    text = render_text(decorate(GR23, P(2, 1), "deodhar"))
    assert _cell(text, 1, 3) == "O" and _cell(text, 2, 3) == "x"
    diag = render_text(decorate(Shape(5, (2, 4), (2, 4)), P(1, 2), "deodhar"))
    grid = "\n".join(diag.splitlines()[2:])
    assert grid.count("*") == 2 and "O" not in grid and "x" not in grid
    gauss = render_text(decorate(GR23, P(1, 2), "gauss"))
    assert "\n".join(gauss.splitlines()[2:]).count("O") == 2


@pytest.mark.parametrize("n,d", [(5, 2), (6, 3)])
def test_render_text_roundtrip(n, d):
    for sh in comparable_pairs(n, d):
        for s in deodhar_strata(sh):
            dd = decorate(sh, s.w, "deodhar")
            text = render_text(dd)
            back, circled = parse_text(text)
            assert back == dd and circled is None
            assert render_text(back) == text
            for choice in cohomological_choices(dd):
                ctext = render_text(dd, choice)
                back, circ = parse_text(ctext)
                assert back == dd and circ == choice
                assert render_text(back, circ) == ctext


def test_cohomological_choices_order():
    dd = decorate(WORKED, P(2, 1, 3), "deodhar")
    choices = cohomological_choices(dd)
    assert len(choices) == 4
    assert choices[0] == frozenset()


def _svg_counts(path):
    text = path.read_text()
    return len(re.findall(r"<circle ", text)), len(re.findall(r'<line class="a1"', text))


def test_render_svg(tmp_path):
    p = render_svg(decorate(GR23, P(2, 1), "deodhar"), tmp_path / "a.svg")
    assert _svg_counts(p) == (1, 2)
    p = render_svg(decorate(WORKED, P(2, 1, 3), "deodhar"), tmp_path / "b.svg")
    assert _svg_counts(p) == (2, 8)
    p = render_svg(decorate(Shape(3, (), ()), P(), "deodhar"), tmp_path / "c.svg")
    assert _svg_counts(p) == (0, 0)
    assert p.read_text().startswith("<?xml")
    import xml.dom.minidom

    xml.dom.minidom.parse(str(p))
