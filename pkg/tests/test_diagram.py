import pytest

from khcob import catalog
from khcob.diagram import (
    DiagramError,
    PlanarDiagram,
    all_orientations,
    parse_pd,
    reverse_components,
    seifert_count,
    seifert_resolve,
)


def test_crossingless_loop_document():
    D = parse_pd({"free_loops": [{"id": 0, "ccw": True, "parent": None}]})
    assert len(D.crossings) == 0
    assert D.loop_ids() == [0]
    assert D.component_count() == 1
    assert D.writhe() == 0


def test_trefoil_parse_and_validate():
    D = catalog.left_trefoil()
    assert len(D.crossings) == 3
    assert len(D.arcs) == 6
    assert D.component_count() == 1
    assert D.writhe() == -3


def test_right_trefoil_writhe():
    assert catalog.right_trefoil().writhe() == 3


def test_figure_eight_writhe_zero():
    D = catalog.figure_eight()
    assert len(D.crossings) == 4
    assert D.writhe() == 0
    assert D.component_count() == 1


def test_hopf_link():
    D = catalog.hopf_positive()
    assert D.component_count() == 2
    assert D.writhe() == 2
    assert catalog.hopf_negative().writhe() == -2


def test_empty_diagram():
    D = PlanarDiagram.empty()
    assert D.component_count() == 0
    assert seifert_count(D) == 0


def test_arc_used_three_times_rejected():
    with pytest.raises(DiagramError):
        parse_pd({"crossings": [[1, 1, 1, 2], [2, 3, 3, 4]], "orientation": {}})


def test_inconsistent_orientation_rejected():
    # all arcs directed first-occurrence -> second will violate slot parity
    with pytest.raises(DiagramError):
        parse_pd(
            {
                "crossings": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
                "orientation": {str(a): "+" for a in range(1, 7)},
            }
        )


def test_seifert_single_loop_colors():
    a_side = seifert_resolve(PlanarDiagram.unknot(ccw=True))
    assert [c.color for c in a_side.circles] == ["a"]
    b_side = seifert_resolve(PlanarDiagram.unknot(ccw=False))
    assert [c.color for c in b_side.circles] == ["b"]


def test_seifert_nested_loops_colors():
    D = catalog.nested_loops(True, True)
    data = seifert_resolve(D)
    colors = {c.key: c.color for c in data.circles}
    assert colors[("loop", 0)] == "a"
    assert colors[("loop", 1)] == "b"
    inner = [c for c in data.circles if c.key == ("loop", 1)][0]
    assert inner.ancestors == (("loop", 0),)
    assert inner.depth == 1


def test_seifert_side_by_side_loops():
    D = catalog.unlink(2, ccw=True)
    data = seifert_resolve(D)
    assert [c.color for c in data.circles] == ["a", "a"]


def test_seifert_counts():
    assert seifert_count(catalog.left_trefoil()) == 2
    assert seifert_count(catalog.right_trefoil()) == 2
    assert seifert_count(catalog.hopf_positive()) == 2
    assert seifert_count(catalog.figure_eight()) == 3
    assert seifert_count(catalog.positive_kink_unknot()) == 2


def test_kink_unknot():
    D = catalog.positive_kink_unknot()
    assert D.writhe() == 1
    assert D.component_count() == 1
    data = seifert_resolve(D)
    colors = {c.key: c.color for c in data.circles}
    big = ("arcs", frozenset({0}))
    lobe = ("arcs", frozenset({1}))
    assert colors[big] == "a"  # ccw unknot sees black inside
    assert colors[lobe] == "b"  # nested kink circle


def test_orientation_reversal_flips_colors():
    for D in (catalog.left_trefoil(), catalog.hopf_positive(), catalog.figure_eight()):
        base = seifert_resolve(D)
        full = frozenset(range(D.component_count()))
        flipped = seifert_resolve(D, full)
        assert {c.key for c in base.circles} == {c.key for c in flipped.circles}
        base_colors = base.coloring()
        for key, color in seifert_resolve(D, full).coloring().items():
            assert color != base_colors[key]


def test_reversal_involution_and_writhe():
    D = catalog.left_trefoil()
    full = frozenset(range(D.component_count()))
    R = reverse_components(D, full)
    assert R.writhe() == D.writhe()  # reversing every component keeps signs
    assert reverse_components(R, full) == D


def test_hopf_partial_reversal_changes_writhe():
    D = catalog.hopf_positive()
    R = reverse_components(D, frozenset({0}))
    assert R.writhe() == -2


def test_component_bound():
    # |D| <= r(D) on the catalog corpus
    for D in (
        catalog.left_trefoil(),
        catalog.right_trefoil(),
        catalog.hopf_positive(),
        catalog.figure_eight(),
        catalog.unlink(3),
        catalog.positive_kink_unknot(),
    ):
        assert D.component_count() <= seifert_count(D)
        if D.crossings or D.free_loops:
            assert seifert_count(D) >= 1


def test_orientation_count():
    assert len(all_orientations(catalog.hopf_positive())) == 4
    assert len(all_orientations(catalog.left_trefoil())) == 2


def test_serialization_round_trip():
    for D in (
        catalog.left_trefoil(),
        catalog.hopf_positive(),
        catalog.figure_eight(),
        catalog.nested_loops(),
        catalog.positive_kink_unknot(),
    ):
        assert parse_pd(D.to_obj()) == D
