import pytest

from snarkforge.errors import DomainError
from snarkforge.graph6 import encode_graph6
from snarkforge.coloring import count_colorings
from snarkforge.recipe import (
    evaluate_text,
    format_recipe,
    parse_recipe,
)


def test_leaf_recipes(P, J5):
    assert evaluate_text("(petersen)") == P
    assert evaluate_text("(flower 5)") == J5


def test_graph6_leaf(P):
    s = encode_graph6(P)
    assert evaluate_text(f"(graph6 {s})") == P


def test_join_recipes_build(P):
    g = evaluate_text("(pentagonjoin (petersen) p=0 (petersen) p=0)")
    assert (g.n, g.m) == (10, 15)
    g = evaluate_text("(superpose52 (petersen) e=0 (petersen) u=0 v=6)")
    assert (g.n, g.m) == (22, 33)
    g = evaluate_text("(dotproduct (petersen) e1=0 e2=7 (petersen) x=0 y=1)")
    assert (g.n, g.m) == (18, 27)
    assert count_colorings(g) == 0


def test_spec_style_example():
    g = evaluate_text("(superpose52 (petersen) e=7 (petersen) u=2 v=9)")
    assert g.n == 22


def test_nested_chain():
    text = "(superpose52 (petersen) e=0 (superpose52 (petersen) e=0 (petersen) u=0 v=6) u=17 v=20)"
    g = evaluate_text(text)
    assert g.n == 34


def test_determinism(P):
    text = "(pentagonjoin (flower 5) p=0 (petersen) p=3 rot=2)"
    assert evaluate_text(text) == evaluate_text(text)
    assert encode_graph6(evaluate_text(text)) == encode_graph6(evaluate_text(text))


def test_format_round_trip():
    cases = [
        "(petersen)",
        "(flower 7)",
        "(pentagonjoin (petersen) p=0 (flower 5) p=0 rot=3)",
        "(superpose52 (petersen) e=0 (petersen) u=0 v=6)",
        "(dotproduct (petersen) e1=0 e2=7 (petersen) x=0 y=1 wiring=crossed)",
        "(superpose52 (petersen) e=0 (superpose52 (petersen) e=0 (petersen) u=0 v=6) u=17 v=20)",
    ]
    for text in cases:
        canonical = format_recipe(parse_recipe(text))
        assert format_recipe(parse_recipe(canonical)) == canonical
        assert evaluate_text(canonical) == evaluate_text(text)


def test_formatting_normalizes_spacing():
    messy = "( superpose52   (petersen)  e=0 (petersen) u=0   v=6 )"
    assert (
        format_recipe(parse_recipe(messy))
        == "(superpose52 (petersen) e=0 (petersen) u=0 v=6)"
    )


@pytest.mark.parametrize(
    "bad",
    [
        "petersen",
        "(petersen",
        "(petersen) extra",
        "(frobnicate)",
        "(flower)",
        "(flower 5 7)",
        "(pentagonjoin (petersen) p=0 (petersen))",
        "(superpose52 (petersen) (petersen) u=0 v=6)",
        "(superpose52 (petersen) e=0 (petersen) u=0 v=5)",  # adjacent pair
        "(pentagonjoin (petersen) p=99 (petersen) p=0)",
    ],
)
def test_bad_recipes_rejected(bad):
    with pytest.raises(DomainError):
        evaluate_text(bad)
