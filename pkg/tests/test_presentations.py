"""Presentation text format, diagrams, and the builtin families."""

import pytest

from nquandles.presentations import (
    Diagram,
    DiagramError,
    ParseError,
    Presentation,
    PresentationError,
    PrimaryRelation,
    UniversalRelation,
    augment_n,
    builtin_family,
    closed_braid_diagram,
    parse_diagram,
    parse_presentation,
    parse_word,
    print_diagram,
    print_presentation,
    secondary_relations,
    wirtinger,
)

FAMILIES = ["T24", "T24C", "T26", "T28", "T210", "T33", "T34", "T35",
            "trefoil", "hopf"]


# --- words and text round trips -------------------------------------------

def test_parse_word():
    names = ("a", "b")
    assert parse_word("b a b", names) == ((1, 1), (0, 1), (1, 1))
    assert parse_word("a'", names) == ((0, -1),)
    assert parse_word("", names) == ()
    assert parse_word("a a'", names) == ()  # parsed words come back reduced
    with pytest.raises(PresentationError):
        parse_word("z", names)


@pytest.mark.parametrize("family", FAMILIES)
def test_print_parse_round_trip(family):
    p = builtin_family(family)
    assert parse_presentation(print_presentation(p)) == p


@pytest.mark.parametrize("family,k", [("T2k", 5), ("Lk", 3), ("Lk", -4),
                                      ("Mk", 0), ("Mk", -2)])
def test_print_parse_round_trip_parameterized(family, k):
    p = builtin_family(family, k=k)
    assert parse_presentation(print_presentation(p)) == p


def test_parse_presentation_smallest():
    p = parse_presentation("gens a\ncomp a:1\nN 4\n")
    assert p.generator_names == ("a",)
    assert p.component_of == (1,)
    assert p.n_values == (4,)
    assert p.relations == ()


def test_parse_presentation_statements():
    text = """
    # torus link plus nothing
    gens a b ; comp a:1 b:2
    N 3 4
    rel a^[b a b]=a
    rel b^[a b a]=b
    """
    p = parse_presentation(text)
    assert p.generator_names == ("a", "b")
    assert p.n_values == (3, 4)
    assert p.relations == (
        PrimaryRelation(0, ((1, 1), (0, 1), (1, 1)), 0),
        PrimaryRelation(1, ((0, 1), (1, 1), (0, 1)), 1),
    )


def test_comp_defaults_to_one():
    p = parse_presentation("gens a b\nN 2\n")
    assert p.component_of == (1, 1)


# --- parse errors carry positions ------------------------------------------

def test_parse_error_position_bad_relation():
    with pytest.raises(ParseError) as err:
        parse_presentation("gens a\ncomp a:1\nrel a^b=a\n")
    assert err.value.line == 3


def test_parse_error_unknown_generator_in_comp():
    with pytest.raises(ParseError) as err:
        parse_presentation("gens a\ncomp q:1\n")
    assert err.value.line == 2


def test_parse_error_unknown_statement():
    with pytest.raises(ParseError) as err:
        parse_presentation("gens a\nfrob a\n")
    assert err.value.line == 2


def test_parse_error_message_mentions_position():
    with pytest.raises(ParseError, match=r"line \d+"):
        parse_presentation("rel a^[b]=a\n")


# --- structural validation --------------------------------------------------

def test_duplicate_generators_rejected():
    with pytest.raises((ParseError, PresentationError)):
        parse_presentation("gens a a\n")


def test_component_numbering_must_be_contiguous():
    with pytest.raises(PresentationError):
        Presentation(("a", "b"), (1, 3), None, ())


def test_n_values_length_checked():
    p = builtin_family("T24")
    with pytest.raises(PresentationError):
        augment_n(p, (3,))
    with pytest.raises(PresentationError):
        augment_n(p, (3, 3, 3))


def test_augment_n():
    p = builtin_family("T24")
    assert p.n_values is None
    q = augment_n(p, (3, 4))
    assert q.n_values == (3, 4)
    assert q.relations == p.relations
    # replacing an existing N
    assert augment_n(q, (3, 5)).n_values == (3, 5)
    # n = 1 is degenerate but legal
    assert augment_n(p, (1, 1)).n_values == (1, 1)
    with pytest.raises(PresentationError):
        augment_n(p, (3, 0))


def test_n_of_generator():
    p = builtin_family("T24C")  # components (1, 2, 3), N = (2, 3, 2)
    assert [p.n_of_generator(g) for g in range(3)] == [2, 3, 2]
    assert p.component_count == 3
    assert p.generator_index("c") == 2
    with pytest.raises(PresentationError):
        p.generator_index("q")


# --- secondary relations ----------------------------------------------------

def letters(text, names):
    return parse_word(text, names)


def test_secondary_relations_order_and_words():
    p = augment_n(builtin_family("T24"), (3, 3))
    rels = secondary_relations(p)
    names = ("a", "b")
    # power relations first, one per generator
    assert rels[0] == UniversalRelation(letters("a a a", names))
    assert rels[1] == UniversalRelation(letters("b b b", names))
    # then w' base w target' per primary relation
    assert rels[2] == UniversalRelation(letters("b' a' b' a b a b a'", names))
    assert rels[3] == UniversalRelation(letters("a' b' a' b a b a b'", names))
    assert len(rels) == 4


def test_secondary_relations_axis_example():
    text = "gens a b c\ncomp a:1 b:2 c:3\nN 2 2 2\nrel c^[a b]=c\n"
    p = parse_presentation(text)
    rels = secondary_relations(p)
    names = ("a", "b", "c")
    assert rels[3] == UniversalRelation(letters("b' a' c a b c'", names))


def test_secondary_relations_need_n():
    with pytest.raises(PresentationError):
        secondary_relations(builtin_family("T24"))


# --- diagrams ----------------------------------------------------------------

TREFOIL_TEXT = """gens x0 x1 x2
comp x0:1 x1:1 x2:1
rel x1^[x0]=x2
rel x0^[x2]=x1
rel x2^[x1]=x0
"""

HOPF_TEXT = """gens x0 x1
comp x0:1 x1:2
rel x1^[x0]=x1
rel x0^[x1]=x0
"""


def test_trefoil_wirtinger_hand_check():
    p = builtin_family("trefoil")
    assert print_presentation(p) == TREFOIL_TEXT


def test_hopf_wirtinger_hand_check():
    p = builtin_family("hopf")
    assert print_presentation(p) == HOPF_TEXT


def test_closed_braid_component_count():
    # sigma_1^k on two strands: one component for odd k, two for even
    for k in (1, 3, 5):
        d = closed_braid_diagram([1] * k, 2)
        assert set(d.arc_component.values()) == {1}
    for k in (2, 4):
        d = closed_braid_diagram([1] * k, 2)
        assert set(d.arc_component.values()) == {1, 2}
    # (sigma_1 sigma_2)^4 on three strands: full twist pattern, 3 arcs/comp mix
    d = closed_braid_diagram([1, 2] * 4, 3)
    assert len(d.crossings) == 8


def test_closed_braid_negative_letters():
    d = closed_braid_diagram([-1, -1, -1], 2)
    p = wirtinger(d)
    assert len(p.relations) == 3
    for rel in p.relations:
        assert len(rel.word) == 1
        assert rel.word[0][1] == -1  # mirror crossings act by the inverse


def test_closed_braid_validation():
    with pytest.raises(DiagramError):
        closed_braid_diagram([0], 2)
    with pytest.raises(DiagramError):
        closed_braid_diagram([2], 2)
    with pytest.raises(DiagramError):
        closed_braid_diagram([1], 0)


def test_diagram_print_parse_round_trip():
    d = closed_braid_diagram([1, 1, -2, 1], 3)
    d2 = parse_diagram(print_diagram(d))
    assert d2.crossings == d.crossings
    assert dict(d2.arc_component) == dict(d.arc_component)


def test_parse_diagram_errors():
    with pytest.raises(DiagramError):
        parse_diagram("")  # no arc_components line
    with pytest.raises(DiagramError):
        parse_diagram('{"arc_components": {"x0": 1}}\n'
                      '{"arc_components": {"x0": 1}}\n')
    with pytest.raises(DiagramError):
        parse_diagram('{"arc_components": {"x0": 1}}\n'
                      '{"over": "x0", "under_in": "x0", "under_out": "x9", "sign": "+"}\n')
    with pytest.raises(DiagramError):
        parse_diagram('not json\n')


def test_wirtinger_rejects_duplicate_under_out():
    d = Diagram(
        crossings=(
            # x1 broken twice into the same outgoing arc
            *closed_braid_diagram([1, 1], 2).crossings,
        ),
        arc_component={"x0": 1, "x1": 2},
    )
    bad = Diagram(
        crossings=(d.crossings[0], d.crossings[0]),
        arc_component=dict(d.arc_component),
    )
    with pytest.raises(DiagramError):
        wirtinger(bad)


# --- builtin families ---------------------------------------------------------

def test_builtin_family_unknown():
    with pytest.raises(PresentationError):
        builtin_family("T99")


def test_builtin_family_k_handling():
    with pytest.raises(PresentationError):
        builtin_family("Lk")  # needs k
    with pytest.raises(PresentationError):
        builtin_family("T24", k=3)  # takes no k
    with pytest.raises(PresentationError):
        builtin_family("T2k", k=0)
    with pytest.raises(PresentationError):
        builtin_family("Lk", k=0)
    # the twist family is defined at every integer
    assert builtin_family("Mk", k=0).n_values == (2, 3)


def test_builtin_family_wirtinger_prefix():
    assert builtin_family("Wirtinger:trefoil") == builtin_family("trefoil")


def test_builtin_family_defaults():
    assert builtin_family("T24C").n_values == (2, 3, 2)
    assert builtin_family("T24").n_values is None
    assert builtin_family("Mk", k=3).n_values == (2, 3)
    assert builtin_family("T24", n_values=(3, 4)).n_values == (3, 4)


def test_lk_component_shapes():
    odd = builtin_family("Lk", k=3)
    assert odd.component_count == 2
    even = builtin_family("Lk", k=4)
    assert even.component_count == 3


def test_t2k_matches_torus_closures():
    assert builtin_family("T2k", k=3) == builtin_family("trefoil")
    assert builtin_family("T2k", k=2) == builtin_family("hopf")
