import random

import pytest

from tanglelab.coset_enumeration import (
    CosetTable,
    Presentation,
    braid_presentation,
    canonical_words,
    conjugacy_classes,
    enumerate_cosets,
    parse_presentation,
    trace,
    word_equal,
)
from tanglelab.errors import BudgetExceededError

# class representatives of B_3/(sigma_i^4), transcribed from the known
# 16-element list (identity through the 3-braid of the Borromean rings)
B3_MOD4_CLASS_WORDS = [
    (),
    (1,),
    (-1,),
    (1, 1),
    (1, 2),
    (-1, 2),
    (-1, -2),
    (1, 1, 2),
    (1, 1, -2),
    (1, 1, 2, 2),
    (1, -2, 1, -2),
    (1, 2, 2, 1, -2),
    (1, -2, 1, 1, -2),
    (1, 2, 2, 1, 2, 2),
    (-1, 2, 2, -1, 2, 2),
    (1, -2, 1, -2, 1, -2),
]


def test_cyclic_group():
    tab = enumerate_cosets(Presentation(1, ((1, 1, 1),)))
    assert tab.order == 3
    count, classes, _ = conjugacy_classes(tab)
    assert count == 3  # abelian: every element is its own class


def test_presentation_reduction():
    p = Presentation(2, ((1, -1), (1, 2, -2, -1, 1, 1, 1)))
    assert p.relators == ((1, 1, 1),)
    with pytest.raises(ValueError):
        Presentation(1, ((2,),))


def test_braid_presentation_shapes():
    p34 = braid_presentation(3, 4)
    assert p34.generators == 2
    assert len(p34.relators) == 2
    p25 = braid_presentation(2, 5)
    assert p25.generators == 1
    assert p25.relators == ((1,) * 5,)
    p53 = braid_presentation(5, 3)
    assert p53.generators == 4
    assert len(p53.relators) == 3 + 3 + 1


def test_braid_quotient_orders():
    assert enumerate_cosets(braid_presentation(2, 5)).order == 5
    assert enumerate_cosets(braid_presentation(3, 4)).order == 96
    assert enumerate_cosets(braid_presentation(3, 3)).order == 24
    assert enumerate_cosets(braid_presentation(4, 3)).order == 648


def test_columns_are_permutations_and_relators_fix_rows():
    # enumerate_cosets verifies internally; re-check here explicitly
    pres = braid_presentation(3, 4)
    tab = enumerate_cosets(pres)
    n = tab.order
    for x in range(2 * tab.generators):
        assert sorted(row[x] for row in tab.table) == list(range(n))
    for rel in pres.relators:
        for c in range(n):
            assert trace(tab, rel, c) == c


def test_order_independent_of_relator_order_and_strategy():
    rng = random.Random(2)
    pres = braid_presentation(3, 4)
    base = enumerate_cosets(pres).order
    rels = list(pres.relators)
    for _ in range(4):
        rng.shuffle(rels)
        assert enumerate_cosets(Presentation(2, tuple(rels))).order == base
    for strategy in range(4):
        assert enumerate_cosets(pres, strategy=strategy).order == base
        p43 = braid_presentation(4, 3)
        assert enumerate_cosets(p43, strategy=strategy).order == 648


def test_budget_guard():
    # the free group on two generators never completes
    with pytest.raises(BudgetExceededError):
        enumerate_cosets(Presentation(2, ((1, 2, -1, -2),)), max_cosets=500)


def test_word_equal_basics():
    pres = braid_presentation(3, 4)
    tab = enumerate_cosets(pres)
    assert word_equal(tab, (1, 2, 1), (2, 1, 2))
    assert not word_equal(tab, (1,), (2, 2))
    w = (1, -2, 1, 1)
    assert word_equal(tab, w, w)


def test_center_square_identity_b3():
    # (s1 s2)^6 equals (s1 s2^-1)^3 modulo fourth powers
    tab = enumerate_cosets(braid_presentation(3, 4))
    assert word_equal(tab, (1, 2) * 6, (1, -2) * 3)
    # and not vacuously: neither word is the identity
    assert not word_equal(tab, (1, 2) * 6, ())


def test_b3_classes_and_representatives():
    tab = enumerate_cosets(braid_presentation(3, 4))
    count, classes, reps = conjugacy_classes(tab)
    assert count == 16
    sizes = [len(c) for c in classes]
    assert sum(sizes) == 96
    assert all(96 % s == 0 for s in sizes)
    cls_of = {}
    for ci, cls in enumerate(classes):
        for c in cls:
            cls_of[c] = ci
    # pairwise non-conjugate and covering all classes; on failure name
    # the offending transcribed word rather than just counting
    seen = {}
    for w in B3_MOD4_CLASS_WORDS:
        ci = cls_of[trace(tab, w)]
        assert ci not in seen, (
            f"transcribed words {seen[ci]} and {w} are conjugate"
        )
        seen[ci] = w
    assert len(seen) == 16


def test_canonical_words_are_shortlex_consistent():
    tab = enumerate_cosets(braid_presentation(3, 3))
    words = canonical_words(tab)
    assert words[0] == ()
    for c, w in enumerate(words):
        assert trace(tab, w) == c


def test_parse_presentation():
    p = parse_presentation("gens 2\n1 1 1\n2 2 2\n# comment\n1 2 1 -2 -1 -2\n")
    assert p.generators == 2
    assert len(p.relators) == 3
    with pytest.raises(ValueError):
        parse_presentation("1 1\n")
