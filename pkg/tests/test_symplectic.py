import random

import numpy as np
import pytest

from tanglelab.errors import BudgetExceededError
from tanglelab.exact_linear import SubspaceModP
from tanglelab.fox_coloring import reduced_boundary_image
from tanglelab.symplectic_lagrangian import (
    all_matchings,
    build_form,
    enumerate_lagrangians,
    is_lagrangian,
    lagrangian_count,
    matching_census,
    matching_image,
    realize_lagrangians,
)
from tanglelab.tangle_core import (
    Infinity,
    Integer,
    compile_expr,
    random_algebraic_expr,
)


def test_build_form_small():
    s = build_form(3, 2)
    assert s.gram == ((0, 1), (2, 0))
    s4 = build_form(3, 3)
    G = s4.gram_matrix()
    assert G.shape == (4, 4)
    # skew symmetric with zero diagonal
    assert not ((G + G.T) % 3).any()
    assert not G.diagonal().any()
    build_form(2, 3)  # nondegenerate over F_2, would raise otherwise


def test_gram_skew_nondegenerate_various():
    for p in (2, 3, 5, 7):
        for n in (2, 3, 4):
            s = build_form(p, n)
            G = s.gram_matrix()
            assert not ((G + G.T) % p).any()


def test_lagrangian_counts():
    assert lagrangian_count(3, 2) == 4
    assert lagrangian_count(3, 3) == 40
    assert lagrangian_count(3, 4) == 1120
    assert lagrangian_count(5, 2) == 6
    assert lagrangian_count(5, 3) == 156
    assert lagrangian_count(2, 4) == 3 * 5 * 9


def test_is_lagrangian_basics():
    s = build_form(5, 2)
    zero = SubspaceModP.from_vectors([], 5, 2)
    assert not is_lagrangian(zero, s)
    f1 = SubspaceModP.from_vectors([[1, 0]], 5, 2)
    assert is_lagrangian(f1, s)
    whole = SubspaceModP.from_vectors([[1, 0], [0, 1]], 5, 2)
    assert not is_lagrangian(whole, s)


def test_enumerate_small():
    lag32 = enumerate_lagrangians(3, 2)
    assert len(lag32) == 4
    assert len({s.rows for s in lag32}) == 4
    lag22 = enumerate_lagrangians(2, 2)
    assert len(lag22) == 3
    lag33 = enumerate_lagrangians(3, 3)
    assert len(lag33) == 40
    s = build_form(3, 3)
    for L in lag33:
        assert is_lagrangian(L, s)
        # canonical form is idempotent
        assert SubspaceModP.from_vectors(L.basis_matrix(), 3, 4) == L


def test_enumerate_budget_guard():
    with pytest.raises(BudgetExceededError):
        enumerate_lagrangians(13, 6, budget=10**4)


def test_random_tangle_images_are_lagrangian():
    rng = random.Random(123)
    for _ in range(80):
        n = rng.choice((2, 3))
        p = rng.choice((3, 5))
        space = build_form(p, n)
        d = compile_expr(random_algebraic_expr(n, rng, max_depth=3))
        img = reduced_boundary_image(d, p)
        assert is_lagrangian(img, space)


def test_images_of_3_tangles_land_in_the_40():
    lag33 = {s.rows for s in enumerate_lagrangians(3, 3)}
    rng = random.Random(17)
    for _ in range(500):
        d = compile_expr(random_algebraic_expr(3, rng, max_depth=3))
        img = reduced_boundary_image(d, 3)
        assert img.rows in lag33


def test_matching_counts():
    assert [len(all_matchings(n)) for n in (2, 3, 4)] == [3, 15, 105]


def test_matching_census_values():
    assert matching_census(2) == 3
    assert matching_census(3) == 15
    assert matching_census(4) == 105
    # every matching image is distinct through n = 5: the census equals
    # the double factorial, and falls strictly below the Lagrangian
    # count from n = 4 on
    assert matching_census(5) == 945
    assert matching_census(4) < lagrangian_count(2, 4)
    assert matching_census(5) < lagrangian_count(2, 5)
    assert matching_census(3) == lagrangian_count(2, 3)


def test_matching_images_are_lagrangian_mod2():
    for n in (2, 3, 4):
        space = build_form(2, n)
        for m in all_matchings(n):
            img = matching_image(m, n)
            assert is_lagrangian(img, space)


def test_realize_32():
    witnesses, missing = realize_lagrangians(3, 2, generator_budget=100)
    assert not missing
    kinds = {type(e).__name__ for e in witnesses.values()}
    exprs = set(witnesses.values())
    assert exprs == {Integer(-1), Integer(0), Integer(1), Infinity()}


def test_realize_52():
    witnesses, missing = realize_lagrangians(5, 2, generator_budget=100)
    assert not missing
    assert set(witnesses.values()) == {
        Integer(-2),
        Integer(-1),
        Integer(0),
        Integer(1),
        Integer(2),
        Infinity(),
    }


def test_realize_33():
    witnesses, missing = realize_lagrangians(3, 3, generator_budget=20000, seed=0)
    assert not missing
    assert len(witnesses) == 40
