import random

from hypothesis import given, settings, strategies as st
import pytest

from domforce import families as fam
from domforce import fixtures as fx
from domforce.families import FamilySpec as F, ProductSpec as P
from domforce.forcing import is_connected_dom_forcing
from domforce.graph import VertexSet
from domforce.predictions import (
    ConstructionFailedVerification,
    NotATree,
    Prediction,
    expected_witness_size,
    grid_case,
    grid_witness,
    grid_witness_coords,
    predict,
    predict_gamma_c_grid,
    splitting_gamma_c,
    support_vertices,
    tree_formula,
)
from domforce.sampling import random_tree, tree_from_pruefer
from domforce.solvers import InvariantKind as K, value


@pytest.mark.parametrize("p, q, want", [(4, 4, 7), (11, 11, 47), (5, 7, 15), (6, 6, 14), (2, 3, 2), (2, 6, 6), (3, 5, 5)])
def test_gamma_c_grid_examples(p, q, want):
    assert predict_gamma_c_grid(p, q) == want


def test_gamma_c_grid_matches_solver():
    for p in range(2, 6):
        for q in range(p, 7):
            if p * q <= 30:
                assert predict_gamma_c_grid(p, q) == value(fam.grid(p, q), K.GammaC), (p, q)


def test_predict_examples():
    assert predict(F("petersen")) == Prediction.exact(K.Fcd, 5, predict(F("petersen")).theorem_tag,
                                                     predict(F("petersen")).validity)
    assert predict(F("grid", (4, 4))).lo == 7 and predict(F("grid", (4, 4))).is_exact
    assert predict(F("grid", (11, 11))).lo == 47
    sl = predict(P("splitting", (F("ladder", (3,)),)))
    assert (sl.lo, sl.hi) == (4, 5) and not sl.is_exact
    g6 = predict(F("grid", (6, 6)))
    assert (g6.lo, g6.hi) == (14, 15)
    assert predict(F("path", (3,))).covered is False
    assert predict(F("petersen"), K.Fd).lo == 5
    assert predict(F("path", (6,)), K.Z).covered is False


def test_prediction_semantics():
    p = Prediction.interval(K.Fcd, 3, 5, "t")
    assert p.contains(3) and p.contains(5) and not p.contains(6)
    assert Prediction.interval(K.Fcd, 3, None, "t").contains(99)
    assert not Prediction.not_covered(K.Fcd).contains(0)
    with pytest.raises(ValueError):
        Prediction.interval(K.Fcd, 4, 3, "t")
    assert p.to_dict() == {"type": "interval", "lo": 3, "hi": 5}


def test_family_predictions_hold_small():
    cases = [F("path", (n,)) for n in range(4, 9)] + [F("cycle", (n,)) for n in range(4, 9)]
    cases += [F("complete", (n,)) for n in range(2, 7)] + [F("star", (n,)) for n in range(2, 7)]
    cases += [F("helm", (m,)) for m in range(4, 7)] + [F("coconut", (m, n)) for m in (3, 4) for n in (1, 3)]
    cases += [F("wheel", (n,)) for n in range(4, 9)] + [F("hypercube", (k,)) for k in (1, 2, 3)]
    for spec in cases:
        pr = predict(spec)
        assert pr.contains(value(fam.build(spec), K.Fcd)), spec


def test_product_predictions_hold_small():
    cases = [
        P("corona", (F("path", (3,)), F("cycle", (3,)))),
        P("corona", (F("cycle", (4,)), F("complete", (1,)))),
        P("generalized_corona", (F("path", (2,)), F("path", (2,)), F("cycle", (3,)))),
        P("iterated_corona", (F("path", (2,)), F("complete", (1,))), k=2),
        P("rooted_product", (F("path", (3,)), F("path", (4,))), root=1),
        P("join", (F("cycle", (4,)), F("path", (3,)))),
        P("splitting", (F("star", (3,)),)),
    ]
    for spec in cases:
        assert predict(spec).contains(value(fam.build(spec), K.Fcd)), spec.graph_id


def test_rooted_product_hypothesis_checked():
    # the only minimum connected dom-forcing set of P_4 is {1, 2}
    assert not predict(P("rooted_product", (F("path", (3,)), F("path", (4,))), root=0)).covered
    assert predict(P("rooted_product", (F("path", (3,)), F("path", (4,))), root=1)).lo == 6


def test_grid_witness_examples():
    assert len(grid_witness(11, 11)) == 47
    assert len(grid_witness(4, 4)) == 7
    assert len(grid_witness(6, 6)) == 15
    assert grid_case(6, 6) == 1 and grid_case(4, 6) == 2 and grid_case(4, 4) == 3
    assert grid_case(4, 5) == 4 and grid_case(5, 4) == 5 and grid_case(5, 5) == 6


def test_grid_witness_all_sizes():
    for p in range(4, 31):
        for q in range(p, 31):
            s = grid_witness(p, q)
            assert len(s) == expected_witness_size(p, q)


def test_grid_witness_special_p4_p4():
    # the special p = 4 set works for q = 4 only
    assert len(grid_witness(4, 4, special_p4=True)) == 7
    for q in (7, 10, 13):
        coords = grid_witness_coords(4, q, special_p4=True)
        assert len(coords) == expected_witness_size(4, q)
        assert (1, q - 1) not in coords and (1, q - 2) not in coords and (2, q - 1) not in coords
        with pytest.raises(ConstructionFailedVerification):
            grid_witness(4, q, special_p4=True)


def test_grid_witness_rejects_small():
    with pytest.raises(ValueError):
        grid_witness(3, 5)


def test_grid_exact_small():
    for p, q in [(4, 4), (4, 5), (5, 5), (4, 6)]:
        v = value(fam.grid(p, q), K.Fcd)
        assert predict(F("grid", (p, q))).contains(v)


def test_tree_formula_examples():
    assert tree_formula(fx.TREE14) == 10
    assert support_vertices(fx.TREE14) == fx.TREE14_SUPPORT
    assert tree_formula(fam.star(5)) == 5
    assert tree_formula(fam.path(6)) == 4
    with pytest.raises(NotATree):
        tree_formula(fam.cycle(5))
    with pytest.raises(NotATree):
        tree_formula(fam.path(2))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8).flatmap(lambda m: st.lists(st.integers(0, m + 1), min_size=m, max_size=m)))
def test_tree_formula_matches_solver(seq):
    t = tree_from_pruefer(seq)
    assert tree_formula(t) == value(t, K.Fcd)


def test_random_tree_is_tree():
    rng = random.Random(1)
    for n in range(2, 12):
        t = random_tree(n, rng)
        assert t.n == n and t.num_edges() == n - 1


def test_splitting_gamma_c_examples():
    assert splitting_gamma_c(fam.complete(4)) == 2
    assert splitting_gamma_c(fam.path(6)) == 4
    assert splitting_gamma_c(fam.cycle(5)) == 3
    for g in (fam.complete(4), fam.path(6), fam.cycle(5), fam.petersen()):
        assert value(fam.splitting(g), K.GammaC) == splitting_gamma_c(g)


def test_reference_splitting_witnesses():
    for n in range(6, 10):
        g = fam.splitting(fam.path(n))
        s = fx.splitting_path_witness(n)
        assert len(s) == n - 1 and is_connected_dom_forcing(g, s)
    for n in range(7, 10):
        g = fam.splitting(fam.cycle(n))
        s = fx.splitting_cycle_witness(n)
        assert len(s) == n - 1 and is_connected_dom_forcing(g, s)
    for n in range(2, 6):
        g = fam.splitting(fam.star(n))
        assert is_connected_dom_forcing(g, fx.splitting_star_witness(n))


def test_splitting_p5_counterexample():
    g = fam.splitting(fam.path(5))
    assert value(g, K.Fcd) == 5
    s = fx.splitting_path_witness(5)
    assert len(s) == 4 and not is_connected_dom_forcing(g, s)
    # the shadow of vertex 1 is adjacent only to vertices 0 and 2
    shadow = 5 + 1
    assert g.adj[shadow] == VertexSet.of([0, 2]).bits
    assert not (s.bits & (1 << shadow | g.adj[shadow]))
