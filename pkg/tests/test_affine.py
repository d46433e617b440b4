import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from macdonald.affine import (
    ORBIT_SEEDS, ORBITS, PARAMS, TYPE_B_KEYS, AffineVector, apply_gen, apply_substitution, catalog,
    compose_substitutions, edge_substitution, iter_orbit_predicate_members, lookup, maximal_chains,
    orbit_closure_check, orbit_membership, parse_vector, poset_dot, poset_json, random_orbit_element,
    specialization_path,
)
from macdonald.errors import UnknownSystem


@st.composite
def vectors(draw, n=None):
    n = draw(st.integers(1, 4)) if n is None else n
    eps = draw(st.tuples(*[st.integers(-5, 5)] * n))
    return AffineVector(eps, draw(st.integers(-10, 10)))


def test_parse_vector():
    assert parse_vector("1e1+1d2") == AffineVector((1,), 1)
    assert parse_vector("e1-2e3+3d2") == AffineVector((1, 0, -2), 3)
    assert parse_vector("-e2+d", n=3) == AffineVector((0, -1, 0), 2)
    assert str(parse_vector("e1-2e3+3d2")) == "1e1-2e3+3d2"
    for bad in ("", "1x1", "e1+"):
        with pytest.raises(ValueError):
            parse_vector(bad)
    with pytest.raises(ValueError):
        parse_vector("e3", n=2)


def test_generator_examples():
    v = parse_vector("1e1+1d2")
    assert apply_gen(v, 0) == AffineVector((-1,), 3)
    assert apply_gen(v, 1) == AffineVector((-1,), 1)
    w = parse_vector("2e1-e2", n=3)
    assert apply_gen(w, 1) == AffineVector((-1, 2, 0), 0)
    with pytest.raises(ValueError):
        apply_gen(w, 4)


@given(vectors(), st.data())
def test_generators_are_involutions(v, data):
    i = data.draw(st.integers(0, v.n))
    assert apply_gen(apply_gen(v, i), i) == v


@given(vectors(n=3))
def test_coxeter_relations(v):
    def act(ws):
        u = v
        for i in reversed(ws):
            u = apply_gen(u, i)
        return u

    # type C affine diagram: 0 =4= 1 - 2 =4= 3
    assert act((0, 1) * 4) == v
    assert act((1, 2) * 3) == v
    assert act((2, 3) * 4) == v
    assert act((0, 2) * 2) == v


@given(vectors(), st.data())
def test_orbits_are_stable(v, data):
    i = data.draw(st.integers(0, v.n))
    assert orbit_membership(apply_gen(v, i)) == orbit_membership(v)


@pytest.mark.parametrize("orbit", ORBITS)
@pytest.mark.parametrize("n", [2, 3])
def test_orbit_closure_matches_predicate(orbit, n):
    seed = ORBIT_SEEDS[orbit](n)
    assert orbit_membership(seed) == orbit
    reached = orbit_closure_check(seed, 6)
    assert all(orbit_membership(u) == orbit for u in reached)
    # every predicate member of small level is reachable
    small = {u for u in iter_orbit_predicate_members(n, orbit, 1)}
    assert small <= orbit_closure_check(seed, 14)


def test_orbits_are_disjoint_on_members():
    for orbit in ORBITS:
        for u in iter_orbit_predicate_members(3, orbit, 2):
            assert orbit_membership(u) == orbit


def test_random_orbit_walks_stay_in_orbit():
    rng = random.Random(5)
    for orbit in ORBITS:
        for _ in range(20):
            assert orbit_membership(random_orbit_element(rng, 4, orbit)) == orbit


def test_non_member():
    assert orbit_membership(AffineVector((3, 0), 0)) is None
    assert orbit_membership(AffineVector((2, 0), 1)) is None


# -- catalog and poset ---------------------------------------------------------


def test_catalog_shape():
    nodes, edges = catalog()
    assert len(nodes) == 12 and len(edges) == 15
    assert len(TYPE_B_KEYS) == 9
    keys = {s.key for s in nodes}
    assert all(e.upper in keys and e.lower in keys for e in edges)


def test_lookup_by_any_name():
    assert lookup("B_n^(1)").key == "B"
    assert lookup("(C_n^vee,C_n)").key == "CvC"
    assert lookup("c-bc_n^ii").key == "CvC"
    with pytest.raises(UnknownSystem):
        lookup("E_8")
    with pytest.raises(KeyError):
        lookup("nonsense")


def test_top_node_has_all_orbits():
    assert lookup("CvC").orbits == frozenset(ORBITS)
    assert lookup("D").orbits == frozenset({"O5"})


def test_edges_are_consistent_substitutions():
    nodes, edges = catalog()
    by_key = {s.key: s for s in nodes}
    for e in edges:
        up, low = by_key[e.upper], by_key[e.lower]
        if up.spec_tuple is None or low.spec_tuple is None:
            continue
        sub = edge_substitution(up, low)
        assert sub is not None, e
        assert apply_substitution(up.spec_tuple, sub) == low.spec_tuple
        assert set(sub) <= set(PARAMS)
        # specializing never enlarges the orbit set
        assert low.orbits <= up.orbits


def test_no_substitution_upwards():
    assert edge_substitution(lookup("D"), lookup("B")) is None


def test_path_and_composition():
    p = specialization_path("CvC", "D")
    assert p.nodes[0] == "CvC" and p.nodes[-1] == "D"
    assert apply_substitution(lookup("CvC").spec_tuple, p.composite) == lookup("D").spec_tuple
    assert specialization_path("D", "CvC") is None
    assert compose_substitutions({"un": "tn"}, {"tn": "1"}) == {"un": "1", "tn": "1"}


def test_maximal_chains_end_at_empty():
    chains = maximal_chains()
    assert chains and all(c[0] == "CvC" and c[-1] == "empty" for c in chains)
    assert len(set(chains)) == len(chains)


def test_poset_exports():
    data = json.loads(poset_json())
    assert len(data["nodes"]) == 12 and len(data["edges"]) == 15
    dot = poset_dot()
    assert dot.startswith("digraph") and dot.count("->") == 15
