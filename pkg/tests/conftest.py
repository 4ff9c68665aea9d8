import random

import pytest

from leavitt import Graph, LeavittAlgebra, QQ


def build(vertices, triples):
    return Graph.build(vertices, triples)


@pytest.fixture
def toeplitz():
    # loop c at v plus an exit edge f: v -> w
    return build(["v", "w"], [("c", "v", "v"), ("f", "v", "w")])


@pytest.fixture
def rose2():
    return build(["v"], [("e", "v", "v"), ("f", "v", "v")])


@pytest.fixture
def cycle3():
    return build(["p", "q", "r"],
                 [("a", "p", "q"), ("b", "q", "r"), ("d", "r", "p")])


@pytest.fixture
def chain3():
    return build(["u", "v", "w"], [("a", "u", "v"), ("b", "v", "w")])


@pytest.fixture
def cycle2_exit():
    # 2-cycle p <-> q with an exit from q to the sink z
    return build(["p", "q", "z"],
                 [("a", "p", "q"), ("b", "q", "p"), ("g", "q", "z")])


@pytest.fixture
def all_fixture_graphs(toeplitz, rose2, cycle3, chain3, cycle2_exit):
    return {"toeplitz": toeplitz, "rose2": rose2, "cycle3": cycle3,
            "chain3": chain3, "cycle2_exit": cycle2_exit}


def random_element(alg, rng, deg=2, nterms=3, coeff_range=3):
    monos = alg.monomials_up_to(deg)
    terms = {}
    for m in rng.sample(monos, min(nterms, len(monos))):
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            terms[m] = alg.field.of(c)
    return alg.element(terms)


def random_acyclic_graph(rng, max_vertices=6):
    nv = rng.randint(2, max_vertices)
    verts = [f"v{i}" for i in range(nv)]
    triples = []
    for j in range(1, nv):
        for i in range(j):
            for k in range(rng.choice([0, 0, 1, 1, 2])):
                triples.append((f"e{i}_{j}_{k}", verts[i], verts[j]))
    return Graph.build(verts, triples)
