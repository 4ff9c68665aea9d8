import random

import pytest

from leavitt import (BezoutEngine, BoundExceeded, GeneratorCertificate,
                     IdealPresentation, LeavittAlgebra, QQ, UnsupportedCase1,
                     annihilation_power, find_sources, generator_containing_j,
                     ideal_dimension, oracle_finite_dim, parse_element,
                     parse_field, principal_generator, two_sided_generator,
                     verify_certificate)
from leavitt.graph import Graph
from conftest import random_acyclic_graph, random_element


def solve(alg, texts, **kw):
    ideal = IdealPresentation.make(alg, [parse_element(alg, t) for t in texts])
    cert = principal_generator(ideal, **kw)
    assert verify_certificate(ideal, cert)
    return ideal, cert


def test_toeplitz_corner_pair(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    ideal, cert = solve(alg, ["w", "f*"])
    # the generator reproduces both inputs by left multiplication
    assert cert.forward[0] * cert.generator == ideal.gens[0]
    assert cert.forward[1] * cert.generator == ideal.gens[1]


def test_single_loop_gcd():
    g = Graph.build(["v"], [("c", "v", "v")])
    alg = LeavittAlgebra(g, QQ)
    ideal, cert = solve(alg, ["c - v", "c.c - v"])
    # gcd(x-1, x^2-1) = x-1 up to a unit: the generator and c-v each divide
    # the other
    cv = parse_element(alg, "c - v")
    assert alg.membership_bounded(cv, [cert.generator], 4) is not None
    assert alg.membership_bounded(cert.generator, [cv], 4) is not None


def test_rose_base_case(rose2):
    alg = LeavittAlgebra(rose2, QQ)
    ideal, cert = solve(alg, ["e", "f"])
    assert "loop-fold" in " ".join(cert.case_trace)


def test_unsupported_shape():
    g = Graph.build(["p", "q"],
                    [("a", "p", "q"), ("b", "q", "p"), ("c", "p", "q")])
    alg = LeavittAlgebra(g, QQ)
    ideal = IdealPresentation.make(alg, [alg.vertex("p")])
    with pytest.raises(UnsupportedCase1):
        principal_generator(ideal)


def test_zero_ideal(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    ideal = IdealPresentation.make(alg, [alg.zero(), alg.zero()])
    cert = principal_generator(ideal)
    assert cert.generator == alg.zero()
    assert verify_certificate(ideal, cert)


def test_edgeless_graph():
    g = Graph.build(["a", "b", "c"], [])
    alg = LeavittAlgebra(g, QQ)
    ideal, cert = solve(alg, ["2*a + b", "c"])
    assert cert.generator == parse_element(alg, "a + b + c")


def test_annihilation_power(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    (s,) = find_sources(toeplitz)
    assert annihilation_power(alg, s, parse_element(alg, "f.f*"), 6) == 1
    assert annihilation_power(alg, s,
                              parse_element(alg, "c.c.f.f*.c*.c*"), 6) == 3
    assert annihilation_power(alg, s, alg.vertex("w"), 6) == 1


def test_source_cycle_general(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    ideal, cert = solve(alg, ["c - v", "f.f*"])
    assert any("source-cycle" in step for step in cert.case_trace)


def test_two_cycle_with_exit(cycle2_exit):
    alg = LeavittAlgebra(cycle2_exit, QQ)
    solve(alg, ["z", "g*"])
    solve(alg, ["a.b - p", "g.g*"])


def test_multi_edge_source_uses_outsplit():
    g = Graph.build(["v", "w"], [("e", "v", "w"), ("f", "v", "w")])
    alg = LeavittAlgebra(g, QQ)
    ideal, cert = solve(alg, ["e.f*", "w"])
    assert any("outsplit" in step for step in cert.case_trace)
    o = oracle_finite_dim(ideal)
    assert ideal_dimension(alg, ideal.gens) \
        == ideal_dimension(alg, [cert.generator]) \
        == ideal_dimension(alg, [o.generator])


def test_gf_field(toeplitz):
    alg = LeavittAlgebra(toeplitz, parse_field("gf:7"))
    solve(alg, ["3*c - v", "f.f*"])


def test_acyclic_matches_oracle_sampled():
    rng = random.Random(99)
    for trial in range(25):
        g = random_acyclic_graph(rng)
        alg = LeavittAlgebra(g, QQ)
        gens = [random_element(alg, rng) for _ in range(rng.randint(1, 3))]
        ideal = IdealPresentation.make(alg, gens)
        cert = BezoutEngine(seed=trial).principal_generator(ideal)
        assert verify_certificate(ideal, cert)
        o = oracle_finite_dim(ideal)
        assert ideal_dimension(alg, gens) \
            == ideal_dimension(alg, [cert.generator]) \
            == ideal_dimension(alg, [o.generator]), trial


def test_verify_rejects_tampering(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    ideal, cert = solve(alg, ["w", "f*"])
    bad = GeneratorCertificate(cert.generator + alg.vertex("v"),
                               cert.forward, cert.backward,
                               cert.degree_bound_used, cert.case_trace)
    report = verify_certificate(ideal, bad)
    assert not report
    assert report.notes


def test_verify_degree_bound_advisory(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    ideal, cert = solve(alg, ["w", "f*"])
    report = verify_certificate(ideal, cert,
                                degree_bound=cert.degree_bound_used - 1)
    assert not report


def test_generator_containing_j(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    (s,) = find_sources(toeplitz)
    gens = [parse_element(alg, t) for t in ["w", "f*", "c - v"]]
    engine = BezoutEngine()
    cert = generator_containing_j(engine, alg, s, gens)
    for w_, x in zip(cert.fw, gens):
        assert w_ * cert.g == x
    acc = alg.zero()
    for b, x in zip(cert.bw, gens):
        acc = acc + b * x
    assert acc == cert.g
    # agrees with the driver on the same input
    ideal = IdealPresentation.make(alg, gens)
    driver = principal_generator(ideal)
    assert alg.membership_bounded(driver.generator, [cert.g], 6) is not None
    assert alg.membership_bounded(cert.g, [driver.generator], 6) is not None


def test_two_sided_generator(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    ideal = IdealPresentation.make(
        alg, [parse_element(alg, "w"), parse_element(alg, "f*")])
    x = two_sided_generator(ideal)
    assert x == principal_generator(ideal).generator


def test_determinism(toeplitz):
    alg = LeavittAlgebra(toeplitz, QQ)
    runs = [solve(alg, ["c - v", "f.f*"], seed=7)[1] for _ in range(2)]
    assert runs[0].generator == runs[1].generator
    assert runs[0].case_trace == runs[1].case_trace
