"""Numerical root finding: accuracy, determinism, classification, bounds."""

import random

import mpmath as mp
import pytest

from chromroots.chromatic import chromatic_polynomial
from chromroots.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
    treewidth_exact,
)
from chromroots.polynomials import Poly, real_root_count
from chromroots.rootfind import (
    all_roots,
    brown_bound_check,
    classify_real,
    max_real_part,
)


def test_integer_roots_of_triangle():
    rs = all_roots(chromatic_polynomial(complete_graph(3)))
    assert sorted(round(float(r.re)) for r in rs.roots) == [0, 1, 2]
    assert all(float(r.radius) <= 1e-12 for r in rs.roots)
    assert all(float(r.im) == 0 for r in rs.roots)


def test_cycle_roots_and_classification():
    rs = all_roots(chromatic_polynomial(cycle_graph(4)))
    real, nonreal = classify_real(rs)
    assert len(real) == 2 and len(nonreal) == 2
    value, witness, ambiguous = max_real_part(rs)
    assert abs(float(value) - 1.5) < 1e-20
    assert not ambiguous
    assert abs(abs(float(witness.im)) - float(mp.sqrt(3) / 2)) < 1e-20


def test_pure_imaginary_pair():
    rs = all_roots(Poly([1, 0, 1]))
    real, nonreal = classify_real(rs)
    assert not real and len(nonreal) == 2
    assert {mp.nstr(r.im, 5) for r in nonreal} == {"1.0", "-1.0"}


def test_multiplicities_from_square_free_decomposition():
    rs = all_roots(chromatic_polynomial(path_graph(6)))
    assert rs.total_multiplicity() == 6
    assert sorted(r.multiplicity for r in rs.roots) == [1, 5]


def test_determinism():
    f = Poly([3, -7, 0, 2, 5])
    a = all_roots(f, 256, seed=3)
    b = all_roots(f, 256, seed=3)
    assert [(str(r.re), str(r.im)) for r in a.roots] == [(str(r.re), str(r.im)) for r in b.roots]


def test_conjugate_symmetry_random():
    rng = random.Random(41)
    for _ in range(25):
        deg = rng.randint(2, 15)
        f = Poly([rng.randint(-30, 30) for _ in range(deg)] + [rng.randint(1, 30)])
        if f.degree < 2:
            continue
        rs = all_roots(f, 128, seed=1)
        _, nonreal = classify_real(rs)  # raises if pairing fails
        assert len(nonreal) % 2 == 0


def test_reconstruction_random_degree_40():
    rng = random.Random(42)
    for _ in range(5):
        deg = rng.randint(5, 40)
        f = Poly([rng.randint(-50, 50) for _ in range(deg)] + [rng.randint(1, 50)])
        if f.degree < 1:
            continue
        rs = all_roots(f, 256, seed=0)
        with mp.workprec(400):
            prod = [mp.mpf(1)]
            for r in rs.roots:
                for _ in range(r.multiplicity):
                    nxt = [mp.mpc(0)] * (len(prod) + 1)
                    z = mp.mpc(r.re, r.im)
                    for i, c in enumerate(prod):
                        nxt[i] -= c * z
                        nxt[i + 1] += c
                    prod = nxt
            lead = int(f.lc)
            scale = max(abs(c * lead) for c in prod)
            err = max(abs(prod[i] * lead - int(c)) for i, c in enumerate(f.coeffs)) / scale
            assert err < mp.mpf(10) ** -55


def test_real_count_agrees_with_sturm():
    rng = random.Random(43)
    checked = 0
    while checked < 60:
        deg = rng.randint(1, 10)
        f = Poly([rng.randint(-12, 12) for _ in range(deg)] + [rng.randint(1, 12)])
        if f.degree < 1:
            continue
        rs = all_roots(f, 192, seed=0)
        real, _ = classify_real(rs, tol=1e-12)
        assert len(real) == real_root_count(f), f
        checked += 1


def test_brown_bound():
    for g in (cycle_graph(4), complete_graph(4), path_graph(5), Graph.from_edge_mask(4, 0)):
        rs = all_roots(chromatic_polynomial(g))
        assert brown_bound_check(g, rs), g


def test_treewidth_bounds_real_roots_sample():
    rng = random.Random(44)
    for _ in range(25):
        n = rng.randint(2, 7)
        g = random_graph(n, rng.random(), rng)
        rs = all_roots(chromatic_polynomial(g))
        real, _ = classify_real(rs)
        tw = treewidth_exact(g)
        for r in real:
            assert float(r.re) <= tw + 1e-9


def test_input_validation():
    with pytest.raises(ValueError):
        all_roots(Poly([1]))
    with pytest.raises(ValueError):
        all_roots(Poly([0, 1]), precision_bits=10)


def test_rootset_serialisation():
    rs = all_roots(Poly([1, 0, 1]))
    data = rs.to_dict()
    assert data["degree"] == 2 and len(data["roots"]) == 2
    assert all(set(r) == {"re", "im", "radius", "multiplicity"} for r in data["roots"])
