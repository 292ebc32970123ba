import json
import random

import pytest
from hypothesis import given, strategies as st

from conftest import SMALL, fams, hol
from qhol.perm_core import compose, conjugate, parse_cycles
from qhol.quasi import (CosetUnion, build_qhol, clique_extension, compute_Q, coprime_product_check,
                        member_normalizes, norm_digraph, q_by_containment, structural_checks,
                        witness_text)
from qhol.regsets import conj_closed_check


def _member(spec, cyc):
    hc = hol(spec)
    b = parse_cycles(cyc, hc.n)
    return hc.regular_from_perms([conjugate(b, g) for g in hc.ctx.lam.generators])


def test_normalizing_is_not_symmetric():
    hc = hol("AB:4x2")
    A = _member("AB:4x2", "(2,5)(4,7)")
    B = _member("AB:4x2", "(4,8)")
    assert member_normalizes(hc, A, B)
    assert not member_normalizes(hc, B, A)


@pytest.mark.parametrize("spec", SMALL)
def test_digraph_matches_permutation_normalizers(spec):
    from qhol.perm_core import normalizes
    f = fams(spec)
    for i, M in enumerate(f.sr.members):
        for j, N in enumerate(f.sr.members):
            assert f.digraph.adj[i][j] == normalizes(M, N)


@pytest.mark.parametrize("spec,q,h", [("AB:4x2", 2, 2), ("D:4", 6, 2), ("DIC:2", 2, 2),
                                      ("C:9", 3, 1), ("D:6", 2, 2), ("AB:3x3", 1, 1)])
def test_Q_sizes(spec, q, h):
    f = fams(spec)
    assert (len(f.q), len(f.h)) == (q, h)


@pytest.mark.parametrize("spec", SMALL)
def test_Q_two_routes_agree(spec):
    f = fams(spec)
    by_digraph = {f.sr.members[i].gamma for i in range(len(f.sr))
                  if all(f.digraph.adj[k][i] for k in range(len(f.sr)))}
    by_containment = {f.sr.members[i].gamma for i in q_by_containment(f.sr)}
    assert by_digraph == by_containment == f.gammas("q")


@pytest.mark.parametrize("spec", SMALL)
def test_H_in_Q_in_SR_and_structure(spec):
    f = fams(spec)
    assert f.gammas("h") <= f.gammas("q") <= f.gammas("sr")
    assert len(f.q) % len(f.h) == 0
    rep = structural_checks(f.q, f.h, len(f.sr))
    assert rep.ok, rep.details


@pytest.mark.parametrize("spec", SMALL)
def test_Q_is_a_maximal_clique(spec):
    f = fams(spec)
    qi = [f.sr.index[g] for g in f.gammas("q")]
    for i in qi:
        for j in qi:
            assert f.digraph.adj[i][j]
    assert clique_extension(f.sr, f.digraph, qi) is None or len(f.q) < len(f.sr)


def test_clique_extension_c4xc2():
    f = fams("AB:4x2")
    qi = sorted(f.sr.index[g] for g in f.gammas("q"))
    ext = clique_extension(f.sr, f.digraph, qi)
    # a clique larger than Q exists, so Q is not the maximum mutually normalizing set
    assert ext is not None and len(ext) == 3
    assert all(f.digraph.adj[i][j] for i in ext for j in ext)


def test_compute_Q_recomputes():
    f = fams("D:4")
    dg = norm_digraph(f.sr)
    assert {N.gamma for N in compute_Q(dg, f.sr).members} == f.gammas("q")
    d = json.loads(dg.to_json())
    assert d["nodes"] == list(range(6))


@pytest.mark.parametrize("a,b", [("C:8", "C:3"), ("C:2", "C:9"), ("D:3", "C:5")])
def test_coprime_products(a, b):
    res = coprime_product_check(a, b, lambda s: len(fams(s).q))
    assert res["ok"], res


def test_coprime_rejects_non_coprime():
    with pytest.raises(ValueError):
        coprime_product_check("C:2", "C:4", lambda s: 1)


@pytest.mark.parametrize("spec", SMALL)
def test_qhol_closed_with_right_order(spec):
    f = fams(spec)
    res = build_qhol(f.q)
    assert res.verdict == "group"
    cu = res.union
    assert cu.order == len(f.q) * hol(spec).hol.order


@given(st.sampled_from(["D:4", "AB:4x2", "C:8", "D:6", "DIC:3", "A4"]), st.integers(0, 2 ** 32))
def test_coset_union_multiplication_is_composition(spec, seed):
    cu = build_qhol(fams(spec).q).union
    rng = random.Random(seed)
    x, y = cu.random_element(rng), cu.random_element(rng)
    assert cu.elem_perm(cu.mult(x, y)) == compose(cu.elem_perm(x), cu.elem_perm(y))
    xy = cu.mult(x, y)
    assert cu.coset_of(cu.elem_perm(xy)) == xy[0]


def test_coset_union_not_closed_for_sr_of_c4xc2():
    f = fams("AB:4x2")
    cu = CosetUnion(f.hol, f.sr.reps, f.sr.members)
    assert not cu.verify_closed().closed
    out = conj_closed_check(f.sr)
    assert "beta_" in witness_text(out)
