from collections import Counter

import pytest

from conftest import SMALL, fams, hol
from qhol import iso
from qhol.errors import BudgetExceeded
from qhol.holomorph import nhol_split_verdict
from qhol.perm_core import generate
from qhol.quasi import build_qhol
from qhol.zappa import (classify_complements, classify_up_to_conjugacy, find_complements,
                        loop_table, h_part_check)


def union(spec):
    return build_qhol(fams(spec).q).union


def brute_complements(cu):
    """Subgroups of the union generated by an element over coset 1 and one
    more element, meeting every coset exactly once."""
    perms = [cu.elem_perm((i, h)) for i in range(cu.t) for h in range(cu.hol_size)]
    first = [cu.elem_perm((1, h)) for h in range(cu.hol_size)]
    found = set()
    for x in first:
        for y in perms:
            if not _small(x, y, cu.t):
                continue
            try:
                P = generate([x, y], cu.hc.n, cap=cu.t)
            except BudgetExceeded:
                continue
            if sorted(cu.coset_of(g) for g in P.elements) == list(range(cu.t)):
                found.add(P.elements)
    return found


def _small(x, y, t):
    from qhol.perm_core import perm_order
    return t % perm_order(x) == 0 and t % perm_order(y) == 0


def test_d4_census():
    cu = union("D:4")
    cs = find_complements(cu, max_count=10 ** 6)
    assert cs.exhaustive and len(cs.complements) == 64
    names = Counter(iso.name_group(c.table()) for c in cs.complements)
    assert names == {"S3": 32, "C6": 32}
    assert {c.perm_group().elements for c in cs.complements} == brute_complements(cu)


def test_symmetry_keeps_every_class():
    cu = union("D:4")
    full = find_complements(cu, max_count=10 ** 6)
    red = find_complements(cu, max_count=10 ** 6, symmetry=True)
    assert len(red.complements) < len(full.complements)
    classes = classify_up_to_conjugacy(cu, full.complements)
    keys = {c.slots: k for k, c in enumerate(full.complements)}
    hit = {next(i for i, cl in enumerate(classes) if keys[c.slots] in cl) for c in red.complements}
    assert hit == set(range(len(classes)))
    assert set(classify_complements(red.complements)) == {"S3", "C6"}


@pytest.mark.parametrize("spec", ["AB:4x2", "DIC:2", "C:8", "D:6"])
def test_small_searches_match_brute_force(spec):
    cu = union(spec)
    cs = find_complements(cu, max_count=10 ** 6)
    assert {c.perm_group().elements for c in cs.complements} == brute_complements(cu)


@pytest.mark.parametrize("spec,names", [("C:16", {"C4", "C2×C2"}),
                                        ("D:8", {"C4×C2", "D8", "C2×C2×C2"}),
                                        ("AB:4x2", {"C2"}), ("DIC:2", {"C2"})])
def test_complement_classes(spec, names):
    cs = find_complements(union(spec), max_count=10 ** 5, symmetry=True)
    assert cs.verdict == "ZS" and set(classify_complements(cs.complements)) == names


@pytest.mark.slow
def test_sg16_13_not_zs_exhaustively():
    cs = find_complements(union("SG16_13"), symmetry=True)
    assert cs.verdict == "not-ZS" and cs.exhaustive and not cs.complements


def test_trivial_union():
    cs = find_complements(union("AB:3x3"))
    assert cs.verdict == "ZS" and classify_complements(cs.complements) == ["1"]


@pytest.mark.parametrize("spec", SMALL)
def test_loop_table_laws(spec):
    cu = union(spec)
    lt = loop_table(cu)
    assert lt.is_left_loop()
    cs = find_complements(cu, max_count=5)
    for c in cs.complements:
        ct = c.loop_table()
        assert ct.is_left_loop() and ct.is_associative()


def test_transcript_is_deterministic():
    a = find_complements(union("D:4"), transcript=True)
    b = find_complements(union("D:4"), transcript=True)
    assert a.transcript == b.transcript and a.transcript[0].startswith("coset order")
    assert (a.nodes, a.clashes) == (b.nodes, b.clashes)


def test_max_count_stops_early():
    cs = find_complements(union("D:4"), max_count=3)
    assert len(cs.complements) == 3 and not cs.exhaustive and cs.verdict == "ZS"


@pytest.mark.parametrize("spec", ["D:4", "AB:4x2", "D:6", "C:16"])
def test_h_part_of_complements(spec):
    f = fams(spec)
    cu = union(spec)
    cs = find_complements(cu, max_count=50)
    sv = nhol_split_verdict(hol(spec))
    assert sv.status == "split"
    assert h_part_check(cu, cs.complements, f.gammas("h"), sv.witness.table())
