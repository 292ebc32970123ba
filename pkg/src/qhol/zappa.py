"""Transversal subgroups (Zappa-Szép complements of Hol) inside a coset union.

A complement Pi meets every coset exactly once, so it is a function
coset -> Hol index, exactly like gamma for regular subgroups.  The search
fixes the element of Pi in one coset at a time and re-closes the partial
subgroup; two different elements landing in one coset means Pi meets Hol
nontrivially, which kills the branch.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import iso
from .catalog import FiniteGroup
from .errors import BudgetExceeded, InternalCheckError
from .perm_core import PermGroup, cycles
from .quasi import CosetUnion

log = logging.getLogger(__name__)

DEFAULT_MAX_COUNT = 10_000
DEFAULT_BUDGET = 20_000_000


@dataclass
class LoopTable:
    size: int
    table: list

    def is_left_loop(self) -> bool:
        t = self.size
        rows_ok = all(sorted(r) == list(range(t)) for r in self.table)
        right_identity = all(self.table[a][0] == a for a in range(t))
        return rows_ok and right_identity

    def is_associative(self) -> bool:
        T = self.table
        r = range(self.size)
        return all(T[T[a][b]][c] == T[a][T[b][c]] for a in r for b in r for c in r)


def loop_table(cu: CosetUnion) -> LoopTable:
    """a * b = c where beta_a beta_b lambda(G) (beta_a beta_b)^-1 = beta_c lambda(G) beta_c^-1."""
    if not cu.closed:
        out = cu.verify_closed()
        if not out.closed:
            raise InternalCheckError(f"not conj-closed at ({out.i}, {out.j})")
    lt = LoopTable(cu.t, [list(r) for r in cu.Pb])
    if not lt.is_left_loop():
        raise InternalCheckError("transversal is not a left loop")
    return lt


@dataclass
class Complement:
    slots: tuple  # slots[i] = Hol index of the element in coset i
    cu: CosetUnion = field(repr=False)

    def elements(self) -> list:
        return [(i, h) for i, h in enumerate(self.slots)]

    def sub_table(self, cosets) -> FiniteGroup | None:
        """The elements over the given cosets as a group, or None if they are
        not closed.  The identity coset 0 must be included."""
        cosets = sorted(cosets)
        pos = {i: k for k, i in enumerate(cosets)}
        mul = []
        for i in cosets:
            row = []
            for j in cosets:
                c = self.cu.mult((i, self.slots[i]), (j, self.slots[j]))[0]
                if c not in pos:
                    return None
                row.append(pos[c])
            mul.append(row)
        return FiniteGroup(mul, verify=False)

    def perm_group(self) -> PermGroup:
        elems = [self.cu.elem_perm(x) for x in self.elements()]
        return PermGroup(self.cu.hc.n, elems, elements=elems)

    def table(self) -> FiniteGroup:
        cu = self.cu
        els = self.elements()
        mul = [[cu.mult(x, y)[0] for y in els] for x in els]
        return FiniteGroup(mul, [f"π{i}" for i in range(len(els))])

    def loop_table(self) -> LoopTable:
        """Loop table of the transversal given by this complement."""
        return LoopTable(len(self.slots), self.table().mul)


@dataclass
class ComplementSearch:
    verdict: str  # "ZS" | "not-ZS" | "inconclusive"
    complements: list
    nodes: int = 0
    clashes: int = 0
    exhaustive: bool = False
    note: str = ""
    transcript: list = field(default_factory=list)


def _is_semiregular(perm) -> bool:
    return len({len(c) for c in cycles(perm)}) == 1


def _candidates(cu: CosetUnion):
    """Per coset: Hol indices h such that (i, h) could lie in a complement.
    The element's order k must divide t, no proper power may fall in Hol,
    and its action on the members must be semiregular."""
    t = cu.t
    out = [None] * t
    for i in range(1, t):
        keep = []
        for h in range(cu.hol_size):
            x = (i, h)
            k, y = 1, x
            while y[0] != 0 and k <= t:
                y = cu.mult(y, x)
                k += 1
            if y != (0, 0) or t % k:
                continue
            if _is_semiregular(cu.induced(x)):
                keep.append(h)
        out[i] = keep
    return out


def _stabilizer_classes(cu: CosetUnion, i: int, cands: list[int]) -> list[int]:
    """Representatives of cands under conjugation by Stab_Hol(i)."""
    stab = [h for h in range(cu.hol_size) if cu.P[h][i] == i]
    seen = set()
    reps = []
    for h in cands:
        if h in seen:
            continue
        reps.append(h)
        x = (i, h)
        for s in stab:
            si = _hol_inverse(cu, s)
            y = cu.mult(cu.mult((0, s), x), (0, si))
            if y[0] != i:
                raise InternalCheckError("stabilizer moved the coset")
            seen.add(y[1])
    return reps


def _hol_inverse(cu: CosetUnion, h: int) -> int:
    g, a = cu.hol_pair(h)
    gi, ai = cu.hc.pinv((g, a))
    return gi * cu.A + ai


def find_complements(cu: CosetUnion, max_count: int = DEFAULT_MAX_COUNT,
                     budget: int = DEFAULT_BUDGET, symmetry: bool = False,
                     transcript: bool = False) -> ComplementSearch:
    """Depth-first search for complements of Hol in the coset union.

    With ``symmetry`` the first choice is reduced modulo conjugation by the
    stabilizer in Hol of the first coset; every Hol-conjugacy class of
    complements is still found, so the verdict is unaffected.
    """
    if not cu.closed:
        out = cu.verify_closed()
        if not out.closed:
            raise InternalCheckError("coset union is not closed")
    t = cu.t
    if t == 1:
        return ComplementSearch("ZS", [Complement((0,), cu)], exhaustive=True)
    cands = _candidates(cu)
    order = sorted(range(1, t), key=lambda i: (len(cands[i]), i))
    res = ComplementSearch("inconclusive", [])
    log_lines = res.transcript if transcript else None
    if log_lines is not None:
        log_lines.append("coset order: " + " ".join(f"{i}:{len(cands[i])}" for i in order))
    first_choices = {}
    if symmetry:
        i0 = order[0]
        first_choices[i0] = _stabilizer_classes(cu, i0, cands[i0])
    mult = cu.mult
    found = []

    def close(slot, elems, gens):
        k = 0
        while k < len(elems):
            x = elems[k]
            xe = (x, slot[x])
            for s in gens:
                c, hy = mult(xe, (s, slot[s]))
                d = slot[c]
                if d == -1:
                    slot[c] = hy
                    elems.append(c)
                elif d != hy:
                    return False
            k += 1
        return t % len(elems) == 0

    class _Stop(Exception):
        pass

    def rec(slot, elems, gens, depth):
        if len(elems) == t:
            found.append(tuple(slot))
            if log_lines is not None:
                log_lines.append(f"found #{len(found)} at depth {depth}")
            if len(found) >= max_count:
                raise _Stop
            return
        p = next(i for i in order if slot[i] == -1)
        for h in first_choices.get(p, cands[p]) if depth == 0 else cands[p]:
            res.nodes += 1
            if res.nodes > budget:
                raise BudgetExceeded("complement search", budget, len(found))
            s2 = slot[:]
            s2[p] = h
            e2 = elems + [p]
            g2 = gens + [p]
            if close(s2, e2, g2):
                rec(s2, e2, g2, depth + 1)
            else:
                res.clashes += 1
        if log_lines is not None and depth <= 1:
            log_lines.append(f"depth {depth} coset {p}: exhausted, nodes={res.nodes}")

    slot0 = [-1] * t
    slot0[0] = 0
    try:
        rec(slot0, [0], [], 0)
        res.exhaustive = True
    except _Stop:
        pass
    except BudgetExceeded as exc:
        res.note = str(exc)
    res.complements = [Complement(s, cu) for s in found]
    for c in res.complements:
        _verify_complement(cu, c)
    if res.complements:
        res.verdict = "ZS"
    elif res.exhaustive:
        res.verdict = "not-ZS"
    return res


def _verify_complement(cu: CosetUnion, c: Complement) -> None:
    els = c.elements()
    if sorted(x[0] for x in els) != list(range(cu.t)):
        raise InternalCheckError("complement does not meet every coset once")
    index = {x: k for k, x in enumerate(els)}
    for x in els:
        for y in els:
            if cu.mult(x, y) not in index:
                raise InternalCheckError("complement is not closed")
    # regular action on the members: pi -> pi lambda(G) pi^-1 is a bijection
    if sorted(cu.induced(x)[0] for x in els) != list(range(cu.t)):
        raise InternalCheckError("complement does not act regularly")


def classify_complements(comps: list, budget: int = iso.DEFAULT_BUDGET) -> list[str]:
    names = []
    for c in comps:
        nm = iso.name_group(c.table(), budget)
        if nm not in names:
            names.append(nm)
    return names


def h_part_check(cu: CosetUnion, comps: list, h_gammas, M) -> bool:
    """In each complement the elements over the H(G)-cosets form a subgroup
    isomorphic to the NHol complement M."""
    idx = [i for i, N in enumerate(cu.members) if N.gamma in set(h_gammas)]
    for c in comps:
        T = c.sub_table(idx)
        if T is None or iso.isomorphism(T, iso.as_table(M)) is None:
            return False
    return True


def classify_up_to_conjugacy(cu: CosetUnion, comps: list) -> list[list[int]]:
    """Group complement indices into Hol-conjugacy classes."""
    key = {c.slots: k for k, c in enumerate(comps)}
    gens = [(0, z * cu.A) for z in cu.hc.lam_points if z] + [(0, a) for a in cu.hc.aut_gens]
    seen = set()
    classes = []
    for k, c in enumerate(comps):
        if k in seen:
            continue
        orbit = {c.slots}
        frontier = [c.slots]
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    gi = _hol_inverse(cu, g[1])
                    new = [-1] * cu.t
                    for i, h in enumerate(s):
                        j, hh = cu.mult(cu.mult(g, (i, h)), (0, gi))
                        new[j] = hh
                    new = tuple(new)
                    if new not in orbit:
                        orbit.add(new)
                        nxt.append(new)
            frontier = nxt
        members = sorted(key[s] for s in orbit if s in key)
        seen.update(members)
        classes.append(members)
    return classes
