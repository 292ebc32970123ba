"""Enumeration of S(G) and S(G)∩R(G), parameter families, and the reflection map.

The search builds a regular subgroup one generator at a time.  A partial
subgroup K is stored as a partial gamma function (point -> automorphism
index).  Choosing the automorphism at a point outside K adds a generator,
and K is re-closed under right multiplication.  A clash (one point, two
automorphisms) kills the branch.  For S∩R the partial subgroup is also
closed under conjugation by lambda(G), which fixes most choices early.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import iso
from .errors import BudgetExceeded, InternalCheckError
from .holomorph import HolContext, RegularSubgroup, regular_conjugator
from .perm_core import PermGroup, conjugate, inverse, normalizes

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 50_000_000


@dataclass
class SearchStats:
    nodes: int = 0
    clashes: int = 0
    order_pruned: int = 0
    leaves: int = 0
    non_isomorphic: int = 0

    def summary(self) -> str:
        return (f"nodes={self.nodes} clashes={self.clashes} order-pruned={self.order_pruned} "
                f"leaves={self.leaves} rejected-by-iso={self.non_isomorphic}")


def _candidates(hc: HolContext, stats: SearchStats):
    orders = hc.pair_orders()
    spectrum = set(hc.ctx.group.orders)
    n = hc.n
    cands = [None] * n
    for g in range(1, n):
        row = orders[g]
        keep = [a for a in range(len(hc.auts)) if row[a] in spectrum]
        stats.order_pruned += len(hc.auts) - len(keep)
        cands[g] = keep
    return cands


def _search(hc: HolContext, require_R: bool, budget: int, stats: SearchStats) -> list[tuple]:
    n = hc.n
    if n == 1:
        return [(0,)]
    mul, inv, auts = hc.mul, hc.inv, hc.auts
    acomp = hc.acomp
    cands = _candidates(hc, stats)
    point_order = sorted(range(1, n), key=lambda g: (len(cands[g]), g))
    lam_pts = hc.lam_points
    inv_lam = [inv[z] for z in lam_pts]
    out = []

    def close(gamma, elems, gens):
        while True:
            k = 0
            while k < len(elems):
                x = elems[k]
                a = gamma[x]
                row = mul[x]
                A = auts[a]
                for s in gens:
                    y = row[A[s]]
                    b = acomp(a, gamma[s])
                    c = gamma[y]
                    if c == -1:
                        gamma[y] = b
                        elems.append(y)
                    elif c != b:
                        return False
                k += 1
            if n % len(elems):
                return False
            if not require_R:
                return True
            new = None
            for s in gens:
                a = gamma[s]
                A = auts[a]
                for z, zi in zip(lam_pts, inv_lam):
                    q = mul[mul[z][s]][A[zi]]
                    c = gamma[q]
                    if c == -1:
                        new = q
                        gamma[q] = a
                        break
                    if c != a:
                        return False
                if new is not None:
                    break
            if new is None:
                return True
            # restart the closure with the conjugate as an extra generator
            gens.append(new)
            elems.append(new)

    def rec(gamma, elems, gens):
        if len(elems) == n:
            stats.leaves += 1
            out.append(tuple(gamma))
            return
        p = next(g for g in point_order if gamma[g] == -1)
        for a in cands[p]:
            stats.nodes += 1
            if stats.nodes > budget:
                raise BudgetExceeded("regular subgroup search", budget, len(out))
            g2 = gamma[:]
            g2[p] = a
            e2 = elems + [p]
            s2 = gens + [p]
            if close(g2, e2, s2):
                rec(g2, e2, s2)
            else:
                stats.clashes += 1

    gamma0 = [-1] * n
    gamma0[0] = 0
    rec(gamma0, [0], [])
    return out


def _iso_filter(hc: HolContext, gammas, stats: SearchStats) -> list[RegularSubgroup]:
    G = hc.ctx.group
    fpG = iso.fingerprint(G)
    keep = []
    for gm in sorted(set(gammas)):
        N = RegularSubgroup(hc, gm)
        circ = N.circle()
        if iso.fingerprint(circ) == fpG and iso.isomorphism(G, circ) is not None:
            keep.append(N)
        else:
            stats.non_isomorphic += 1
    return keep


def enumerate_S(hc: HolContext, budget: int = DEFAULT_BUDGET, stats: SearchStats | None = None):
    """All regular subgroups of Hol(G) isomorphic to G, lambda(G) first."""
    stats = stats if stats is not None else SearchStats()
    res = _iso_filter(hc, _search(hc, False, budget, stats), stats)
    log.info("S search: %s", stats.summary())
    return res


def enumerate_SR(hc: HolContext, budget: int = DEFAULT_BUDGET, stats: SearchStats | None = None):
    """S(G)∩R(G) directly, closing partial subgroups under lambda-conjugation."""
    stats = stats if stats is not None else SearchStats()
    res = _iso_filter(hc, _search(hc, True, budget, stats), stats)
    log.info("S∩R search: %s", stats.summary())
    return res


# -- parameter families ------------------------------------------------------

@dataclass
class ParamFamily:
    members: list
    reps: list
    hol: HolContext = field(repr=False)
    sigma: list | None = None

    def __post_init__(self):
        self.index = {N.gamma: i for i, N in enumerate(self.members)}

    def __len__(self):
        return len(self.members)

    def sub(self, indices) -> "ParamFamily":
        return ParamFamily([self.members[i] for i in indices], [self.reps[i] for i in indices],
                           self.hol)


def family(hc: HolContext, members) -> ParamFamily:
    members = list(members)
    lam_key = (0,) * hc.n
    members.sort(key=lambda N: (N.gamma != lam_key, N.gamma))
    if not members or members[0].gamma != lam_key:
        raise InternalCheckError("lambda(G) missing from family")
    reps = [tuple(range(hc.n))] + [regular_conjugator(hc, N) for N in members[1:]]
    return ParamFamily(members, reps, hc)


def lambda_normalizes(hc: HolContext, N: RegularSubgroup) -> bool:
    for z in hc.lam_points:
        for s in N.gen_points:
            y, b = hc.pconj((z, 0), (s, N.gamma[s]))
            if N.gamma[y] != b:
                return False
    return True


def compute_SR(hc: HolContext, S) -> ParamFamily:
    return family(hc, [N for N in S if lambda_normalizes(hc, N)])


def phi_images(pf: ParamFamily) -> list[PermGroup]:
    """beta_i^-1 lambda(G) beta_i for each representative."""
    hc = pf.hol
    lam = hc.ctx.lam
    out = []
    for b in pf.reps:
        bi = inverse(b)
        P = PermGroup(hc.n, [conjugate(bi, g) for g in lam.generators],
                      elements=[conjugate(bi, g) for g in lam.elements])
        if not normalizes(lam, P):
            raise InternalCheckError("Phi image is not normalized by lambda(G)")
        out.append(P)
    return out


def as_member(hc: HolContext, P: PermGroup):
    """The RegularSubgroup equal to P when P lies in Hol(G), else None."""
    return hc.regular_from_perms(P.generators)


@dataclass
class InvClosure:
    ok: bool
    family: ParamFamily | None = None
    offending: int | None = None


def select_inv_closed(pf: ParamFamily) -> InvClosure:
    hc = pf.hol
    sigma = []
    for i, P in enumerate(phi_images(pf)):
        M = as_member(hc, P)
        j = pf.index.get(M.gamma) if M is not None else None
        if j is None:
            return InvClosure(False, offending=i)
        sigma.append(j)
    out = ParamFamily(pf.members, pf.reps, hc, sigma)
    return InvClosure(True, out)


@dataclass
class ConjOutcome:
    closed: bool
    i: int | None = None
    j: int | None = None
    escaping: PermGroup | None = None
    escaping_in_hol: bool | None = None
    escaping_normalized_by_lambda: bool | None = None
    table: list | None = None


def conj_image(pf: ParamFamily, i: int, j: int):
    """beta_i N_j beta_i^-1, as a member index or the escaping group."""
    hc = pf.hol
    b = pf.reps[i]
    gens = [conjugate(b, g) for g in pf.members[j].generators]
    M = hc.regular_from_perms(gens)
    if M is not None and M.gamma in pf.index:
        return pf.index[M.gamma], None
    return None, PermGroup(hc.n, gens, order=hc.n)


def conj_closed_check(pf: ParamFamily) -> ConjOutcome:
    t = len(pf)
    table = [[0] * t for _ in range(t)]
    for i in range(t):
        for j in range(t):
            k, esc = conj_image(pf, i, j)
            if k is None:
                hc = pf.hol
                in_hol = all(hc.in_hol(g) for g in esc.generators)
                return ConjOutcome(False, i, j, esc, in_hol, normalizes(hc.ctx.lam, esc))
            table[i][j] = k
    return ConjOutcome(True, table=table)


def reflected_R(hc: HolContext, S) -> list[PermGroup]:
    """R(G) from S(G): the Phi images closed under conjugation by Hol.

    beta^-1 lambda(G) beta depends on the choice of beta inside its coset,
    but every member of R is Hol-conjugate to some image.
    """
    R = {}
    frontier = []
    for P in phi_images(family(hc, S)):
        if P.elements not in R:
            R[P.elements] = P
            frontier.append(P)
    while frontier:
        nxt = []
        for P in frontier:
            for h in hc.hol.generators:
                els = [conjugate(h, g) for g in P.elements]
                if frozenset(els) not in R:
                    Q = PermGroup(hc.n, [conjugate(h, g) for g in P.generators], elements=els)
                    R[Q.elements] = Q
                    nxt.append(Q)
        frontier = nxt
    return list(R.values())


def reflection_counts(hc: HolContext, S) -> tuple[int, int]:
    """(|S|, |R|) with R obtained by reflection; the two must agree."""
    R = reflected_R(hc, S)
    for P in R:
        if not normalizes(hc.ctx.lam, P):
            raise InternalCheckError("reflected subgroup is not normalized by lambda(G)")
    return len(S), len(R)
