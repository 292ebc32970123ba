"""Mutual normalization on S∩R, the family Q(G), and coset unions such as QHol(G).

A coset union is a list of representatives beta_0 = 1, beta_1, ... over
Hol(G).  Its elements are written ``(i, h)`` for ``beta_i * h`` with ``h``
a Hol index ``g * |Aut| + a``.  Because Hol permutes the members by
conjugation, ``h beta_j = beta_k h'`` for a unique k, and products reduce
to the tables ``P`` (induced action), ``D`` (Hol part of h beta_j) and
``C`` (Hol part of beta_i beta_k).
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .errors import InternalCheckError
from .holomorph import HolContext, RegularSubgroup
from .perm_core import compose, conjugate, format_cycles, inverse
from .regsets import ParamFamily, conj_closed_check, conj_image, family


@dataclass
class NormDigraph:
    nodes: list
    adj: list

    def to_json(self) -> str:
        return json.dumps({"nodes": self.nodes,
                           "edges": {str(i): [j for j, v in enumerate(row) if v and j != i]
                                     for i, row in enumerate(self.adj)}})


def member_normalizes(hc: HolContext, M: RegularSubgroup, N: RegularSubgroup) -> bool:
    for m in M.gen_points:
        mp = (m, M.gamma[m])
        for s in N.gen_points:
            y, b = hc.pconj(mp, (s, N.gamma[s]))
            if N.gamma[y] != b:
                return False
    return True


def norm_digraph(pf: ParamFamily) -> NormDigraph:
    hc = pf.hol
    t = len(pf)
    adj = [[i == j or member_normalizes(hc, pf.members[i], pf.members[j]) for j in range(t)]
           for i in range(t)]
    for j in range(t):
        if not (adj[0][j] and adj[j][0]):
            raise InternalCheckError("lambda(G) and a member of S∩R fail to normalize each other")
    return NormDigraph(list(range(t)), adj)


def compute_Q(dg: NormDigraph, pf: ParamFamily) -> ParamFamily:
    t = len(pf)
    cols = [j for j in range(t) if all(dg.adj[i][j] for i in range(t))]
    for i in cols:
        for j in cols:
            if not dg.adj[i][j]:
                raise InternalCheckError("Q(G) is not mutually normalizing")
    q = pf.sub(cols)
    hc = pf.hol
    if hc.hSet and not all(H.gamma in q.index for H in hc.hSet):
        raise InternalCheckError("H(G) is not contained in Q(G)")
    return q


def q_by_containment(pf: ParamFamily) -> list[int]:
    """Q(G) via: M belongs iff every member of S∩R lies in Norm(M), where
    Norm(M) = beta Hol beta^-1 for the conjugator beta of M."""
    hc = pf.hol
    out = []
    for j, b in enumerate(pf.reps):
        bi = inverse(b)
        ok = True
        for N in pf.members:
            for g in N.generators:
                if not hc.in_hol(conjugate(bi, g)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(j)
    return out


@dataclass
class StructuralReport:
    h_divides_q: bool
    h_orbits_inside_q: bool
    equal_q: bool
    proper_when_required: bool | None
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.h_divides_q and self.h_orbits_inside_q and self.equal_q and \
            self.proper_when_required is not False


def structural_checks(qf: ParamFamily, hf, sr_size: int | None = None) -> StructuralReport:
    hc = qf.hol
    hq = [qf.index[H.gamma] for H in hf]
    t = len(qf)
    divides = t % len(hf) == 0
    inside = True
    equal = True
    details = []
    for i in range(t):
        image = set()
        for j in range(t):
            k, esc = conj_image(qf, i, j)
            if k is None:
                equal = False
                if j in hq:
                    inside = False
                details.append((i, j))
            else:
                image.add(k)
        if image != set(range(t)):
            equal = False
    proper = None
    if sr_size is not None and not hc.ctx.group.is_abelian() and sr_size % 2 == 1:
        proper = t < sr_size
    return StructuralReport(divides, inside, equal, proper, details)


# -- coset unions -------------------------------------------------------------

class CosetUnion:
    def __init__(self, hc: HolContext, reps, members=None):
        self.hc = hc
        self.reps = [tuple(r) for r in reps]
        if self.reps[0] != tuple(range(hc.n)):
            raise InternalCheckError("first representative must be the identity")
        if members is None:
            members = [hc.regular_from_perms([conjugate(b, g) for g in hc.ctx.lam.generators])
                       for b in self.reps]
            if any(m is None for m in members):
                raise InternalCheckError("a representative conjugates lambda(G) out of Hol(G)")
        self.members = list(members)
        self.index = {M.gamma: i for i, M in enumerate(self.members)}
        if len(self.index) != len(self.reps):
            raise InternalCheckError("cosets are not distinct")
        self.closed = False
        self.A = len(hc.auts)
        self.hol_size = hc.n * self.A

    @property
    def t(self) -> int:
        return len(self.reps)

    @property
    def order(self) -> int:
        return self.t * self.hol_size

    def coset_of(self, perm) -> int | None:
        M = self.hc.regular_from_perms([conjugate(perm, g) for g in self.hc.ctx.lam.generators])
        if M is None:
            return None
        return self.index.get(M.gamma)

    def __contains__(self, perm) -> bool:
        return self.coset_of(perm) is not None

    def verify_closed(self):
        """Fill the conjugation table; returns a witness (i, j) on failure."""
        fam = ParamFamily(self.members, self.reps, self.hc)
        out = conj_closed_check(fam)
        if not out.closed:
            return out
        self.Pb = out.table
        self._build_arithmetic()
        self.closed = True
        return out

    # -- arithmetic ------------------------------------------------------------
    def _hol_perm_action(self, pair) -> list[int]:
        hc = self.hc
        out = []
        for N in self.members:
            gens = [hc.pconj(pair, (s, N.gamma[s])) for s in N.gen_points]
            M = hc.regular_from_pairs(gens)
            k = self.index.get(M.gamma) if M is not None else None
            if k is None:
                raise InternalCheckError("Hol(G) does not permute the members")
            out.append(k)
        return out

    def _hol_part(self, k, perm_left, j) -> int:
        """Hol index of beta_k^-1 * perm_left * beta_j."""
        hc = self.hc
        x = compose(inverse(self.reps[k]), compose(perm_left, self.reps[j]))
        p = hc.perm_pair(x)
        if p is None:
            raise InternalCheckError("coset decomposition left Hol(G)")
        return p[0] * self.A + p[1]

    def hmul(self, x: int, y: int) -> int:
        A = self.A
        g1, a1 = divmod(x, A)
        g2, a2 = divmod(y, A)
        hc = self.hc
        return hc.mul[g1][hc.auts[a1][g2]] * A + hc.acomp(a1, a2)

    def hol_pair(self, h: int):
        return divmod(h, self.A)

    def _build_arithmetic(self):
        hc = self.hc
        t, A = self.t, self.A
        gens = [(z, 0) for z in hc.lam_points if z] + [(0, a) for a in hc.aut_gens]
        gidx = [g * A + a for g, a in gens]
        P = {0: list(range(t))}
        D = {0: [0] * t}
        gP, gD = {}, {}
        for (g, a), s in zip(gens, gidx):
            gP[s] = self._hol_perm_action((g, a))
            sp = hc.pair_perm((g, a))
            gD[s] = [self._hol_part(gP[s][j], sp, j) for j in range(t)]
        queue = [0]
        for h in queue:
            Ph, Dh = P[h], D[h]
            for s in gidx:
                y = self.hmul(h, s)
                if y in P:
                    continue
                Ps, Ds = gP[s], gD[s]
                P[y] = [Ph[Ps[j]] for j in range(t)]
                D[y] = [self.hmul(Dh[Ps[j]], Ds[j]) for j in range(t)]
                queue.append(y)
        if len(P) != self.hol_size:
            raise InternalCheckError("Hol(G) enumeration in index form is incomplete")
        self.P = [P[h] for h in range(self.hol_size)]
        self.D = [D[h] for h in range(self.hol_size)]
        self.C = [[self._c_entry(i, k) for k in range(t)] for i in range(t)]

    def _c_entry(self, i, k) -> int:
        m = self.Pb[i][k]
        x = compose(inverse(self.reps[m]), compose(self.reps[i], self.reps[k]))
        p = self.hc.perm_pair(x)
        if p is None:
            raise InternalCheckError("beta_i beta_k left its coset")
        return p[0] * self.A + p[1]

    def mult(self, x, y):
        i, h = x
        j, h2 = y
        k = self.P[h][j]
        m = self.Pb[i][k]
        return (m, self.hmul(self.hmul(self.C[i][k], self.D[h][j]), h2))

    def elem_perm(self, x) -> tuple:
        i, h = x
        return compose(self.reps[i], self.hc.pair_perm(divmod(h, self.A)))

    def induced(self, x) -> list[int]:
        """The permutation of member indices induced by conjugation."""
        i, h = x
        Pi, Ph = self.Pb[i], self.P[h]
        return [Pi[Ph[j]] for j in range(self.t)]

    def elem_order(self, x, cap=None) -> int:
        k, y = 1, x
        while y != (0, 0):
            y = self.mult(y, x)
            k += 1
            if cap is not None and k > cap:
                return -1
        return k

    def coset_order(self, i: int) -> int:
        """Least k with beta_i^k in Hol(G) (meaningful when Hol is normal)."""
        k, y = 1, (i, 0)
        while y[0] != 0:
            y = self.mult(y, (i, 0))
            k += 1
        return k

    def coset_has_element_of_order(self, i: int, k: int) -> bool:
        if not self.closed:
            self.verify_closed()
        return any(self.elem_order((i, h), cap=k) == k for h in range(self.hol_size))

    def phi_fixed(self, i: int) -> bool:
        """Phi(beta Hol) = Hol beta^-1 equals beta Hol (Hol normal case)."""
        return self.coset_of(inverse(self.reps[i])) == i

    def random_element(self, rng: random.Random):
        return (rng.randrange(self.t), rng.randrange(self.hol_size))


@dataclass
class QholResult:
    verdict: str  # "group" | "not-closed" | "inconclusive"
    union: CosetUnion | None = None
    witness: object = None


def build_qhol(qf: ParamFamily) -> QholResult:
    hc = qf.hol
    cu = CosetUnion(hc, qf.reps, qf.members)
    out = cu.verify_closed()
    if not out.closed:
        return QholResult("not-closed", cu, out)
    for i, b in enumerate(cu.reps):
        M = hc.regular_from_perms([conjugate(b, g) for g in hc.ctx.lam.generators])
        if M is None or M.gamma != qf.members[i].gamma:
            raise InternalCheckError("orbit of lambda(G) differs from Q(G)")
    if cu.order != len(qf) * hc.n * len(hc.auts):
        raise InternalCheckError("|QHol| != |Q| |Hol|")
    return QholResult("group", cu)


def coprime_product_check(spec1: str, spec2: str, q_of) -> dict:
    """Compare |Q(G1 x G2)| with |Q(G1)| |Q(G2)|; ``q_of(spec)`` returns |Q|."""
    from .catalog import group_from_spec
    n1, n2 = group_from_spec(spec1).n, group_from_spec(spec2).n
    if math.gcd(n1, n2) != 1:
        raise ValueError("orders are not coprime")
    a, b = q_of(spec1), q_of(spec2)
    c = q_of(f"DP:{spec1}*{spec2}")
    return {"spec1": spec1, "spec2": spec2, "q1": a, "q2": b, "q_product": c, "ok": a * b == c}


def clique_extension(pf: ParamFamily, dg: NormDigraph, q_indices) -> list[int] | None:
    """A member outside Q that normalizes and is normalized by all of Q, if any."""
    qs = set(q_indices)
    for j in range(len(pf)):
        if j in qs:
            continue
        if all(dg.adj[j][i] and dg.adj[i][j] for i in qs):
            return sorted(qs | {j})
    return None


def witness_text(out) -> str:
    gens = ", ".join(format_cycles(g) for g in out.escaping.generators)
    return (f"beta_{out.i} N_{out.j} beta_{out.i}^-1 = <{gens}> "
            f"(in Hol: {out.escaping_in_hol}, normalized by lambda: {out.escaping_normalized_by_lambda})")


@dataclass
class Families:
    """S∩R, H and Q of one group as computed by direct search."""
    hol: HolContext
    sr: ParamFamily
    h: list
    digraph: NormDigraph
    q: ParamFamily

    def gammas(self, which: str) -> set:
        fam = {"sr": self.sr.members, "h": self.h, "q": self.q.members}[which]
        return {N.gamma for N in fam}


def families(hc: HolContext, budget: int | None = None) -> Families:
    from .holomorph import compute_H
    from .regsets import enumerate_SR
    sr = enumerate_SR(hc) if budget is None else enumerate_SR(hc, budget)
    pf = family(hc, sr)
    H = compute_H(hc, pf.members)
    dg = norm_digraph(pf)
    return Families(hc, pf, H, dg, compute_Q(dg, pf))
