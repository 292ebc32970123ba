"""The holomorph of G, its regular subgroups in pair form, and H(G).

An element of Hol(G) is stored as a pair ``(g, a)``: a point of G and the
index of an automorphism, acting as ``x -> g * a(x)``.  Then
``(g, a)(h, b) = (g * a(h), a b)`` and a permutation ``p`` lies in Hol(G)
exactly when ``x -> p(0)^-1 p(x)`` is an automorphism.

A regular subgroup N of Hol(G) has exactly one element over each point, so
it is determined by ``gamma``: point -> automorphism index.  Its circle
group ``g o h = g * gamma(g)(h)`` is the abstract group of N.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import iso
from .catalog import FiniteGroup, RegularContext
from .errors import BudgetExceeded, InternalCheckError
from .perm_core import PermGroup, compose, conjugate, inverse


class HolContext:
    def __init__(self, ctx: RegularContext, budget: int = iso.DEFAULT_BUDGET):
        self.ctx = ctx
        G = ctx.group
        self.n = G.n
        self.mul = G.mul
        self.inv = G.inv
        self.auts = iso.automorphisms(G, budget)
        self.aut_index = {a: i for i, a in enumerate(self.auts)}
        if self.auts[0] != tuple(range(self.n)):
            raise InternalCheckError("identity automorphism is not first")
        self.aut_inv = [self.aut_index[inverse(a)] for a in self.auts]
        self._comp: dict[int, int] = {}
        self.autG = PermGroup(self.n, iso._aut_generators(self.auts, self.aut_index) or [self.auts[0]],
                              elements=self.auts, name="A(G)")
        self.aut_gens = [self.aut_index[a] for a in self.autG.generators]
        self.aut_gens = [a for a in self.aut_gens if a != 0]
        self.lam_points = _generator_points(ctx)
        self.hol = PermGroup(self.n, list(ctx.lam.generators) + list(self.autG.generators),
                             order=self.n * len(self.auts), member=self.in_hol, name="Hol(G)")
        self.hSet: list[RegularSubgroup] = []
        self.hConjugators: list[tuple] = []
        self._orders = None

    # -- pair arithmetic ----------------------------------------------------
    def acomp(self, a: int, b: int) -> int:
        key = a * len(self.auts) + b
        c = self._comp.get(key)
        if c is None:
            A, B = self.auts[a], self.auts[b]
            c = self.aut_index[tuple(A[x] for x in B)]
            self._comp[key] = c
        return c

    def pmul(self, p, q):
        (g, a), (h, b) = p, q
        return (self.mul[g][self.auts[a][h]], self.acomp(a, b))

    def pinv(self, p):
        g, a = p
        ai = self.aut_inv[a]
        return (self.auts[ai][self.inv[g]], ai)

    def pconj(self, m, x):
        """m x m^-1 in pair form."""
        return self.pmul(self.pmul(m, x), self.pinv(m))

    def pair_perm(self, p) -> tuple:
        g, a = p
        row, A = self.mul[g], self.auts[a]
        return tuple(row[A[x]] for x in range(self.n))

    def perm_pair(self, perm):
        """(g, a) for a permutation in Hol(G), else None."""
        g = perm[0]
        row = self.mul[self.inv[g]]
        a = self.aut_index.get(tuple(row[y] for y in perm))
        return None if a is None else (g, a)

    def in_hol(self, perm) -> bool:
        return len(perm) == self.n and self.perm_pair(perm) is not None

    def pair_order(self, p) -> int:
        k, x = 1, p
        while x != (0, 0):
            x = self.pmul(x, p)
            k += 1
        return k

    def pair_orders(self):
        """order[g][a] of (g, a), via order(a) * order of g a(g) ... a^(k-1)(g)."""
        if self._orders is None:
            G_orders = self.ctx.group.orders
            aut_order = []
            for i in range(len(self.auts)):
                k, c = 1, i
                while c != 0:
                    c = self.acomp(c, i)
                    k += 1
                aut_order.append(k)
            self.aut_order = aut_order
            table = []
            for g in range(self.n):
                row = []
                for a, A in enumerate(self.auts):
                    k = aut_order[a]
                    c, y = 0, g
                    for _ in range(k):
                        c = self.mul[c][y]
                        y = A[y]
                    row.append(k * G_orders[c])
                table.append(row)
            self._orders = table
        return self._orders

    def lam_pair(self, g):
        return (g, 0)

    def rho_pair(self, g):
        # rho(g)(x) = x g^-1 = g^-1 (g x g^-1)
        gi = self.inv[g]
        inner = tuple(self.mul[self.mul[g][x]][gi] for x in range(self.n))
        return (gi, self.aut_index[inner])

    def pair_closure(self, gens, cap=None) -> set:
        elems = {(0, 0)}
        frontier = [(0, 0)]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.pmul(x, s)
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
                        if cap is not None and len(elems) > cap:
                            raise BudgetExceeded("pair closure", cap, len(elems))
            frontier = nxt
        return elems

    # -- regular subgroups ---------------------------------------------------
    def regular_from_pairs(self, gens) -> "RegularSubgroup | None":
        """The subgroup generated by ``gens`` if it is regular, else None."""
        gamma = [-1] * self.n
        gamma[0] = 0
        elems = [0]
        k = 0
        while k < len(elems):
            x = elems[k]
            for s in gens:
                y, b = self.pmul((x, gamma[x]), s)
                if gamma[y] == -1:
                    gamma[y] = b
                    elems.append(y)
                elif gamma[y] != b:
                    return None
            k += 1
        if len(elems) != self.n:
            return None
        return RegularSubgroup(self, tuple(gamma))

    def regular_from_perms(self, perms) -> "RegularSubgroup | None":
        pairs = []
        for p in perms:
            q = self.perm_pair(p)
            if q is None:
                return None
            pairs.append(q)
        return self.regular_from_pairs(pairs)

    def normal_in_hol(self, N: "RegularSubgroup") -> bool:
        conj = [(z, 0) for z in self.lam_points] + [(0, a) for a in self.aut_gens]
        for m in conj:
            for s in N.gen_points:
                y, b = self.pconj(m, (s, N.gamma[s]))
                if N.gamma[y] != b:
                    return False
        return True

    def lam(self) -> "RegularSubgroup":
        return RegularSubgroup(self, (0,) * self.n)


def _generator_points(ctx: RegularContext) -> list[int]:
    return [g[0] for g in ctx.lam.generators if g[0] != 0] or [0]


class RegularSubgroup(PermGroup):
    """A regular subgroup of Hol(G) in gamma form."""

    __slots__ = ("hc", "gamma", "gen_points", "_circle")

    def __init__(self, hc: HolContext, gamma: tuple):
        self.hc = hc
        self.gamma = tuple(gamma)
        self._circle = None
        circ = self.circle()
        self.gen_points = iso.small_generating_set(circ) if hc.n > 1 else [0]
        gens = [hc.pair_perm((x, self.gamma[x])) for x in self.gen_points]
        super().__init__(hc.n, gens, order=hc.n, member=self._member_test)

    def _member_test(self, perm) -> bool:
        q = self.hc.perm_pair(perm)
        return q is not None and self.gamma[q[0]] == q[1]

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = frozenset(self.hc.pair_perm((x, a)) for x, a in enumerate(self.gamma))
        return self._elements

    def element_at(self, x: int) -> tuple:
        return self.hc.pair_perm((x, self.gamma[x]))

    def circle(self) -> FiniteGroup:
        if self._circle is None:
            hc = self.hc
            mul = [[hc.mul[g][hc.auts[a][h]] for h in range(hc.n)] for g, a in enumerate(self.gamma)]
            self._circle = FiniteGroup(mul, verify=False)
        return self._circle

    def key(self):
        return self.gamma

    def __eq__(self, other):
        if isinstance(other, RegularSubgroup):
            return self.gamma == other.gamma
        return PermGroup.__eq__(self, other)

    def __hash__(self):
        return hash(self.gamma)

    def __repr__(self):
        return f"<RegularSubgroup order={self.hc.n}>"


def build_hol(ctx: RegularContext, budget: int = iso.DEFAULT_BUDGET) -> HolContext:
    hc = HolContext(ctx, budget)
    _verify_hall(hc)
    return hc


def _verify_hall(hc: HolContext) -> None:
    """|<lambda, A>| = |<rho, A>| = |G| |Aut(G)| by orbit-stabilizer: both
    groups are transitive and every Schreier generator of the stabilizer
    of point 0 is an automorphism."""
    autset = hc.aut_index
    A = list(hc.autG.generators)
    lam = [tuple(hc.mul[z]) for z in hc.lam_points]
    rho = [hc.ctx.group.rho_perm(z) for z in hc.lam_points]
    for gens in (lam + A, rho + A):
        transversal = {0: tuple(range(hc.n))}
        queue = [0]
        for x in queue:
            for s in gens:
                y = s[x]
                if y not in transversal:
                    transversal[y] = compose(s, transversal[x])
                    queue.append(y)
        if len(transversal) != hc.n:
            raise InternalCheckError("holomorph generators are not transitive")
        for x, u in transversal.items():
            for s in gens:
                w = compose(inverse(transversal[s[x]]), compose(s, u))
                if w not in autset:
                    raise InternalCheckError("point stabilizer is larger than A(G)")
    for g in hc.autG.generators:
        if g[0] != 0:
            raise InternalCheckError("automorphism moves the identity point")


def conjugator(src: PermGroup, dst: PermGroup, iso_map: dict) -> tuple:
    """beta with beta src beta^-1 = dst, from an isomorphism src -> dst given as
    a dict of permutations: beta(x) = iso(s_x)(0) where s_x(0) = x."""
    d = src.degree
    beta = [0] * d
    for s in src.elements:
        beta[s[0]] = iso_map[s][0]
    beta = tuple(beta)
    for g in src.generators:
        if conjugate(beta, g) not in dst:
            raise InternalCheckError("conjugator does not conjugate src onto dst")
    return beta


def regular_conjugator(hc: HolContext, N: RegularSubgroup) -> tuple:
    """beta with beta lambda(G) beta^-1 = N: beta is an isomorphism
    G -> (G, o_N) read as a point map."""
    f = iso.isomorphism(hc.ctx.group, N.circle())
    if f is None:
        raise InternalCheckError("member is not isomorphic to G")
    beta = tuple(f)
    for z in hc.lam_points:
        img = conjugate(beta, (tuple(hc.mul[z])))
        if not N._member_test(img):
            raise InternalCheckError("conjugator check failed")
    return beta


def compute_H(hc: HolContext, S) -> list:
    """Members of S normal in Hol(G).  A regular normal N has Hol(G) inside
    Norm_B(N); both normalizers have order |G||Aut(G)| because N is
    conjugate to lambda(G) in B, so they are equal."""
    H = [N for N in S if hc.normal_in_hol(N)]
    hc.hSet = H
    hc.hConjugators = [regular_conjugator(hc, N) if i else tuple(range(hc.n))
                       for i, N in enumerate(H)]
    if not H or H[0].gamma != (0,) * hc.n:
        raise InternalCheckError("lambda(G) must come first in H(G)")
    return H


@dataclass
class SplitVerdict:
    status: str  # "split" | "not-split" | "inconclusive"
    witness: object = None
    obstruction: object = None
    notes: list = field(default_factory=list)


def order_obstruction(cu) -> object:
    """A coset beta Hol whose order k in T(G) is matched by no element of
    order k inside the coset, or None.  Any complement would contain such an
    element, so a hit proves non-splitness."""
    if not cu.closed:
        cu.verify_closed()
    for i in range(1, cu.t):
        k = cu.coset_order(i)
        if not cu.coset_has_element_of_order(i, k):
            return {"index": i, "rep": cu.reps[i], "coset_order": k,
                    "phi_fixed": cu.phi_fixed(i)}
    return None


def nhol_split_verdict(hc: HolContext, budget: int = iso.DEFAULT_BUDGET) -> SplitVerdict:
    from .zappa import find_complements
    from .quasi import CosetUnion
    if len(hc.hSet) <= 1:
        return SplitVerdict("split", witness=[tuple(range(hc.n))], notes=["T(G) is trivial"])
    cu = CosetUnion(hc, list(hc.hConjugators), members=list(hc.hSet))
    out = cu.verify_closed()
    if not out.closed:
        raise InternalCheckError("the H(G) cosets do not form a group")
    obstruction = order_obstruction(cu)
    res = find_complements(cu, max_count=1, budget=budget)
    if res.verdict == "ZS":
        if obstruction is not None:
            raise InternalCheckError("complement found despite an order obstruction")
        return SplitVerdict("split", witness=res.complements[0])
    if res.verdict == "not-ZS":
        return SplitVerdict("not-split", obstruction=obstruction)
    return SplitVerdict("inconclusive", obstruction=obstruction, notes=[res.note])
