"""Explicit constructions for cyclic p-groups and dihedral groups, checked
against the search-based families.

Points are catalog indices: for C:p^n the point k is sigma^k, for D:n the
point i is x^i and n + i is t x^i.  Every construction is turned into
regular subgroups of Hol(G) (gamma keys) so it can be compared setwise with
``quasi.families``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from . import catalog
from .errors import SpecError
from .holomorph import HolContext, build_hol
from .perm_core import (PermGroup, compose, conjugate, cycles, generate, identity, inverse,
                        normalizes, perm_order, power)
from .quasi import CosetUnion, Families, families


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CheckReport:
    subject: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        out = [f"{'ok  ' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
               for c in self.checks]
        return out + [f"note {t}" for t in self.notes]


def vp(p: int, x: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of 0")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _vp_mod(p: int, x: int) -> int:
    return 40 if x == 0 else vp(p, x)


def unit_order(u: int, mod: int) -> int:
    k, y = 1, u % mod
    while y != 1 % mod:
        y = y * u % mod
        k += 1
    return k


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


# -- cyclic p-groups ----------------------------------------------------------

class CyclicForms:
    def __init__(self, p: int, n: int):
        if not _is_prime(p) or n < 1 or p ** n > 64:
            raise SpecError(f"need p prime and p^n <= 64, got p={p}, n={n}")
        self.p, self.n = p, n
        self.N = p ** n
        self.m = n // 2
        self.step = p ** (n - self.m)
        self.u = 1 + self.step
        N, step = self.N, self.step
        self.sigma = tuple((x + 1) % N for x in range(N))
        # sigma_i moves the points congruent to i-1 mod step
        self.sigma_i = [tuple((x + step) % N if x % step == i else x for x in range(N))
                        for i in range(step)]
        self.gamma = self._product([i for i in range(step)])
        self.beta = self._product([self.t(i) for i in range(step)])

    @staticmethod
    def t(j: int) -> int:
        return j * (j + 1) // 2

    def _product(self, exps) -> tuple:
        out = identity(self.N)
        for s, e in zip(self.sigma_i, exps):
            out = compose(out, power(s, e))
        return out

    def element(self, e: int) -> tuple:
        """gamma^e sigma."""
        return compose(power(self.gamma, e), self.sigma)

    def delta(self, s: int) -> tuple:
        return tuple(s * x % self.N for x in range(self.N))

    def n_s(self, s: int) -> tuple:
        """Generator (sigma, delta_s): x -> 1 + s x."""
        return tuple((1 + s * x) % self.N for x in range(self.N))

    @cached_property
    def hol(self) -> HolContext:
        return build_hol(catalog.build(f"C:{self.N}"))

    @cached_property
    def fam(self) -> Families:
        return families(self.hol)


def _gamma_of(hc: HolContext, perms):
    M = hc.regular_from_perms(list(perms))
    return None if M is None else M.gamma


def cyclic_identity_suite(p: int, n: int, cf: CyclicForms | None = None) -> CheckReport:
    cf = cf or CyclicForms(p, n)
    N, m, u = cf.N, cf.m, cf.u
    rep = CheckReport(f"C{N}")
    regular_case = p > 2 or n >= 3 or n == 1
    rep.add("gamma fixes the identity point", cf.gamma[0] == 0)
    conj = compose(compose(cf.gamma, cf.sigma), inverse(cf.gamma))
    rep.add("gamma sigma gamma^-1 = sigma^u", conj == power(cf.sigma, u), f"u={u}")
    sig = PermGroup(N, [cf.sigma])
    rep.add("gamma normalizes <sigma>", normalizes(PermGroup(N, [cf.gamma]), sig))

    # valuation identities over the integers; p = 2 needs 4 | u - 1
    lte = p > 2 or cf.step >= 4
    ks = range(1, 4 * N + 1)
    a_ok = all(vp(p, u ** k - 1) == (n - m) + vp(p, k) for k in ks)
    # the sums are reduced mod p^L; any valuation below L is then exact
    big = p ** 40
    b_ok = all(_vp_mod(p, sum(pow(u, e * j, big) for j in range(tt)) % big) == vp(p, tt)
               for e in range(1, 2 * N + 1) for tt in range(1, 2 * N + 1))
    if lte:
        rep.add("valuation (a)", a_ok)
        rep.add("valuation (b)", b_ok)
    else:
        rep.note(f"valuation (a) holds: {a_ok}, (b) holds: {b_ok}; not asserted since "
                 f"u - 1 = {u - 1} is not divisible by 4")
    order_u = unit_order(u, N)
    rep.add("|u| = p^m", order_u == p ** m, f"|u|={order_u}, p^m={p ** m}")
    if order_u != 2 ** m:
        rep.note(f"|u| = {order_u} differs from 2^m = {2 ** m}")

    orders = [perm_order(cf.element(e)) for e in range(p ** m)]
    if regular_case:
        rep.add("|gamma^e sigma| = p^n", all(o == N for o in orders), str(orders))
    else:
        rep.note(f"orders of gamma^e sigma for C{N}: {orders}")

    if regular_case and p > 2 and n >= 2:
        # every S∩R member contains a generator (sigma^i, a) with i a unit and
        # a of order dividing p^(n-m)
        hc = cf.hol
        ok = True
        for M in cf.fam.sr.members:
            found = False
            for x in range(N):
                if x % p == 0:
                    continue
                a = M.gamma[x]
                w = hc.auts[a][1]
                if pow(w, p ** (n - m), N) == 1 and hc.pair_order((x, a)) == N:
                    found = True
                    break
            ok = ok and found
        rep.add("S∩R members have generators (sigma^i, delta^(p^k(p-1)))", ok)
    return rep


def cyclic_SR_closed_form(p: int, n: int, cf: CyclicForms | None = None) -> list[PermGroup]:
    """The groups <gamma^e sigma>, e in Z_(p^m).  For C2 and C4 only <sigma>
    is cyclic and regular, so that family is returned instead."""
    cf = cf or CyclicForms(p, n)
    if p == 2 and n == 2:
        return [PermGroup(cf.N, [cf.sigma])]
    return [PermGroup(cf.N, [cf.element(e)]) for e in range(p ** cf.m)]


def c2n_Q_and_H(n: int) -> tuple[set, set]:
    """Unit index sets s (mod 2^n) of Q(C_2^n) and H(C_2^n), groups N_s = <(sigma, delta_s)>."""
    if n < 3 or 2 ** n > 64:
        raise SpecError("need 3 <= n and 2^n <= 64")
    M = 2 ** n
    r = (n - 3) // 2
    g = pow(5, 2 ** r, M)
    q, y = set(), 1
    while y not in q:
        q.add(y)
        y = y * g % M
    return q, {1, pow(5, 2 ** (n - 3), M)}


def cyclic_oracle_check(p: int, n: int, cf: CyclicForms | None = None) -> CheckReport:
    """Set equality of the explicit families with the searched S∩R, Q, H."""
    cf = cf or CyclicForms(p, n)
    hc, fam = cf.hol, cf.fam
    rep = CheckReport(f"C{cf.N}")
    closed = cyclic_SR_closed_form(p, n, cf)
    keys = [_gamma_of(hc, G.generators) for G in closed]
    rep.add("closed-form groups are regular members of Hol", None not in keys)
    rep.add("closed-form groups are pairwise distinct", len(set(keys)) == len(keys))
    rep.add("e = 0 gives lambda(G)", keys[0] == (0,) * cf.N)
    rep.add("S∩R equals the closed form", set(keys) == fam.gammas("sr"),
            f"{len(set(keys))} vs {len(fam.sr)}")
    rep.add("Q = S∩R", fam.gammas("q") == fam.gammas("sr"))
    if p == 2 and n >= 3:
        from .regsets import enumerate_S
        q_idx, h_idx = c2n_Q_and_H(n)
        S = {N.gamma for N in enumerate_S(hc)}
        closed = {_gamma_of(hc, [cf.n_s(s)]) for s in range(1, cf.N, 4)}
        rep.add("S = {N_s : s = 1 mod 4}", S == closed, f"|S|={len(S)}")
        rep.add("|S| = 2^(n-2)", len(S) == 2 ** (n - 2))
        qk = {_gamma_of(hc, [cf.n_s(s)]) for s in q_idx}
        hk = {_gamma_of(hc, [cf.n_s(s)]) for s in h_idx}
        rep.add("Q index set", qk == fam.gammas("q"), f"s in {sorted(q_idx)}")
        rep.add("H index set", hk == fam.gammas("h"), f"s in {sorted(h_idx)}")
        rep.add("|Q| = 2^[n/2]", len(fam.q) == 2 ** (n // 2))
    else:
        rep.add("|H| = 1 for odd p" if p > 2 else "|H| = 1", len(fam.h) == 1)
    return rep


def beta_parameterization_check(p: int, n: int, cf: CyclicForms | None = None,
                                complements: bool = True) -> CheckReport:
    cf = cf or CyclicForms(p, n)
    hc, fam = cf.hol, cf.fam
    N, pm = cf.N, p ** cf.m
    rep = CheckReport(f"C{N}")
    sigma, beta, gamma = cf.sigma, cf.beta, cf.gamma
    qkeys = fam.gammas("q")
    lam_gens = hc.ctx.lam.generators

    def image(b):
        return _gamma_of(hc, [conjugate(b, g) for g in lam_gens])

    if p == 2 and n == 2:
        rep.add("Q(C4) = {lambda}", qkeys == {(0,) * N})
        rep.note("C4: gamma sigma has order 2, so only <sigma> is parameterized")
        return rep
    if p > 2 or n % 2 == 1:
        rep.add("beta^e sigma beta^-e = gamma^e sigma",
                all(conjugate(power(beta, e), sigma) == cf.element(e) for e in range(pm)))
        B = generate([beta], N)
        rep.add("|<beta>| = |Q|", B.order == len(fam.q), f"{B.order}")
        rep.add("<beta> meets Hol trivially",
                all(not hc.in_hol(b) for b in B.elements if b != identity(N)))
        imgs = [image(b) for b in B.elements]
        rep.add("<beta> parameterizes Q", set(imgs) == qkeys and len(set(imgs)) == len(imgs))
        return rep
    # p = 2, n even
    gs = cf.element(1)
    rep.add("beta^2k gamma sigma beta^-2k = gamma^(2k+1) sigma",
            all(conjugate(power(beta, 2 * k), gs) == cf.element(2 * k + 1) for k in range(pm)))
    rep.add("beta^2 commutes with gamma",
            compose(power(beta, 2), gamma) == compose(gamma, power(beta, 2)))
    B2 = generate([power(beta, 2)], N)
    n1 = _gamma_of(hc, [gs])
    orb_lam = {image(b) for b in B2.elements}
    orb_n1 = {_gamma_of(hc, [conjugate(b, gs)]) for b in B2.elements}
    odd = {_gamma_of(hc, [cf.element(e)]) for e in range(1, pm, 2)}
    even = {_gamma_of(hc, [cf.element(e)]) for e in range(0, pm, 2)}
    rep.add("Orb_<beta^2>(lambda) = {N_e : e even}", orb_lam == even)
    rep.add("Orb_<beta^2>(N_1) = {N_e : e odd}", orb_n1 == odd and n1 in qkeys)
    rep.add("beta lambda beta^-1 is not in Q", image(beta) not in qkeys)
    if complements:
        from . import iso
        from .zappa import find_complements
        cu = CosetUnion(hc, list(fam.q.reps), list(fam.q.members))
        res = find_complements(cu, max_count=10_000, symmetry=True)
        cyc = [c for c in res.complements
               if iso.fingerprint(c.table()).exponent == len(fam.q)]
        rep.add("a cyclic complement of Hol in QHol exists", bool(cyc),
                f"{len(res.complements)} complements, {len(cyc)} cyclic")
    return rep


# -- dihedral groups ------------------------------------------------------------

class DihedralForms:
    def __init__(self, n: int):
        if n < 3 or 2 * n > 64:
            raise SpecError(f"need 3 <= n and 2n <= 64, got {n}")
        self.n = n
        G = catalog.dihedral(n)
        self.group = G
        self.lx, self.lt = G.lambda_perm(1), G.lambda_perm(n)
        self.rx, self.rt = G.rho_perm(1), G.rho_perm(n)
        xs = set(range(n))
        ys = set(range(n, 2 * n))
        self.blocks = {0: (frozenset(xs), frozenset(ys))}
        if n % 2 == 0:
            ev = {i for i in range(n) if i % 2 == 0}
            od = xs - ev
            x1 = frozenset(ev | {n + i for i in ev})
            x2 = frozenset(ev | {n + i for i in od})
            allp = frozenset(range(2 * n))
            self.blocks[1] = (x1, allp - x1)
            self.blocks[2] = (x2, allp - x2)
        self.upsilon = [u for u in range(1, n) if math.gcd(u, n) == 1 and u * u % n == 1]
        self.v = n // 2 + 1

    def point(self, a: int, b: int) -> int:
        """Index of t^a x^b."""
        return (a % 2) * self.n + b % self.n

    def phi(self, i: int, j: int) -> tuple:
        """phi_(i,j)(t^a x^b) = t^a x^(ia + jb)."""
        return tuple(self.point(a, i * a + j * b) for a in (0, 1) for b in range(self.n))

    def aut_family(self) -> set:
        return {self.phi(i, j) for i in range(self.n) for j in range(self.n)
                if math.gcd(j, self.n) == 1}

    def tau(self, u: int) -> tuple:
        n = self.n
        return tuple(list(range(n)) + [n + u * i % n for i in range(n)])

    def k_xy(self, u: int) -> tuple:
        n = self.n
        return tuple([(i + 1) % n for i in range(n)] + [n + (j + u) % n for j in range(n)])

    @cached_property
    def subscripts(self) -> list:
        """i_e from i_0 = 0 and i_((1+e)v) = i_e + 1."""
        n, v = self.n, self.v
        if n % 8:
            raise SpecError("subscripts are defined for 8 | n")
        sub = [-1] * n
        e, k = 0, 0
        while sub[e] == -1:
            sub[e] = k
            e, k = (1 + e) * v % n, k + 1
        if -1 in sub:
            raise SpecError("subscript recurrence does not reach every index")
        return sub

    def psi(self) -> tuple:
        """x^c -> x^(i_((c+1)v) - 1), t x^c -> t x^(i_((c+1)v) - 1)."""
        n, v, sub = self.n, self.v, self.subscripts
        f = [(sub[(c + 1) * v % n] - 1) % n for c in range(n)]
        return tuple(f + [n + y for y in f])

    def tilde_k_xy(self, u: int) -> tuple:
        n, v, sub = self.n, self.v, self.subscripts
        out = [0] * (2 * n)
        for k in range(n):
            out[(sub[k * v % n] - 1) % n] = (sub[(k + 1) * v % n] - 1) % n
        for j in range(n):
            a = (sub[(1 + j * u) * v % n] - 1) % n
            b = (sub[(1 + (j + 1) * u) * v % n] - 1) % n
            out[n + a] = n + b
        return tuple(out)

    def block_tag(self, c: tuple) -> int | None:
        """Which block pair the two orbits of an element of order n form."""
        orbs = {frozenset(o) for o in cycles(c)}
        for k, (X, Y) in self.blocks.items():
            if orbs == {X, Y}:
                return k
        return None

    def char_generator(self, P: PermGroup) -> tuple:
        """An element of order n; for n >= 3 it generates the unique cyclic
        subgroup of index 2."""
        for g in P.sorted_elements():
            if perm_order(g) == self.n:
                return g
        raise SpecError("no element of order n")

    def char_subgroup(self, P: PermGroup) -> frozenset:
        return generate([self.char_generator(P)], 2 * self.n).elements

    @cached_property
    def hol(self) -> HolContext:
        return build_hol(catalog.build(f"D:{self.n}"))

    @cached_property
    def fam(self) -> Families:
        return families(self.hol)


def dihedral_R_count(n: int) -> int:
    ups = len(DihedralForms(n).upsilon)
    if n % 2:
        return ups
    if n % 8 == 0:
        return (n // 2 + 2) * ups
    if n % 4 == 0:
        return (n // 2 + 1) * ups
    return (n + 1) * ups


def dihedral_suite(n: int, df: DihedralForms | None = None, count_R: bool = True) -> CheckReport:
    df = df or DihedralForms(n)
    hc, fam = df.hol, df.fam
    N2 = 2 * n
    rep = CheckReport(f"D:{n}")
    ups = df.upsilon
    rep.add("Upsilon_n members square to 1", all(u * u % n == 1 for u in ups), str(ups))
    rep.add("Aut(D_n) = {phi_(i,j)}", df.aut_family() == set(hc.auts), f"|Aut|={len(hc.auts)}")
    cover = [frozenset(X | Y) for X, Y in df.blocks.values()]
    rep.add("blocks partition the points",
            all(len(X & Y) == 0 and len(X) == len(Y) == n for X, Y in df.blocks.values())
            and all(c == frozenset(range(N2)) for c in cover))
    for k, (X, Y) in df.blocks.items():
        ok = all({frozenset(g[p] for p in X), frozenset(g[p] for p in Y)} == {X, Y}
                 for g in (df.lx, df.lt))
        rep.add(f"lambda preserves {{X{k}, Y{k}}}", ok)

    # block tags of the searched S∩R
    tags = {}
    for M in fam.sr.members:
        tags[M.gamma] = df.block_tag(df.char_generator(M))
    rep.add("every S∩R member has a block tag", None not in tags.values(),
            str(sorted(_count(tags.values()).items())))

    # H from tau_u and the cyclic parts k_X k_Y
    lam_gens = hc.ctx.lam.generators
    taus = [df.tau(u) for u in ups]
    h_from_tau = {_gamma_of(hc, [conjugate(t, g) for g in lam_gens]) for t in taus}
    rep.add("H = {tau_u lambda tau_u^-1}", h_from_tau == fam.gammas("h"), f"|H|={len(fam.h)}")
    char_H = {df.char_subgroup(M) for M in fam.h}
    char_k = {generate([df.k_xy(u)], N2).elements for u in ups}
    rep.add("H char subgroups = <k_X(u) k_Y(u)>", char_H == char_k)
    rep.add("|H| = |Upsilon_n|", len(fam.h) == len(ups))

    q_tagged0 = {g for g, k in tags.items() if k == 0}
    qk = fam.gammas("q")
    if n == 4:
        rep.add("Q(D4) = S∩R with 6 members", qk == fam.gammas("sr") and len(qk) == 6)
        rep.note("for n = 4 the W(X1,Y1) and W(X2,Y2) members lie in Q as well")
    else:
        rep.add("Q = W(X0,Y0) part of S∩R", qk == q_tagged0)
        want = 2 * len(ups) if n % 8 == 0 else len(ups)
        rep.add("|Q| = |Upsilon_n| or 2|Upsilon_n|", len(qk) == want, f"{len(qk)} vs {want}")
    if n % 2 == 1:
        rep.add("Q = H for odd n", qk == fam.gammas("h"))

    # characteristic subgroups of Q against k_X k_Y and the tilde variants
    char_Q = {}
    for M in fam.q.members:
        char_Q.setdefault(df.char_subgroup(M), []).append(M.gamma)
    if n != 4:
        rep.add("Q members are determined by their char subgroup",
                all(len(v) == 1 for v in char_Q.values()))
        expect = set(char_k)
        if n % 8 == 0:
            expect |= {generate([df.tilde_k_xy(u)], N2).elements for u in ups}
        rep.add("Q char subgroups = k_X k_Y (and tilde) families", set(char_Q) == expect)

    # the elementary abelian parameter group
    pi = list(taus)
    if n % 8 == 0:
        psi = df.psi()
        rep.add("psi has order 2", perm_order(psi) == 2)
        rep.add("psi conjugates k_X k_Y(u) to tilde k_X k_Y(u)",
                all(conjugate(psi, df.k_xy(u)) == df.tilde_k_xy(u) for u in ups))
        bad = [u for u in ups if compose(psi, df.tau(u)) != compose(df.tau(u), psi)]
        if bad:
            rep.note(f"psi does not commute with tau_u for u in {bad}, so M_n and psi M_n "
                     "generate a non-elementary-abelian group")
        pi += [compose(psi, t) for t in taus]
    P = generate(pi, N2)
    elems = P.elements
    meets = [g for g in elems if g != identity(N2) and hc.in_hol(g)]
    rep.add("<tau_u, psi> meets Hol trivially" if n % 8 == 0 else "M_n meets Hol trivially",
            not meets, f"order {P.order}")
    imgs = [_gamma_of(hc, [conjugate(g, x) for x in lam_gens]) for g in elems]
    param = set(imgs) == qk and len(set(imgs)) == len(imgs)
    el_ab = _elementary_abelian(elems)
    if n == 4:
        rep.add("M_4 parameterizes H(D4) only", set(imgs) == fam.gammas("h") and not param)
        rep.note("no elementary abelian 2-group can parameterize the 6 members of Q(D4)")
    elif n % 8:
        rep.add("M_n is elementary abelian and parameterizes Q (ZS witness)", el_ab and param)
    else:
        rep.add("<tau_u, psi> parameterizes Q (ZS witness)", param)
        from . import iso
        from .zappa import find_complements
        cu = CosetUnion(hc, list(fam.q.reps), list(fam.q.members))
        res = find_complements(cu, max_count=100_000, symmetry=True)
        ea = [c for c in res.complements if iso.fingerprint(c.table()).exponent == 2]
        rep.add("an elementary abelian complement of Hol in QHol exists", bool(ea),
                f"{len(ea)} of {len(res.complements)} found")

    if count_R:
        _dihedral_R_checks(df, rep)
    return rep


def _elementary_abelian(elems) -> bool:
    elems = list(elems)
    return all(perm_order(g) <= 2 for g in elems) and all(
        compose(a, b) == compose(b, a) for a in elems for b in elems)


def _count(vals) -> dict:
    out: dict = {}
    for v in vals:
        out[v] = out.get(v, 0) + 1
    return out


def _dihedral_R_checks(df: DihedralForms, rep: CheckReport) -> None:
    """R(D_n) via the reflection map applied to S(D_n)."""
    from .regsets import enumerate_S, reflected_R
    hc = df.hol
    n = df.n
    R = reflected_R(hc, enumerate_S(hc))
    rep.add("every R member is normalized by lambda",
            all(normalizes(hc.ctx.lam, P) for P in R))
    rep.add("|R(D_n)| matches the closed count", len(R) == dihedral_R_count(n),
            f"{len(R)} vs {dihedral_R_count(n)}")
    tagged = [(df.block_tag(df.char_generator(P)), P) for P in R]
    rep.add("every R member has a block tag", all(k is not None for k, _ in tagged),
            str(sorted(_count(k for k, _ in tagged).items())))
    if n % 2 == 0:
        rho = PermGroup(2 * n, [df.rx, df.rt])
        off = [P for k, P in tagged if k in (1, 2)]
        normed = [P for P in off if normalizes(rho, P)]
        if n > 4:
            rep.add("no W(X1/X2) member is normalized by rho", not normed, f"{len(off)} members")
            outside = [P for k, P in tagged if k == 1
                       and not all(hc.in_hol(g) for g in P.generators)]
            rep.add("some W(X1,Y1) member is outside Hol", bool(outside), f"{len(outside)} found")
        else:
            rep.add("D4: the W(X1/X2) members are normalized by rho", len(normed) == len(off) == 4)
