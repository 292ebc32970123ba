"""Finite groups from multiplication tables, and their regular representations.

Group-spec grammar::

    C:n              cyclic of order n, labels 1, σ, σ^2, ...
    AB:d1xd2x...     abelian product (mixed radix, last coordinate fastest)
    D:n              dihedral of order 2n, labels x^i then t x^i
    DIC:n            dicyclic of order 4n (DIC:2 is Q8)
    SD:a:b:k         C_a ⋊ C_b, the generator of C_b acting as x -> x^k
    DP:spec1*spec2   direct product
    NAME             one of the named constructors in ``SPECIALS``
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .errors import InternalCheckError, SpecError
from .perm_core import PermGroup, format_cycles, generate


class FiniteGroup:
    """A group given by its Cayley table on indices 0..n-1, identity at 0."""

    def __init__(self, mul, labels=None, name="", verify=True):
        self.n = len(mul)
        self.mul = [list(row) for row in mul]
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.n)]
        self.name = name
        if verify:
            verify_table(self.mul)
        self.inv = [0] * self.n
        for g in range(self.n):
            row = self.mul[g]
            for h in range(self.n):
                if row[h] == 0:
                    self.inv[g] = h
                    break
        self._orders = None

    @property
    def orders(self) -> list[int]:
        if self._orders is None:
            out = []
            for g in range(self.n):
                k, x = 1, g
                while x != 0:
                    x = self.mul[x][g]
                    k += 1
                out.append(k)
            self._orders = out
        return self._orders

    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in range(self.n) for b in range(a))

    def center(self) -> list[int]:
        m = self.mul
        return [z for z in range(self.n) if all(m[z][g] == m[g][z] for g in range(self.n))]

    def subgroup_closure(self, gens: Sequence[int]) -> set[int]:
        elems = {0}
        frontier = [0]
        gens = [g for g in gens if g != 0]
        while frontier:
            nxt = []
            for x in frontier:
                row = self.mul[x]
                for g in gens:
                    y = row[g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return elems

    def lambda_perm(self, g: int) -> tuple:
        return tuple(self.mul[g])

    def rho_perm(self, g: int) -> tuple:
        gi = self.inv[g]
        return tuple(self.mul[h][gi] for h in range(self.n))

    def __repr__(self):
        return f"<FiniteGroup {self.name or '?'} order={self.n}>"


def verify_table(mul) -> None:
    n = len(mul)
    if any(len(row) != n for row in mul):
        raise InternalCheckError("table is not square")
    if list(mul[0]) != list(range(n)) or [mul[i][0] for i in range(n)] != list(range(n)):
        raise InternalCheckError("index 0 is not the identity")
    full = set(range(n))
    for row in mul:
        if set(row) != full:
            raise InternalCheckError("row is not a permutation")
    for a in range(n):
        ra = mul[a]
        for b in range(n):
            rab = mul[ra[b]]
            rb = mul[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise InternalCheckError(f"associativity fails at {a},{b},{c}")


def from_elements(elements: Sequence[Hashable], op: Callable, labels=None, name="") -> FiniteGroup:
    """Tabulate ``op`` on an explicit element list whose first entry is the identity."""
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise InternalCheckError("duplicate elements")
    mul = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(mul, labels if labels is not None else [str(e) for e in elements], name)


def from_generators(gens: Sequence[Hashable], op: Callable, identity: Hashable,
                    fmt=str, name="", cap=10_000) -> FiniteGroup:
    elements = [identity]
    seen = {identity}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = op(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise InternalCheckError("generator closure too large")
        i += 1
    return from_elements(elements, op, [fmt(e) for e in elements], name)


# -- constructors -----------------------------------------------------------

def _pow_label(sym, k):
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def cyclic(n: int) -> FiniteGroup:
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["1"] + [_pow_label("σ", k) for k in range(1, n)]
    return FiniteGroup(mul, labels, f"C{n}")


def abelian(dims: Sequence[int]) -> FiniteGroup:
    elements = list(itertools.product(*[range(d) for d in dims]))

    def op(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, dims))

    return from_elements(elements, op, ["(" + ",".join(map(str, e)) + ")" for e in elements],
                         "×".join(f"C{d}" for d in dims))


def dihedral(n: int) -> FiniteGroup:
    """Order 2n; index i is x^i and index n+i is t x^i, with x t = t x^-1."""
    elements = [(0, i) for i in range(n)] + [(1, i) for i in range(n)]

    def op(a, b):
        (s, i), (u, j) = a, b
        # x^i t = t x^-i
        return ((s + u) % 2, ((-i if u else i) + j) % n)

    def lab(e):
        s, i = e
        base = "t" if s else ""
        xs = _pow_label("x", i)
        return (base + xs) or "1"

    return from_elements(elements, op, [lab(e) for e in elements], f"D{2 * n}")


def dicyclic(n: int) -> FiniteGroup:
    """Order 4n: a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1."""
    m = 2 * n
    elements = [(i, 0) for i in range(m)] + [(i, 1) for i in range(m)]

    def op(p, q):
        (i, j), (k, l) = p, q
        e = i + (-k if j else k)
        if j + l == 2:
            e += n
        return (e % m, (j + l) % 2)

    def lab(e):
        i, j = e
        return (_pow_label("a", i) + ("x" if j else "")) or "1"

    return from_elements(elements, op, [lab(e) for e in elements], "Q8" if n == 2 else f"Dic{n}")


def cyclic_semidirect(a: int, b: int, k: int) -> FiniteGroup:
    """C_a ⋊ C_b = <x, y | x^a = y^b = 1, y x y^-1 = x^k>."""
    if pow(k, b, a) != 1 % a or math.gcd(k, a) != 1:
        raise SpecError(f"SD:{a}:{b}:{k}: x -> x^{k} is not an automorphism of order dividing {b}")
    elements = [(i, j) for j in range(b) for i in range(a)]

    def op(p, q):
        (i1, j1), (i2, j2) = p, q
        return ((i1 + pow(k, j1, a) * i2) % a, (j1 + j2) % b)

    def lab(e):
        i, j = e
        return (_pow_label("x", i) + _pow_label("y", j)) or "1"

    return from_elements(elements, op, [lab(e) for e in elements], f"C{a}⋊C{b}")


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    n, m = A.n, B.n
    mul = [[A.mul[a1][a2] * m + B.mul[b1][b2] for a2 in range(n) for b2 in range(m)]
           for a1 in range(n) for b1 in range(m)]
    labels = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    return FiniteGroup(mul, labels, f"{A.name}×{B.name}", verify=False)


def abelian_semidirect(dims: Sequence[int], images: Sequence[Sequence[int]], m: int,
                       name="") -> FiniteGroup:
    """(C_d1 × ... ) ⋊ C_m, the generator of C_m acting by the endomorphism
    sending basis vector i to ``images[i]``."""
    k = len(dims)

    def act(v):
        out = [0] * k
        for i, c in enumerate(v):
            for j in range(k):
                out[j] += c * images[i][j]
        return tuple(x % d for x, d in zip(out, dims))

    vecs = list(itertools.product(*[range(d) for d in dims]))
    powers = [{v: v for v in vecs}]
    for _ in range(1, m):
        prev = powers[-1]
        powers.append({v: act(prev[v]) for v in vecs})
    if any(act(powers[-1][v]) != v for v in vecs):
        raise SpecError("action order does not divide m")
    if len({act(v) for v in vecs}) != len(vecs):
        raise SpecError("action is not invertible")
    elements = [(v, j) for j in range(m) for v in vecs]

    def op(p, q):
        (v1, j1), (v2, j2) = p, q
        w = powers[j1][v2]
        return (tuple((x + y) % d for x, y, d in zip(v1, w, dims)), (j1 + j2) % m)

    return from_elements(elements, op, [f"{v}c^{j}" for v, j in elements], name)


def perm_group_table(gens: Sequence[tuple], name="") -> FiniteGroup:
    d = len(gens[0])
    return from_generators(gens, lambda p, q: tuple(p[i] for i in q), tuple(range(d)),
                           fmt=format_cycles, name=name)


def matrix_group_table(gens, p: int, name="") -> FiniteGroup:
    """Closure of square matrices (tuples of row tuples) over Z/p."""
    k = len(gens[0])

    def op(A, B):
        return tuple(tuple(sum(A[i][t] * B[t][j] for t in range(k)) % p for j in range(k))
                     for i in range(k))

    ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    return from_generators(gens, op, ident, name=name)


def _sign_twisted(cyc: int, B: FiniteGroup, sign: Callable[[int], int], name="") -> FiniteGroup:
    """C_cyc ⋊ B where b acts on C_cyc by x -> x^sign(b), sign(b) = ±1."""
    elements = [(i, b) for b in range(B.n) for i in range(cyc)]

    def op(p, q):
        (i1, b1), (i2, b2) = p, q
        return ((i1 + sign(b1) * i2) % cyc, B.mul[b1][b2])

    return from_elements(elements, op, [f"({i},{B.labels[b]})" for i, b in elements], name)


def _c3_by_d8_kernel_v4(cyc: int) -> FiniteGroup:
    # D8 = D:4, r = x, s = t; kernel <x^2, t> (a Klein four subgroup): x inverts.
    D8 = dihedral(4)

    def sign(b):
        return -1 if b in (1, 3, 5, 7) else 1  # x, x^3, t x, t x^3

    return _sign_twisted(cyc, D8, sign, f"C{cyc}⋊D8")


def _c3a4_c2() -> FiniteGroup:
    """(C3 × A4) ⋊ C2: the index-2 subgroup {(a, b) : sgn a = sgn b} of S3 × S4."""
    s3 = [p for p in itertools.permutations(range(3))]
    s4 = [p for p in itertools.permutations(range(4))]

    def sgn(p):
        return (-1) ** sum(1 for i in range(len(p)) for j in range(i) if p[j] > p[i])

    elements = [(a, b) for a in s3 for b in s4 if sgn(a) == sgn(b)]
    elements.sort(key=lambda e: e != ((0, 1, 2), (0, 1, 2, 3)))

    def op(x, y):
        return (tuple(x[0][i] for i in y[0]), tuple(x[1][i] for i in y[1]))

    return from_elements(elements, op, name="(C3×A4)⋊C2")


def _pauli() -> FiniteGroup:
    # 2x2 matrices over Z[i] stored as ((re, im), ...) pairs; closure of X, Z, iI.
    def cm(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def op(A, B):
        out = []
        for i in range(2):
            row = []
            for j in range(2):
                s = (0, 0)
                for t in range(2):
                    c = cm(A[i][t], B[t][j])
                    s = (s[0] + c[0], s[1] + c[1])
                row.append(s)
            out.append(tuple(row))
        return tuple(out)

    one, zero, i_ = (1, 0), (0, 0), (0, 1)
    X = ((zero, one), (one, zero))
    Z = ((one, zero), (zero, (-1, 0)))
    iI = ((i_, zero), (zero, i_))
    ident = ((one, zero), (zero, one))
    return from_generators([X, Z, iI], op, ident, name="Pauli")


def _a4():
    gens = [(1, 2, 0, 3), (1, 0, 3, 2)]
    return perm_group_table(gens, "A4")


def _s4():
    return perm_group_table([(1, 2, 3, 0), (1, 0, 2, 3)], "S4")


def _sl23():
    return matrix_group_table([((1, 1), (0, 1)), ((0, 2), (1, 0))], 3, "SL(2,3)")


SPECIALS: dict[str, Callable[[], FiniteGroup]] = {
    "A4": _a4,
    "S4": _s4,
    "SL23": _sl23,
    # (C3 × C3) ⋊ C3 of exponent 3
    "HEIS3": lambda: abelian_semidirect([3, 3], [(1, 0), (1, 1)], 3, "HEIS3"),
    "C9sC3": lambda: cyclic_semidirect(9, 3, 4),
    # (C4 × C2) ⋊ C2, c: a -> ab, b -> b  (SmallGroup(16,3))
    "SG16_3": lambda: abelian_semidirect([4, 2], [(1, 1), (0, 1)], 2, "(C4×C2)⋊C2"),
    # (C4 × C2) ⋊ C2, c: a -> a, b -> a^2 b  (SmallGroup(16,13) = C4 ∘ D8)
    "SG16_13": lambda: abelian_semidirect([4, 2], [(1, 0), (2, 1)], 2, "(C4×C2)⋊C2"),
    # (C3 × C3) ⋊ C2, inversion
    "SG18_4": lambda: abelian_semidirect([3, 3], [(2, 0), (0, 2)], 2, "(C3×C3)⋊C2"),
    "SG24_8": lambda: _c3_by_d8_kernel_v4(3),
    # (C2 × C2) ⋊ C9, C9 acting through C3
    "SG36_3": lambda: abelian_semidirect([2, 2], [(0, 1), (1, 1)], 9, "(C2×C2)⋊C9"),
    # (C3 × C3) ⋊ C4 with C4 acting by inversion (kernel C2)
    "SG36_7": lambda: abelian_semidirect([3, 3], [(2, 0), (0, 2)], 4, "(C3×C3)⋊C4"),
    # (C3 × C3) ⋊ C4 acting faithfully and fixed-point-freely
    "SG36_9": lambda: abelian_semidirect([3, 3], [(0, 1), (2, 0)], 4, "(C3×C3)⋊C4"),
    "SG40_8": lambda: _c3_by_d8_kernel_v4(5),
    "C3A4sC2": _c3a4_c2,
    "PAULI": _pauli,
}


@lru_cache(maxsize=None)
def group_from_spec(spec: str) -> FiniteGroup:
    try:
        return _parse(spec)
    except SpecError:
        raise
    except (ValueError, IndexError, KeyError) as exc:
        raise SpecError(f"malformed group spec {spec!r}: {exc}") from exc


def _parse(spec: str) -> FiniteGroup:
    if spec in SPECIALS:
        G = SPECIALS[spec]()
    elif spec.startswith("DP:"):
        parts = spec[3:].split("*")
        if len(parts) < 2:
            raise SpecError(f"DP needs at least two factors: {spec!r}")
        G = group_from_spec(parts[0])
        for p in parts[1:]:
            G = direct_product(G, group_from_spec(p))
    else:
        head, _, rest = spec.partition(":")
        if head == "C":
            G = cyclic(int(rest))
        elif head == "AB":
            dims = [int(x) for x in rest.split("x")]
            if any(d < 1 for d in dims):
                raise SpecError(spec)
            G = abelian(dims)
        elif head == "D":
            n = int(rest)
            if n < 1:
                raise SpecError(spec)
            G = dihedral(n)
        elif head == "DIC":
            G = dicyclic(int(rest))
        elif head == "SD":
            a, b, k = (int(x) for x in rest.split(":"))
            G = cyclic_semidirect(a, b, k)
        else:
            raise SpecError(f"unknown group spec {spec!r}")
    return G


# -- regular contexts -------------------------------------------------------

@dataclass
class RegularContext:
    spec: str
    group: FiniteGroup
    lam: PermGroup = field(repr=False)
    rho: PermGroup = field(repr=False)

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def labels(self):
        return self.group.labels

    @property
    def mul(self):
        return self.group.mul

    @property
    def inv(self):
        return self.group.inv

    def to_json(self) -> str:
        return json.dumps({
            "spec": self.spec,
            "order": self.n,
            "labels": self.labels,
            "mul": self.mul,
            "lambda": [format_cycles(g) for g in self.lam.generators],
            "rho": [format_cycles(g) for g in self.rho.generators],
        })


def small_generating_set(G: FiniteGroup) -> list[int]:
    """Greedy: repeatedly add the element that enlarges the subgroup most."""
    gens: list[int] = []
    current = {0}
    order_rank = sorted(range(1, G.n), key=lambda g: (-G.orders[g], g))
    while len(current) < G.n:
        best, best_size = None, len(current)
        for g in order_rank:
            if g in current:
                continue
            size = len(G.subgroup_closure(gens + [g]))
            if size > best_size:
                best, best_size = g, size
                if size == G.n:
                    break
        gens.append(best)
        current = G.subgroup_closure(gens)
    return gens


def build(spec: str) -> RegularContext:
    G = group_from_spec(spec)
    if G.n > 64:
        raise SpecError(f"{spec}: order {G.n} exceeds the degree cap 64")
    gens = small_generating_set(G) if G.n > 1 else [0]
    lam_gens = [G.lambda_perm(g) for g in gens]
    rho_gens = [G.rho_perm(g) for g in gens]
    lam = generate(lam_gens, G.n, name="λ")
    rho = generate(rho_gens, G.n, name="ρ")
    ctx = RegularContext(spec, G, lam, rho)
    _verify_context(ctx)
    return ctx


def _verify_context(ctx: RegularContext) -> None:
    from .perm_core import compose, is_regular
    if not (is_regular(ctx.lam) and is_regular(ctx.rho)):
        raise InternalCheckError("λ or ρ is not regular")
    for a in ctx.lam.generators:
        for b in ctx.rho.generators:
            if compose(a, b) != compose(b, a):
                raise InternalCheckError("λ and ρ do not commute")
    inter = len(ctx.lam.elements & ctx.rho.elements)
    if inter != len(ctx.group.center()):
        raise InternalCheckError("|λ ∩ ρ| differs from |Z(G)|")


# -- the table rows ---------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    spec: str
    display: str
    gap_id: str = ""


TABLE_ROWS: list[CatalogEntry] = [
    CatalogEntry("C:4", "C4", "4,1"),
    CatalogEntry("AB:2x2", "C2×C2", "4,2"),
    CatalogEntry("D:3", "S3", "6,1"),
    CatalogEntry("AB:4x2", "C4×C2", "8,2"),
    CatalogEntry("D:4", "D8", "8,3"),
    CatalogEntry("DIC:2", "Q8", "8,4"),
    CatalogEntry("AB:2x2x2", "C2×C2×C2", "8,5"),
    CatalogEntry("AB:3x3", "C3×C3", "9,2"),
    CatalogEntry("DIC:3", "C3⋊C4", "12,1"),
    CatalogEntry("A4", "A4", "12,3"),
    CatalogEntry("D:6", "D12", "12,4"),
    CatalogEntry("AB:6x2", "C6×C2", "12,5"),
    CatalogEntry("C:16", "C16", "16,1"),
    CatalogEntry("AB:4x4", "C4×C4", "16,2"),
    CatalogEntry("SG16_3", "(C4×C2)⋊C2", "16,3"),
    CatalogEntry("SD:4:4:3", "C4⋊C4", "16,4"),
    CatalogEntry("AB:8x2", "C8×C2", "16,5"),
    CatalogEntry("SD:8:2:5", "C8⋊C2", "16,6"),
    CatalogEntry("D:8", "D16", "16,7"),
    CatalogEntry("SD:8:2:3", "QD16", "16,8"),
    CatalogEntry("DIC:4", "Q16", "16,9"),
    CatalogEntry("AB:4x2x2", "C4×C2×C2", "16,10"),
    CatalogEntry("DP:C:2*D:4", "C2×D8", "16,11"),
    CatalogEntry("DP:C:2*DIC:2", "C2×Q8", "16,12"),
    CatalogEntry("SG16_13", "(C4×C2)⋊C2", "16,13"),
    CatalogEntry("AB:2x2x2x2", "C2×C2×C2×C2", "16,14"),
    CatalogEntry("DP:C:3*D:3", "C3×S3", "18,3"),
    CatalogEntry("SG18_4", "(C3×C3)⋊C2", "18,4"),
    CatalogEntry("AB:6x3", "C6×C3", "18,5"),
    CatalogEntry("DIC:5", "C5⋊C4", "20,1"),
    CatalogEntry("SD:5:4:2", "C5⋊C4", "20,3"),
    CatalogEntry("D:10", "D20", "20,4"),
    CatalogEntry("AB:10x2", "C10×C2", "20,5"),
    CatalogEntry("SD:7:3:2", "C7⋊C3", "21,1"),
    CatalogEntry("SD:3:8:2", "C3⋊C8", "24,1"),
    CatalogEntry("SL23", "SL(2,3)", "24,3"),
    CatalogEntry("DIC:6", "C3⋊Q8", "24,4"),
    CatalogEntry("DP:C:4*D:3", "C4×S3", "24,5"),
    CatalogEntry("D:12", "D24", "24,6"),
    CatalogEntry("DP:C:2*DIC:3", "C2×(C3⋊C4)", "24,7"),
    CatalogEntry("SG24_8", "(C6×C2)⋊C2", "24,8"),
    CatalogEntry("AB:12x2", "C12×C2", "24,9"),
    CatalogEntry("DP:C:3*D:4", "C3×D8", "24,10"),
    CatalogEntry("DP:C:3*DIC:2", "C3×Q8", "24,11"),
    CatalogEntry("S4", "S4", "24,12"),
    CatalogEntry("DP:C:2*A4", "C2×A4", "24,13"),
    CatalogEntry("DP:AB:2x2*D:3", "C2×C2×S3", "24,14"),
    CatalogEntry("AB:6x2x2", "C6×C2×C2", "24,15"),
    CatalogEntry("AB:5x5", "C5×C5", "25,2"),
    CatalogEntry("AB:9x3", "C9×C3", "27,2"),
    CatalogEntry("HEIS3", "(C3×C3)⋊C3", "27,3"),
    CatalogEntry("C9sC3", "C9⋊C3", "27,4"),
    CatalogEntry("AB:3x3x3", "C3×C3×C3", "27,5"),
    CatalogEntry("DIC:7", "C7⋊C4", "28,1"),
    CatalogEntry("D:14", "D28", "28,3"),
    CatalogEntry("AB:14x2", "C14×C2", "28,4"),
    CatalogEntry("DP:C:5*D:3", "C5×S3", "30,1"),
    CatalogEntry("DP:C:3*D:5", "C3×D10", "30,2"),
    CatalogEntry("DIC:9", "C9⋊C4", "36,1"),
    CatalogEntry("SG36_3", "(C2×C2)⋊C9", "36,3"),
    CatalogEntry("D:18", "D36", "36,4"),
    CatalogEntry("AB:18x2", "C18×C2", "36,5"),
    CatalogEntry("DP:C:3*DIC:3", "C3×(C3⋊C4)", "36,6"),
    CatalogEntry("SG36_7", "(C3×C3)⋊C4", "36,7"),
    CatalogEntry("AB:12x3", "C12×C3", "36,8"),
    CatalogEntry("SG36_9", "(C3×C3)⋊C4", "36,9"),
    CatalogEntry("DP:D:3*D:3", "S3×S3", "36,10"),
    CatalogEntry("DP:C:3*A4", "C3×A4", "36,11"),
    CatalogEntry("DP:C:6*D:3", "C6×S3", "36,12"),
    CatalogEntry("DP:C:2*SG18_4", "C2×((C3×C3)⋊C2)", "36,13"),
    CatalogEntry("AB:6x6", "C6×C6", "36,14"),
    CatalogEntry("SD:13:3:3", "C13⋊C3", "39,1"),
    CatalogEntry("SD:5:8:4", "C5⋊C8", "40,1"),
    CatalogEntry("SD:5:8:2", "C5⋊C8", "40,3"),
    CatalogEntry("DIC:10", "C5⋊Q8", "40,4"),
    CatalogEntry("DP:C:4*D:5", "C4×D10", "40,5"),
    CatalogEntry("D:20", "D40", "40,6"),
    CatalogEntry("DP:C:2*DIC:5", "C2×(C5⋊C4)", "40,7"),
    CatalogEntry("SG40_8", "(C10×C2)⋊C2", "40,8"),
    CatalogEntry("AB:20x2", "C20×C2", "40,9"),
    CatalogEntry("DP:C:5*D:4", "C5×D8", "40,10"),
    CatalogEntry("DP:C:5*DIC:2", "C5×Q8", "40,11"),
    CatalogEntry("DP:C:2*SD:5:4:2", "C2×(C5⋊C4)", "40,12"),
    CatalogEntry("DP:AB:2x2*D:5", "C2×C2×D10", "40,13"),
    CatalogEntry("AB:10x2x2", "C10×C2×C2", "40,14"),
    CatalogEntry("C:64", "C64", "64,1"),
]


def table_catalog() -> list[CatalogEntry]:
    return list(TABLE_ROWS)


def display_name(spec: str) -> str:
    for e in TABLE_ROWS:
        if e.spec == spec:
            return e.display
    return spec


NOT_ZS = "not-ZS"

# (|S∩R|, |Q|, |H|, complement classes) per row, keyed by SmallGroups id.
EXPECTED: dict[str, tuple] = {
    "4,1": (1, 1, 1, ("1",)),
    "4,2": (1, 1, 1, ("1",)),
    "6,1": (2, 2, 2, ("C2",)),
    "8,2": (8, 2, 2, ("C2",)),
    "8,3": (6, 6, 2, ("S3", "C6")),
    "8,4": (2, 2, 2, ("C2",)),
    "8,5": (8, 1, 1, ("1",)),
    "9,2": (9, 1, 1, ("1",)),
    "12,1": (2, 2, 2, ("C2",)),
    "12,3": (6, 2, 2, ("C2",)),
    "12,4": (8, 2, 2, ("C2",)),
    "12,5": (1, 1, 1, ("1",)),
    "16,1": (4, 4, 2, ("C4", "C2×C2")),
    "16,2": (24, 24, 1, ("C4×S3", "(C6×C2)⋊C2", "C3×D8", "S4", "C2×A4", "C2×C2×S3")),
    "16,3": (76, 4, 4, ("C2×C2",)),
    "16,4": (72, 72, 8, ("C3×S4", "(C3×A4)⋊C2")),
    "16,5": (10, 4, 4, ("C2×C2",)),
    "16,6": (10, 4, 4, ("C2×C2",)),
    "16,7": (16, 8, 4, ("C4×C2", "D8", "C2×C2×C2")),
    "16,8": (32, 16, 16, ("C2×D8",)),
    "16,9": (16, 8, 4, ("C4×C2", "D8", "C2×C2×C2")),
    "16,10": (146, 1, 1, ("1",)),
    "16,11": (198, 6, 2, ("S3", "C6")),
    "16,12": (66, 2, 2, ("C2",)),
    "16,13": (224, 224, 2, NOT_ZS),
    "16,14": (106, 1, 1, ("1",)),
    "18,3": (7, 2, 2, ("C2",)),
    "18,4": (38, 2, 2, ("C2",)),
    "18,5": (9, 1, 1, ("1",)),
    "20,1": (2, 2, 2, ("C2",)),
    "20,3": (7, 2, 2, ("C2",)),
    "20,4": (12, 2, 2, ("C2",)),
    "20,5": (1, 1, 1, ("1",)),
    "21,1": (9, 2, 2, ("C2",)),
    "24,1": (4, 4, 4, ("C2×C2",)),
    "24,3": (6, 2, 2, ("C2",)),
    "24,4": (16, 4, 4, ("C2×C2",)),
    "24,5": (32, 8, 8, ("C2×C2×C2",)),
    "24,6": (16, 4, 4, ("C2×C2",)),
    "24,7": (20, 4, 4, ("C2×C2",)),
    "24,8": (32, 8, 8, ("C2×C2×C2",)),
    "24,9": (8, 2, 2, ("C2",)),
    "24,10": (6, 6, 2, ("S3", "C6")),
    "24,11": (2, 2, 2, ("C2",)),
    "24,12": (5, 2, 2, ("C2",)),
    "24,13": (9, 2, 2, ("C2",)),
    "24,14": (44, 2, 2, ("C2",)),
    "24,15": (8, 1, 1, ("1",)),
    "25,2": (25, 1, 1, ("1",)),
    "27,2": (33, 3, 1, ("C3",)),
    "27,3": (78, 2, 2, ("C2",)),
    "27,4": (63, 6, 2, ("S3", "C6")),
    "27,5": (339, 1, 1, ("1",)),
    "28,1": (2, 2, 2, ("C2",)),
    "28,3": (16, 2, 2, ("C2",)),
    "28,4": (1, 1, 1, ("1",)),
    "30,1": (2, 2, 2, ("C2",)),
    "30,2": (2, 2, 2, ("C2",)),
    "36,1": (2, 2, 2, ("C2",)),
    "36,3": (18, 6, 2, ("S3", "C6")),
    "36,4": (20, 2, 2, ("C2",)),
    "36,5": (3, 3, 1, ("C3",)),
    "36,6": (7, 2, 2, ("C2",)),
    "36,7": (38, 2, 2, ("C2",)),
    "36,8": (9, 1, 1, ("1",)),
    "36,9": (11, 2, 2, ("C2",)),
    "36,10": (55, 4, 2, ("C4", "C2×C2")),
    "36,11": (42, 6, 2, ("S3", "C6")),
    "36,12": (19, 2, 2, ("C2",)),
    "36,13": (56, 2, 2, ("C2",)),
    "36,14": (9, 1, 1, ("1",)),
    "39,1": (15, 2, 2, ("C2",)),
    "40,1": (4, 4, 4, ("C2×C2",)),
    "40,3": (14, 4, 4, NOT_ZS),
    "40,4": (24, 4, 4, ("C2×C2",)),
    "40,5": (48, 8, 8, ("C2×C2×C2",)),
    "40,6": (24, 4, 4, ("C2×C2",)),
    "40,7": (28, 4, 4, ("C2×C2",)),
    "40,8": (48, 8, 8, ("C2×C2×C2",)),
    "40,9": (8, 2, 2, ("C2",)),
    "40,10": (6, 6, 2, ("S3", "C6")),
    "40,11": (2, 2, 2, ("C2",)),
    "40,12": (24, 4, 4, NOT_ZS),
    "40,13": (68, 2, 2, ("C2",)),
    "40,14": (8, 1, 1, ("1",)),
    "64,1": (8, 8, 2, ("C8", "Q8")),
}


def expected_for(spec: str):
    for e in TABLE_ROWS:
        if e.spec == spec:
            return EXPECTED[e.gap_id]
    return None
