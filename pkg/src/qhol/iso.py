"""Isomorphism tests, automorphism groups and naming for small groups.

Everything works on Cayley tables (``catalog.FiniteGroup``); permutation
groups are tabulated first.  Maps are returned as lists ``f`` with
``f[i]`` the image of element index ``i``.
"""
from __future__ import annotations

import hashlib
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from . import catalog
from .catalog import FiniteGroup, small_generating_set
from .errors import BudgetExceeded, InternalCheckError
from .perm_core import PermGroup, compose, generate

DEFAULT_BUDGET = 10_000_000
NAMING_CAP = 128


@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelian: bool
    exponent: int
    order_histogram: tuple
    center_order: int
    derived_order: int
    involutions: int
    class_profile: tuple  # sorted (element order, centralizer order) counts


def as_table(G) -> FiniteGroup:
    """Accept a FiniteGroup, PermGroup or RegularContext."""
    if isinstance(G, FiniteGroup):
        return G
    if isinstance(G, PermGroup):
        return perm_group_table(G)
    if hasattr(G, "group"):
        return G.group
    raise TypeError(f"cannot tabulate {type(G).__name__}")


def perm_group_table(P: PermGroup) -> FiniteGroup:
    elems = P.sorted_elements()  # identity is lexicographically first
    index = {e: i for i, e in enumerate(elems)}
    mul = [[index[compose(a, b)] for b in elems] for a in elems]
    G = FiniteGroup(mul, [str(i) for i in range(len(elems))], P.name, verify=False)
    G.elements = elems
    return G


def derived_subgroup(G: FiniteGroup) -> set[int]:
    m, inv = G.mul, G.inv
    comms = {m[m[a][b]][m[inv[a]][inv[b]]] for a in range(G.n) for b in range(G.n)}
    return G.subgroup_closure(sorted(comms))


def centralizer_orders(G: FiniteGroup) -> list[int]:
    m = G.mul
    return [sum(1 for h in range(G.n) if m[g][h] == m[h][g]) for g in range(G.n)]


def fingerprint(G) -> Fingerprint:
    G = as_table(G)
    orders = G.orders
    cz = centralizer_orders(G)
    hist = tuple(sorted(Counter(orders).items()))
    profile = tuple(sorted(Counter(zip(orders, cz)).items()))
    return Fingerprint(
        order=G.n,
        abelian=G.is_abelian(),
        exponent=math.lcm(*orders),
        order_histogram=hist,
        center_order=sum(1 for c in cz if c == G.n),
        derived_order=len(derived_subgroup(G)),
        involutions=sum(1 for o in orders if o == 2),
        class_profile=profile,
    )


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0

    def tick(self, what):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(what, self.budget, self.nodes)


def _extend(G: FiniteGroup, H: FiniteGroup, gens, imgs):
    """The map on <gens> forced by gens -> imgs, or None if inconsistent or
    not injective.  Consistency on every Cayley-graph edge makes it a
    homomorphism."""
    f = [-1] * G.n
    used = [False] * H.n
    f[0] = 0
    used[0] = True
    queue = [0]
    Gm, Hm = G.mul, H.mul
    pairs = list(zip(gens, imgs))
    for x in queue:
        gx = Gm[x]
        hx = Hm[f[x]]
        for g, h in pairs:
            y = gx[g]
            fy = hx[h]
            fy0 = f[y]
            if fy0 == -1:
                if used[fy]:
                    return None
                f[y] = fy
                used[fy] = True
                queue.append(y)
            elif fy0 != fy:
                return None
    return f


def _search(G: FiniteGroup, H: FiniteGroup, find_all: bool, budget: int, what: str):
    if G.n != H.n:
        return []
    if G.n == 1:
        return [[0]]
    gens = small_generating_set(G)
    cg, ch = centralizer_orders(G), centralizer_orders(H)
    key_h: dict = {}
    for h in range(H.n):
        key_h.setdefault((H.orders[h], ch[h]), []).append(h)
    cands = [key_h.get((G.orders[g], cg[g]), []) for g in gens]
    counter = _Counter(budget)
    found = []

    def rec(i, imgs):
        for h in cands[i]:
            counter.tick(what)
            f = _extend(G, H, gens[:i + 1], imgs + [h])
            if f is None:
                continue
            if i + 1 == len(gens):
                if -1 not in f:
                    found.append(f)
                    if not find_all:
                        return True
            elif rec(i + 1, imgs + [h]):
                return True
        return False

    rec(0, [])
    return found


def _check_hom(G: FiniteGroup, H: FiniteGroup, f) -> None:
    Gm, Hm = G.mul, H.mul
    if G.n <= 64:
        pairs = ((a, b) for a in range(G.n) for b in range(G.n))
    else:
        gens = small_generating_set(G)
        pairs = ((a, b) for a in range(G.n) for b in gens)
    for a, b in pairs:
        if f[Gm[a][b]] != Hm[f[a]][f[b]]:
            raise InternalCheckError("returned map is not a homomorphism")
    if len(set(f)) != G.n:
        raise InternalCheckError("returned map is not bijective")


def isomorphism(A, B, budget: int = DEFAULT_BUDGET):
    """An isomorphism between the tabulated groups as an index list, or None."""
    G, H = as_table(A), as_table(B)
    if G.n != H.n or fingerprint(G) != fingerprint(H):
        return None
    res = _search(G, H, False, budget, "isomorphism")
    if not res:
        return None
    _check_hom(G, H, res[0])
    return res[0]


def isomorphic(A, B, budget: int = DEFAULT_BUDGET):
    """For permutation groups: a dict element -> element, or None.
    For tables: the index list from ``isomorphism``."""
    f = isomorphism(A, B, budget)
    if f is None or not (isinstance(A, PermGroup) and isinstance(B, PermGroup)):
        return f
    ea, eb = A.sorted_elements(), B.sorted_elements()
    return {ea[i]: eb[f[i]] for i in range(len(ea))}


def automorphisms(G: FiniteGroup, budget: int = DEFAULT_BUDGET) -> list[tuple]:
    """All automorphisms as tuples of images, identity first."""
    res = [tuple(f) for f in _search(G, G, True, budget, "automorphisms")]
    res.sort()
    return res


def automorphism_group(ctx, budget: int = DEFAULT_BUDGET) -> PermGroup:
    G = as_table(ctx)
    auts = automorphisms(G, budget)
    idx = {a: i for i, a in enumerate(auts)}
    gens = _aut_generators(auts, idx)
    return PermGroup(G.n, gens or [auts[0]], elements=auts, name="A(G)")


def _aut_generators(auts, idx) -> list[tuple]:
    """Greedy generating set of a list of permutations closed under composition."""
    n = len(auts)
    gens: list[tuple] = []
    have = {auts[0]}
    for a in auts:
        if a in have:
            continue
        gens.append(a)
        have = set(generate(gens, len(a)).elements)
        if len(have) == n:
            break
    return gens


# -- naming -----------------------------------------------------------------

_EXTRA_NAMES = [
    ("C2", "C:2"), ("C3", "C:3"), ("C4", "C:4"), ("C2×C2", "AB:2x2"),
    ("C5", "C:5"), ("S3", "D:3"), ("C6", "C:6"), ("C7", "C:7"),
    ("C8", "C:8"), ("C4×C2", "AB:4x2"), ("D8", "D:4"), ("Q8", "DIC:2"),
    ("C2×C2×C2", "AB:2x2x2"), ("C9", "C:9"), ("C3×C3", "AB:3x3"),
    ("C2×D8", "DP:C:2*D:4"), ("C24", "C:24"),
    ("C3×S4", "DP:C:3*S4"), ("(C3×A4)⋊C2", "C3A4sC2"),
]


@lru_cache(maxsize=None)
def _pool(order: int) -> tuple:
    out = []
    seen = set()
    for name, spec in _EXTRA_NAMES + [(e.display, e.spec) for e in catalog.TABLE_ROWS]:
        if spec in seen:
            continue
        G = catalog.group_from_spec(spec)
        if G.n == order:
            seen.add(spec)
            out.append((name, G))
    if order not in {G.n for _, G in out}:
        out.append((f"C{order}", catalog.cyclic(order)))
    return tuple(out)


@lru_cache(maxsize=None)
def _product_pool(order: int) -> tuple:
    out = []
    for d in range(2, order):
        if order % d or d > order // d:
            continue
        for na, A in _pool(d):
            for nb, B in _pool(order // d):
                out.append((f"{na}×{nb}", (A, B)))
    return tuple(out)


@lru_cache(maxsize=None)
def _fp_cached(key) -> Fingerprint:
    return fingerprint(key)


def name_group(N, budget: int = DEFAULT_BUDGET) -> str:
    """Display name of ``N`` from the naming pool, or a fingerprint fallback."""
    G = as_table(N)
    if G.n == 1:
        return "1"
    fp = fingerprint(G)
    if G.n <= NAMING_CAP:
        for name, H in _pool(G.n):
            if _fp_cached(H) == fp and isomorphism(G, H, budget) is not None:
                return name
        for name, (A, B) in _product_pool(G.n):
            P = catalog.direct_product(A, B)
            if fingerprint(P) == fp and isomorphism(G, P, budget) is not None:
                return name
    digest = hashlib.sha1(repr(fp).encode()).hexdigest()[:8]
    return f"order-{G.n}, fingerprint {digest}"
