"""Permutations on {0, ..., d-1} and small permutation groups.

Permutations are plain tuples of images.  ``compose(p, q)`` applies ``q``
first: ``compose(p, q)[x] == p[q[x]]``.  Points are 0-based internally; the
text format is 1-based cycle notation, e.g. ``"(1,3)(2,5)(4,6)"``.
"""
from __future__ import annotations

import json
import math
import re
from collections import deque
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceeded

Perm = tuple

MAX_DEGREE = 64
DEFAULT_CAP = 2_000_000


def _check_degree(d):
    if not 1 <= d <= MAX_DEGREE:
        raise ValueError(f"degree {d} outside 1..{MAX_DEGREE}")


def identity(d: int) -> Perm:
    return tuple(range(d))


def is_perm(p) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple([p[i] for i in q])


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(b: Perm, p: Perm) -> Perm:
    """b p b^-1, i.e. the permutation sending b(x) to b(p(x))."""
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[b[x]] = b[y]
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def perm_order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in cycles(p)))


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(p)))


def is_semiregular(p: Perm) -> bool:
    """All cycles the same length (no nontrivial element fixes a point)."""
    lens = {len(c) for c in cycles(p)}
    return len(lens) == 1


def format_cycles(p: Perm) -> str:
    parts = [c for c in cycles(p) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in parts)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation; ``"()"`` is the identity."""
    _check_degree(degree)
    images = list(range(degree))
    stripped = text.replace(" ", "")
    if _CYCLE_RE.sub("", stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    used = set()
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        pts = [int(tok) - 1 for tok in body.split(",")]
        for x in pts:
            if not 0 <= x < degree or x in used:
                raise ValueError(f"bad point {x + 1} in {text!r}")
            used.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return tuple(images)


def perm_to_json(p: Perm) -> str:
    return json.dumps(list(p))


def perm_from_json(text: str) -> Perm:
    p = tuple(json.loads(text))
    if not is_perm(p):
        raise ValueError("not a permutation")
    return p


class PermGroup:
    """A subgroup of Sym(degree) with an explicit element set.

    ``elements`` is computed on first use unless supplied.  A ``member``
    predicate may be supplied for groups whose element set is large but whose
    membership is cheap to decide (the holomorph, for instance).
    """

    __slots__ = ("degree", "generators", "_elements", "_order", "_member", "name")

    def __init__(self, degree: int, generators: Sequence[Perm], elements=None,
                 order: int | None = None, member: Callable[[Perm], bool] | None = None,
                 name: str = ""):
        _check_degree(degree)
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
        self._elements = frozenset(elements) if elements is not None else None
        self._order = order if order is not None else (
            len(self._elements) if self._elements is not None else None)
        self._member = member
        self.name = name

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = frozenset(_closure(self.generators, self.degree, DEFAULT_CAP))
            self._order = len(self._elements)
        return self._elements

    @property
    def order(self) -> int:
        if self._order is None:
            return len(self.elements)
        return self._order

    def __len__(self):
        return self.order

    def __contains__(self, p) -> bool:
        if self._member is not None and self._elements is None:
            return self._member(p)
        return p in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)

    def key(self) -> frozenset:
        return self.elements

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.order == other.order and \
            all(g in other for g in self.generators)

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} order={self.order}>"

    def to_json(self) -> dict:
        return {"degree": self.degree, "order": self.order,
                "generators": [format_cycles(g) for g in self.generators]}


def _closure(gens: Iterable[Perm], degree: int, cap: int) -> set:
    gens = [g for g in gens if g != identity(degree)]
    idp = identity(degree)
    elements = {idp}
    queue = deque([idp])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple([x[i] for i in g])
            if y not in elements:
                elements.add(y)
                if len(elements) > cap:
                    raise BudgetExceeded("generate", cap, len(elements))
                queue.append(y)
    return elements


def generate(gens: Sequence[Perm], degree: int, cap: int = DEFAULT_CAP, name: str = "") -> PermGroup:
    """Closure of ``gens`` by breadth-first right multiplication."""
    _check_degree(degree)
    if cap < 1:
        raise ValueError("cap must be positive")
    for g in gens:
        if len(g) != degree:
            raise ValueError("generator degree mismatch")
    elements = _closure(gens, degree, cap)
    return PermGroup(degree, list(gens), elements=elements, name=name)


def is_transitive(gens: Sequence[Perm], degree: int) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == degree


def is_regular(N: PermGroup) -> bool:
    return N.order == N.degree and is_transitive(N.generators, N.degree)


def normalizes(A: PermGroup, N: PermGroup) -> bool:
    """True iff every generator of A conjugates every generator of N into N."""
    if A.degree != N.degree:
        raise ValueError("degree mismatch")
    for a in A.generators:
        for n in N.generators:
            if conjugate(a, n) not in N:
                return False
    return True


def normalizes_bruteforce(A: PermGroup, N: PermGroup) -> bool:
    els = N.elements
    return all(conjugate(a, n) in els for a in A.elements for n in els)


def conjugate_group(b: Perm, N: PermGroup) -> PermGroup:
    gens = [conjugate(b, g) for g in N.generators]
    elements = None
    if N._elements is not None:
        elements = [conjugate(b, x) for x in N._elements]
    return PermGroup(N.degree, gens, elements=elements, order=N.order)


def normalizer_in(ambient: PermGroup, N: PermGroup) -> PermGroup:
    """{a in ambient : a N a^-1 = N}, by filtering the ambient element set."""
    if ambient.degree != N.degree:
        raise ValueError("degree mismatch")
    keep = [a for a in ambient.elements
            if all(conjugate(a, n) in N for n in N.generators)]
    return PermGroup(ambient.degree, keep, elements=keep)


def centralizer_in(ambient: PermGroup, N: PermGroup) -> PermGroup:
    keep = [a for a in ambient.elements
            if all(compose(a, n) == compose(n, a) for n in N.generators)]
    return PermGroup(ambient.degree, keep, elements=keep)


def subgroup_intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    if A.order > B.order:
        A, B = B, A
    keep = [a for a in A.elements if a in B]
    return PermGroup(A.degree, keep, elements=keep)
