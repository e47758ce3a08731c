"""Weyl group action on coweights, dominance, w0, and the doubled height.

Simple reflection indices are 1-based in the public API, matching the usual
``s_1, ..., s_r`` labelling. Heights are always the doubled value
``<2 rho, v>`` so that they stay integral on every datum.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import WeylGroupTooLarge
from .rootdatum import Coweight, RootDatum, Weight, coroot_coordinates, pair

DEFAULT_WEYL_CAP = 10**6


@dataclass(frozen=True)
class RootPair:
    """A positive root with its coroot, in coordinates and in lattice form."""

    root_coeffs: tuple[int, ...]
    coroot_coeffs: tuple[int, ...]
    root: Weight
    coroot: Coweight


@functools.lru_cache(maxsize=None)
def positive_root_pairs(d: RootDatum) -> tuple[RootPair, ...]:
    """Orbit of the simple (root, coroot) pairs under the simple reflections,
    restricted to the positive half, sorted by height then coordinates."""
    C = d.cartan
    r = d.r
    seen = set()
    queue = deque()
    for i in range(r):
        e = tuple(int(k == i) for k in range(r))
        seen.add((e, e))
        queue.append((e, e))
    while queue:
        rc, cc = queue.popleft()
        for j in range(r):
            # <beta, coroot_j> and <alpha_j, beta_check>
            a = sum(rc[k] * C[k][j] for k in range(r))
            b = sum(C[j][k] * cc[k] for k in range(r))
            nrc = tuple(x - a if k == j else x for k, x in enumerate(rc))
            ncc = tuple(x - b if k == j else x for k, x in enumerate(cc))
            key = (nrc, ncc)
            if key not in seen:
                seen.add(key)
                queue.append(key)
    out = []
    for rc, cc in seen:
        if all(x >= 0 for x in rc):
            root = tuple(sum(rc[k] * d.simple_roots[k][m] for k in range(r)) for m in range(d.n))
            coroot = tuple(sum(cc[k] * d.simple_coroots[k][m] for k in range(r)) for m in range(d.n))
            out.append(RootPair(rc, cc, root, coroot))
    out.sort(key=lambda p: (sum(p.root_coeffs), p.root_coeffs))
    return tuple(out)


def positive_roots(d: RootDatum) -> tuple[Weight, ...]:
    return tuple(p.root for p in positive_root_pairs(d))


def positive_coroots(d: RootDatum) -> tuple[Coweight, ...]:
    return tuple(p.coroot for p in positive_root_pairs(d))


@functools.lru_cache(maxsize=None)
def two_rho(d: RootDatum) -> Weight:
    """Sum of the positive roots, as a weight."""
    acc = [0] * d.n
    for root in positive_roots(d):
        for k, x in enumerate(root):
            acc[k] += x
    return tuple(acc)


@functools.lru_cache(maxsize=None)
def two_rho_check(d: RootDatum) -> Coweight:
    """Sum of the positive coroots, as a coweight."""
    acc = [0] * d.n
    for coroot in positive_coroots(d):
        for k, x in enumerate(coroot):
            acc[k] += x
    return tuple(acc)


def doubled_height(d: RootDatum, v: Sequence[int]) -> int:
    """``<2 rho, v>``, i.e. twice the height of ``v``."""
    return pair(two_rho(d), d.check_coweight(v))


def pairings(d: RootDatum, v: Sequence[int]) -> tuple[int, ...]:
    """``(<alpha_1, v>, ..., <alpha_r, v>)``."""
    return tuple(pair(a, v) for a in d.simple_roots)


def is_dominant(d: RootDatum, v: Sequence[int]) -> bool:
    return all(pair(a, v) >= 0 for a in d.simple_roots)


def _check_index(d: RootDatum, i: int) -> None:
    if not 1 <= i <= d.r:
        raise IndexError(f"simple reflection index {i} out of range 1..{d.r}")


def reflect(d: RootDatum, i: int, v: Sequence[int]) -> Coweight:
    """``s_i(v) = v - <alpha_i, v> coroot_i``."""
    _check_index(d, i)
    v = d.check_coweight(v)
    a = pair(d.simple_roots[i - 1], v)
    c = d.simple_coroots[i - 1]
    return tuple(x - a * y for x, y in zip(v, c))


def reflect_weight(d: RootDatum, i: int, w: Sequence[int]) -> Weight:
    """``s_i(w) = w - <w, coroot_i> alpha_i`` on the character side."""
    _check_index(d, i)
    w = d.check_weight(w)
    a = pair(w, d.simple_coroots[i - 1])
    return tuple(x - a * y for x, y in zip(w, d.simple_roots[i - 1]))


@dataclass(frozen=True)
class WeylWord:
    """A word ``s_{i1} s_{i2} ... s_{ik}``; it acts right to left.

    ``reduced`` may only be set through :meth:`mark_reduced`, which checks it.
    """

    letters: tuple[int, ...] = ()
    reduced: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(i) for i in self.letters))

    def __len__(self):
        return len(self.letters)

    def act(self, d: RootDatum, v: Sequence[int]) -> Coweight:
        v = d.check_coweight(v)
        for i in reversed(self.letters):
            v = reflect(d, i, v)
        return v

    def act_weight(self, d: RootDatum, w: Sequence[int]) -> Weight:
        w = d.check_weight(w)
        for i in reversed(self.letters):
            w = reflect_weight(d, i, w)
        return w

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(reversed(self.letters)), self.reduced)

    def is_reduced(self, d: RootDatum) -> bool:
        C = d.cartan
        p = [1] * d.r  # pairings of a regular dominant element
        for i in reversed(self.letters):
            _check_index(d, i)
            s = i - 1
            if p[s] <= 0:
                return False
            ps = p[s]
            p = [p[j] - ps * C[j][s] for j in range(d.r)]
        return True

    def mark_reduced(self, d: RootDatum) -> "WeylWord":
        if not self.is_reduced(d):
            raise ValueError(f"word {self.letters} is not reduced")
        return WeylWord(self.letters, True)


def _to_dominant(d: RootDatum, v: Sequence[int]) -> tuple[Coweight, list[int]]:
    v = list(d.check_coweight(v))
    roots, coroots = d.simple_roots, d.simple_coroots
    applied = []
    while True:
        for i, a in enumerate(roots):
            p = pair(a, v)
            if p < 0:
                c = coroots[i]
                for k in range(d.n):
                    v[k] -= p * c[k]
                applied.append(i + 1)
                break
        else:
            return tuple(v), applied


def dominant_representative(d: RootDatum, v: Sequence[int]) -> tuple[Coweight, WeylWord]:
    """Dominant element of the W-orbit of ``v`` and a word taking ``v`` to it.

    Reflects at the smallest violated simple root until none is left; every
    step raises the doubled height, so this terminates.
    """
    top, applied = _to_dominant(d, v)
    return top, WeylWord(tuple(reversed(applied))).mark_reduced(d)


def dominant(d: RootDatum, v: Sequence[int]) -> Coweight:
    return _to_dominant(d, v)[0]


@functools.lru_cache(maxsize=None)
def longest_word(d: RootDatum) -> WeylWord:
    """Reduced word for w0: the element taking the antidominant chamber to the dominant one."""
    C = d.cartan
    p = [-1] * d.r
    applied = []
    while True:
        for s in range(d.r):
            if p[s] < 0:
                ps = p[s]
                p = [p[j] - ps * C[j][s] for j in range(d.r)]
                applied.append(s + 1)
                break
        else:
            break
    return WeylWord(tuple(reversed(applied))).mark_reduced(d)


def longest_element_image(d: RootDatum, v: Sequence[int]) -> Coweight:
    return longest_word(d).act(d, v)


def dominance_leq(d: RootDatum, nu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``lam - nu`` is a nonnegative integer combination of simple coroots."""
    nu, lam = d.check_coweight(nu), d.check_coweight(lam)
    c = coroot_coordinates(d, tuple(a - b for a, b in zip(lam, nu)))
    return c is not None and all(x >= 0 for x in c)


def _components(d: RootDatum) -> list[list[int]]:
    C = d.cartan
    seen, comps = set(), []
    for start in range(d.r):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(d.r):
                if j not in seen and C[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


@functools.lru_cache(maxsize=None)
def weyl_group_order(d: RootDatum) -> int:
    """|W| from ``k! * prod(highest-root coefficients) * det(Cartan)`` per simple factor."""
    order = 1
    pairs = positive_root_pairs(d)
    for comp in _components(d):
        cset = set(comp)
        highest = max(
            (p.root_coeffs for p in pairs if all(i in cset for i, x in enumerate(p.root_coeffs) if x)),
            key=sum,
        )
        det = int(sympy.Matrix([[d.cartan[i][j] for j in comp] for i in comp]).det())
        order *= math.factorial(len(comp)) * math.prod(highest[i] for i in comp) * det
    return order


def check_weyl_cap(d: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> int:
    order = weyl_group_order(d)
    if order > cap:
        raise WeylGroupTooLarge(order, cap)
    return order


def weyl_group_elements(d: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> list[WeylWord]:
    """Every element of W as a reduced word, in breadth-first (length) order."""
    check_weyl_cap(d, cap)
    C = d.cartan
    start = tuple([1] * d.r)
    words = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for s in range(d.r):
            if p[s] <= 0:
                continue
            ps = p[s]
            q = tuple(p[j] - ps * C[j][s] for j in range(d.r))
            if q not in words:
                words[q] = (s + 1,) + words[p]
                queue.append(q)
    return [WeylWord(w, True) for w in words.values()]


def orbit(d: RootDatum, v: Sequence[int]) -> list[Coweight]:
    """The W-orbit of ``v``, starting with ``v`` itself."""
    v = d.check_coweight(v)
    seen = {v: None}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for i in range(1, d.r + 1):
            y = reflect(d, i, x)
            if y not in seen:
                seen[y] = None
                queue.append(y)
    return list(seen)


def dominant_coweights(d: RootDatum, max_doubled_height: int) -> list[Coweight]:
    """Dominant coweights in the rational span of the coroots with doubled
    height at most the bound, ordered by (doubled height, coordinates).

    Central directions are not enumerated (they have height zero, so there
    would be infinitely many).
    """
    from .rootdatum import _cartan_adjugate

    if max_doubled_height < 0:
        return []
    det, adj = _cartan_adjugate(d)
    r = d.r
    # doubled height of the i-th fundamental coweight is 2 * (column sum of C^-1)
    fund = [Fraction(2 * sum(adj[j][i] for j in range(r)), det) for i in range(r)]
    ranges = [range(int(max_doubled_height // f) + 1) for f in fund]
    out = []
    for a in itertools.product(*ranges):
        if sum(x * f for x, f in zip(a, fund)) > max_doubled_height:
            continue
        c = [sum(adj[j][i] * a[i] for i in range(r)) for j in range(r)]
        v = [sum(c[j] * d.simple_coroots[j][k] for j in range(r)) for k in range(d.n)]
        if any(x % det for x in v):
            continue
        out.append(tuple(x // det for x in v))
    out.sort(key=lambda v: (doubled_height(d, v), v))
    return out
