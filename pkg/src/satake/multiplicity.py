"""Weight multiplicities of the irreducible representations of the dual group.

The highest weight ``lam`` of ``V_lam`` is a dominant coweight of the input
datum; weights of ``V_lam`` are coweights. Multiplicities are computed two
ways, with Kostant's alternating sum of partition-function values and with
Freudenthal's recursion, and each serves as the other's check. On the
Grassmannian side the same number counts the irreducible components of
``S_nu`` meeting the orbit of ``lam``.
"""

from __future__ import annotations

import contextlib
import functools
import threading
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import sympy

from .errors import NotDominant, ParityError
from .rootdatum import Coweight, RootDatum, central_basis, coroot_coordinates, pair
from .weyl import (
    DEFAULT_WEYL_CAP,
    check_weyl_cap,
    dominance_leq,
    dominant,
    doubled_height,
    is_dominant,
    positive_root_pairs,
    two_rho_check,
)

DecompositionTable = dict  # coweight tuple -> positive int

_caching = True


def set_caching(enabled: bool) -> None:
    """Globally enable or disable the persistent memo tables."""
    global _caching
    _caching = bool(enabled)


@contextlib.contextmanager
def caching_disabled() -> Iterator[None]:
    global _caching
    saved = _caching
    _caching = False
    try:
        yield
    finally:
        _caching = saved


def _require_dominant(d: RootDatum, lam: Sequence[int]) -> Coweight:
    lam = d.check_coweight(lam)
    if not is_dominant(d, lam):
        raise NotDominant(f"{lam} is not dominant")
    return lam


# --- invariant form --------------------------------------------------------


@dataclass(frozen=True)
class InvariantForm:
    """W-invariant rational form on coweights; short coroots have length^2 = 2."""

    gram: tuple[tuple[Fraction, ...], ...]

    def __call__(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        return sum(
            (u[i] * self.gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j]),
            Fraction(0),
        )

    def functional(self, u: Sequence[int]) -> tuple[Fraction, ...]:
        """Row vector ``x -> (u, x)``."""
        n = len(self.gram)
        return tuple(sum((u[i] * self.gram[i][j] for i in range(n)), Fraction(0)) for j in range(n))


def coroot_length_factors(d: RootDatum) -> tuple[Fraction, ...]:
    """``(coroot_i, coroot_i) / 2`` for each simple coroot, symmetrizing the Cartan matrix."""
    C = d.cartan
    eps: list[Fraction | None] = [None] * d.r
    for start in range(d.r):
        if eps[start] is not None:
            continue
        eps[start] = Fraction(1)
        comp, stack = [start], [start]
        while stack:
            i = stack.pop()
            for j in range(d.r):
                if j != i and C[i][j] != 0 and eps[j] is None:
                    eps[j] = eps[i] * C[i][j] / C[j][i]
                    comp.append(j)
                    stack.append(j)
        low = min(eps[i] for i in comp)
        for i in comp:
            eps[i] /= low
    return tuple(eps)


@functools.lru_cache(maxsize=None)
def invariant_form(d: RootDatum) -> InvariantForm:
    """Gram matrix in lattice coordinates.

    On the coroot span ``(coroot_i, coroot_j) = eps_i * cartan[i][j]``; the
    central directions get an orthonormal block orthogonal to the coroots.
    """
    eps = coroot_length_factors(d)
    central = central_basis(d)
    cols = list(d.simple_coroots) + list(central)
    if d.n == 0:
        return InvariantForm(())
    B = sympy.Matrix(cols).T
    GB = sympy.zeros(d.n, d.n)
    for i in range(d.r):
        for j in range(d.r):
            GB[i, j] = sympy.Rational(eps[i].numerator, eps[i].denominator) * d.cartan[i][j]
    for k in range(d.r, d.n):
        GB[k, k] = 1
    Binv = B.inv()
    G = Binv.T * GB * Binv
    gram = tuple(
        tuple(Fraction(int(sympy.fraction(G[i, j])[0]), int(sympy.fraction(G[i, j])[1])) for j in range(d.n))
        for i in range(d.n)
    )
    return InvariantForm(gram)


# --- Kostant partition function -------------------------------------------


class PartitionCache:
    """Memo of partition values keyed by simple-coroot coordinates.

    Safe for concurrent use: writes take a lock and readers only see fully
    computed values.
    """

    def __init__(self):
        self._values: dict[tuple[int, ...], int] = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._values.get(key)

    def put(self, key, value: int) -> None:
        with self._lock:
            self._values[key] = value

    def update(self, entries: dict) -> None:
        with self._lock:
            self._values.update(entries)

    def snapshot(self) -> dict[tuple[int, ...], int]:
        with self._lock:
            return dict(self._values)

    def clear(self) -> None:
        with self._lock:
            self._values.clear()

    def __len__(self):
        return len(self._values)


_partition_caches: dict[RootDatum, PartitionCache] = {}
_registry_lock = threading.Lock()


def partition_cache(d: RootDatum) -> PartitionCache:
    with _registry_lock:
        cache = _partition_caches.get(d)
        if cache is None:
            cache = _partition_caches[d] = PartitionCache()
        return cache


def clear_caches() -> None:
    with _registry_lock:
        for cache in _partition_caches.values():
            cache.clear()
        _memo_tables.clear()
        _freudenthal_tables.clear()


@functools.lru_cache(maxsize=None)
def _partition_generators(d: RootDatum) -> tuple[tuple[int, ...], ...]:
    # simple coroots last: once only they remain, the count is 1 or 0
    pairs = positive_root_pairs(d)
    nonsimple = [p.coroot_coeffs for p in pairs if sum(p.coroot_coeffs) > 1]
    nonsimple.sort(key=lambda c: (-sum(c), c))
    return tuple(nonsimple)


def _count(gens, k: int, c: tuple[int, ...], memo: dict) -> int:
    if k == len(gens):
        return 1
    key = (k, c)
    hit = memo.get(key)
    if hit is not None:
        return hit
    g = gens[k]
    total = 0
    cur = c
    while all(x >= 0 for x in cur):
        total += _count(gens, k + 1, cur, memo)
        cur = tuple(x - y for x, y in zip(cur, g))
    memo[key] = total
    return total


_memo_tables: dict[RootDatum, dict] = {}


def partition_count(d: RootDatum, coords: Sequence[int]) -> int:
    """Partition function on simple-coroot coordinates."""
    coords = tuple(coords)
    if any(x < 0 for x in coords):
        return 0
    if _caching:
        cache = partition_cache(d)
        hit = cache.get(coords)
        if hit is not None:
            return hit
        memo = _memo_tables.setdefault(d, {})
        value = _count(_partition_generators(d), 0, coords, memo)
        cache.put(coords, value)
        return value
    return _count(_partition_generators(d), 0, coords, {})


def kostant_partition(d: RootDatum, beta: Sequence[int]) -> int:
    """Number of ways to write ``beta`` as a nonnegative integer sum of positive coroots."""
    c = coroot_coordinates(d, beta)
    if c is None:
        return 0
    return partition_count(d, c)


# --- Kostant multiplicity formula ------------------------------------------


@functools.lru_cache(maxsize=4096)
def _shifted_orbit(d: RootDatum, shifted_pairings: tuple[int, ...]) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """For a regular dominant ``x = lam + rho_check`` given by its pairings,
    list ``(sign(w), coords of w(x) - x)`` over all of W."""
    C = d.cartan
    r = d.r
    start = shifted_pairings
    seen = {start: (1, (0,) * r)}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        sign, off = seen[p]
        for s in range(r):
            ps = p[s]
            q = tuple(p[j] - ps * C[j][s] for j in range(r))
            if q not in seen:
                seen[q] = (-sign, tuple(x - ps if k == s else x for k, x in enumerate(off)))
                queue.append(q)
    return tuple(seen.values())


def in_support(d: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> bool:
    """Whether ``nu`` is a weight of ``V_lam``: dominant(nu) <= lam in the coroot order."""
    return dominance_leq(d, dominant(d, nu), lam)


def weight_multiplicity_kostant(
    d: RootDatum,
    lam: Sequence[int],
    nu: Sequence[int],
    *,
    weyl_cap: int = DEFAULT_WEYL_CAP,
    precheck: bool = True,
) -> int:
    """``sum_w sign(w) P(w(lam + rho) - (nu + rho))`` over the whole Weyl group.

    With ``precheck`` weights outside the support return 0 without running
    the alternating sum.
    """
    lam = _require_dominant(d, lam)
    nu = d.check_coweight(nu)
    check_weyl_cap(d, weyl_cap)
    diff = coroot_coordinates(d, tuple(a - b for a, b in zip(lam, nu)))
    if diff is None:
        return 0
    if precheck and not in_support(d, lam, nu):
        return 0
    shifted = tuple(pair(a, lam) + 1 for a in d.simple_roots)
    total = 0
    for sign, off in _shifted_orbit(d, shifted):
        total += sign * partition_count(d, tuple(x + y for x, y in zip(off, diff)))
    if total < 0:
        raise ArithmeticError(f"negative multiplicity {total} for lam={lam}, nu={nu}")
    return total


# --- Freudenthal recursion ---------------------------------------------------


@functools.lru_cache(maxsize=None)
def weight_support(d: RootDatum, lam: Coweight) -> tuple[Coweight, ...]:
    """All weights of ``V_lam``, found by lowering from ``lam`` by simple coroots."""
    lam = _require_dominant(d, lam)
    seen = {lam: None}
    queue = deque([lam])
    while queue:
        x = queue.popleft()
        for c in d.simple_coroots:
            y = tuple(a - b for a, b in zip(x, c))
            if y not in seen and in_support(d, lam, y):
                seen[y] = None
                queue.append(y)
    return tuple(sorted(seen, key=lambda v: (-doubled_height(d, v), tuple(-x for x in v))))


_freudenthal_tables: dict[tuple[RootDatum, Coweight], dict[Coweight, int]] = {}
_freudenthal_lock = threading.Lock()


def _freudenthal_dominant_table(d: RootDatum, lam: Coweight) -> dict[Coweight, int]:
    key = (d, lam)
    if _caching:
        hit = _freudenthal_tables.get(key)
        if hit is not None:
            return hit
    form = invariant_form(d)
    pairs = positive_root_pairs(d)
    funcs = [(p.coroot, form.functional(p.coroot)) for p in pairs]
    two_rho_c = two_rho_check(d)
    support = set(weight_support(d, lam))
    doms = [v for v in weight_support(d, lam) if is_dominant(d, v)]
    table: dict[Coweight, int] = {}
    lam_plus = tuple(a + b for a, b in zip(lam, two_rho_c))
    for mu in doms:
        if mu == lam:
            table[mu] = 1
            continue
        num = Fraction(0)
        for coroot, fn in funcs:
            x = tuple(a + b for a, b in zip(mu, coroot))
            while x in support:
                m = table[dominant(d, x)]
                num += m * sum((f * xi for f, xi in zip(fn, x) if xi), Fraction(0))
                x = tuple(a + b for a, b in zip(x, coroot))
        diff = tuple(a - b for a, b in zip(lam, mu))
        # |lam + rho|^2 - |mu + rho|^2 = (lam - mu, lam + mu + 2 rho)
        den = form(diff, tuple(a + b for a, b in zip(lam_plus, mu)))
        value = 2 * num / den
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"Freudenthal produced {value} at lam={lam}, mu={mu}")
        table[mu] = int(value)
    if _caching:
        with _freudenthal_lock:
            _freudenthal_tables[key] = table
    return table


def weight_multiplicity_freudenthal(
    d: RootDatum,
    lam: Sequence[int],
    nu: Sequence[int],
    *,
    weyl_cap: int = DEFAULT_WEYL_CAP,
) -> int:
    lam = _require_dominant(d, lam)
    nu = d.check_coweight(nu)
    check_weyl_cap(d, weyl_cap)
    if not in_support(d, lam, nu):
        return 0
    return _freudenthal_dominant_table(d, lam).get(dominant(d, nu), 0)


# --- dimension and full tables -----------------------------------------------


def weyl_dimension(d: RootDatum, lam: Sequence[int]) -> int:
    """``prod over positive roots b of <b, lam + rho> / <b, rho>``."""
    lam = _require_dominant(d, lam)
    two_rho_c = two_rho_check(d)
    dim = Fraction(1)
    for p in positive_root_pairs(d):
        top = 2 * pair(p.root, lam) + pair(p.root, two_rho_c)
        dim *= Fraction(top, pair(p.root, two_rho_c))
    if dim.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {dim}")
    return int(dim)


def weight_table(
    d: RootDatum,
    lam: Sequence[int],
    *,
    method: str = "kostant",
    weyl_cap: int = DEFAULT_WEYL_CAP,
) -> DecompositionTable:
    """Every weight of ``V_lam`` with its multiplicity, highest first."""
    lam = _require_dominant(d, lam)
    check_weyl_cap(d, weyl_cap)
    if method == "kostant":
        mult = lambda mu: weight_multiplicity_kostant(d, lam, mu, weyl_cap=weyl_cap)  # noqa: E731
    elif method == "freudenthal":
        fr = _freudenthal_dominant_table(d, lam)
        mult = fr.__getitem__
    else:
        raise ValueError(f"unknown method {method!r}")
    table = {}
    dom_mult = {}
    for v in weight_support(d, lam):
        dv = dominant(d, v)
        if dv not in dom_mult:
            dom_mult[dv] = mult(dv)
        table[v] = dom_mult[dv]
    return {k: v for k, v in table.items() if v > 0}


def halve(value: int) -> int:
    if value % 2:
        raise ParityError(f"cannot halve odd value {value}")
    return value // 2


__all__ = [
    "DecompositionTable",
    "InvariantForm",
    "PartitionCache",
    "caching_disabled",
    "clear_caches",
    "coroot_length_factors",
    "in_support",
    "invariant_form",
    "kostant_partition",
    "partition_cache",
    "partition_count",
    "set_caching",
    "weight_multiplicity_freudenthal",
    "weight_multiplicity_kostant",
    "weight_support",
    "weight_table",
    "weyl_dimension",
]
