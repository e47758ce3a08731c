"""Character ring of the convolution category.

Under global cohomology, convolution of perverse sheaves becomes the tensor
product of representations, so on characters it is just multiplication of
finitely supported functions on the coweight lattice. This module provides
that ring, the decomposition into irreducible characters, duals, the height
grading of the fiber functor, and a cross-checked report.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from .errors import DatumMismatch, NegativeMultiplicity, NonWInvariantInput, NotDominant, ResourceCapExceeded
from .grassmannian import closure_contains, mv_cycle_count
from .multiplicity import weight_table, weyl_dimension
from .rootdatum import Coweight, RootDatum, pair
from .weyl import (
    DEFAULT_WEYL_CAP,
    check_weyl_cap,
    dominant,
    dominant_coweights,
    doubled_height,
    is_dominant,
    reflect,
)

GradedDims = dict  # degree -> dimension


def _height_key(d: RootDatum, v: Coweight):
    return (doubled_height(d, v), v)


class Character:
    """Finitely supported integer-valued function on coweights.

    Terms are kept sorted by coordinates with zero coefficients dropped, so
    equality is structural. Virtual (negative) coefficients are allowed.
    """

    __slots__ = ("datum", "_terms")

    def __init__(self, datum: RootDatum, terms: Mapping[Sequence[int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Coweight, int] = {}
        for k, v in items:
            k = datum.check_coweight(k)
            acc[k] = acc.get(k, 0) + int(v)
        self.datum = datum
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}

    @property
    def terms(self) -> dict[Coweight, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, v) -> int:
        return self._terms.get(tuple(v), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.datum == other.datum and self._terms == other._terms

    def __hash__(self):
        return hash((self.datum, tuple(self._terms.items())))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self._terms.items())
        return f"Character({{{body}}})"

    def _same(self, other: "Character") -> None:
        if self.datum != other.datum:
            raise DatumMismatch("characters live on different root data")

    def __add__(self, other: "Character") -> "Character":
        self._same(other)
        return Character(self.datum, itertools.chain(self._terms.items(), other._terms.items()))

    def __sub__(self, other: "Character") -> "Character":
        self._same(other)
        return Character(self.datum, itertools.chain(self._terms.items(), ((k, -v) for k, v in other._terms.items())))

    def __rmul__(self, scalar: int) -> "Character":
        return Character(self.datum, {k: scalar * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Character):
            return product(self, other)
        return NotImplemented

    def dim(self) -> int:
        return sum(self._terms.values())

    def is_w_invariant(self) -> bool:
        d = self.datum
        return all(
            self._terms.get(reflect(d, i, k), 0) == v for k, v in self._terms.items() for i in range(1, d.r + 1)
        )


def irreducible_character(d: RootDatum, lam: Sequence[int], *, weyl_cap: int = DEFAULT_WEYL_CAP) -> Character:
    return Character(d, weight_table(d, lam, weyl_cap=weyl_cap))


def product(c1: Character, c2: Character) -> Character:
    """Convolution of the two term maps."""
    c1._same(c2)
    out: dict[Coweight, int] = {}
    for k1, v1 in c1.items():
        for k2, v2 in c2.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            out[k] = out.get(k, 0) + v1 * v2
    return Character(c1.datum, out)


def _sorted_table(d: RootDatum, table: dict) -> dict:
    return {k: table[k] for k in sorted(table, key=lambda v: _height_key(d, v), reverse=True)}


def decompose(d: RootDatum, c: Character, *, weyl_cap: int = DEFAULT_WEYL_CAP) -> dict[Coweight, int]:
    """Multiplicities of the irreducible constituents of a W-invariant character.

    Repeatedly takes the surviving term of largest doubled height (then
    largest coordinates), which is dominant, and subtracts that many copies
    of its irreducible character.
    """
    if c.datum != d:
        raise DatumMismatch("character is not over this datum")
    if not c.is_w_invariant():
        raise NonWInvariantInput("character is not W-invariant")
    remaining = c.terms
    result: dict[Coweight, int] = {}
    while remaining:
        pivot = max(remaining, key=lambda v: _height_key(d, v))
        coeff = remaining[pivot]
        if not is_dominant(d, pivot):
            raise ArithmeticError(f"leading term {pivot} is not dominant")
        result[pivot] = coeff
        for k, v in weight_table(d, pivot, weyl_cap=weyl_cap).items():
            left = remaining.get(k, 0) - coeff * v
            if left:
                remaining[k] = left
            else:
                remaining.pop(k, None)
    negative = {k: v for k, v in result.items() if v < 0}
    if negative:
        raise NegativeMultiplicity(f"negative multiplicities {negative}")
    return _sorted_table(d, result)


def tensor_decompose(
    d: RootDatum, lam: Sequence[int], mu: Sequence[int], *, weyl_cap: int = DEFAULT_WEYL_CAP
) -> dict[Coweight, int]:
    """Constituents of ``V_lam ⊗ V_mu`` by the Brauer–Klimyk rule.

    Each weight ``nu`` of the smaller factor shifts the other highest weight;
    the dot action moves ``lam + nu`` back to the dominant chamber with a
    sign, and shifted points on a wall cancel.
    """
    lam, mu = d.check_coweight(lam), d.check_coweight(mu)
    for v in (lam, mu):
        if not is_dominant(d, v):
            raise NotDominant(f"{v} is not dominant")
    check_weyl_cap(d, weyl_cap)
    small, big = (mu, lam) if weyl_dimension(d, mu) <= weyl_dimension(d, lam) else (lam, mu)
    roots, coroots = d.simple_roots, d.simple_coroots
    out: dict[Coweight, int] = {}
    for nu, m in weight_table(d, small, weyl_cap=weyl_cap).items():
        y = [a + b for a, b in zip(big, nu)]
        sign = 1
        while True:
            for i, a in enumerate(roots):
                p = pair(a, y) + 1
                if p < 0:
                    c = coroots[i]
                    for k in range(d.n):
                        y[k] -= p * c[k]
                    sign = -sign
                    break
            else:
                break
        if any(pair(a, y) + 1 == 0 for a in roots):
            continue
        key = tuple(y)
        out[key] = out.get(key, 0) + sign * m
    out = {k: v for k, v in out.items() if v}
    negative = {k: v for k, v in out.items() if v < 0}
    if negative:
        raise NegativeMultiplicity(f"negative multiplicities {negative} in {lam} x {mu}")
    return _sorted_table(d, out)


def tensor_decompose_direct(
    d: RootDatum, lam: Sequence[int], mu: Sequence[int], *, weyl_cap: int = DEFAULT_WEYL_CAP
) -> dict[Coweight, int]:
    """Same as :func:`tensor_decompose`, by multiplying characters and decomposing."""
    prod = product(irreducible_character(d, lam, weyl_cap=weyl_cap), irreducible_character(d, mu, weyl_cap=weyl_cap))
    return decompose(d, prod, weyl_cap=weyl_cap)


def dual_object(d: RootDatum, lam: Sequence[int]) -> Coweight:
    """Highest weight ``-w0(lam)`` of the dual representation."""
    lam = d.check_coweight(lam)
    if not is_dominant(d, lam):
        raise NotDominant(f"{lam} is not dominant")
    return dominant(d, tuple(-x for x in lam))


def fiber_functor_grading(d: RootDatum, lam: Sequence[int], *, weyl_cap: int = DEFAULT_WEYL_CAP) -> GradedDims:
    """``dim H^k`` of the global cohomology of the IC sheaf of ``Gr_lam``:
    the total multiplicity of weights of doubled height ``k``."""
    out: dict[int, int] = {}
    for nu, m in weight_table(d, lam, weyl_cap=weyl_cap).items():
        k = doubled_height(d, nu)
        out[k] = out.get(k, 0) + m
    return dict(sorted(out.items()))


# --- report ------------------------------------------------------------------


def coweight_key(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


class CheckLog:
    def __init__(self):
        self.rows: dict[str, dict] = {}

    def record(self, name: str, ok: bool, case) -> None:
        row = self.rows.setdefault(name, {"check": name, "passed": True, "cases": 0, "failures": []})
        row["cases"] += 1
        if not ok:
            row["passed"] = False
            if len(row["failures"]) < 10:
                row["failures"].append(case)

    def as_list(self) -> list[dict]:
        return list(self.rows.values())


def satake_report(
    d: RootDatum,
    height_bound: int,
    *,
    max_objects: int = 250,
    weyl_cap: int = DEFAULT_WEYL_CAP,
) -> dict:
    """All irreducible objects with doubled height at most ``height_bound``:
    dimensions, height gradings, duals, and pairwise tensor decompositions,
    each cross-checked against sum rules.

    Objects are the dominant coweights in the span of the coroots.
    """
    if height_bound < 0:
        raise ValueError("height bound must be nonnegative")
    check_weyl_cap(d, weyl_cap)
    lams = dominant_coweights(d, height_bound)
    if len(lams) > max_objects:
        raise ResourceCapExceeded(f"{len(lams)} objects exceed the cap of {max_objects}")
    checks = CheckLog()
    objects = []
    for lam in lams:
        dim = weyl_dimension(d, lam)
        grading = fiber_functor_grading(d, lam, weyl_cap=weyl_cap)
        dual = dual_object(d, lam)
        case = {"lambda": list(lam)}
        checks.record("sum_rule", sum(grading.values()) == dim, case)
        checks.record("grading_palindromic", all(grading.get(-k) == v for k, v in grading.items()), case)
        top = doubled_height(d, lam)
        checks.record("grading_top_degree", max(grading) == top and grading[top] == 1, case)
        checks.record("grading_parity", all((k - top) % 2 == 0 for k in grading), case)
        checks.record("dual_involution", dual_object(d, dual) == lam, case)
        by_height: dict[int, int] = {}
        for nu in weight_table(d, lam, weyl_cap=weyl_cap):
            h = doubled_height(d, nu)
            by_height[h] = by_height.get(h, 0) + mv_cycle_count(d, nu, lam, weyl_cap=weyl_cap)
        checks.record("grading_vs_cycle_counts", dict(sorted(by_height.items())) == grading, case)
        objects.append(
            {
                "lambda": list(lam),
                "dim": dim,
                "grading": {str(k): v for k, v in grading.items()},
                "dual": list(dual),
            }
        )
    tensor = []
    for i, lam in enumerate(lams):
        for mu in lams[i:]:
            dec = tensor_decompose(d, lam, mu, weyl_cap=weyl_cap)
            top = tuple(a + b for a, b in zip(lam, mu))
            case = {"lambda": list(lam), "mu": list(mu)}
            checks.record(
                "dimension_multiplicativity",
                sum(m * weyl_dimension(d, nu) for nu, m in dec.items())
                == weyl_dimension(d, lam) * weyl_dimension(d, mu),
                case,
            )
            checks.record("top_constituent", dec.get(top) == 1, case)
            checks.record("support_in_closure", all(closure_contains(d, top, nu) for nu in dec), case)
            zero = tuple([0] * d.n)
            checks.record("rigidity", dec.get(zero, 0) == int(mu == dual_object(d, lam)), case)
            tensor.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "decomposition": {coweight_key(nu): m for nu, m in dec.items()},
                }
            )
    check_rows = checks.as_list()
    return {
        "datum": d.to_json(),
        "height_bound": height_bound,
        "objects": objects,
        "tensor": tensor,
        "checks": check_rows,
        "passed": all(row["passed"] for row in check_rows),
    }
