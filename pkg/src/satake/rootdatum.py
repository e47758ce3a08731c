"""Reductive root data, the standard Cartan-type tables, and the Langlands dual.

A datum stores the simple roots in coordinates of a basis of the character
lattice X*(T) and the simple coroots in the dual basis of the cocharacter
lattice X_*(T), so the pairing between the two is the plain dot product.
Everything is exact integer arithmetic.
"""

from __future__ import annotations

import functools
import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Sequence

import sympy

from .errors import InvalidCartanType, InvalidRootDatum, Issue

Vector = tuple[int, ...]
Coweight = Vector
Weight = Vector

SIMPLY_CONNECTED = "simply-connected"
ADJOINT = "adjoint"
_ISOGENY_ALIASES = {
    "sc": SIMPLY_CONNECTED,
    "simply-connected": SIMPLY_CONNECTED,
    "simply_connected": SIMPLY_CONNECTED,
    "ad": ADJOINT,
    "adj": ADJOINT,
    "adjoint": ADJOINT,
}

_DUAL_PREFIX = "dual of "


def pair(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class RootDatum:
    """Lattice rank ``n``, simple roots and simple coroots as integer rows.

    ``name`` is a label only and takes no part in equality or hashing.
    """

    n: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        roots = tuple(tuple(int(x) for x in row) for row in self.simple_roots)
        coroots = tuple(tuple(int(x) for x in row) for row in self.simple_coroots)
        object.__setattr__(self, "simple_roots", roots)
        object.__setattr__(self, "simple_coroots", coroots)
        if self.n < 0:
            raise InvalidRootDatum([Issue("ShapeMismatch", (), "negative lattice rank")])
        issues = []
        if len(roots) != len(coroots):
            issues.append(Issue("ShapeMismatch", (), "different numbers of simple roots and coroots"))
        if len(roots) > self.n:
            issues.append(Issue("ShapeMismatch", (), "semisimple rank exceeds lattice rank"))
        for kind, rows in (("root", roots), ("coroot", coroots)):
            for i, row in enumerate(rows, 1):
                if len(row) != self.n:
                    issues.append(Issue("ShapeMismatch", (i,), f"simple {kind} {i} has length {len(row)}, expected {self.n}"))
        if issues:
            raise InvalidRootDatum(issues)

    @property
    def r(self) -> int:
        return len(self.simple_roots)

    @functools.cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """``cartan[i][j] = <alpha_i, coroot_j>`` (0-based)."""
        return tuple(
            tuple(pair(a, c) for c in self.simple_coroots) for a in self.simple_roots
        )

    def check_coweight(self, v: Sequence[int]) -> Coweight:
        v = tuple(int(x) for x in v)
        if len(v) != self.n:
            raise ValueError(f"coweight {v} has length {len(v)}, expected {self.n}")
        return v

    check_weight = check_coweight

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank_lattice": self.n,
            "rank_semisimple": self.r,
            "simple_roots": [list(row) for row in self.simple_roots],
            "simple_coroots": [list(row) for row in self.simple_coroots],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RootDatum":
        try:
            n = int(data["rank_lattice"])
            roots = data["simple_roots"]
            coroots = data["simple_coroots"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidRootDatum([Issue("Malformed", (), f"bad datum JSON: {exc!r}")]) from None
        if "rank_semisimple" in data and int(data["rank_semisimple"]) != len(roots):
            raise InvalidRootDatum(
                [Issue("ShapeMismatch", (), "rank_semisimple disagrees with the number of simple roots")]
            )
        return cls(n, roots, coroots, name=data.get("name"))

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "RootDatum":
        return cls.from_json(json.loads(text))


# --- Cartan-type tables ----------------------------------------------------


def _bourbaki_matrix(letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix ``A[i][j] = <coroot_i, alpha_j>`` with Bourbaki labelling."""
    A = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, a_ij=-1, a_ji=-1):
        A[i - 1][j - 1] = a_ij
        A[j - 1][i - 1] = a_ji

    if letter == "A":
        for i in range(1, rank):
            bond(i, i + 1)
    elif letter in "BC":
        for i in range(1, rank - 1):
            bond(i, i + 1)
        # B: alpha_n short; C: alpha_n long
        if letter == "B":
            bond(rank - 1, rank, -1, -2)
        else:
            bond(rank - 1, rank, -2, -1)
    elif letter == "D":
        for i in range(1, rank - 1):
            bond(i, i + 1)
        bond(rank - 2, rank)
    elif letter == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, rank):
            bond(i, i + 1)
    elif letter == "F":
        bond(1, 2)
        bond(2, 3, -2, -1)
        bond(3, 4)
    elif letter == "G":
        bond(1, 2, -3, -1)
    return A


_RANK_BOUNDS = {
    "A": lambda k: k >= 1,
    "B": lambda k: k >= 2,
    "C": lambda k: k >= 2,
    "D": lambda k: k >= 4,
    "E": lambda k: k in (6, 7, 8),
    "F": lambda k: k == 4,
    "G": lambda k: k == 2,
}


def parse_cartan_type(type_name: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?(\d+)\s*", type_name or "")
    if not m:
        raise InvalidCartanType(f"cannot parse Cartan type {type_name!r}")
    letter, rank = m.group(1).upper(), int(m.group(2))
    if not _RANK_BOUNDS[letter](rank):
        raise InvalidCartanType(f"{letter}{rank} is outside the classification")
    return letter, rank


def normalize_isogeny(isogeny: str) -> str:
    try:
        return _ISOGENY_ALIASES[isogeny.strip().lower()]
    except (KeyError, AttributeError):
        raise InvalidCartanType(f"unknown isogeny {isogeny!r}; use sc or adjoint") from None


def cartan_matrix(cartan_type: str) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of a named type in the ``<alpha_i, coroot_j>`` convention."""
    letter, rank = parse_cartan_type(cartan_type)
    A = _bourbaki_matrix(letter, rank)
    return tuple(tuple(A[j][i] for j in range(rank)) for i in range(rank))


def build_from_cartan_type(cartan_type: str, isogeny: str = SIMPLY_CONNECTED) -> RootDatum:
    """Semisimple datum of the given type, simply connected or adjoint.

    Simply connected: the simple coroots are the standard basis of X_*(T).
    Adjoint: the simple roots are the standard basis of X*(T).
    """
    C = cartan_matrix(cartan_type)
    iso = normalize_isogeny(isogeny)
    k = len(C)
    basis = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    if iso == SIMPLY_CONNECTED:
        roots, coroots = [C[i] for i in range(k)], basis
    else:
        roots, coroots = basis, [tuple(C[j][i] for j in range(k)) for i in range(k)]
    letter, rank = parse_cartan_type(cartan_type)
    tag = "sc" if iso == SIMPLY_CONNECTED else "adjoint"
    return RootDatum(k, roots, coroots, name=f"{letter}{rank} {tag}")


def from_cartan(C: Sequence[Sequence[int]], isogeny: str = SIMPLY_CONNECTED, name=None) -> RootDatum:
    """Datum from an explicit Cartan matrix in the ``<alpha_i, coroot_j>`` convention."""
    C = [tuple(int(x) for x in row) for row in C]
    k = len(C)
    basis = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    if normalize_isogeny(isogeny) == SIMPLY_CONNECTED:
        return RootDatum(k, C, basis, name=name)
    return RootDatum(k, basis, [tuple(C[j][i] for j in range(k)) for i in range(k)], name=name)


# --- validation ------------------------------------------------------------


def validation_issues(d: RootDatum) -> list[Issue]:
    issues: list[Issue] = []
    C = d.cartan
    r = d.r
    for i in range(r):
        if C[i][i] != 2:
            issues.append(Issue("DiagonalNotTwo", (i + 1,), f"cartan({i+1},{i+1}) = {C[i][i]}"))
    for i, j in itertools.permutations(range(r), 2):
        if C[i][j] > 0:
            issues.append(Issue("PositiveOffDiagonal", (i + 1, j + 1), f"cartan({i+1},{j+1}) = {C[i][j]} > 0"))
        if i < j and (C[i][j] == 0) != (C[j][i] == 0):
            issues.append(
                Issue(
                    "AsymmetricZeroPattern",
                    (i + 1, j + 1),
                    f"cartan({i+1},{j+1}) = {C[i][j]} but cartan({j+1},{i+1}) = {C[j][i]}",
                )
            )
    if r and sympy.Matrix(d.simple_roots).rank() < r:
        issues.append(Issue("RootsDependent", (), "simple roots are linearly dependent"))
    if r and sympy.Matrix(d.simple_coroots).rank() < r:
        issues.append(Issue("CorootsDependent", (), "simple coroots are linearly dependent"))
    if not issues:
        M = sympy.Matrix(C)
        for size in range(1, r + 1):
            for idx in itertools.combinations(range(r), size):
                minor = M.extract(list(idx), list(idx)).det()
                if minor <= 0:
                    issues.append(
                        Issue(
                            "NotFiniteType",
                            tuple(i + 1 for i in idx),
                            f"principal minor {minor} is not positive",
                        )
                    )
                    return issues
    return issues


@functools.lru_cache(maxsize=None)
def _validated(d: RootDatum) -> tuple[Issue, ...]:
    return tuple(validation_issues(d))


def validate(d: RootDatum) -> None:
    """Raise :class:`InvalidRootDatum` listing every violated invariant."""
    issues = _validated(d)
    if issues:
        raise InvalidRootDatum(issues)


def is_valid(d: RootDatum) -> bool:
    return not _validated(d)


# --- duality and lattice membership ----------------------------------------


def langlands_dual(d: RootDatum) -> RootDatum:
    """Swap X*(T) with X_*(T) and roots with coroots."""
    validate(d)
    if d.name is None:
        name = None
    elif d.name.startswith(_DUAL_PREFIX):
        name = d.name[len(_DUAL_PREFIX):]
    else:
        name = _DUAL_PREFIX + d.name
    return RootDatum(d.n, d.simple_coroots, d.simple_roots, name=name)


@functools.lru_cache(maxsize=None)
def _cartan_adjugate(d: RootDatum) -> tuple[int, tuple[tuple[int, ...], ...]]:
    if d.r == 0:
        return 1, ()
    M = sympy.Matrix(d.cartan)
    det = int(M.det())
    adj = M.adjugate()
    return det, tuple(tuple(int(adj[i, j]) for j in range(d.r)) for i in range(d.r))


def coroot_coordinates(d: RootDatum, v: Sequence[int]) -> tuple[int, ...] | None:
    """Integers ``c`` with ``v = sum c_j coroot_j``, or None if there are none."""
    v = d.check_coweight(v)
    det, adj = _cartan_adjugate(d)
    p = [pair(a, v) for a in d.simple_roots]
    c = []
    for row in adj:
        num = pair(row, p)
        if num % det:
            return None
        c.append(num // det)
    recon = [sum(c[j] * d.simple_coroots[j][k] for j in range(d.r)) for k in range(d.n)]
    if tuple(recon) != v:
        return None
    return tuple(c)


def in_coroot_lattice(d: RootDatum, v: Sequence[int]) -> bool:
    return coroot_coordinates(d, v) is not None


def root_coordinates(d: RootDatum, w: Sequence[int]) -> tuple[int, ...] | None:
    """Coordinates of a weight in the simple roots, or None."""
    c = coroot_coordinates(_swapped(d), w)
    return c


@functools.lru_cache(maxsize=None)
def _swapped(d: RootDatum) -> RootDatum:
    return RootDatum(d.n, d.simple_coroots, d.simple_roots)


@functools.lru_cache(maxsize=None)
def central_basis(d: RootDatum) -> tuple[Vector, ...]:
    """Integral basis of the coweights pairing to zero with every simple root."""
    if d.n == 0:
        return ()
    if d.r == 0:
        return tuple(tuple(int(i == j) for j in range(d.n)) for i in range(d.n))
    out = []
    for vec in sympy.Matrix(d.simple_roots).nullspace():
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
        ints = [int(x * den) for x in vec]
        g = sympy.igcd(*ints) if any(ints) else 1
        out.append(tuple(x // g for x in ints))
    return tuple(out)


def fundamental_coweight(d: RootDatum, i: int) -> Coweight:
    """The coweight in the coroot span pairing to ``delta_ij`` with alpha_j.

    ``i`` is 1-based. Raises ValueError when it is not in the lattice.
    """
    if not 1 <= i <= d.r:
        raise ValueError(f"fundamental coweight index {i} out of range 1..{d.r}")
    det, adj = _cartan_adjugate(d)
    nums = [adj[j][i - 1] for j in range(d.r)]
    vec = [sum(nums[j] * d.simple_coroots[j][k] for j in range(d.r)) for k in range(d.n)]
    if any(x % det for x in vec):
        raise ValueError(f"fundamental coweight {i} is not in the cocharacter lattice of {d.name or 'this datum'}")
    return tuple(x // det for x in vec)
