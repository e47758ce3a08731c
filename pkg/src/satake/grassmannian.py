"""Dimension bookkeeping on the loop Grassmannian.

Orbits of G(O) are labelled by dominant coweights. The semi-infinite orbits
``S_nu`` (attracting, for N(K)) and ``T_nu`` (repelling, for the opposite
unipotent) are labelled by all coweights. Dimensions are returned in ordinary
units; internally everything goes through the doubled height and is halved
exactly, raising :class:`ParityError` instead of rounding.

Functions that can return "Empty" or "NotComparable" return ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotDominant
from .multiplicity import halve, in_support, weight_multiplicity_kostant
from .rootdatum import Coweight, RootDatum
from .weyl import (
    DEFAULT_WEYL_CAP,
    dominance_leq,
    dominant,
    doubled_height,
    is_dominant,
    longest_element_image,
)

ATTRACTING = "S"
REPELLING = "T"


@dataclass(frozen=True)
class OrbitId:
    lam: Coweight


@dataclass(frozen=True)
class SemiInfiniteOrbitId:
    nu: Coweight
    side: str = ATTRACTING

    def __post_init__(self):
        if self.side not in (ATTRACTING, REPELLING):
            raise ValueError(f"side must be {ATTRACTING!r} or {REPELLING!r}")


def _dominant_arg(d: RootDatum, lam: Sequence[int], what: str = "lambda") -> Coweight:
    lam = d.check_coweight(lam)
    if not is_dominant(d, lam):
        raise NotDominant(f"{what}={lam} is not dominant")
    return lam


def orbit_id(d: RootDatum, lam: Sequence[int]) -> OrbitId:
    return OrbitId(_dominant_arg(d, lam))


def orbit_dim(d: RootDatum, lam: Sequence[int]) -> int:
    """dim of the G(O)-orbit of a dominant ``lam``: its doubled height."""
    return doubled_height(d, _dominant_arg(d, lam))


def closure_contains(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether the orbit of ``mu`` lies in the closure of the orbit of ``lam``."""
    lam = _dominant_arg(d, lam)
    mu = _dominant_arg(d, mu, "mu")
    return dominance_leq(d, mu, lam)


def mv_cycle_count(d: RootDatum, nu: Sequence[int], lam: Sequence[int], *, weyl_cap: int = DEFAULT_WEYL_CAP) -> int:
    """Number of irreducible components of ``S_nu`` meeting the orbit of ``lam``.

    This is the weight multiplicity of ``nu`` in ``V_lam``.
    """
    return weight_multiplicity_kostant(d, _dominant_arg(d, lam), nu, weyl_cap=weyl_cap)


def s_intersection_dim(
    d: RootDatum, nu: Sequence[int], lam: Sequence[int], *, weyl_cap: int = DEFAULT_WEYL_CAP
) -> int | None:
    """dim(S_nu ∩ Gr_lam) = (dh(nu) + dh(lam)) / 2, or None when empty."""
    lam = _dominant_arg(d, lam)
    nu = d.check_coweight(nu)
    if mv_cycle_count(d, nu, lam, weyl_cap=weyl_cap) == 0:
        return None
    value = halve(doubled_height(d, nu) + doubled_height(d, lam))
    if value < 0:
        raise ArithmeticError(f"negative dimension for S_{nu} in orbit {lam}")
    return value


def t_intersection_dim(
    d: RootDatum, nu: Sequence[int], lam: Sequence[int], *, weyl_cap: int = DEFAULT_WEYL_CAP
) -> int | None:
    """dim(T_nu ∩ Gr_lam) = -(dh(nu) + dh(w0 lam)) / 2, or None when empty.

    ``lam`` is the dominant label; the antidominant representative ``w0 lam``
    is used internally.
    """
    lam = _dominant_arg(d, lam)
    nu = d.check_coweight(nu)
    if mv_cycle_count(d, nu, lam, weyl_cap=weyl_cap) == 0:
        return None
    anti = longest_element_image(d, lam)
    value = -halve(doubled_height(d, nu) + doubled_height(d, anti))
    if value < 0:
        raise ArithmeticError(f"negative dimension for T_{nu} in orbit {lam}")
    return value


def w0_functor_relation(d: RootDatum, nu: Sequence[int]) -> Coweight:
    """``w0 . nu``: the T-side label matching the S-side functor at ``nu``."""
    return longest_element_image(d, nu)


def convolution_fiber_bound(d: RootDatum, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int | None:
    """Dimension (dh(lam) + dh(mu) + dh(nu)) / 2 of the part of the convolution
    variety over ``S_nu`` lying above ``Gr_lam x Gr_mu``.

    None when ``nu`` is outside the closure of the orbit of ``lam + mu``.
    """
    lam = _dominant_arg(d, lam)
    mu = _dominant_arg(d, mu, "mu")
    nu = d.check_coweight(nu)
    top = tuple(a + b for a, b in zip(lam, mu))
    total = doubled_height(d, lam) + doubled_height(d, mu) + doubled_height(d, nu)
    if total % 2 or not dominance_leq(d, dominant(d, nu), top):
        return None
    return total // 2


def semismall_defect(d: RootDatum, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Half the codimension of ``Gr_nu`` in the closure of ``Gr_{lam+mu}`` minus
    the fiber-dimension estimate over ``Gr_nu``.

    The estimate is taken from the convolution bound at the antidominant
    point ``w0 nu``. Semi-smallness of the convolution map is the statement
    that this is never negative; it is identically zero.
    """
    lam = _dominant_arg(d, lam)
    mu = _dominant_arg(d, mu, "mu")
    nu = _dominant_arg(d, nu, "nu")
    top = tuple(a + b for a, b in zip(lam, mu))
    if not closure_contains(d, top, nu):
        raise ValueError(f"nu={nu} is not in the closure of the orbit of lam+mu={top}")
    fiber = convolution_fiber_bound(d, lam, mu, longest_element_image(d, nu))
    if fiber is None:
        raise ArithmeticError(f"w0 nu outside the convolution closure for {lam}, {mu}, {nu}")
    return halve(orbit_dim(d, top) - orbit_dim(d, nu)) - fiber
