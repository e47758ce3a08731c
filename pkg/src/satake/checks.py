"""Exhaustive invariant suite over all objects up to a height bound.

Every check is recorded as a row ``{"check", "passed", "cases", "failures"}``;
failures keep the offending arguments so they can be reproduced.
"""

from __future__ import annotations

from .fusion import (
    CheckLog,
    dual_object,
    fiber_functor_grading,
    tensor_decompose,
    tensor_decompose_direct,
)
from .grassmannian import (
    convolution_fiber_bound,
    mv_cycle_count,
    orbit_dim,
    s_intersection_dim,
    semismall_defect,
    t_intersection_dim,
    w0_functor_relation,
)
from .multiplicity import (
    in_support,
    weight_multiplicity_freudenthal,
    weight_multiplicity_kostant,
    weight_support,
    weyl_dimension,
)
from .rootdatum import RootDatum, langlands_dual, validate
from .weyl import (
    DEFAULT_WEYL_CAP,
    check_weyl_cap,
    dominant_coweights,
    doubled_height,
    is_dominant,
)


def _neighbourhood(d: RootDatum, support):
    """Support plus its unit-coordinate and simple-coroot perturbations."""
    out = dict.fromkeys(support)
    steps = [tuple(int(k == j) for k in range(d.n)) for j in range(d.n)] + list(d.simple_coroots)
    for v in support:
        for s in steps:
            out.setdefault(tuple(a + b for a, b in zip(v, s)))
            out.setdefault(tuple(a - b for a, b in zip(v, s)))
    return list(out)


def run_invariant_suite(
    d: RootDatum,
    height_bound: int,
    *,
    weyl_cap: int = DEFAULT_WEYL_CAP,
    direct_tensor_bound: int | None = None,
) -> dict:
    """Run every invariant over dominant ``lam`` with doubled height at most
    ``height_bound`` and pairs ``(lam, mu)`` with ``dh(lam + mu)`` at most it.

    The direct character-product route for tensor products is slower; it is
    compared only for pairs with ``dh(lam + mu) <= direct_tensor_bound``
    (default: half the height bound).
    """
    validate(d)
    check_weyl_cap(d, weyl_cap)
    if direct_tensor_bound is None:
        direct_tensor_bound = height_bound // 2
    checks = CheckLog()

    dual = langlands_dual(d)
    checks.record("dual_involution", langlands_dual(dual) == d, {})
    checks.record(
        "dual_cartan_transpose",
        dual.cartan == tuple(zip(*d.cartan)),
        {},
    )

    lams = dominant_coweights(d, height_bound)
    for lam in lams:
        case = {"lambda": list(lam)}
        support = weight_support(d, lam)
        dim = weyl_dimension(d, lam)
        total = 0
        h_lam = doubled_height(d, lam)
        for nu in support:
            k = weight_multiplicity_kostant(d, lam, nu, weyl_cap=weyl_cap)
            f = weight_multiplicity_freudenthal(d, lam, nu, weyl_cap=weyl_cap)
            ncase = {"lambda": list(lam), "nu": list(nu)}
            checks.record("two_algorithms", k == f, ncase | {"kostant": k, "freudenthal": f})
            total += k
            s_dim = s_intersection_dim(d, nu, lam, weyl_cap=weyl_cap)
            t_dim = t_intersection_dim(d, nu, lam, weyl_cap=weyl_cap)
            if s_dim is not None and t_dim is not None:
                checks.record("s_plus_t_is_orbit_dim", s_dim + t_dim == orbit_dim(d, lam), ncase)
                checks.record(
                    "s_dim_vanishing_bound",
                    2 * s_dim == doubled_height(d, nu) + h_lam
                    and s_dim <= h_lam
                    and ((s_dim == h_lam) == (nu == lam)),
                    ncase,
                )
            w0nu = w0_functor_relation(d, nu)
            checks.record(
                "w0_relation",
                w0_functor_relation(d, w0nu) == nu and doubled_height(d, w0nu) == -doubled_height(d, nu),
                ncase,
            )
        checks.record("sum_rule", total == dim, case | {"sum": total, "dim": dim})

        for nu in _neighbourhood(d, support):
            ncase = {"lambda": list(lam), "nu": list(nu)}
            empty = s_intersection_dim(d, nu, lam, weyl_cap=weyl_cap) is None
            zero = weight_multiplicity_kostant(d, lam, nu, weyl_cap=weyl_cap, precheck=False) == 0
            outside = not in_support(d, lam, nu)
            checks.record("emptiness_agreement", empty == zero == outside, ncase)

        grading = fiber_functor_grading(d, lam, weyl_cap=weyl_cap)
        checks.record("grading_palindromic", all(grading.get(-k) == v for k, v in grading.items()), case)
        checks.record("grading_parity", all((k - h_lam) % 2 == 0 for k in grading), case)
        checks.record("grading_top_degree", max(grading) == h_lam and grading[h_lam] == 1, case)
        by_height: dict[int, int] = {}
        for nu in support:
            h = doubled_height(d, nu)
            by_height[h] = by_height.get(h, 0) + mv_cycle_count(d, nu, lam, weyl_cap=weyl_cap)
        checks.record("grading_vs_cycle_counts", dict(sorted(by_height.items())) == grading, case)

    for i, lam in enumerate(lams):
        for mu in lams[i:]:
            top = tuple(a + b for a, b in zip(lam, mu))
            h_top = doubled_height(d, top)
            if h_top > height_bound:
                continue
            case = {"lambda": list(lam), "mu": list(mu)}
            dec = tensor_decompose(d, lam, mu, weyl_cap=weyl_cap)
            zero = tuple([0] * d.n)
            checks.record("rigidity", dec.get(zero, 0) == int(mu == dual_object(d, lam)), case)
            checks.record(
                "dimension_multiplicativity",
                sum(m * weyl_dimension(d, nu) for nu, m in dec.items())
                == weyl_dimension(d, lam) * weyl_dimension(d, mu),
                case,
            )
            if h_top <= direct_tensor_bound:
                checks.record("tensor_two_routes", dec == tensor_decompose_direct(d, lam, mu, weyl_cap=weyl_cap), case)

            top_support = weight_support(d, top)
            support_set = set(top_support)
            for nu in top_support:
                ncase = case | {"nu": list(nu)}
                b = convolution_fiber_bound(d, lam, mu, nu)
                checks.record("fiber_bound_defined", b is not None, ncase)
                for c in d.simple_coroots:
                    up = tuple(x + y for x, y in zip(nu, c))
                    if up in support_set:
                        b_up = convolution_fiber_bound(d, lam, mu, up)
                        checks.record("fiber_bound_monotone", b is not None and b_up is not None and b_up >= b, ncase)
                if is_dominant(d, nu):
                    checks.record("semismall_defect_zero", semismall_defect(d, lam, mu, nu) == 0, ncase)
            checks.record("fiber_bound_top", convolution_fiber_bound(d, lam, mu, top) == h_top, case)
            checks.record(
                "fiber_bound_antidominant",
                convolution_fiber_bound(d, lam, mu, w0_functor_relation(d, top)) == 0,
                case,
            )

    rows = checks.as_list()
    return {
        "datum": d.to_json(),
        "height_bound": height_bound,
        "checks": rows,
        "passed": all(row["passed"] for row in rows),
    }
