# src/harness/checks.py
# Per-case checks for verification sweeps.
#
# Each check takes one case and returns None when the identity holds or a Failure
# describing the mismatch. Checks are module-level functions so worker processes
# can unpickle them. Case generators take n_max and yield cases in a fixed order.

from itertools import product
from typing import Iterator, Optional, Tuple

from grothendieck import (
    expand,
    grassmannian_pieri,
    groth,
    lensot_product,
    lenart_transition,
    one_row_transition,
    symp_groth,
    two_power_product,
)
from involutions import (
    Involution,
    alpha_inv,
    binv,
    check_binv_fiber,
    ell_inv,
    enumerate_fpf,
    enumerate_involutions,
    enumerate_vexillary,
    hat_diagram,
    igrassmannian,
    is_quasi_dominant,
    is_vexillary_arc,
    g_family,
)
from permgroup import Permutation, all_permutations, demazure, grassmannian, strict_partitions
from polyring import BETA, X
from harness.report import Failure
from ortho import (
    almost_expansion,
    almost_shifts,
    binv_plus_data,
    closed_form_involution,
    closed_forms,
    dom_thm_gco,
    gc_values,
    gco,
    gp_stab_check,
    gq_from_gco,
    gq_from_shiftable,
    igrass_formula,
    invgroth_recursion_holds,
    is_locally_noncrossing,
    ivex_formula,
    ortho_groth,
    orthogonal_recursion_applies,
    orthogonal_recursion_holds,
    predicted_binv,
    predicted_binv_plus,
    qd_formula,
    shift_expansion,
    shiftable_data,
    stable_limit,
    stable_truncation,
    two_power_factor,
    wij_report,
)

# Variables kept by the truncation-based checks
TRUNCATION_VARS = 2


def _render_set(perms) -> str:
    return "{" + ", ".join(w.render() for w in sorted(perms, key=lambda w: w.sort_key())) + "}"


def _text(value) -> str:
    return value.render() if hasattr(value, "render") else str(value)


def _mismatch(label: str, expected, actual) -> Optional[Failure]:
    if expected == actual:
        return None
    return Failure(label, _text(expected), _text(actual))


def _leading_fixed_points(z: Involution) -> int:
    m = 0
    while z(m + 1) == m + 1 and m < z.size:
        m += 1
    return m


def _shift_down_involution(z: Involution, m: int) -> Involution:
    return Involution((a - m, b - m) for a, b in z.cycles)


# ---- case generators --------------------------------------------------


def involution_cases(n_max: int) -> Iterator[Involution]:
    yield from enumerate_involutions(n_max)


def vexillary_cases(n_max: int) -> Iterator[Involution]:
    yield from enumerate_vexillary(n_max)


def quasi_dominant_cases(n_max: int) -> Iterator[Involution]:
    return (z for z in enumerate_vexillary(n_max) if is_quasi_dominant(z))


def fixed_one_cases(n_max: int) -> Iterator[Involution]:
    return (z for z in enumerate_vexillary(n_max) if z(1) == 1)


def involution_index_cases(n_max: int) -> Iterator[Tuple[Involution, int]]:
    for z in enumerate_involutions(n_max):
        for i in range(1, n_max + 1):
            yield z, i


def recursion_cases(n_max: int) -> Iterator[Tuple[Involution, int]]:
    for z in enumerate_vexillary(n_max):
        for i in range(1, n_max):
            if orthogonal_recursion_applies(z, i):
                yield z, i


def fpf_cases(n_max: int) -> Iterator[Involution]:
    for n in range(2, n_max + 1, 2):
        yield from enumerate_fpf(n)


def lenart_cases(n_max: int) -> Iterator[Tuple[int, Permutation]]:
    for k in range(1, min(n_max, 4) + 1):
        for v in all_permutations(n_max):
            if v.length() <= 6:
                yield k, v


def lensot_cases(n_max: int) -> Iterator[Tuple[int, int, Permutation]]:
    for k in range(1, min(n_max, 4) + 1):
        for p in range(1, k + 1):
            for v in all_permutations(n_max):
                if v.length() <= 6:
                    yield p, k, v


def partitions_in_box(rows: int, cols: int) -> Iterator[Tuple[int, ...]]:
    for parts in product(range(cols + 1), repeat=rows):
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            yield tuple(p for p in parts if p)


def pieri_cases(n_max: int) -> Iterator[Tuple[int, int, Tuple[int, ...]]]:
    for k in range(1, min(n_max, 4) + 1):
        for p in range(1, k + 1):
            for lam in partitions_in_box(k, max(n_max - k, 1)):
                yield p, k, lam


def one_row_cases(n_max: int) -> Iterator[Tuple[int, int]]:
    for n in range(1, n_max + 1):
        for j in range(n + 1):
            yield j, n


def size_cases(n_max: int) -> Iterator[int]:
    yield from range(1, n_max + 1)


def igrass_cases(n_max: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    for n in range(1, n_max + 1):
        for mu in strict_partitions(n):
            yield mu, n


def nonempty_igrass_cases(n_max: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    return ((mu, n) for mu, n in igrass_cases(n_max) if mu)


def transposition_family_cases(n_max: int) -> Iterator[Tuple[str, int]]:
    for n in range(2, n_max + 1):
        yield "t_n", n
    for n in range(3, n_max + 1):
        yield "t_n_shifted", n


def g2n_cases(n_max: int) -> Iterator[Tuple[str, int]]:
    for n in range(3, n_max + 1):
        yield "g_2n", n


def pair_cases(n_max: int) -> Iterator[Tuple[int, int]]:
    for j in range(2, n_max + 1):
        for i in range(1, j):
            yield i, j


# ---- theorem checks ---------------------------------------------------


def check_qd(z: Involution) -> Optional[Failure]:
    return _mismatch(f"qd-thm {z.render()}", ortho_groth(z), qd_formula(z))


def check_ivex(z: Involution) -> Optional[Failure]:
    return _mismatch(f"ivex-thm {z.render()}", ortho_groth(z), ivex_formula(z))


def check_invgroth_recursion(case: Tuple[Involution, int]) -> Optional[Failure]:
    z, i = case
    if invgroth_recursion_holds(z, i):
        return None
    return Failure(f"iG-thm {z.render()} i={i}", "recursion holds", "mismatch")


def check_dom(z: Involution) -> Optional[Failure]:
    expected = {w.render(): g for w, g in gc_values(z).items()}
    actual = {w.render(): g for w, g in dom_thm_gco(z).items()}
    return _mismatch(f"dom-thm {z.render()}", dict(sorted(expected.items())), dict(sorted(actual.items())))


def check_supp_thm(z: Involution) -> Optional[Failure]:
    invariant = gco(z.one_times(1)) == shift_expansion(gco(z), "up")
    fixes_one = z(1) == 1
    if invariant == fixes_one:
        return None
    return Failure(
        f"supp-thm {z.render()}",
        f"shift invariant={fixes_one}",
        f"shift invariant={invariant}",
    )


def check_shift_cor(z: Involution) -> Optional[Failure]:
    m = _leading_fixed_points(z)
    if m and not z.is_identity():
        lowered = _shift_down_involution(z, m)
        found = _mismatch(f"shift-cor(a) {z.render()} down {m}", gco(lowered), shift_expansion(gco(z), "down", m))
        if found:
            return found
    if z(1) == 1:
        for n in (1, 2):
            found = _mismatch(
                f"shift-cor(b) {z.render()} up {n}",
                shift_expansion(gco(z), "up", n),
                gco(z.one_times(n)),
            )
            if found:
                return found
    return None


def check_binv_plus_bound(z: Involution) -> Optional[Failure]:
    atoms = frozenset(binv(z))
    support = gco(z).support()
    members = binv_plus_data(z).members
    if atoms <= support <= members:
        return None
    return Failure(
        f"b+conj {z.render()}",
        f"B_inv={_render_set(atoms)} <= supp <= B_inv^+={_render_set(members)}",
        f"supp={_render_set(support)}",
    )


def check_fkgsp(z) -> Optional[Failure]:
    poly, expansion = symp_groth(z)
    alpha_length = min(w.length() for w in expansion)
    values = expand(poly).normalized(alpha_length)
    wrong = {w.render(): g for w, g in values.items() if g != 1}
    return _mismatch(f"fkgsp {z.render()}", {}, wrong)


def check_lenart(case: Tuple[int, Permutation]) -> Optional[Failure]:
    k, v = case
    direct = expand((1 + BETA * X(k)) * groth(v))
    return _mismatch(f"lenart k={k} v={v.render()}", direct, lenart_transition(k, v))


def check_lensot(case: Tuple[int, int, Permutation]) -> Optional[Failure]:
    p, k, v = case
    direct = expand(groth(grassmannian((1,) * p, k)) * groth(v))
    return _mismatch(f"lensot p={p} k={k} v={v.render()}", direct, lensot_product(p, k, v))


def check_pieri(case: Tuple[int, int, Tuple[int, ...]]) -> Optional[Failure]:
    p, k, lam = case
    direct = expand(groth(grassmannian((1,) * p, k)) * groth(grassmannian(lam, k)))
    return _mismatch(f"pieri p={p} k={k} lam={list(lam)}", direct, grassmannian_pieri(p, k, lam))


def check_one_row(case: Tuple[int, int]) -> Optional[Failure]:
    j, n = case
    direct = expand((1 + BETA * X(n + 1)) * groth(grassmannian((1,) * j, n)))
    return _mismatch(f"1gr-lem j={j} n={n}", direct, one_row_transition(j, n))


def check_prod(k: int) -> Optional[Failure]:
    return _mismatch(f"prod-lem k={k}", expand(two_power_factor(k)), two_power_product(k))


def check_igrass(case: Tuple[Tuple[int, ...], int]) -> Optional[Failure]:
    mu, n = case
    z = igrassmannian(mu, n)
    return _mismatch(f"igrass-cor mu={list(mu)} n={n}", ortho_groth(z), igrass_formula(mu, n))


def check_supp_prop(z: Involution) -> Optional[Failure]:
    if z.is_identity():
        return None
    low, high = min(z.perm.support()), max(z.perm.support())
    outside = [
        w for w in binv_plus_data(z).members
        if any(i < low - 1 or i > high + 1 for i in w.support())
    ]
    if not outside:
        return None
    return Failure(f"supp-prop {z.render()}", f"support within [{low - 1},{high + 1}]", _render_set(outside))


def check_orthogonal_recursion(case: Tuple[Involution, int]) -> Optional[Failure]:
    z, i = case
    if orthogonal_recursion_holds(z, i):
        return None
    return Failure(f"orth-rec {z.render()} i={i}", "recursion holds", "mismatch")


def check_family_form(case: Tuple[str, int]) -> Optional[Failure]:
    family, n = case
    z = closed_form_involution(family, n)
    label = f"{family} n={n}"
    found = _mismatch(f"{label} closed form", gco(z), closed_forms(family, n))
    if found:
        return found
    found = _mismatch(f"{label} B_inv", _render_set(binv(z)), _render_set(predicted_binv(family, n)))
    if found:
        return found
    members = binv_plus_data(z).members
    return _mismatch(f"{label} B_inv^+", _render_set(members), _render_set(predicted_binv_plus(family, n)))


def check_gn_example(n: int) -> Optional[Failure]:
    z = g_family(n)
    members = binv_plus_data(z).members
    return _mismatch(f"g-ex n={n}", _render_set(predicted_binv_plus("g_n", n)), _render_set(members))


def check_supp_cor(z: Involution) -> Optional[Failure]:
    steps = 1
    return _mismatch(
        f"supp-cor {z.render()}",
        stable_truncation(z, "GQ", steps, TRUNCATION_VARS),
        gq_from_gco(z, steps, TRUNCATION_VARS),
    )


def check_ivex_cor(z: Involution) -> Optional[Failure]:
    steps = TRUNCATION_VARS
    return _mismatch(
        f"ivex-cor {z.render()}",
        stable_truncation(z, "GQ", steps, TRUNCATION_VARS),
        gq_from_shiftable(z, steps, TRUNCATION_VARS),
    )


def check_almost(case: Tuple[Tuple[int, ...], int]) -> Optional[Failure]:
    mu, n = case
    z = igrassmannian(mu, n)
    _, settled = stable_limit(z, "GQ", TRUNCATION_VARS)
    steps = max(settled, almost_shifts(mu, n, TRUNCATION_VARS))
    return _mismatch(
        f"almost-eq mu={list(mu)} n={n}",
        stable_truncation(z, "GQ", steps, TRUNCATION_VARS),
        almost_expansion(mu, n, steps, TRUNCATION_VARS),
    )


def check_gp_stab(case: Tuple[Tuple[int, ...], int]) -> Optional[Failure]:
    mu, n = case
    if gp_stab_check(mu, n):
        return None
    return Failure(f"gp-stab mu={list(mu)} n={n}", "stab_n(G^) = GP truncation", "mismatch")


def check_lnc_varpi(z: Involution) -> Optional[Failure]:
    nonnegative = all(
        c >= 0
        for entry in shiftable_data(z).sets
        for _, c in entry.varpi.items()
    )
    return _mismatch(f"lnc-varpi {z.render()}", is_locally_noncrossing(z), nonnegative)


def check_demazure_fiber(z: Involution) -> Optional[Failure]:
    atoms = frozenset(binv(z))
    check_binv_fiber(z, atoms)
    n = max(z.size, 1)
    fiber = frozenset(w for w in all_permutations(n) if demazure(w.inverse(), w) == z.perm)
    return _mismatch(f"binv-fiber {z.render()}", _render_set(fiber), _render_set(atoms))


def check_ellhat(z: Involution) -> Optional[Failure]:
    atoms = binv(z)
    values = (
        ell_inv(z),
        alpha_inv(z).length(),
        min(w.length() for w in atoms),
        len(hat_diagram(z)),
    )
    if len(set(values)) != 1:
        return Failure(f"ellhat {z.render()}", "all equal", str(values))
    for i in range(1, z.size + 1):
        s = Permutation.simple(i)
        y = Involution.from_permutation(demazure(demazure(s, z.perm), s))
        expected = ell_inv(z) + (0 if z.perm.has_right_descent(i) else 1)
        if ell_inv(y) != expected:
            return Failure(f"ellhat {z.render()} i={i}", str(expected), str(ell_inv(y)))
    return None


def check_arc_vex(z: Involution) -> Optional[Failure]:
    return _mismatch(f"arc-vex {z.render()}", z.is_vexillary(), is_vexillary_arc(z))


def check_wij(case: Tuple[int, int]) -> Optional[Failure]:
    i, j = case
    report = wij_report(i, j)
    if not report.counterexample:
        return None
    return Failure(
        f"w_{i},{j}",
        f"|B_inv^+|={report.binv_plus_size}",
        f"|supp|={report.support_size}",
    )


def check_binv_plus_connected(z: Involution) -> Optional[Failure]:
    data = binv_plus_data(z)
    if data.is_connected():
        return None
    return Failure(f"B_inv^+ {z.render()}", "weakly connected", f"{len(data.members)} members, disconnected")
