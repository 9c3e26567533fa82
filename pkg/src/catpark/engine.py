"""Generating functions, statistic polynomials, and identity checks.

Brute-force polynomials are sums over enumerated distributions and serve as
the ground truth.  Closed forms are built from truncated series and must
match the brute values coefficient by coefficient.

Two published closed forms disagree with enumeration and are implemented in
both variants: the q-luck series (the stated reciprocal omits an exponent m)
and the four-variable functional equation (the stated form attaches the
argument substitutions to the wrong factors).  ``literal=True`` selects the
uncorrected variant so the verification harness can demonstrate the
mismatch; the corrected form is always the default.  The multi-statistic
product formula has a third, narrower defect: its x^1 coefficient counts a
node the smallest tree does not have (see verify_multi_stat_product).
"""

from dataclasses import dataclass, field

from catpark.caterpillar import (
    build_caterpillar,
    enumerate_caterpillar_pk,
    omega_tree,
    simulate,
)
from catpark.errors import HBasisError
from catpark.polynomials import MultiPoly, complete_homogeneous
from catpark.sequences import canonical_family, count_u_pk, fuss_catalan, BoundFamily
from catpark.series import TruncatedSeries
from catpark import kernels

QT_UV = ("q", "t", "u", "v")

DEFAULT_ORDER = 12


@dataclass
class IdentityCheck:
    """Coefficient-by-coefficient comparison result."""

    name: str
    params: dict
    mismatches: list = field(default_factory=list)  # (index, lhs, rhs) triples

    @property
    def ok(self):
        return not self.mismatches


# -- series builders -----------------------------------------------------


def fuss_catalan_series(m, order=DEFAULT_ORDER, variables=()):
    """Series whose x^n coefficient is the n-th count for regularity m."""
    return TruncatedSeries.from_function(
        variables, order, lambda j: fuss_catalan(m, j)
    )


def verify_functional_equation(m, order=DEFAULT_ORDER):
    """Check B = 1 + x*B^(m+1) coefficient-wise."""
    b = fuss_catalan_series(m, order)
    rhs = TruncatedSeries.one((), order) + (b ** (m + 1)).shifted(1)
    check = IdentityCheck("functional-equation", {"m": m, "order": order})
    for j in range(order + 1):
        if b.coefficient(j) != rhs.coefficient(j):
            check.mismatches.append(
                (j, b.coefficient(j).render(), rhs.coefficient(j).render())
            )
    return check


def r_poly_brute(m, n):
    """Sum of q^luck over all canonically bounded distributions of length n."""
    hist = kernels.luck_histogram(m, n)
    return MultiPoly(("q",), {(k,): c for k, c in enumerate(hist) if c})


def r_series_closed(m, order=DEFAULT_ORDER, variables=("q",), qvar="q",
                    literal=False):
    """The q-luck generating series 1/(1 - q*x*B^m).

    literal=True evaluates the uncorrected exponent variant 1/(1 - q*x*B),
    which disagrees with enumeration from n=2 on (for m >= 2).
    """
    variables = tuple(variables)
    b = fuss_catalan_series(m, order, variables)
    tail = b if literal else b**m
    q = MultiPoly.variable(variables, qvar)
    return (TruncatedSeries.one(variables, order) - (q * tail).shifted(1)).reciprocal()


def verify_r_series(m, order, literal=False):
    name = "q-luck-series" + ("-literal" if literal else "")
    check = IdentityCheck(name, {"m": m, "order": order})
    closed = r_series_closed(m, order, literal=literal)
    for n in range(order + 1):
        brute = r_poly_brute(m, n)
        if closed.coefficient(n) != brute:
            check.mismatches.append(
                (n, brute.render(), closed.coefficient(n).render())
            )
    return check


def gamma_poly_brute(m, n):
    """Sum of q^luck t^(freq of 1) u^f v^g over length-n distributions;
    the empty length contributes the constant 1."""
    if n == 0:
        return MultiPoly.const(QT_UV, 1)
    hist = kernels.stat_quad_histogram(m, n)
    terms = {(lk, w1, f, g): c for (lk, w1, f, g), c in hist.items()}
    return MultiPoly(QT_UV, terms)


def gamma_series_closed(m, order=DEFAULT_ORDER, literal=False):
    """Four-variable functional equation for the joint statistics.

    Corrected form: 1 + x*q*t*(uv)^2 * B(x;q) * B(vx)^(m-1) * B(uvx;t).
    literal=True instead attaches the substitutions as
    B(x)^(m-1) * B(vx;q) * B(uvx;t), which fails against enumeration at
    m=2, n=2.
    """
    bq = r_series_closed(m, order, QT_UV, "q")
    bt = r_series_closed(m, order, QT_UV, "t")
    b = fuss_catalan_series(m, order, QT_UV)
    v = MultiPoly.variable(QT_UV, "v")
    uv = MultiPoly.monomial(QT_UV, {"u": 1, "v": 1})
    if literal:
        product = (b ** (m - 1)) * bq.scale_arg(v) * bt.scale_arg(uv)
    else:
        product = bq * (b.scale_arg(v) ** (m - 1)) * bt.scale_arg(uv)
    head = MultiPoly.monomial(QT_UV, {"q": 1, "t": 1, "u": 2, "v": 2})
    return TruncatedSeries.one(QT_UV, order) + (head * product).shifted(1)


def verify_gamma_series(m, order, literal=False):
    name = "joint-series" + ("-literal" if literal else "")
    check = IdentityCheck(name, {"m": m, "order": order})
    closed = gamma_series_closed(m, order, literal=literal)
    for n in range(order + 1):
        brute = gamma_poly_brute(m, n)
        if closed.coefficient(n) != brute:
            check.mismatches.append(
                (n, brute.render(), closed.coefficient(n).render())
            )
    return check


def h_series(m, k, r, order=DEFAULT_ORDER):
    """Series of exact counts for the bound family (m, k, r)."""
    fam = BoundFamily(m, k, r)
    return TruncatedSeries.from_function(
        (), order, lambda n: count_u_pk(n, fam)
    )


def verify_thm_rec(m, k, r, order):
    """Check that the (m,k,r) count series equals B^(mk-r)."""
    check = IdentityCheck("count-series-power", {"m": m, "k": k, "r": r,
                                                 "order": order})
    counted = h_series(m, k, r, order)
    powered = fuss_catalan_series(m, order) ** (m * k - r)
    for n in range(order + 1):
        if counted.coefficient(n) != powered.coefficient(n):
            check.mismatches.append(
                (n, counted.coefficient(n).render(),
                 powered.coefficient(n).render())
            )
    return check


# -- complete homogeneous decomposition -----------------------------------


def h_decompose(poly):
    """Write poly / (product of all variables) as sum of c_d * h_d.

    The input must be divisible by every variable.  c_d is read off the pure
    power (first variable)^d, then the residual is checked to be exactly
    zero; a nonzero residual raises HBasisError.  Returns {degree: coeff}
    with zero coefficients omitted.
    """
    variables = poly.variables
    if not variables:
        raise ValueError("need at least one variable")
    try:
        reduced = poly.divide_by_monomial({v: 1 for v in variables})
    except ValueError as exc:
        raise HBasisError(str(exc)) from exc
    coeffs = {}
    width = len(variables)
    for d in range(reduced.total_degree() + 1):
        exps = (d,) + (0,) * (width - 1)
        c = reduced.coefficient(exps)
        if c:
            coeffs[d] = c
    rebuilt = MultiPoly.zero(variables)
    for d, c in coeffs.items():
        rebuilt = rebuilt + complete_homogeneous(variables, d) * c
    if rebuilt != reduced:
        raise HBasisError(
            f"{poly.render()} is not a combination of complete homogeneous "
            f"polynomials after factoring {'*'.join(variables)}"
        )
    return coeffs


# -- multi-statistic polynomials on the trees ------------------------------


def multi_stat_variables(m):
    return tuple(f"q{i}" for i in range(m + 1))


def multi_stat_poly_brute(m, n, max_objects=None):
    """Sum of q0^luck * prod_j qj^(freq of node j) over all parking
    distributions on the (m, n) tree, with luck read off the simulation."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    variables = multi_stat_variables(m)
    tree = build_caterpillar(m, n)
    terms = {}
    for seq in enumerate_caterpillar_pk(m, n, max_objects=max_objects):
        outcome = simulate(tree, seq)
        key = (len(outcome.lucky_set),) + tuple(
            omega_tree(tree, seq, j) for j in range(1, m + 1)
        )
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(variables, terms)


def verify_multi_stat_product(m, order, max_objects=None):
    """Compare the multi-statistic series with 1 + x * prod q_i B(x;q_i).

    The product formula is exact at every order except x^1 when m >= 2: the
    single-node tree has no node j >= 2, so the enumerated coefficient is
    q0*q1 while the product yields q0*...*qm.  That known gap is returned
    separately in ``order_one_gap`` instead of being counted as a mismatch.
    """
    variables = multi_stat_variables(m)
    check = IdentityCheck("multi-stat-product", {"m": m, "order": order})
    rhs = TruncatedSeries.one(variables, order)
    if order >= 1:
        product = TruncatedSeries.one(variables, order)
        for i in range(m + 1):
            qi = MultiPoly.variable(variables, f"q{i}")
            product = product * (
                qi * r_series_closed(m, order, variables, f"q{i}")
            )
        rhs = rhs + product.shifted(1)
    gap = None
    for n in range(order + 1):
        lhs = (MultiPoly.const(variables, 1) if n == 0
               else multi_stat_poly_brute(m, n, max_objects=max_objects))
        if lhs == rhs.coefficient(n):
            continue
        if n == 1 and m >= 2:
            gap = (lhs.render(), rhs.coefficient(1).render())
        else:
            check.mismatches.append(
                (n, lhs.render(), rhs.coefficient(n).render())
            )
    check.params["order_one_gap"] = gap
    return check


@dataclass(frozen=True)
class JointCountTensor:
    """Counts of distributions on the (m, n) tree by the full statistic
    vector (luck, freq of node 1, ..., freq of node m)."""

    m: int
    n: int
    entries: dict

    def count(self, key):
        return self.entries.get(tuple(key), 0)

    def total(self):
        return sum(self.entries.values())


def joint_count_tensor(m, n, max_objects=None):
    poly = multi_stat_poly_brute(m, n, max_objects=max_objects)
    return JointCountTensor(m, n, {e: c for e, c in poly.items()})


def verify_tensor_symmetry(m, n, max_objects=None):
    """Entries with equal coordinate sums must be equal."""
    check = IdentityCheck("tensor-symmetry", {"m": m, "n": n})
    tensor = joint_count_tensor(m, n, max_objects=max_objects)
    by_sum = {}
    for key, count in sorted(tensor.entries.items()):
        by_sum.setdefault(sum(key), []).append((key, count))
    for total, got in sorted(by_sum.items()):
        counts = {c for _, c in got}
        if len(counts) > 1:
            check.mismatches.append((total, got, None))
    return check


# -- convolution identity ---------------------------------------------------


def verify_convolution_identity(m, n_max, t_max=None):
    """Check that summing products of q-luck polynomials over weak
    compositions equals the count-weighted h-basis combination.

    For every n <= n_max and every width 2 <= t <= m+1 (or t_max):
        sum over t-compositions a of n of prod_i R_(a_i)(q_(i-1))
        == sum_k C_(n,k) * h_k(q_0, ..., q_(t-1)).
    """
    if t_max is None:
        t_max = m + 1
    check = IdentityCheck("luck-convolution", {"m": m, "n_max": n_max,
                                               "t_max": t_max})
    r_polys = [r_poly_brute(m, n) for n in range(n_max + 1)]
    luck_counts = [
        {e[0]: c for e, c in poly.items()} for poly in r_polys
    ]
    for t in range(2, t_max + 1):
        variables = tuple(f"q{i}" for i in range(t))
        # per-variable copies of every R_n
        per_var = [
            [p.rename({"q": f"q{i}"}).rename(variables) for p in r_polys]
            for i in range(t)
        ]
        for n in range(n_max + 1):
            lhs = MultiPoly.zero(variables)
            for comp in _weak_compositions(n, t):
                term = MultiPoly.const(variables, 1)
                for i, part in enumerate(comp):
                    term = term * per_var[i][part]
                lhs = lhs + term
            rhs = MultiPoly.zero(variables)
            for k in range(n + 1):
                c = luck_counts[n].get(k, 0)
                if c:
                    rhs = rhs + complete_homogeneous(variables, k) * c
            if lhs != rhs:
                check.mismatches.append(
                    ((t, n), lhs.render(), rhs.render())
                )
    return check


def _weak_compositions(n, t):
    if t == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for rest in _weak_compositions(n - head, t - 1):
            yield (head,) + rest
