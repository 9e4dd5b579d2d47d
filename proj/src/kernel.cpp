#include "latwalk/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace latwalk {

namespace {

Rational rational_pow(const Rational& base, long e) {
    Rational r(1), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

// Complete homogeneous symmetric polynomial h_m(u1, u2) = sum u1^a u2^{m-a};
// zero for m < 0.
RationalSeries hom_sym2(const RationalSeries& u1, const RationalSeries& u2, long m) {
    RationalSeries r(u1.ram, u1.order);
    if (m < 0) return r;
    RationalSeries p1 = RationalSeries::constant(Rational(1), u1.ram, u1.order);
    std::vector<RationalSeries> pow1;
    for (long a = 0; a <= m; ++a) {
        pow1.push_back(p1);
        if (a < m) p1 = p1 * u1;
    }
    RationalSeries p2 = RationalSeries::constant(Rational(1), u1.ram, u1.order);
    for (long a = m; a >= 0; --a) {
        r = r + pow1[a] * p2;
        if (a > 0) p2 = p2 * u2;
    }
    return r;
}

// Collapse a t-series (t^h = z) with support on multiples of h into a
// z-series: z-coefficient m is the t-coefficient h*(m + shift).
RationalSeries t_to_z(const RationalSeries& s, int n_max, int shift = 0) {
    const int h = s.ram;
    for (int i = 0; i <= s.order; ++i)
        if (i % h != 0 && s.c[i] != 0)
            throw std::logic_error("t-series is not a z-series: stray coefficient at t^" +
                                   std::to_string(i));
    if (s.order < h * (n_max + shift))
        throw std::invalid_argument("series order too low for requested z-order");
    RationalSeries r(1, n_max);
    for (int m = 0; m <= n_max; ++m) r.c[m] = s.c[h * (m + shift)];
    return r;
}

RationalSeries cyc_to_z(const Series<Cyclotomic>& s, int n_max, int shift = 0) {
    const int h = s.ram;
    if (s.order < h * (n_max + shift))
        throw std::invalid_argument("series order too low for requested z-order");
    for (int i = 0; i <= s.order; ++i)
        if (i % h != 0 && !(s.c[i] == Cyclotomic(0)))
            throw std::logic_error("conjugate product not omega-free at t^" + std::to_string(i) +
                                   ": " + s.c[i].str());
    RationalSeries r(1, n_max);
    for (int m = 0; m <= n_max; ++m) r.c[m] = s.c[h * (m + shift)].rational_part();
    return r;
}

// Coefficients of Q(u) = u^c P(u), a polynomial with Q(0) = P's deepest
// weight.
std::vector<Rational> kernel_polynomial(const StepSet& steps) {
    const long c = steps.down_span(), d = steps.up_span();
    std::vector<Rational> q(c + d + 1);
    for (long j = 0; j <= c + d; ++j) q[j] = steps.coeff(j - c);
    return q;
}

void require_basketball(const KernelRoots& roots, const char* what) {
    if (roots.h != 2 || roots.steps.down_span() != 2 || roots.steps.up_span() != 2 ||
        !roots.steps.unit_weights() || roots.steps.coeff(0) != 0)
        throw std::invalid_argument(std::string(what) + " requires the basketball step set");
}

RationalSeries basketball_second_root(const KernelRoots& roots) {
    RationalSeries u2 = roots.U;
    for (int i = 1; i <= u2.order; i += 2) u2.c[i] = -u2.c[i];
    return u2;
}

}  // namespace

KernelRoots solve_distinguished_root(const StepSet& steps, int order) {
    const long c = steps.down_span(), d = steps.up_span();
    if (c < 1 || d < 1)
        throw std::invalid_argument("step set needs both a negative and a positive step");
    const long h = c;
    std::vector<Rational> q = kernel_polynomial(steps);
    if (h > 1 && q[0] != 1)
        throw std::invalid_argument("only unit weight supported on the deepest step when h > 1");

    // Lagrange inversion for u = t phi(u) with phi = Q^{1/h}:
    //   [t^n] U = (1/n) [u^{n-1}] Q(u)^{n/h}.
    RationalSeries u(static_cast<int>(h), order);
    const Rational q0 = q[0];
    std::vector<Rational> qn = q;
    for (auto& v : qn) v /= q0;
    for (int n = 1; n <= order; ++n) {
        std::vector<Rational> f = power_series_pow(qn, frac(n, h), n - 1);
        u.c[n] = rational_pow(q0, n) / n * f[n - 1];  // q0^{n/h} with h = 1 when q0 != 1
    }

    // Independent residual check: U^h = t^h Q(U) as formal series.
    {
        const int check_order = std::min(order, 200);
        RationalSeries uc = u.truncated(check_order);
        RationalSeries qpoly(uc.ram, static_cast<int>(q.size()) - 1);
        qpoly.c = q;
        RationalSeries lhs = pow_int(uc, static_cast<int>(h));
        RationalSeries rhs = compose(qpoly, uc);
        for (int i = 0; i < static_cast<int>(h); ++i) rhs = shift_up(rhs, 1);
        if (!(lhs - rhs).is_zero())
            throw std::logic_error("kernel root residual is nonzero");
    }
    return KernelRoots{steps, h, std::move(u)};
}

Series<Cyclotomic> conjugate_root(const KernelRoots& roots, long i) {
    if (i < 1 || i > roots.h) throw std::invalid_argument("conjugate index out of range");
    Series<Cyclotomic> r(roots.U.ram, roots.U.order);
    for (int n = 0; n <= r.order; ++n) {
        Cyclotomic w = Cyclotomic::root_power(roots.h, n * (i - 1));
        r.c[n] = Cyclotomic::from_rational(roots.h, roots.U.c[n]) * w;
    }
    return r;
}

RationalSeries excursion_gf(const KernelRoots& roots, int n_max) {
    const long h = roots.h;
    if (roots.U.order < h * (n_max + 1))
        throw std::invalid_argument("kernel root solved to insufficient order for excursion_gf");
    Series<Cyclotomic> prod = conjugate_root(roots, 1);
    for (long i = 2; i <= h; ++i) prod = prod * conjugate_root(roots, i);
    RationalSeries e = cyc_to_z(prod, n_max, /*shift=*/1);
    if (h % 2 == 0)
        for (auto& v : e.c) v = -v;
    return e;
}

RationalSeries positive_walk_gf(const KernelRoots& roots, long k, int n_max) {
    if (k < 0) throw std::invalid_argument("positive_walk_gf needs k >= 0");
    if (!roots.steps.symmetric())
        throw std::invalid_argument(
            "positive_walk_gf needs a symmetric step set (the derivation uses time reversal)");
    const long h = roots.h;
    if (roots.U.order < h * n_max)
        throw std::invalid_argument("kernel root solved to insufficient order for positive_walk_gf");
    // Build h_k(u_1, ..., u_h) by adding one root at a time:
    // H_new[m] = sum_a u^a H_old[m-a].
    const int ord = roots.U.order;
    std::vector<Series<Cyclotomic>> hs(k + 1, Series<Cyclotomic>(roots.U.ram, ord));
    hs[0] = Series<Cyclotomic>::constant(Cyclotomic(1), roots.U.ram, ord);
    for (long i = 1; i <= h; ++i) {
        Series<Cyclotomic> u = conjugate_root(roots, i);
        std::vector<Series<Cyclotomic>> upow;
        Series<Cyclotomic> p = Series<Cyclotomic>::constant(Cyclotomic(1), u.ram, ord);
        for (long a = 0; a <= k; ++a) {
            upow.push_back(p);
            if (a < k) p = p * u;
        }
        std::vector<Series<Cyclotomic>> next(k + 1, Series<Cyclotomic>(u.ram, ord));
        for (long m = 0; m <= k; ++m)
            for (long a = 0; a <= m; ++a) next[m] = next[m] + upow[a] * hs[m - a];
        hs = std::move(next);
    }
    return cyc_to_z(hs[k], n_max);
}

RationalSeries positive_meander_gf(const KernelRoots& roots, int n_max) {
    if (!roots.steps.symmetric())
        throw std::invalid_argument(
            "positive_meander_gf needs a symmetric step set (the derivation uses time reversal)");
    const long h = roots.h;
    if (roots.U.order < h * n_max)
        throw std::invalid_argument(
            "kernel root solved to insufficient order for positive_meander_gf");
    const int ord = roots.U.order;
    Series<Cyclotomic> prod = Series<Cyclotomic>::constant(Cyclotomic(1), roots.U.ram, ord);
    Series<Cyclotomic> one = Series<Cyclotomic>::constant(Cyclotomic(1), roots.U.ram, ord);
    for (long i = 1; i <= h; ++i) prod = prod * inverse(one - conjugate_root(roots, i));
    return cyc_to_z(prod, n_max);
}

std::pair<RationalSeries, RationalSeries> g1_and_g2(const KernelRoots& roots, long j, int n_max) {
    require_basketball(roots, "g1_and_g2");
    if (j < 1) throw std::invalid_argument("g1_and_g2 needs j >= 1");
    RationalSeries u1 = roots.U, u2 = basketball_second_root(roots);
    // G_{j,1} = -u1 u2 h_{j-1}(u1,u2) / z,
    // G_{j,2} = (u1 u2 h_{j-1}(u1,u2) + h_j(u1,u2)) / z,   z = t^2.
    RationalSeries core = u1 * u2 * hom_sym2(u1, u2, j - 1);
    RationalSeries g1 = t_to_z(-core, n_max, /*shift=*/1);
    RationalSeries g2 = t_to_z(core + hom_sym2(u1, u2, j), n_max, /*shift=*/1);
    return {g1, g2};
}

RationalSeries basketball_w(const KernelRoots& roots, long i, int n_max) {
    require_basketball(roots, "basketball_w");
    if (i < 0) i = -i;  // P(u) = P(1/u), so W_i = W_{-i}
    RationalSeries u1 = roots.U, u2 = basketball_second_root(roots);
    const int ord = u1.order;

    // The large kernel roots are 1/u_1, 1/u_2 (P(u) = P(1/u)), which
    // factorizes the kernel over the annulus |u_1| < |u| < 1/|u_1|:
    //   1/(1 - zP(u)) = E(z) prod_l 1/(1 - u_l/u) prod_l 1/(1 - u_l u),
    // with E = -u1 u2 / z, so W_i = E sum_{q >= 0} h_q h_{q+i} in the
    // complete homogeneous polynomials of the small roots.
    const long top = std::min<long>(2 * i + ord, i + (ord - i) / 2 + 1);
    std::vector<RationalSeries> hs(top + 1);
    hs[0] = RationalSeries::constant(Rational(1), u1.ram, ord);
    RationalSeries u2p = hs[0];
    for (long p = 1; p <= top; ++p) {
        u2p = u2p * u2;
        hs[p] = u1 * hs[p - 1] + u2p;
    }
    RationalSeries sum(u1.ram, ord);
    for (long q = 0; q + i <= top && 2 * q + i <= ord; ++q)
        sum = sum + hs[q] * hs[q + i];
    RationalSeries w = t_to_z(-(u1 * u2) * sum, n_max, /*shift=*/1);

    if (i <= 1) {
        // Independent check from the contour integral over the small
        // roots alone (valid while u^{-i-1}/(1 - zP(u)) has no pole at
        // the origin): z u' = (t/2) u_t gives
        // W_i = (t/2) (u1_t u2^{i+1} + u2_t u1^{i+1}) / (u1 u2)^{i+1}.
        RationalSeries half_t = Rational(1, 2) * RationalSeries::variable(u1.ram, ord);
        RationalSeries num =
            half_t * (derivative(u1) * pow_int(u2, static_cast<int>(i) + 1) +
                      derivative(u2) * pow_int(u1, static_cast<int>(i) + 1));
        RationalSeries den = pow_int(u1 * u2, static_cast<int>(i) + 1);
        RationalSeries w2 = t_to_z(divide(num, den).truncated(2 * n_max), n_max);
        if (!(w.truncated(w2.order) - w2.truncated(w.order)).is_zero())
            throw std::logic_error("basketball W_i: factorization and contour routes disagree");
    }
    return w;
}

RationalSeries basketball_gjk(const KernelRoots& roots, long j, long k, int n_max) {
    require_basketball(roots, "basketball_gjk");
    if (j < 1 || k < 1) throw std::invalid_argument("basketball_gjk needs j, k >= 1");
    RationalSeries u1 = roots.U, u2 = basketball_second_root(roots);

    // Route 1: first-passage decomposition at the minimal altitude,
    // G_{j,k} = E(z) sum_{i=1}^{min(j,k)} h_{j-i} h_{k-i},  E = -u1 u2 / z.
    RationalSeries sum(u1.ram, u1.order);
    for (long i = 1; i <= std::min(j, k); ++i)
        sum = sum + hom_sym2(u1, u2, j - i) * hom_sym2(u1, u2, k - i);
    RationalSeries route1 = t_to_z(-(u1 * u2) * sum, n_max, /*shift=*/1);

    // Route 2: coefficient extraction in the functional equation,
    // G_{j,k} = W_{j-k} - h_j W_k + u1 u2 h_{j-1} W_{k+1}.
    RationalSeries hj = t_to_z(hom_sym2(u1, u2, j), n_max);
    RationalSeries hj1c = t_to_z(u1 * u2 * hom_sym2(u1, u2, j - 1), n_max);
    RationalSeries route2 = basketball_w(roots, j - k, n_max) -
                            (hj * basketball_w(roots, k, n_max)).truncated(n_max) +
                            (hj1c * basketball_w(roots, k + 1, n_max)).truncated(n_max);

    if (!(route1 - route2).is_zero())
        throw std::logic_error("basketball G_{j,k}: decomposition and extraction routes disagree");
    return route1;
}

Rational lagrange_coefficient(const RationalSeries& phi,
                              const std::map<long, Rational>& laurent_h, long n) {
    if (n < 1) throw std::invalid_argument("lagrange_coefficient needs n >= 1");
    if (phi.c[0] == 0) throw std::invalid_argument("phi(0) must be nonzero");
    long max_index = 0;
    for (const auto& [e, he] : laurent_h)
        if (he != 0 && n - e > max_index) max_index = n - e;
    if (max_index > phi.order)
        throw std::invalid_argument("phi series order too low for lagrange_coefficient");
    std::vector<Rational> qn(phi.c.begin(), phi.c.begin() + std::min<long>(phi.order, max_index) + 1);
    const Rational p0 = qn[0];
    for (auto& v : qn) v /= p0;
    std::vector<Rational> f = power_series_pow(qn, Rational(n), static_cast<int>(max_index));
    const Rational scale = rational_pow(p0, n);
    // [z^n] H(F) = (1/n) [z^{n-1}] H'(z) phi(z)^n = (1/n) sum_e e H_e [z^{n-e}] phi^n.
    Rational acc(0);
    for (const auto& [e, he] : laurent_h) {
        if (he == 0 || e == 0) continue;
        const long m = n - e;
        if (m < 0) continue;
        acc += Rational(e) * he * scale * f[m];
    }
    return acc / Rational(n);
}

BivariateSeries bivariate_mul(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.t_order, b.t_order), std::min(a.u_order, b.u_order));
    for (int i = 0; i <= std::min(a.t_order, r.t_order); ++i)
        for (int p = 0; p <= std::min(a.u_order, r.u_order); ++p) {
            if (a.c[i][p] == 0) continue;
            for (int j = 0; i + j <= r.t_order && j <= b.t_order; ++j)
                for (int q = 0; p + q <= r.u_order && q <= b.u_order; ++q) {
                    if (b.c[j][q] == 0) continue;
                    r.c[i + j][p + q] += a.c[i][p] * b.c[j][q];
                }
        }
    return r;
}

BivariateSeries bivariate_geometric(const BivariateSeries& s) {
    for (int p = 0; p <= s.u_order; ++p)
        if (s.c[0][p] != 0)
            throw std::invalid_argument("bivariate_geometric needs t-valuation >= 1");
    BivariateSeries r(s.t_order, s.u_order);
    r.c[0][0] = 1;
    BivariateSeries p = s;
    for (int step = 1; step <= s.t_order; ++step) {
        bool any = false;
        for (int i = 0; i <= p.t_order; ++i)
            for (int q = 0; q <= p.u_order; ++q)
                if (p.c[i][q] != 0) {
                    r.c[i][q] += p.c[i][q];
                    any = true;
                }
        if (!any) break;
        p = bivariate_mul(p, s);
    }
    return r;
}

std::vector<Rational> diagonal(const BivariateSeries& f, int n_max) {
    if (n_max > f.t_order || n_max > f.u_order)
        throw std::invalid_argument("diagonal past truncation order");
    std::vector<Rational> d(n_max + 1);
    for (int n = 0; n <= n_max; ++n) d[n] = f.c[n][n];
    return d;
}

BivariateSeries basketball_excursion_diagonal_function(int n_max) {
    auto upoly = [&](const std::vector<long>& coeffs, int t_pow) {
        BivariateSeries b(n_max, n_max);
        for (size_t a = 0; a < coeffs.size(); ++a)
            if (static_cast<int>(a) <= n_max && t_pow <= n_max)
                b.c[t_pow][a] = Rational(coeffs[a]);
        return b;
    };
    // (1+u)^2 = 1,2,1; (1+u)^4 = 1,4,6,4,1; (1+u)^6 = 1,6,15,20,15,6,1.
    BivariateSeries s1 = upoly({0, 1, 2, 1}, 1);                       // u(1+u)^2 t
    BivariateSeries s2 = upoly({0, 1, 4, 6, 4, 1}, 2);                 // u(1+u)^4 t^2
    BivariateSeries s(n_max, n_max);
    for (int i = 0; i <= n_max; ++i)
        for (int q = 0; q <= n_max; ++q) s.c[i][q] = s1.c[i][q] + s2.c[i][q];
    BivariateSeries geo = bivariate_geometric(s);
    BivariateSeries num = upoly({0, 1, 6, 15, 20, 15, 6, 1}, 2);       // u(1+u)^6 t^2
    BivariateSeries r = bivariate_mul(num, geo);
    BivariateSeries tail = upoly({1, 2, 1}, 0);                        // (1+u)^2
    for (int q = 0; q <= std::min(2, n_max); ++q) r.c[0][q] += tail.c[0][q];
    return r;
}

}  // namespace latwalk
