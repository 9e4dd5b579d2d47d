#ifndef LATWALK_KERNEL_HPP
#define LATWALK_KERNEL_HPP

#include <map>
#include <utility>
#include <vector>

#include "latwalk/cyclotomic.hpp"
#include "latwalk/series.hpp"
#include "latwalk/step_set.hpp"

namespace latwalk {

/// The distinguished small root U of the kernel equation 1 - z P(u) = 0,
/// as a power series in t with t^h = z. All other small roots are the
/// conjugates U(omega^{i-1} t).
struct KernelRoots {
    StepSet steps;
    long h;               // ramification
    RationalSeries U;     // ram = h, valuation exactly 1, [t^1] = 1
};

/// Solves the kernel equation for the distinguished small root, via
/// per-coefficient Lagrange inversion of u = t * phi(u) in exact
/// rational arithmetic, with an algebraic residual check.
///
/// Supported step sets: Lukasiewicz sets (down span 1, any weights) and the
/// unit-weight symmetric ranges {0,±1,...,±h} / {±1,...,±h}.
/// `order` is the truncation order in t.
KernelRoots solve_distinguished_root(const StepSet& steps, int order);

/// i-th small root u_i(z) = U(omega^{i-1} t), 1 <= i <= h, with
/// coefficients in Q[omega].
Series<Cyclotomic> conjugate_root(const KernelRoots& roots, long i);

/// E(z) = (-1)^{h-1} z^{-1} prod_i u_i(z), reduced to a rational z-series.
/// `n_max` is the truncation order in z.
RationalSeries excursion_gf(const KernelRoots& roots, int n_max);

/// G_{0,k}(z) = h_k(u_1,...,u_h): strictly positive walks from 0 to k >= 1.
RationalSeries positive_walk_gf(const KernelRoots& roots, long k, int n_max);

/// M_{>0}(z) = prod_i 1/(1 - u_i(z)): positive meanders (empty walk included).
RationalSeries positive_meander_gf(const KernelRoots& roots, int n_max);

/// Basketball-only (h = 2): G_{j,1} and G_{j,2} for j >= 1 from the kernel
/// solution of the fundamental functional equation.
std::pair<RationalSeries, RationalSeries> g1_and_g2(const KernelRoots& roots, long j, int n_max);

/// Basketball-only: G_{j,k} for j,k >= 1, computed along two independent
/// routes (first-passage decomposition, and coefficient extraction via the
/// unconstrained-walk series W_i); both must agree.
RationalSeries basketball_gjk(const KernelRoots& roots, long j, long k, int n_max);

/// W_i(z) = [u^i] 1/(1 - z P(u)) for the basketball step set, from the
/// contour-integral expression in the small roots.
RationalSeries basketball_w(const KernelRoots& roots, long i, int n_max);

/// [z^n] H(F(z)) where F = z phi(F), via Lagrange-Buermann inversion:
/// (1/n) [z^{n-1}] H'(z) phi(z)^n. H is a Laurent polynomial given as
/// exponent -> coefficient; n must be nonzero.
Rational lagrange_coefficient(const RationalSeries& phi,
                              const std::map<long, Rational>& laurent_h, long n);

/// Rectangularly truncated bivariate series: coefficient of u^a t^b is
/// c[b][a].
struct BivariateSeries {
    int t_order = 0;
    int u_order = 0;
    std::vector<std::vector<Rational>> c;  // (t_order+1) x (u_order+1)

    BivariateSeries(int t_order_, int u_order_)
        : t_order(t_order_), u_order(u_order_),
          c(t_order_ + 1, std::vector<Rational>(u_order_ + 1, Rational(0))) {}

    const Rational& coeff(int t_pow, int u_pow) const { return c.at(t_pow).at(u_pow); }
};

BivariateSeries bivariate_mul(const BivariateSeries& a, const BivariateSeries& b);
/// 1/(1 - s) for s with t-valuation >= 1.
BivariateSeries bivariate_geometric(const BivariateSeries& s);

/// Diagonal coefficients f_{n,n} for n = 0..n_max.
std::vector<Rational> diagonal(const BivariateSeries& f, int n_max);

/// The N-rational bivariate function whose diagonal carries (n+1) e_n for
/// basketball excursions: (1+u)^6 u t^2 / (1 - (u(1+u)^2 t + u(1+u)^4 t^2))
/// + (1+u)^2.
BivariateSeries basketball_excursion_diagonal_function(int n_max);

}  // namespace latwalk

#endif
