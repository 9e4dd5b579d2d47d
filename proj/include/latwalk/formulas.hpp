#ifndef LATWALK_FORMULAS_HPP
#define LATWALK_FORMULAS_HPP

#include <string>
#include <vector>

#include "latwalk/rational.hpp"
#include "latwalk/series.hpp"

namespace latwalk {
namespace formulas {

/// Binomial coefficient; 0 for k < 0, falling-factorial definition for
/// negative upper index.
Integer binom(const Integer& n, long k);
inline Integer binom(long n, long k) { return binom(Integer(n), k); }

/// Generalized binomial with rational upper index.
Rational binom_rat(const Rational& alpha, long k);

/// m-nomial coefficient [u^k](1 + u + ... + u^{m-1})^n, by direct
/// polynomial power. m >= 2.
Integer mnomial(long n, long k, long m);

/// Alternating closed form of the same coefficient (inclusion-exclusion
/// over carries); independent of mnomial() for cross-checking.
Integer mnomial_alternating(long n, long k, long m);

/// [u^k](1 + u + ... + u^{m-1})^alpha for rational alpha.
Rational mnomial_frac(const Rational& alpha, long k, long m);

/// Mock m-nomial [u^k](1 + ... + u^{m-1} + u^{m+1} + ... + u^{2m})^n,
/// m >= 1.
Integer mock_mnomial(long n, long k, long m);

/// Mock coefficient expressed through ordinary m-nomials,
/// sum_i C(n,i) binom(n, k-(m+1)i)_m; independent cross-check.
Integer mock_mnomial_via_mnomial(long n, long k, long m);

/// Mock m-nomial with rational upper index.
Rational mock_mnomial_frac(const Rational& alpha, long k, long m);

/// Unconstrained walks 0 -> k in n steps for {0,±1,...,±h}
/// (family "sym_with_zero") or {±1,...,±h} ("sym_no_zero"):
/// binom(n, k+hn)_{2h+1} resp. mock binom(n, k+hn)*_{2h}.
Integer unconstrained_count(const std::string& family, long h, long n, long k);

/// Closed forms for the classical families (excursions of length n):
/// dyck, motzkin, weighted_motzkin (params p_{-1}, p_0, p_1),
/// bicolored_motzkin, luka_all, dary, upto_dary, d_dplus1 (d from the d
/// argument). Returns 0 for infeasible lengths (wrong residue/parity).
Rational table2_excursions(const std::string& family, long d,
                           const std::vector<Rational>& params, long n);

/// Basketball walks 0 -> 1 of length n, strictly positive in between.
/// Evaluates both the alternating and the positive double-binomial sum
/// and asserts they agree.
Integer basketball_g01(long n);

/// Basketball walks 0 -> 2 of length n.
Integer basketball_g02(long n);

/// Basketball excursions of length n; both displayed sums, asserted
/// equal.
Integer basketball_excursion(long n);

/// Nested-sum closed form for strictly positive walks 0 -> k (k >= 1)
/// over {0,±1,...,±h} / {±1,...,±h}: sum over compositions
/// n_1+...+n_h = nh, i_1+...+i_h = k of prod_j [z^{n_j}] U^{i_j}
/// weighted by omega^{sum (j-1) n_j}, accumulated per root-of-unity
/// power and reduced in Q[omega]; the result must be a rational integer.
/// Guard: h <= 4.
Integer general_positive_count(const std::string& family, long h, long n, long k);

/// Same machinery with the i's unconstrained: positive meanders of
/// length n (1 at n = 0 for the empty walk).
Integer general_positive_meander_count(const std::string& family, long h, long n);

/// Lagrange-Buermann variant: [z^n] H(F) for F = z phi(F), H = z psi(H),
/// equals (1/n) sum_{k=1}^n ([z^{k-1}] psi^k) ([z^{n-k}] phi^n).
Rational lagrange_variant_coefficient(const RationalSeries& phi,
                                      const RationalSeries& psi, long n);

}  // namespace formulas
}  // namespace latwalk

#endif
