#ifndef LATWALK_RECURRENCES_HPP
#define LATWALK_RECURRENCES_HPP

#include <vector>

#include "latwalk/rational.hpp"

namespace latwalk {
namespace recurrences {

/// Linear recurrence with polynomial coefficients:
/// sum_{i=0}^{r} P_i(n) a(n+i) = 0, where coeffs[i] lists P_i low-degree
/// first. The coefficient of the highest-index term must be nonzero for
/// every n in the evaluation range.
struct HolonomicRecurrence {
    std::vector<std::vector<Integer>> coeffs;  // size r+1
    std::vector<Integer> initial;              // a(0)..a(r-1)

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// The recurrence for g(n), the number of basketball walks from 0 to 1
/// of length n staying strictly positive in between:
/// 108n(2n+1) g(n) + 6(13n^2+35n+24) g(n+1)
///   - (17n^2+49n+18) g(n+2) - 2(2n+7)(n+3) g(n+3) = 0,
/// g(0)=0, g(1)=1, g(2)=1.
HolonomicRecurrence basketball_g01_recurrence();

/// Unrolls the recurrence forward; every division by the leading
/// coefficient must be exact (asserted).
Integer eval_recurrence(const HolonomicRecurrence& rec, long n_target);

/// All of a(0)..a(n_max) in one pass.
std::vector<Integer> eval_recurrence_prefix(const HolonomicRecurrence& rec, long n_max);

struct BenchmarkResult {
    double recurrence_seconds;
    double dp_seconds;
    Integer value;
};

/// Computes g(n) by recurrence and by the dynamic-programming oracle,
/// asserts equality, reports wall-clock timings. Guard: n <= 5000.
BenchmarkResult benchmark(long n);

}  // namespace recurrences
}  // namespace latwalk

#endif
