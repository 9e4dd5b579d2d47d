#include "latwalk/recurrences.hpp"

#include <chrono>
#include <stdexcept>

#include "latwalk/oracle.hpp"

namespace latwalk {
namespace recurrences {

namespace {

Integer eval_poly(const std::vector<Integer>& p, long n) {
    Integer r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * n + *it;
    return r;
}

}  // namespace

HolonomicRecurrence basketball_g01_recurrence() {
    HolonomicRecurrence rec;
    rec.coeffs = {
        {0, 108, 216},      // 108n(2n+1)
        {144, 210, 78},     // 6(13n^2 + 35n + 24)
        {-18, -49, -17},    // -(17n^2 + 49n + 18)
        {-42, -26, -4},     // -2(2n+7)(n+3)
    };
    rec.initial = {Integer(0), Integer(1), Integer(1)};
    return rec;
}

std::vector<Integer> eval_recurrence_prefix(const HolonomicRecurrence& rec, long n_max) {
    if (n_max < 0) throw std::invalid_argument("n_target must be >= 0");
    const long r = rec.order();
    std::vector<Integer> a(rec.initial);
    if (static_cast<long>(a.size()) != r) throw std::invalid_argument("initial terms must match order");
    a.reserve(std::max<long>(n_max + 1, r));
    for (long n = 0; static_cast<long>(a.size()) <= n_max; ++n) {
        // Solve for a(n+r) from sum_i P_i(n) a(n+i) = 0.
        Integer acc(0);
        for (long i = 0; i < r; ++i) acc += eval_poly(rec.coeffs[i], n) * a[n + i];
        Integer lead = eval_poly(rec.coeffs[r], n);
        if (lead == 0) throw std::domain_error("leading coefficient vanishes at n = " + std::to_string(n));
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("recurrence produced a non-integer term at n = " +
                                   std::to_string(n + r));
        a.push_back(-q);
    }
    a.resize(n_max + 1);
    return a;
}

Integer eval_recurrence(const HolonomicRecurrence& rec, long n_target) {
    const long r = rec.order();
    if (n_target < r) return rec.initial.at(n_target);
    // Keep only a sliding window of r terms.
    std::vector<Integer> win(rec.initial);
    for (long n = 0; n + r <= n_target; ++n) {
        Integer acc(0);
        for (long i = 0; i < r; ++i) acc += eval_poly(rec.coeffs[i], n) * win[i];
        Integer lead = eval_poly(rec.coeffs[r], n);
        if (lead == 0) throw std::domain_error("leading coefficient vanishes at n = " + std::to_string(n));
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("recurrence produced a non-integer term at n = " +
                                   std::to_string(n + r));
        for (long i = 0; i + 1 < r; ++i) win[i] = std::move(win[i + 1]);
        win[r - 1] = -q;
    }
    return win[r - 1];
}

BenchmarkResult benchmark(long n) {
    if (n < 0 || n > 5000) throw std::invalid_argument("benchmark guard: 0 <= n <= 5000");
    using clock = std::chrono::steady_clock;
    HolonomicRecurrence rec = basketball_g01_recurrence();

    auto t0 = clock::now();
    Integer via_rec = eval_recurrence(rec, n);
    auto t1 = clock::now();

    CountQuery q{make_family("basketball"), n, 0, 1, WalkConstraint::StrictlyPositive};
    Rational via_dp = oracle::count(q);
    auto t2 = clock::now();

    if (Rational(via_rec) != via_dp)
        throw std::logic_error("benchmark: recurrence and DP disagree at n = " + std::to_string(n));
    return BenchmarkResult{std::chrono::duration<double>(t1 - t0).count(),
                           std::chrono::duration<double>(t2 - t1).count(), via_rec};
}

}  // namespace recurrences
}  // namespace latwalk
