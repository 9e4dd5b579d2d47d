#include "latwalk/oracle.hpp"

#include <cassert>
#include <stdexcept>

namespace latwalk::oracle {

namespace {

void check_query(const CountQuery& q) {
    if (q.n < 0) throw std::invalid_argument("negative walk length");
    switch (q.constraint) {
        case WalkConstraint::Excursion:
            if (q.j != 0 || q.k != 0)
                throw std::invalid_argument("excursions run from 0 to 0");
            break;
        case WalkConstraint::Bridge:
            if (q.j != 0 || q.k != 0)
                throw std::invalid_argument("bridges run from 0 to 0");
            break;
        case WalkConstraint::Meander:
        case WalkConstraint::StrictlyPositive:
            if (q.j < 0 || q.k < 0)
                throw std::invalid_argument("constrained walks need altitudes >= 0");
            break;
        case WalkConstraint::Unconstrained:
            if (q.j < 0) throw std::invalid_argument("start altitude must be >= 0");
            break;
    }
}

}  // namespace

Rational count(const CountQuery& q) {
    check_query(q);
    const long n = q.n;
    const long c = q.steps.down_span();
    const long d = q.steps.up_span();
    const bool unbounded_below =
        q.constraint == WalkConstraint::Unconstrained || q.constraint == WalkConstraint::Bridge;

    // Altitude window: constrained classes never leave [0, j + n*d].
    const long lo = unbounded_below ? q.j - n * c : 0;
    const long hi = q.j + n * d;
    const long width = hi - lo + 1;

    std::vector<Rational> cur(width), next(width);
    if (q.j < lo || q.j > hi) return Rational(0);
    cur[q.j - lo] = 1;

    for (long step = 1; step <= n; ++step) {
        // Minimum admissible altitude after this step.
        long min_alt;
        switch (q.constraint) {
            case WalkConstraint::Unconstrained:
            case WalkConstraint::Bridge:
                min_alt = lo;
                break;
            case WalkConstraint::Meander:
            case WalkConstraint::Excursion:
                min_alt = 0;
                break;
            case WalkConstraint::StrictlyPositive:
                min_alt = (step == n) ? 0 : 1;
                break;
        }
        std::fill(next.begin(), next.end(), Rational(0));
        for (long a = lo; a <= hi; ++a) {
            const Rational& w = cur[a - lo];
            if (w == 0) continue;
            for (const auto& s : q.steps.steps()) {
                long b = a + s.jump;
                if (b < min_alt || b > hi) continue;
                next[b - lo] += w * s.weight;
            }
        }
        std::swap(cur, next);
    }
    Rational result = (q.k >= lo && q.k <= hi) ? cur[q.k - lo] : Rational(0);
#ifndef NDEBUG
    if (q.steps.unit_weights()) assert(is_integer(result));
#endif
    return result;
}

SequenceRecord sequence(const StepSet& steps, WalkConstraint constraint,
                        long j, long k, long n_max, const std::string& name) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    SequenceRecord rec{name, "computed", {}};
    rec.values.reserve(n_max + 1);
    for (long n = 0; n <= n_max; ++n)
        rec.values.push_back(to_string(count({steps, n, j, k, constraint})));
    return rec;
}

Rational meander_total(const StepSet& steps, long n) {
    if (n < 0) throw std::invalid_argument("negative walk length");
    // One meander DP; sum the final row over all end altitudes.
    const long hi = n * steps.up_span();
    std::vector<Rational> cur(hi + 1), next(hi + 1);
    cur[0] = 1;
    for (long step = 1; step <= n; ++step) {
        std::fill(next.begin(), next.end(), Rational(0));
        for (long a = 0; a <= hi; ++a) {
            if (cur[a] == 0) continue;
            for (const auto& s : steps.steps()) {
                long b = a + s.jump;
                if (b < 0 || b > hi) continue;
                next[b] += cur[a] * s.weight;
            }
        }
        std::swap(cur, next);
    }
    Rational total(0);
    for (const auto& v : cur) total += v;
    return total;
}

SequenceRecord meander_total_sequence(const StepSet& steps, long n_max,
                                      const std::string& name) {
    SequenceRecord rec{name, "computed", {}};
    for (long n = 0; n <= n_max; ++n)
        rec.values.push_back(to_string(meander_total(steps, n)));
    return rec;
}

}  // namespace latwalk::oracle
