#include "latwalk/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace latwalk {

std::string Real::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace asymptotics {

AsymptoticForm basketball_g01_form() {
    Real five(5L);
    return AsymptoticForm{Real(1L) / Real::sqrt(five * Real::pi()), Real(4L), Rational(-3, 2),
                          Real(Rational(-81, 200))};
}

AsymptoticForm basketball_g02_form() {
    Real s5 = Real::sqrt(Real(5L));
    Real a = (Real(5L) + s5) / (Real(10L) * Real::sqrt(Real::pi()));
    Real c1 = (Real(0L) - (Real(201L) + Real(24L) * s5)) / Real(200L);
    return AsymptoticForm{a, Real(4L), Rational(-3, 2), c1};
}

Real evaluate(const AsymptoticForm& form, long n) {
    if (n < 1) throw std::invalid_argument("evaluate needs n >= 1");
    Real rn = Real::pow(form.rho, Real(n));
    Real na = Real::pow(Real(n), Real(form.alpha));
    Real corr = Real(1L) + form.c1 / Real(n);
    return form.A * rn * na * corr;
}

Real relative_error(const AsymptoticForm& form, long n, const Integer& exact) {
    Real approx = evaluate(form, n);
    return Real::abs(Real(exact) / approx - Real(1L));
}

double empirical_growth(const SequenceRecord& seq, int window, const Rational& alpha) {
    const long top = static_cast<long>(seq.values.size()) - 1;
    if (top < 1) throw std::invalid_argument("sequence too short");
    const long lo = std::max<long>(1, top - window + 1);
    // Ratios a_{n}/a_{n-1} with the n^alpha factor divided out:
    // rho_est = (a_n / a_{n-1}) * ((n-1)/n)^alpha.
    std::vector<double> est;
    const double a = Rational(alpha).get_d();
    Integer prev, cur;
    long prev_n = -1;
    for (long n = lo - 1; n <= top; ++n) {
        cur = Integer(seq.values[n]);
        if (cur == 0) continue;  // skip zero terms (periodic supports)
        if (prev_n >= 0) {
            const long gap = n - prev_n;
            double ratio = Rational(Rational(cur) / Rational(prev)).get_d();
            double corrected = ratio * std::pow(static_cast<double>(prev_n) / n, a);
            est.push_back(std::pow(std::fabs(corrected), 1.0 / gap));
        }
        prev = cur;
        prev_n = n;
    }
    if (est.size() < 4) throw std::invalid_argument("need at least 4 usable ratios in the window");
    double s = 0;
    for (double v : est) s += v;
    return s / est.size();
}

}  // namespace asymptotics
}  // namespace latwalk
