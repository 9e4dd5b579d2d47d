#ifndef LATWALK_ASYMPTOTICS_HPP
#define LATWALK_ASYMPTOTICS_HPP

#include <mpfr.h>

#include <string>

#include "latwalk/oracle.hpp"
#include "latwalk/rational.hpp"

namespace latwalk {

/// Thin RAII wrapper over an mpfr_t at a fixed working precision
/// (default 200 bits, about 60 decimal digits).
class Real {
public:
    static constexpr mpfr_prec_t kPrec = 200;

    Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit Real(const Integer& x) : Real() { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    explicit Real(const Rational& x) : Real() { mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real pi() { Real r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real sqrt(const Real& x) { Real r; mpfr_sqrt(r.v_, x.v_, MPFR_RNDN); return r; }
    /// x^y for real y.
    static Real pow(const Real& x, const Real& y) {
        Real r;
        mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    static Real abs(const Real& x) { Real r; mpfr_abs(r.v_, x.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, const Real& b) {
        Real r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const;

private:
    mpfr_t v_;
};

namespace asymptotics {

/// a_n ~ A rho^n n^alpha (1 + c1/n).
struct AsymptoticForm {
    Real A;
    Real rho;
    Rational alpha;
    Real c1;
};

/// The two forms proved for the basketball walks to altitude 1 and 2:
/// A = 1/sqrt(5 pi),           rho = 4, alpha = -3/2, c1 = -81/200
/// A = (5+sqrt 5)/(10 sqrt pi), rho = 4, alpha = -3/2, c1 = -(201+24 sqrt 5)/200
AsymptoticForm basketball_g01_form();
AsymptoticForm basketball_g02_form();

Real evaluate(const AsymptoticForm& form, long n);

/// |exact/evaluate(form, n) - 1|.
Real relative_error(const AsymptoticForm& form, long n, const Integer& exact);

/// Ratio estimate of the growth rate rho from consecutive terms near the
/// top of the sequence, with the polynomial factor n^alpha divided out.
/// Zero terms inside the window are skipped (periodic-support sequences);
/// needs at least 4 usable ratios.
double empirical_growth(const SequenceRecord& seq, int window,
                        const Rational& alpha = Rational(-3, 2));

}  // namespace asymptotics
}  // namespace latwalk

#endif
