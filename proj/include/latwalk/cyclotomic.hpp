#ifndef LATWALK_CYCLOTOMIC_HPP
#define LATWALK_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "latwalk/rational.hpp"

namespace latwalk {

/// Element of Q[x] / Phi_h(x), with x standing for the primitive h-th
/// root of unity omega = e^{2*pi*i/h}. Coordinates are in the power
/// basis 1, x, ..., x^{phi(h)-1}.
class Cyclotomic {
public:
    Cyclotomic() : h_(1), coords_(1, Rational(0)) {}
    explicit Cyclotomic(long v) : h_(1), coords_(1, Rational(v)) {}
    explicit Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}
    Cyclotomic(long h, std::vector<Rational> coords);

    static Cyclotomic from_rational(long h, const Rational& v);
    /// omega^e in conductor h.
    static Cyclotomic root_power(long h, long e);

    long conductor() const { return h_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_part() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;

    /// Cyclotomic polynomial Phi_h, monic integer coefficients, low first.
    static const std::vector<Integer>& modulus(long h);
    static long degree(long h);  // Euler phi(h)

private:
    long h_;
    std::vector<Rational> coords_;  // size degree(h_)

    static void promote(Cyclotomic& a, const Cyclotomic& b);
};

}  // namespace latwalk

#endif
