#include "latwalk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace latwalk {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Integer> poly_div_exact(std::vector<Integer> num,
                                    const std::vector<Integer>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        if (num[i] == 0) continue;
        Integer q = num[i] / den.back();
        if (q * den.back() != num[i]) throw std::logic_error("inexact polynomial division");
        long off = i - (den.size() - 1);
        quot[off] = q;
        for (size_t j = 0; j < den.size(); ++j) num[off + j] -= q * den[j];
    }
    for (const auto& v : num)
        if (v != 0) throw std::logic_error("nonzero remainder in polynomial division");
    return quot;
}

std::map<long, std::vector<Integer>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<Integer> compute_phi(long h);

const std::vector<Integer>& phi_cached(long h) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(h);
    if (it == g_phi_cache.end()) {
        auto val = compute_phi(h);
        it = g_phi_cache.emplace(h, std::move(val)).first;
    }
    return it->second;
}

// Phi_h = (x^h - 1) / prod_{d | h, d < h} Phi_d
std::vector<Integer> compute_phi(long h) {
    if (h == 1) return {Integer(-1), Integer(1)};
    std::vector<Integer> num(h + 1, Integer(0));
    num[0] = -1;
    num[h] = 1;
    for (long d = 1; d < h; ++d) {
        if (h % d != 0) continue;
        std::vector<Integer> phid;
        {
            // Recurse without holding the lock twice: compute directly.
            if (auto it = g_phi_cache.find(d); it != g_phi_cache.end())
                phid = it->second;
            else {
                phid = compute_phi(d);
                g_phi_cache.emplace(d, phid);
            }
        }
        num = poly_div_exact(std::move(num), phid);
    }
    return num;
}

}  // namespace

const std::vector<Integer>& Cyclotomic::modulus(long h) { return phi_cached(h); }

long Cyclotomic::degree(long h) {
    return static_cast<long>(modulus(h).size()) - 1;
}

Cyclotomic::Cyclotomic(long h, std::vector<Rational> coords) : h_(h), coords_(std::move(coords)) {
    if (static_cast<long>(coords_.size()) != degree(h))
        throw std::invalid_argument("cyclotomic coordinate size mismatch");
}

Cyclotomic Cyclotomic::from_rational(long h, const Rational& v) {
    std::vector<Rational> coords(degree(h), Rational(0));
    coords[0] = v;
    return Cyclotomic(h, std::move(coords));
}

Cyclotomic Cyclotomic::root_power(long h, long e) {
    e %= h;
    if (e < 0) e += h;
    const long deg = degree(h);
    std::vector<Rational> poly(e + 1, Rational(0));
    poly[e] = 1;
    // Reduce x^e mod Phi_h.
    const auto& phi = modulus(h);
    for (long i = static_cast<long>(poly.size()) - 1; i >= deg; --i) {
        Rational lead = poly[i];
        if (lead == 0) continue;
        poly[i] = 0;
        for (long j = 0; j < deg; ++j)
            poly[i - deg + j] -= lead * Rational(phi[j]);
    }
    poly.resize(deg, Rational(0));
    return Cyclotomic(h, std::move(poly));
}

void Cyclotomic::promote(Cyclotomic& a, const Cyclotomic& b) {
    if (a.h_ == b.h_) return;
    if (a.h_ == 1) {
        a = from_rational(b.h_, a.coords_[0]);
        return;
    }
    if (b.h_ != 1)
        throw std::invalid_argument("cyclotomic conductor mismatch");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    promote(*this, rhs);
    promote(rhs, *this);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    promote(*this, rhs);
    promote(rhs, *this);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& v : r.coords_) v = -v;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::promote(x, y);
    Cyclotomic::promote(y, x);
    const long h = x.h_;
    const long deg = Cyclotomic::degree(h);
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (long i = 0; i < deg; ++i) {
        if (x.coords_[i] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (y.coords_[j] == 0) continue;
            prod[i + j] += x.coords_[i] * y.coords_[j];
        }
    }
    const auto& phi = Cyclotomic::modulus(h);
    for (long i = static_cast<long>(prod.size()) - 1; i >= deg; --i) {
        Rational lead = prod[i];
        if (lead == 0) continue;
        prod[i] = 0;
        for (long j = 0; j < deg; ++j)
            prod[i - deg + j] -= lead * Rational(phi[j]);
    }
    prod.resize(deg, Rational(0));
    return Cyclotomic(h, std::move(prod));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::promote(x, y);
    Cyclotomic::promote(y, x);
    return x.coords_ == y.coords_;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational())
        throw std::domain_error("cyclotomic value is not rational: " + str());
    return coords_[0];
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "[h=" << h_ << ":";
    for (size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : " ") << to_string(coords_[i]);
    os << "]";
    return os.str();
}

}  // namespace latwalk
