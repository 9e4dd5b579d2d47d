#include "latwalk/formulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "latwalk/cyclotomic.hpp"

namespace latwalk {
namespace formulas {

namespace {

// [u^k] of poly^n for a {0,1}-coefficient polynomial given by its support.
Integer support_power_coeff(const std::vector<long>& support, long n, long k) {
    if (k < 0 || n < 0) return 0;
    std::vector<Integer> row(1, Integer(1));
    const long kmax = k;
    for (long step = 0; step < n; ++step) {
        std::vector<Integer> next(std::min<long>(kmax, static_cast<long>(row.size()) - 1 +
                                                           support.back()) +
                                      1,
                                  Integer(0));
        for (long i = 0; i < static_cast<long>(row.size()); ++i) {
            if (row[i] == 0) continue;
            for (long s : support) {
                if (i + s > kmax) break;
                next[i + s] += row[i];
            }
        }
        row = std::move(next);
        if (static_cast<long>(row.size()) <= 0) return 0;
    }
    return k < static_cast<long>(row.size()) ? row[k] : Integer(0);
}

std::vector<long> mnomial_support(long m) {
    std::vector<long> s;
    for (long a = 0; a < m; ++a) s.push_back(a);
    return s;
}

std::vector<long> mock_support(long m) {
    std::vector<long> s;
    for (long a = 0; a < m; ++a) s.push_back(a);
    for (long a = m + 1; a <= 2 * m; ++a) s.push_back(a);
    return s;
}

Rational support_frac_coeff(const std::vector<long>& support, const Rational& alpha, long k) {
    if (k < 0) return 0;
    std::vector<Rational> poly(support.back() + 1, Rational(0));
    for (long s : support) poly[s] = 1;
    std::vector<Rational> f = power_series_pow(poly, alpha, static_cast<int>(k));
    return f[k];
}

// [z^{n_j}] U^{i_j}, the building block of the nested-sum theorems.
// The displayed (i/n) binom(n/h, n-i) form is undefined at n = 0; the
// coefficient-extraction reading gives the indicator conventions below.
Rational nested_term(bool with_zero, long h, long nj, long ij) {
    if (nj == 0) return ij == 0 ? 1 : 0;
    if (ij == 0 || ij > nj) return 0;
    Rational b = with_zero ? mnomial_frac(frac(nj, h), nj - ij, 2 * h + 1)
                           : mock_mnomial_frac(frac(nj, h), nj - ij, h);
    return frac(ij, nj) * b;
}

bool family_with_zero(const std::string& family) {
    if (family == "sym_with_zero") return true;
    if (family == "sym_no_zero") return false;
    throw std::invalid_argument("unknown family: " + family +
                                " (expected sym_with_zero or sym_no_zero)");
}

// Per-part vectors T[n_j][i_j] for i_j = 0..k, cached over one query.
struct TermTable {
    bool with_zero;
    long h, k;
    std::map<long, std::vector<Rational>> cache;

    const std::vector<Rational>& row(long nj) {
        auto it = cache.find(nj);
        if (it != cache.end()) return it->second;
        std::vector<Rational> v(k + 1);
        for (long ij = 0; ij <= k; ++ij) v[ij] = nested_term(with_zero, h, nj, ij);
        return cache.emplace(nj, std::move(v)).first->second;
    }
};

// Enumerate compositions of total into h nonnegative parts, calling
// f(parts) for each.
template <class F>
void for_compositions(long total, long h, std::vector<long>& parts, long idx, F&& f) {
    if (idx == h - 1) {
        parts[idx] = total;
        f(parts);
        return;
    }
    for (long v = 0; v <= total; ++v) {
        parts[idx] = v;
        for_compositions(total - v, h, parts, idx + 1, f);
    }
}

Integer rational_to_integer(const Rational& r, const char* what) {
    if (!is_integer(r)) throw std::logic_error(std::string(what) + " is not an integer: " + to_string(r));
    return to_integer(r);
}

Rational catalan(long n) {
    if (n < 0) return 0;
    return Rational(binom(2 * n, n)) / Rational(n + 1);
}

Rational rat_pow(const Rational& b, long e) {
    Rational r(1), x = b;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= x;
        x *= x;
    }
    return r;
}

}  // namespace

Integer binom(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rational binom_rat(const Rational& alpha, long k) {
    if (k < 0) return 0;
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= (alpha - i) / Rational(i + 1);
    return r;
}

Integer mnomial(long n, long k, long m) {
    if (m < 2) throw std::invalid_argument("mnomial needs m >= 2");
    if (n < 0) throw std::invalid_argument("mnomial needs n >= 0");
    return support_power_coeff(mnomial_support(m), n, k);
}

Integer mnomial_alternating(long n, long k, long m) {
    if (m < 2) throw std::invalid_argument("mnomial needs m >= 2");
    if (k < 0 || k > (m - 1) * n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    // binom(n,k)_m = sum_i (-1)^i C(n,i) C(n-1+k-mi, n-1)
    Integer acc(0);
    for (long i = 0; m * i <= k; ++i) {
        Integer term = binom(n, i) * binom(n - 1 + k - m * i, n - 1);
        if (i % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

Rational mnomial_frac(const Rational& alpha, long k, long m) {
    if (m < 2) throw std::invalid_argument("mnomial_frac needs m >= 2");
    return support_frac_coeff(mnomial_support(m), alpha, k);
}

Integer mock_mnomial(long n, long k, long m) {
    if (m < 1) throw std::invalid_argument("mock_mnomial needs m >= 1");
    if (n < 0) throw std::invalid_argument("mock_mnomial needs n >= 0");
    return support_power_coeff(mock_support(m), n, k);
}

Integer mock_mnomial_via_mnomial(long n, long k, long m) {
    if (m < 1) throw std::invalid_argument("mock_mnomial needs m >= 1");
    Integer acc(0);
    for (long i = 0; i <= n; ++i) {
        long kk = k - (m + 1) * i;
        if (kk < 0) break;
        // At m = 1 the inner m-nomial degenerates to the indicator of kk = 0.
        Integer inner = m == 1 ? Integer(kk == 0 ? 1 : 0)
                               : support_power_coeff(mnomial_support(m), n, kk);
        acc += binom(n, i) * inner;
    }
    return acc;
}

Rational mock_mnomial_frac(const Rational& alpha, long k, long m) {
    if (m < 1) throw std::invalid_argument("mock_mnomial_frac needs m >= 1");
    return support_frac_coeff(mock_support(m), alpha, k);
}

Integer unconstrained_count(const std::string& family, long h, long n, long k) {
    const bool with_zero = family_with_zero(family);
    if (h < 1 || n < 0) throw std::invalid_argument("unconstrained_count needs h >= 1, n >= 0");
    if (k < -h * n || k > h * n) return 0;
    return with_zero ? support_power_coeff(mnomial_support(2 * h + 1), n, k + h * n)
                     : support_power_coeff(mock_support(h), n, k + h * n);
}

Rational table2_excursions(const std::string& family, long d,
                           const std::vector<Rational>& params, long n) {
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    if (family == "dyck") {
        if (n % 2) return 0;
        return catalan(n / 2);
    }
    if (family == "motzkin" || family == "weighted_motzkin") {
        Rational pm1(1), p0(1), p1(1);
        if (family == "weighted_motzkin") {
            if (params.size() != 3) throw std::invalid_argument("weighted_motzkin needs 3 weights");
            pm1 = params[0];
            p0 = params[1];
            p1 = params[2];
        }
        // e_n = 1/(n+1) sum_k C(n+1,k) C(n+1-k,k-1) (p1 p_{-1})^{k-1} p0^{n+2-2k}
        Rational acc(0);
        for (long k = 1; 2 * k <= n + 2; ++k)
            acc += Rational(binom(n + 1, k) * binom(n + 1 - k, k - 1)) *
                   rat_pow(p1 * pm1, k - 1) * rat_pow(p0, n + 2 - 2 * k);
        return acc / Rational(n + 1);
    }
    if (family == "bicolored_motzkin") return catalan(n + 1);
    if (family == "luka_all") return catalan(n);
    if (family == "dary") {
        if (d < 2) throw std::invalid_argument("dary needs d >= 2");
        if (n % d) return 0;
        const long m = n / d;
        return Rational(binom(d * m, m)) / Rational((d - 1) * m + 1);
    }
    if (family == "upto_dary") {
        if (d < 1) throw std::invalid_argument("upto_dary needs d >= 1");
        // Tree with N = n+1 nodes <-> excursion of length n.
        const long N = n + 1;
        Integer acc(0);
        for (long j = 0; j * (d + 1) <= N - 1; ++j) {
            Integer term = binom(N, j) * binom(2 * N - 2 - j * (d + 1), N - 1);
            if (j % 2) acc -= term;
            else acc += term;
        }
        return Rational(acc) / Rational(N);
    }
    if (family == "d_dplus1") {
        if (d < 1) throw std::invalid_argument("d_dplus1 needs d >= 1");
        const long N = n + 1;
        Integer acc(0);
        for (long k = 0; d * k <= N - 1; ++k) acc += binom(N, k) * binom(k, N - 1 - d * k);
        return Rational(acc) / Rational(N);
    }
    throw std::invalid_argument("unknown table family: " + family);
}

Integer basketball_g01(long n) {
    if (n < 0) throw std::invalid_argument("basketball_g01 needs n >= 0");
    if (n == 0) return 0;  // empty walk ends at 0, not 1
    // Alternating sum: 1/n sum_{k=1}^n (-1)^{k+1} C(2k-2,k-1) C(2n,n-k).
    Rational a(0);
    for (long k = 1; k <= n; ++k) {
        Rational term(binom(2 * k - 2, k - 1) * binom(2 * n, n - k));
        if (k % 2) a += term;
        else a -= term;
    }
    a /= Rational(n);
    // Positive double-binomial sum: 1/n sum_i C(n,i) C(n, 2n+1-3i).
    Rational b(0);
    for (long i = 0; i <= n; ++i) b += Rational(binom(n, i) * binom(n, 2 * n + 1 - 3 * i));
    b /= Rational(n);
    if (a != b) throw std::logic_error("basketball_g01: the two displayed sums disagree");
    return rational_to_integer(a, "basketball_g01");
}

Integer basketball_g02(long n) {
    if (n < 0) throw std::invalid_argument("basketball_g02 needs n >= 0");
    if (n == 0) return 0;  // empty walk ends at 0, not 2
    // 1/(2n+1) sum_{k=0}^{n+1} (-1)^{n+k+1} C(2n+1,n+k) C(n+2k-1,k).
    Rational a(0);
    for (long k = 0; k <= n + 1; ++k) {
        Rational term(binom(2 * n + 1, n + k) * binom(n + 2 * k - 1, k));
        if ((n + k + 1) % 2 == 0) a += term;
        else a -= term;
    }
    a /= Rational(2 * n + 1);
    return rational_to_integer(a, "basketball_g02");
}

Integer basketball_excursion(long n) {
    if (n < 0) throw std::invalid_argument("basketball_excursion needs n >= 0");
    if (n == 0) return 1;
    // Alternating: 1/(n+1) sum_k (-1)^{n+k} C(2n+2,n-k) C(n+2k+1,k).
    Rational a(0);
    for (long k = 0; k <= n; ++k) {
        Rational term(binom(2 * n + 2, n - k) * binom(n + 2 * k + 1, k));
        if ((n + k) % 2 == 0) a += term;
        else a -= term;
    }
    a /= Rational(n + 1);
    // Positive: 1/(n+1) sum_i C(2n+2,i) C(n-i-1, n-2i).
    Rational b(0);
    for (long i = 0; 2 * i <= n; ++i) b += Rational(binom(2 * n + 2, i) * binom(n - i - 1, n - 2 * i));
    b /= Rational(n + 1);
    if (a != b) throw std::logic_error("basketball_excursion: the two displayed sums disagree");
    return rational_to_integer(a, "basketball_excursion");
}

Integer general_positive_count(const std::string& family, long h, long n, long k) {
    const bool with_zero = family_with_zero(family);
    if (h < 1 || h > 4) throw std::invalid_argument("general_positive_count guard: 1 <= h <= 4");
    if (n < 0 || k < 1) throw std::invalid_argument("general_positive_count needs n >= 0, k >= 1");
    TermTable table{with_zero, h, k, {}};
    std::vector<Rational> per_residue(h, Rational(0));
    std::vector<long> parts(h, 0);
    for_compositions(n * h, h, parts, 0, [&](const std::vector<long>& nj) {
        // Convolve the per-part rows up to total degree k.
        std::vector<Rational> acc(k + 1, Rational(0));
        acc[0] = 1;
        for (long j = 0; j < h; ++j) {
            const std::vector<Rational>& row = table.row(nj[j]);
            std::vector<Rational> next(k + 1, Rational(0));
            for (long a = 0; a <= k; ++a) {
                if (acc[a] == 0) continue;
                for (long b = 0; a + b <= k; ++b) {
                    if (row[b] == 0) continue;
                    next[a + b] += acc[a] * row[b];
                }
            }
            acc = std::move(next);
        }
        if (acc[k] == 0) return;
        long r = 0;
        for (long j = 0; j < h; ++j) r += (j % h) * nj[j];
        per_residue[r % h] += acc[k];
    });
    Cyclotomic total(0);
    for (long r = 0; r < h; ++r)
        total += Cyclotomic::from_rational(h, per_residue[r]) * Cyclotomic::root_power(h, r);
    return rational_to_integer(total.rational_part(), "general_positive_count");
}

Integer general_positive_meander_count(const std::string& family, long h, long n) {
    const bool with_zero = family_with_zero(family);
    if (h < 1 || h > 4) throw std::invalid_argument("general_positive_meander_count guard: 1 <= h <= 4");
    if (n < 0) throw std::invalid_argument("n >= 0 required");
    // With the i's unconstrained the inner sum factorizes per part:
    // S(m) = sum_{i >= 0} [z^m] U^i.
    std::map<long, Rational> srow;
    auto srow_at = [&](long m) -> const Rational& {
        auto it = srow.find(m);
        if (it != srow.end()) return it->second;
        Rational s(0);
        for (long i = 0; i <= m; ++i) s += nested_term(with_zero, h, m, i);
        return srow.emplace(m, s).first->second;
    };
    std::vector<Rational> per_residue(h, Rational(0));
    std::vector<long> parts(h, 0);
    for_compositions(n * h, h, parts, 0, [&](const std::vector<long>& nj) {
        Rational prod(1);
        for (long j = 0; j < h && prod != 0; ++j) prod *= srow_at(nj[j]);
        if (prod == 0) return;
        long r = 0;
        for (long j = 0; j < h; ++j) r += j * nj[j];
        per_residue[r % h] += prod;
    });
    Cyclotomic total(0);
    for (long r = 0; r < h; ++r)
        total += Cyclotomic::from_rational(h, per_residue[r]) * Cyclotomic::root_power(h, r);
    return rational_to_integer(total.rational_part(), "general_positive_meander_count");
}

Rational lagrange_variant_coefficient(const RationalSeries& phi,
                                      const RationalSeries& psi, long n) {
    if (n < 1) throw std::invalid_argument("lagrange_variant_coefficient needs n >= 1");
    if (phi.c[0] == 0 || psi.c[0] == 0)
        throw std::invalid_argument("phi(0) and psi(0) must be nonzero");
    if (phi.order < n - 1 || psi.order < n - 1)
        throw std::invalid_argument("series order too low");
    auto powers = [](const RationalSeries& s, long e, long K) {
        std::vector<Rational> q(s.c.begin(), s.c.begin() + std::min<long>(s.order, K) + 1);
        const Rational c0 = q[0];
        for (auto& v : q) v /= c0;
        std::vector<Rational> f = power_series_pow(q, Rational(e), static_cast<int>(K));
        Rational scale(1), b = c0;
        for (long t = e; t > 0; t >>= 1) {
            if (t & 1) scale *= b;
            b *= b;
        }
        for (auto& v : f) v *= scale;
        return f;
    };
    std::vector<Rational> phin = powers(phi, n, n - 1);
    Rational acc(0);
    for (long k = 1; k <= n; ++k) {
        std::vector<Rational> psik = powers(psi, k, k - 1);
        acc += psik[k - 1] * phin[n - k];
    }
    return acc / Rational(n);
}

}  // namespace formulas
}  // namespace latwalk
