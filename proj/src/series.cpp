#include "latwalk/series.hpp"

namespace latwalk {

std::vector<Rational> power_series_pow(const std::vector<Rational>& q,
                                       const Rational& alpha, int K) {
    if (q.empty() || q[0] != 1)
        throw std::invalid_argument("power_series_pow needs Q(0) = 1");
    std::vector<Rational> f(K + 1);
    f[0] = 1;
    const int deg = static_cast<int>(q.size()) - 1;
    // (n+1) f_{n+1} = sum_{i>=1} (alpha*i - (n+1-i)) q_i f_{n+1-i}
    for (int n = 0; n < K; ++n) {
        Rational acc(0);
        for (int i = 1; i <= std::min(deg, n + 1); ++i) {
            if (q[i] == 0) continue;
            acc += (alpha * i - (n + 1 - i)) * q[i] * f[n + 1 - i];
        }
        f[n + 1] = acc / (n + 1);
    }
    return f;
}

}  // namespace latwalk
