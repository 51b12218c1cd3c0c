#include "skewpair/bounds.hpp"

#include <string>

#include "skewpair/errors.hpp"

namespace skewpair::bounds {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after this step
    }
    return result;
}

BoundTable bound_table(long long a, long long b) {
    if (a < 0 || b < 0) {
        throw validation_error("bound_table requires a >= 0 and b >= 0, got (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
    }
    BoundTable t;
    t.a = a;
    t.b = b;
    t.s1 = binomial(a + b + 1, a) - 1;
    t.s2 = binomial(a + b + 1, a + 1) - 1;
    t.n_skew = binomial(a + b + 2, a + 1) - binomial(a + b, a) - 1;
    t.frankl_kalai_m = binomial(a + b, a);
    return t;
}

bool identity_check(long long a, long long b) {
    BoundTable t = bound_table(a, b);
    return t.s1 + t.s2 == t.n_skew + binomial(a + b, a) - 1;
}

} // namespace skewpair::bounds
