#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skewpair::bounds {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); 0 whenever k < 0 or k > n (so Pascal's rule holds at the
/// boundaries without special cases).
BigInt binomial(long long n, long long k);

/// The four closed-form extremal values for size caps (a, b):
///   s1             = C(a+b+1, a)   - 1   max |union of A_i|
///   s2             = C(a+b+1, a+1) - 1   max |union of B_i|
///   n_skew         = C(a+b+2, a+1) - C(a+b, a) - 1   max ground-set size
///   frankl_kalai_m = C(a+b, a)           max number of pairs
struct BoundTable {
    long long a = 0;
    long long b = 0;
    BigInt s1;
    BigInt s2;
    BigInt n_skew;
    BigInt frankl_kalai_m;
};

/// Throws validation_error on negative input.
BoundTable bound_table(long long a, long long b);

/// Checks s1 + s2 == n_skew + C(a+b, a) - 1; holds for every (a, b).
bool identity_check(long long a, long long b);

} // namespace skewpair::bounds
