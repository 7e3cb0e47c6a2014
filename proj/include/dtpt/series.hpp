#pragma once

#include "dtpt/rational.hpp"

#include <vector>

namespace dtpt {

// Truncated integer power series in q; coeffs[k] is the coefficient of q^k
// and every operation truncates at the same order.
struct IntSeries {
    std::vector<Integer> coeffs;

    static IntSeries one(long order);
    long order() const { return long(coeffs.size()) - 1; }
    friend bool operator==(const IntSeries&, const IntSeries&) = default;
};

IntSeries mul_trunc(const IntSeries& x, const IntSeries& y, long order);
IntSeries series_pow(const IntSeries& s, long r, long order);

// Number of partitions of n.
Integer p2(long n);
// Truncated expansion of prod (1 - q^n)^{-1}; independent route to p2.
IntSeries partition_series(long order);

// MacMahon's function prod (1 - q^n)^{-n}, truncated.
IntSeries macmahon(long order);

// a_d = sum over tuples (d_i, v_i) with sum d_i = d and strictly increasing
// slopes v_i/d_i in [0, r) of prod p2(gcd(d_i, v_i)); computed from the
// d' = 0 stratum of the summand enumeration at a = 0, mu = -r + eps.
IntSeries dt_series(long d_max, long r);

// The same coefficients by direct recursion over slope tuples, kept
// independent of the summand enumerator as a cross-check.
IntSeries dt_series_direct(long d_max, long r);

// prod over reduced fractions gamma = a/b in [0, r) of prod_k (1-q^{bk})^{-1},
// truncated; denominators above the order cannot contribute.
IntSeries euler_product_gamma(long r, long order);

struct IdentityReport {
    bool equal = false;
    long first_mismatch = -1;  // power of q, or -1
    IntSeries dt, euler, macmahon_pow;
};

IdentityReport verify_identity(long r, long order);

}  // namespace dtpt
