#include "dtpt/series.hpp"

#include "dtpt/sod.hpp"

#include <numeric>
#include <stdexcept>

namespace dtpt {

IntSeries IntSeries::one(long order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    IntSeries s;
    s.coeffs.assign(size_t(order) + 1, Integer(0));
    s.coeffs[0] = 1;
    return s;
}

IntSeries mul_trunc(const IntSeries& x, const IntSeries& y, long order) {
    IntSeries out;
    out.coeffs.assign(size_t(order) + 1, Integer(0));
    for (long i = 0; i <= order && i < long(x.coeffs.size()); ++i) {
        if (x.coeffs[size_t(i)] == 0) continue;
        for (long j = 0; i + j <= order && j < long(y.coeffs.size()); ++j)
            out.coeffs[size_t(i + j)] += x.coeffs[size_t(i)] * y.coeffs[size_t(j)];
    }
    return out;
}

IntSeries series_pow(const IntSeries& s, long r, long order) {
    if (r < 1) throw std::invalid_argument("series_pow needs r >= 1");
    IntSeries out = s;
    out.coeffs.resize(size_t(order) + 1, Integer(0));
    for (long k = 1; k < r; ++k) out = mul_trunc(out, s, order);
    return out;
}

namespace {

// In-place multiplication by (1 - q^n)^{-1} = sum_k q^{nk}.
void mul_inv_one_minus(IntSeries& s, long n) {
    for (size_t i = size_t(n); i < s.coeffs.size(); ++i) s.coeffs[i] += s.coeffs[i - size_t(n)];
}

}  // namespace

Integer p2(long n) {
    if (n < 0) throw std::invalid_argument("p2 of negative argument");
    return partition_series(n).coeffs[size_t(n)];
}

IntSeries partition_series(long order) {
    IntSeries s = IntSeries::one(order);
    for (long n = 1; n <= order; ++n) mul_inv_one_minus(s, n);
    return s;
}

IntSeries macmahon(long order) {
    IntSeries s = IntSeries::one(order);
    for (long n = 1; n <= order; ++n)
        for (long k = 0; k < n; ++k) mul_inv_one_minus(s, n);
    return s;
}

IntSeries dt_series(long d_max, long r) {
    if (d_max < 0 || r < 1) throw std::invalid_argument("invalid dt_series parameters");
    IntSeries out;
    out.coeffs.assign(size_t(d_max) + 1, Integer(0));
    MuParam mu{Rational(-r), +1};
    for (long d = 0; d <= d_max; ++d) {
        Integer a_d(0);
        for (const auto& summand : enumerate_summands(d, r, 0, mu, BoundsMode::Open)) {
            if (summand.d_prime != 0) continue;
            Integer prod(1);
            for (const auto& part : summand.parts) {
                if (part.v < 0) throw std::logic_error("negative slope numerator in dt stratum");
                prod *= p2(std::gcd(part.d, part.v));  // gcd(d, 0) = d
            }
            a_d += prod;
        }
        out.coeffs[size_t(d)] = a_d;
    }
    return out;
}

namespace {

// Sum over tuples filling `remaining`, slopes strictly above prev and below r.
Integer dt_count(long remaining, long r, bool have_prev, long prev_v, long prev_d) {
    if (remaining == 0) return Integer(1);
    Integer total(0);
    for (long d1 = 1; d1 <= remaining; ++d1) {
        for (long v = 0; v < r * d1; ++v) {
            if (have_prev && v * prev_d <= prev_v * d1) continue;  // need v/d1 > prev
            total += p2(std::gcd(d1, v)) * dt_count(remaining - d1, r, true, v, d1);
        }
    }
    return total;
}

}  // namespace

IntSeries dt_series_direct(long d_max, long r) {
    if (d_max < 0 || r < 1) throw std::invalid_argument("invalid dt_series parameters");
    IntSeries out;
    out.coeffs.assign(size_t(d_max) + 1, Integer(0));
    for (long d = 0; d <= d_max; ++d) out.coeffs[size_t(d)] = dt_count(d, r, false, 0, 1);
    return out;
}

IntSeries euler_product_gamma(long r, long order) {
    if (r < 1 || order < 0) throw std::invalid_argument("invalid euler product parameters");
    IntSeries s = IntSeries::one(order);
    // gamma = a/b reduced, 0 <= gamma < r; a denominator above the order
    // only contributes powers past the truncation.
    for (long b = 1; b <= order; ++b) {
        for (long num = 0; num < r * b; ++num) {
            if (std::gcd(num, b) != 1) continue;
            for (long k = 1; b * k <= order; ++k) mul_inv_one_minus(s, b * k);
        }
    }
    return s;
}

IdentityReport verify_identity(long r, long order) {
    IdentityReport rep;
    rep.dt = dt_series(order, r);
    rep.euler = euler_product_gamma(r, order);
    rep.macmahon_pow = series_pow(macmahon(order), r, order);
    rep.equal = true;
    for (long k = 0; k <= order; ++k) {
        if (rep.dt.coeffs[size_t(k)] != rep.euler.coeffs[size_t(k)] ||
            rep.dt.coeffs[size_t(k)] != rep.macmahon_pow.coeffs[size_t(k)]) {
            rep.equal = false;
            rep.first_mismatch = k;
            break;
        }
    }
    return rep;
}

}  // namespace dtpt
