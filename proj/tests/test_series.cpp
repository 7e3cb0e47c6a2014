#include <doctest.h>

#include "dtpt/series.hpp"

#include <numeric>

using namespace dtpt;

namespace {

// Partition count by brute-force enumeration (largest part first), kept
// independent of the generating-function code.
long partitions_brute(long n, long max_part) {
    if (n == 0) return 1;
    long total = 0;
    for (long p = std::min(n, max_part); p >= 1; --p) total += partitions_brute(n - p, p);
    return total;
}

}  // namespace

TEST_CASE("partition numbers") {
    const long expect[] = {1, 1, 2, 3, 5, 7, 11};
    for (long n = 0; n <= 6; ++n) CHECK(p2(n) == expect[n]);
    for (long n = 0; n <= 12; ++n) CHECK(p2(n) == partitions_brute(n, n));
    CHECK_THROWS_AS(p2(-1), std::invalid_argument);

    IntSeries ps = partition_series(20);
    for (long n = 0; n <= 20; ++n) CHECK(ps.coeffs[size_t(n)] == partitions_brute(n, n));
}

TEST_CASE("macmahon expansion") {
    IntSeries m = macmahon(5);
    const long expect[] = {1, 1, 3, 6, 13, 24};
    REQUIRE(m.coeffs.size() == 6);
    for (size_t k = 0; k < 6; ++k) CHECK(m.coeffs[k] == expect[k]);
}

TEST_CASE("series arithmetic") {
    IntSeries m2 = macmahon(2);
    CHECK(series_pow(m2, 1, 2) == m2);
    IntSeries sq = series_pow(m2, 2, 2);
    CHECK(sq.coeffs == std::vector<Integer>{Integer(1), Integer(2), Integer(7)});
    CHECK_THROWS_AS(series_pow(m2, 0, 2), std::invalid_argument);

    IntSeries a = IntSeries::one(3);
    a.coeffs[1] = 2;
    IntSeries b = IntSeries::one(3);
    b.coeffs[3] = 5;
    IntSeries ab = mul_trunc(a, b, 3);
    CHECK(ab.coeffs == std::vector<Integer>{Integer(1), Integer(2), Integer(0), Integer(5)});
}

TEST_CASE("dt series hand counts") {
    IntSeries r1 = dt_series(3, 1);
    CHECK(r1.coeffs == std::vector<Integer>{Integer(1), Integer(1), Integer(3), Integer(6)});

    IntSeries r2 = dt_series(2, 2);
    CHECK(r2.coeffs == std::vector<Integer>{Integer(1), Integer(2), Integer(7)});

    CHECK(dt_series(0, 3).coeffs == std::vector<Integer>{Integer(1)});
}

TEST_CASE("direct recursion matches the enumerator route") {
    for (long r = 1; r <= 2; ++r) {
        IntSeries via_sod = dt_series(6, r);
        IntSeries direct = dt_series_direct(6, r);
        CHECK(via_sod == direct);
    }
}

TEST_CASE("euler product over reduced slopes") {
    IntSeries e = euler_product_gamma(1, 3);
    CHECK(e.coeffs == std::vector<Integer>{Integer(1), Integer(1), Integer(3), Integer(6)});
    CHECK(euler_product_gamma(1, 0).coeffs == std::vector<Integer>{Integer(1)});
    CHECK(euler_product_gamma(1, 10) == macmahon(10));
}

TEST_CASE("totient sums support the product regrouping") {
    // sum over b | n of phi(b) = n
    auto phi = [](long b) {
        long count = 0;
        for (long x = 0; x < b; ++x)
            if (std::gcd(x, b) == 1) ++count;
        return count;
    };
    for (long n = 1; n <= 100; ++n) {
        long total = 0;
        for (long b = 1; b <= n; ++b)
            if (n % b == 0) total += phi(b);
        CHECK(total == n);
    }
}

TEST_CASE("a_d grows with r") {
    IntSeries r1 = dt_series(5, 1), r2 = dt_series(5, 2), r3 = dt_series(5, 3);
    for (size_t k = 0; k <= 5; ++k) {
        CHECK(r1.coeffs[k] <= r2.coeffs[k]);
        CHECK(r2.coeffs[k] <= r3.coeffs[k]);
    }
}

TEST_CASE("three-way identity on the small grid") {
    for (long r = 1; r <= 3; ++r)
        for (long order = 0; order <= 6; ++order) {
            IdentityReport rep = verify_identity(r, order);
            CHECK(rep.equal);
        }
}
