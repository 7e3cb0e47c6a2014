#include <doctest.h>

#include "dtpt/zonotope.hpp"
#include "zonotope_oracle.hpp"

#include <random>

using namespace dtpt;

namespace {

WeightVec wv(std::initializer_list<Rational> cs) { return WeightVec(cs); }

WeightVec random_point(size_t d, std::mt19937_64& rng) {
    // rational grid with denominators up to 12
    std::uniform_int_distribution<long> num(-48, 48);
    std::uniform_int_distribution<long> den(1, 12);
    WeightVec p(d);
    for (auto& c : p) c = rat(num(rng), den(rng));
    return p;
}

// Random point that is certainly inside: random admissible coefficients.
WeightVec inside_point(const Zonotope& z, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 11);
    WeightVec p = z.translate;
    for (const auto& g : z.generators) {
        Rational t = rat(num(rng), 12);  // strictly interior fraction
        Rational c = g.lo + t * (g.hi - g.lo);
        for (size_t k = 0; k < z.dim; ++k) p[k] += c * g.vec[k];
    }
    std::uniform_int_distribution<long> lin(-3, 3);
    for (const auto& l : z.lineality) {
        Rational c = rat(lin(rng), 2);
        for (size_t k = 0; k < z.dim; ++k) p[k] += c * l[k];
    }
    return p;
}

}  // namespace

TEST_CASE("special weights") {
    auto w1 = special_weights(1);
    CHECK(w1.rho == wv({Rational(0)}));
    CHECK(w1.sigma == wv({Rational(1)}));
    CHECK(w1.tau == wv({Rational(1)}));

    auto w2 = special_weights(2);
    CHECK(w2.rho == wv({rat(-1, 2), rat(1, 2)}));

    auto w3 = special_weights(3);
    CHECK(w3.rho == wv({Rational(-1), Rational(0), Rational(1)}));
    CHECK(w3.tau == wv({rat(1, 3), rat(1, 3), rat(1, 3)}));
    CHECK(w3.beta[1] == wv({Rational(0), Rational(1), Rational(0)}));

    CHECK_THROWS_AS(special_weights(0), std::invalid_argument);
}

TEST_CASE("dominance and enumeration") {
    CHECK(is_dominant(wv({Rational(0)})));
    CHECK(is_dominant(wv({Rational(0), Rational(1)})));
    CHECK(!is_dominant(wv({Rational(1), Rational(0)})));
    CHECK(is_dominant(wv({Rational(-2), Rational(-2), Rational(5)})));

    auto d1 = enumerate_dominant(1, 0, 2);
    REQUIRE(d1.size() == 3);
    CHECK(d1[0] == wv({Rational(0)}));
    CHECK(d1[2] == wv({Rational(2)}));

    auto d2 = enumerate_dominant(2, 0, 1);
    REQUIRE(d2.size() == 3);
    CHECK(d2[0] == wv({Rational(0), Rational(0)}));
    CHECK(d2[1] == wv({Rational(0), Rational(1)}));
    CHECK(d2[2] == wv({Rational(1), Rational(1)}));
    for (const auto& w : d2) CHECK(is_dominant(w));

    CHECK(enumerate_dominant(3, 0, 3).size() == 20);  // multisets of size 3 from 4 values
    CHECK(enumerate_dominant(2, 1, 0).empty());
}

TEST_CASE("zonotope construction") {
    Zonotope w1 = zono_W(1);
    CHECK(w1.generators.empty());
    CHECK(w1.lineality.size() == 1);

    Zonotope w2 = zono_W(2);
    CHECK(w2.generators.size() == 2);
    for (const auto& g : w2.generators) {
        CHECK(g.lo == 0);
        CHECK(g.hi == rat(3, 2));
        CHECK(!g.lo_open);
    }

    Zonotope ws = zono_W_slice(1, 5);
    CHECK(ws.generators.empty());
    CHECK(ws.lineality.empty());
    CHECK(ws.translate == wv({Rational(5)}));

    Zonotope va = zono_Va(1, 0, 2);
    REQUIRE(va.generators.size() == 1);
    CHECK(va.generators[0].vec == wv({Rational(-1)}));
    CHECK(va.generators[0].lo == 0);
    CHECK(va.generators[0].hi == 2);

    Zonotope wa = zono_Wa(2, 1);
    REQUIRE(wa.generators.size() == 4);  // two roots + two half-open boxes
    CHECK(wa.generators[2].lo == rat(-1, 2));
    CHECK(wa.generators[2].lo_open);
    CHECK(!wa.generators[2].hi_open);

    CHECK(zono_Wa(2, 0).generators.size() == 2);  // a = 0 drops the boxes
    CHECK(zono_V(2, 0).generators.size() == 2);   // r = 0 drops the tail
}

TEST_CASE("membership on frozen examples") {
    // the origin lies in W(d) with all coefficients zero
    for (long d = 1; d <= 3; ++d) {
        auto cert = contains(zono_W(d), WeightVec(size_t(d), Rational(0)));
        CHECK(cert.feasible);
        for (const auto& c : cert.generator_coeffs) CHECK(c == 0);
    }

    // W_slice(1, w) is the single point w
    for (long w = -2; w <= 2; ++w) {
        CHECK(contains(zono_W_slice(1, w), wv({Rational(w)})).feasible);
        CHECK(!contains(zono_W_slice(1, w), wv({Rational(w + 1)})).feasible);
        CHECK(!contains(zono_W_slice(1, w), wv({Rational(w) + rat(1, 12)})).feasible);
    }

    // (3/2)(b1 - b2) sits on the boundary of the d = 2 slice at w = 0
    auto cert = contains(zono_W_slice(2, 0), wv({rat(3, 2), rat(-3, 2)}));
    REQUIRE(cert.feasible);
    Rational total = cert.generator_coeffs[0] + cert.generator_coeffs[1];
    // combined displacement along b1 - b2 must be 3/2
    bool displaced = cert.generator_coeffs[0] - cert.generator_coeffs[1] == rat(3, 2) ||
                     cert.generator_coeffs[1] - cert.generator_coeffs[0] == rat(3, 2);
    CHECK(displaced);
    CHECK(total >= 0);

    CHECK(!contains(zono_W_slice(2, 0), wv({rat(2), rat(-2)})).feasible);

    // half-open boundary of Wa: +a/2 side closed, -a/2 side open
    Zonotope wa1 = zono_Wa(1, 1);
    CHECK(contains(wa1, wv({rat(1, 2)})).feasible);
    CHECK(!contains(wa1, wv({rat(-1, 2)})).feasible);
    CHECK(contains(wa1, wv({rat(-1, 2) + rat(1, 100)})).feasible);

    // dimension mismatch
    CHECK_THROWS_AS(contains(zono_W(2), wv({Rational(0)})), std::invalid_argument);
}

TEST_CASE("window tests at d = 1") {
    CHECK(window_M(wv({Rational(0)}), 1));
    for (long w = -2; w <= 2; ++w) {
        CHECK(window_M_slice(wv({Rational(w)}), 1, w));
        CHECK(!window_M_slice(wv({Rational(w)}), 1, w + 1));
    }
    // chi + rho + mu sigma with mu = -1 + eps: V^a(1,1) at a=0, r=1 admits
    // exactly chi = 0
    EpsRational mu(Rational(-1), Rational(1));
    CHECK(window_D(wv({Rational(0)}), 1, 0, 1, mu));
    CHECK(!window_D(wv({Rational(1)}), 1, 0, 1, mu));
    CHECK(!window_D(wv({Rational(-1)}), 1, 0, 1, mu));
}

TEST_CASE("certificates are exact and respect strict bounds") {
    std::mt19937_64 rng(7003);
    std::vector<Zonotope> zs = {zono_W(2), zono_W_slice(2, 1), zono_V(2, 2), zono_Wa(2, 1),
                                zono_Va(2, 1, 1), zono_W(3), zono_Va(3, 2, 1)};
    for (const auto& z : zs) {
        for (int it = 0; it < 20; ++it) {
            WeightVec p = inside_point(z, rng);
            auto cert = contains(z, p);  // contains() itself asserts exactness
            CHECK(cert.feasible);
        }
    }
}

TEST_CASE("solvers and the support-function oracle agree at d <= 2") {
    std::mt19937_64 rng(9001);
    std::vector<Zonotope> zs = {zono_W(1),      zono_W(2),       zono_W_slice(2, 0),
                                zono_W_slice(2, 3), zono_V(2, 1), zono_V(2, 2),
                                zono_Wa(2, 1),  zono_Wa(2, 2),   zono_Va(2, 1, 1),
                                zono_Va(2, 2, 2), zono_Va(1, 0, 2)};
    for (const auto& z : zs) {
        int hits = 0;
        for (int it = 0; it < 120; ++it) {
            WeightVec p = (it % 3 == 0) ? inside_point(z, rng) : random_point(z.dim, rng);
            bool fm = contains(z, p, LpMethod::FourierMotzkin).feasible;
            bool sx = contains(z, p, LpMethod::Simplex).feasible;
            bool oracle = testing::oracle_member(z, p);
            CHECK(fm == oracle);
            CHECK(sx == oracle);
            if (oracle) ++hits;
        }
        CHECK(hits > 0);
    }
}

TEST_CASE("both solvers agree at d = 3") {
    std::mt19937_64 rng(31337);
    std::vector<Zonotope> zs = {zono_W(3), zono_W_slice(3, 1), zono_V(3, 2), zono_Wa(3, 2),
                                zono_Va(3, 1, 1)};
    for (const auto& z : zs) {
        int hits = 0;
        for (int it = 0; it < 40; ++it) {
            WeightVec p = (it % 3 == 0) ? inside_point(z, rng) : random_point(3, rng);
            bool fm = contains(z, p, LpMethod::FourierMotzkin).feasible;
            bool sx = contains(z, p, LpMethod::Simplex).feasible;
            CHECK(fm == sx);
            if (fm) ++hits;
        }
        CHECK(hits > 0);
    }
}

TEST_CASE("membership is permutation symmetric for the untranslated windows") {
    std::mt19937_64 rng(424242);
    std::vector<Zonotope> zs = {zono_W(2), zono_V(2, 1), zono_Wa(2, 2), zono_Va(2, 1, 2)};
    for (const auto& z : zs) {
        for (int it = 0; it < 40; ++it) {
            WeightVec p = (it % 2 == 0) ? inside_point(z, rng) : random_point(2, rng);
            WeightVec swapped = {p[1], p[0]};
            CHECK(contains(z, p).feasible == contains(z, swapped).feasible);
        }
    }
}

TEST_CASE("slices sit inside the full window") {
    std::mt19937_64 rng(515151);
    for (long w = -3; w <= 3; ++w) {
        Zonotope slice = zono_W_slice(2, w);
        for (int it = 0; it < 25; ++it) {
            WeightVec p = (it % 2 == 0) ? inside_point(slice, rng) : random_point(2, rng);
            if (contains(slice, p).feasible) CHECK(contains(zono_W(2), p).feasible);
        }
    }
}

TEST_CASE("eps-shifted queries") {
    // V^a(1,1), a=0, r=1 is the segment [-1, 0]; the query c - 1 + eps lies
    // inside exactly when c = 0 over the integers
    Zonotope va = zono_Va(1, 0, 1);
    for (long c = -2; c <= 2; ++c) {
        EpsWeightVec p = {EpsRational(Rational(c - 1), Rational(1))};
        CHECK(contains_eps(va, p).feasible == (c == 0));
    }
    // endpoints: -1 + eps inside, -1 - eps outside, 0 + eps outside
    CHECK(contains_eps(va, {EpsRational(Rational(-1), Rational(1))}).feasible);
    CHECK(!contains_eps(va, {EpsRational(Rational(-1), Rational(-1))}).feasible);
    CHECK(!contains_eps(va, {EpsRational(Rational(0), Rational(1))}).feasible);
}
