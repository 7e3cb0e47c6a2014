#include "dtpt/stability.hpp"

#include <random>
#include <stdexcept>

namespace dtpt {

void validate_framed(const FramedRep& rep) {
    if (rep.a < 0 || rep.r < 1 || rep.d < 0) throw std::invalid_argument("invalid framed rep parameters");
    size_t d = size_t(rep.d);
    for (const RatMat* m : {&rep.A, &rep.B, &rep.C})
        if (m->rows() != d || m->cols() != d) throw std::invalid_argument("loop shape mismatch");
    if (rep.framings.size() != size_t(rep.a + rep.r))
        throw std::invalid_argument("expected a+r framing columns");
    if (rep.coframings.size() != size_t(rep.a)) throw std::invalid_argument("expected a coframing rows");
    for (const auto& u : rep.framings)
        if (u.rows() != d || u.cols() != 1) throw std::invalid_argument("framing shape mismatch");
    for (const auto& v : rep.coframings)
        if (v.rows() != 1 || v.cols() != d) throw std::invalid_argument("coframing shape mismatch");
}

RatMat framing_block(const FramedRep& rep) {
    RatMat u(size_t(rep.d), rep.framings.size());
    for (size_t j = 0; j < rep.framings.size(); ++j)
        for (size_t i = 0; i < size_t(rep.d); ++i) u(i, j) = rep.framings[j](i, 0);
    return u;
}

RatMat coframing_block(const FramedRep& rep) {
    RatMat v(rep.coframings.size(), size_t(rep.d));
    for (size_t i = 0; i < rep.coframings.size(); ++i)
        for (size_t j = 0; j < size_t(rep.d); ++j) v(i, j) = rep.coframings[i](0, j);
    return v;
}

RatMat reachable_subspace(const FramedRep& rep) {
    validate_framed(rep);
    // Rows span the subspace; saturate under the loops until the rank stops
    // growing.
    RatMat span = row_space_basis(framing_block(rep).transpose());
    RatMat at = rep.A.transpose(), bt = rep.B.transpose(), ct = rep.C.transpose();
    for (;;) {
        RatMat next = span;
        next = vstack(next, span * at);
        next = vstack(next, span * bt);
        next = vstack(next, span * ct);
        next = row_space_basis(next);
        if (next.rows() == span.rows()) return next;
        span = next;
    }
}

RatMat hidden_subspace(const FramedRep& rep) {
    validate_framed(rep);
    // Constraint rows K cut out the subspace { x : K x = 0 }; closing under
    // the loops adds the pulled-back constraints K A, K B, K C.
    RatMat constraints = row_space_basis(coframing_block(rep));
    for (;;) {
        RatMat next = constraints;
        next = vstack(next, constraints * rep.A);
        next = vstack(next, constraints * rep.B);
        next = vstack(next, constraints * rep.C);
        next = row_space_basis(next);
        if (next.rows() == constraints.rows()) break;
        constraints = next;
    }
    if (constraints.rows() == 0) return row_space_basis(RatMat::identity(size_t(rep.d)));
    return kernel_basis(constraints);
}

StabilityVerdict is_dt_semistable(const FramedRep& rep) {
    RatMat reach = reachable_subspace(rep);
    if (reach.rows() == size_t(rep.d)) return {true, std::nullopt};
    return {false, reach};
}

StabilityVerdict is_pt_semistable(const FramedRep& rep) {
    RatMat hid = hidden_subspace(rep);
    if (hid.rows() == 0) return {true, std::nullopt};
    return {false, hid};
}

FramedRep conjugate(const FramedRep& rep, const RatMat& g) {
    auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("base change not invertible");
    FramedRep out = rep;
    out.A = g * rep.A * *gi;
    out.B = g * rep.B * *gi;
    out.C = g * rep.C * *gi;
    for (auto& u : out.framings) u = g * u;
    for (auto& v : out.coframings) v = v * *gi;
    return out;
}

namespace {

// Unit lower-triangular times unit upper-triangular with small integer
// entries: always invertible, and the entries stay small.
RatMat random_base_change(size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-2, 2);
    RatMat l = RatMat::identity(d), u = RatMat::identity(d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (i > j) l(i, j) = entry(rng);
            if (i < j) u(i, j) = entry(rng);
        }
    return l * u;
}

bool limit_exists(const FramedRep& rep, const std::vector<long>& w) {
    size_t d = size_t(rep.d);
    for (const auto& u : rep.framings)
        for (size_t i = 0; i < d; ++i)
            if (w[i] < 0 && u(i, 0) != 0) return false;
    for (const auto& v : rep.coframings)
        for (size_t i = 0; i < d; ++i)
            if (w[i] > 0 && v(0, i) != 0) return false;
    for (const RatMat* m : {&rep.A, &rep.B, &rep.C})
        for (size_t p = 0; p < d; ++p)
            for (size_t q = 0; q < d; ++q)
                if (w[p] < w[q] && (*m)(p, q) != 0) return false;
    return true;
}

}  // namespace

std::optional<OnePsCertificate> one_ps_falsifier(const FramedRep& rep, Side side, int trials,
                                                 std::uint64_t seed) {
    validate_framed(rep);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (rep.d == 0) return std::nullopt;
    size_t d = size_t(rep.d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> weight(-2, 2);

    for (int t = 0; t < trials; ++t) {
        RatMat g = (t == 0) ? RatMat::identity(d) : random_base_change(d, rng);
        FramedRep moved = (t == 0) ? rep : conjugate(rep, g);
        std::vector<long> w(d);
        long pairing = 0;
        for (size_t i = 0; i < d; ++i) {
            w[i] = weight(rng);
            pairing += w[i];
        }
        if (side == Side::PT) pairing = -pairing;
        if (pairing >= 0) continue;
        if (limit_exists(moved, w)) return OnePsCertificate{g, w};
    }
    return std::nullopt;
}

}  // namespace dtpt
