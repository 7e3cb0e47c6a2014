#include "dtpt/weights.hpp"

#include <stdexcept>

namespace dtpt {

SpecialWeights special_weights(long d) {
    if (d < 1) throw std::invalid_argument("special_weights needs d >= 1");
    SpecialWeights w;
    w.rho.resize(size_t(d));
    w.sigma.assign(size_t(d), Rational(1));
    w.tau.assign(size_t(d), rat(1, d));
    for (long k = 1; k <= d; ++k) w.rho[size_t(k - 1)] = rat(2 * k - d - 1, 2);
    for (long i = 0; i < d; ++i) {
        WeightVec b(size_t(d), Rational(0));
        b[size_t(i)] = 1;
        w.beta.push_back(std::move(b));
    }
    return w;
}

WeightVec add(const WeightVec& x, const WeightVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("weight dimension mismatch");
    WeightVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

EpsWeightVec add_eps(const WeightVec& x, const EpsWeightVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("weight dimension mismatch");
    EpsWeightVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = y[i] + EpsRational(x[i]);
    return out;
}

EpsWeightVec to_eps(const WeightVec& x) {
    EpsWeightVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = EpsRational(x[i]);
    return out;
}

EpsWeightVec scale(const WeightVec& x, const EpsRational& c) {
    EpsWeightVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
    return out;
}

bool is_dominant(const WeightVec& chi) {
    // Weakly increasing: the positive roots are beta_i - beta_j for i > j,
    // the convention under which lambda(t) = (t^d, ..., t) is antidominant
    // and rho above is the half sum of positive roots.
    for (size_t i = 0; i + 1 < chi.size(); ++i)
        if (chi[i] > chi[i + 1]) return false;
    return true;
}

namespace {

void enumerate_rec(long d, long lo, long hi, std::vector<long>& cur, std::vector<WeightVec>& out) {
    if (long(cur.size()) == d) {
        WeightVec w;
        w.reserve(cur.size());
        for (long c : cur) w.emplace_back(c);
        out.push_back(std::move(w));
        return;
    }
    long floor_c = cur.empty() ? lo : std::max(lo, cur.back());
    for (long c = floor_c; c <= hi; ++c) {
        cur.push_back(c);
        enumerate_rec(d, lo, hi, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<WeightVec> enumerate_dominant(long d, long lo, long hi) {
    if (lo > hi) return {};
    std::vector<WeightVec> out;
    std::vector<long> cur;
    enumerate_rec(d, lo, hi, cur, out);
    return out;
}

}  // namespace dtpt
