#pragma once

#include "dtpt/rational.hpp"

#include <vector>

namespace dtpt {

// Weight of the rank-d torus in the basis beta_1, ..., beta_d.
using WeightVec = std::vector<Rational>;
// Weight with infinitesimal coordinates (shifts by a generic mu).
using EpsWeightVec = std::vector<EpsRational>;

struct SpecialWeights {
    WeightVec rho;    // half sum over pairs j < i of (beta_i - beta_j)
    WeightVec sigma;  // sum of all beta_j
    WeightVec tau;    // sigma / d
    std::vector<WeightVec> beta;
};

SpecialWeights special_weights(long d);

WeightVec add(const WeightVec& x, const WeightVec& y);
EpsWeightVec add_eps(const WeightVec& x, const EpsWeightVec& y);
EpsWeightVec to_eps(const WeightVec& x);
EpsWeightVec scale(const WeightVec& x, const EpsRational& c);

// Dominant = weakly increasing coordinates (the convention matching rho and
// the antidominant cocharacter above).
bool is_dominant(const WeightVec& chi);

// All weakly increasing integer vectors of length d with entries in
// [lo, hi], in lexicographic order.
std::vector<WeightVec> enumerate_dominant(long d, long lo, long hi);

}  // namespace dtpt
