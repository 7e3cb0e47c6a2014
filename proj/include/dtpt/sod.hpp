#pragma once

#include "dtpt/weights.hpp"

#include <string>
#include <vector>

namespace dtpt {

// Slope-interval endpoint handling: Closed keeps both endpoints, Open
// excludes them.
enum class BoundsMode { Closed, Open };

// A real parameter mu, optionally displaced by a formal infinitesimal so
// genericity holds identically. Comparisons are lexicographic in
// (base, eps_sign).
struct MuParam {
    Rational base;
    int eps_sign = 0;  // -1, 0, +1
};

MuParam mu_parse(const std::string& s);  // "p/q", "p/q+eps", "p/q-eps"
std::string mu_str(const MuParam& mu);
EpsRational mu_value(const MuParam& mu);

// True when 2 mu l is non-integral for every 1 <= l <= d; any formal offset
// is generic outright.
bool check_generic(const MuParam& mu, long d);

std::vector<long> v_from_w(const std::vector<long>& w, const std::vector<long>& d_parts, long d_prime);
std::vector<long> w_from_v(const std::vector<long>& v, const std::vector<long>& d_parts, long d_prime);

struct SummandPart {
    long d = 0;
    long w = 0;
    long v = 0;
    friend bool operator==(const SummandPart&, const SummandPart&) = default;
};

struct SummandDescriptor {
    long d_prime = 0;
    std::vector<SummandPart> parts;  // slopes v_i/d_i strictly increasing
    friend bool operator==(const SummandDescriptor&, const SummandDescriptor&) = default;
};

// All decomposition summands for (d, r, a, mu): d' plus slope-ordered parts
// with slopes inside (-r - mu - a/2, -mu - a/2), endpoints per mode.
// Output ordered by descending d', then lexicographically by parts. The
// empty-parts summand (d' = d) is always present.
std::vector<SummandDescriptor> enumerate_summands(long d, long r, long a, const MuParam& mu,
                                                  BoundsMode mode);

struct WeightDecomposition {
    SummandDescriptor summand;
    std::vector<WeightVec> chi_blocks;
    WeightVec chi_prime;
};

// Brute-force search for the block decompositions of a dominant integral
// weight chi with chi + rho + mu sigma_d inside the big window: splits chi
// into consecutive coordinate blocks (d_1, ..., d_k, d'), forces each slice
// index, and keeps the splittings passing every window condition. The
// expected result is a single decomposition.
std::vector<WeightDecomposition> decompose_weight(const WeightVec& chi, long d, long a, long r,
                                                  const MuParam& mu);

}  // namespace dtpt
