#pragma once

#include "dtpt/matrix.hpp"
#include "dtpt/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dtpt {

// A framed representation of the DT/PT quiver at dimension vector (1, d):
// three loops on V = Q^d, a + r framing vectors, and a covectors. The first
// a framing vectors are the ones paired with the covectors; the remaining r
// are framing-only.
struct FramedRep {
    long a = 0;
    long r = 1;
    long d = 0;
    RatMat A, B, C;                  // d x d
    std::vector<RatMat> framings;    // a + r columns, each d x 1
    std::vector<RatMat> coframings;  // a rows, each 1 x d
};

void validate_framed(const FramedRep& rep);

// All framing columns stacked into a single d x (a+r) block.
RatMat framing_block(const FramedRep& rep);
// All coframing rows stacked into a single a x d block.
RatMat coframing_block(const FramedRep& rep);

// Smallest loop-invariant subspace containing every framing vector,
// returned as a row-reduced basis.
RatMat reachable_subspace(const FramedRep& rep);

// Largest loop-invariant subspace killed by every coframing row.
RatMat hidden_subspace(const FramedRep& rep);

struct StabilityVerdict {
    bool semistable = false;
    std::optional<RatMat> witness;  // destabilizing subspace, row-reduced
};

// Determinant-character semistability: the framing vectors generate V under
// the loops. Witness on failure: the reachable subspace itself.
StabilityVerdict is_dt_semistable(const FramedRep& rep);

// Inverse-determinant semistability: no nonzero loop-invariant subspace
// inside the common kernel of the coframings. Witness: the hidden subspace.
StabilityVerdict is_pt_semistable(const FramedRep& rep);

enum class Side { DT, PT };

// A one-parameter subgroup certificate: after the base change, the
// coordinate subgroup diag(t^{w_1}, ..., t^{w_d}) has a limit at t -> 0 and
// pairs negatively with the side's character.
struct OnePsCertificate {
    RatMat base_change;
    std::vector<long> weights;
};

// Hilbert-Mumford sampling used as a test oracle against the subspace
// criteria. Deterministic in the seed; trial 0 keeps the identity base
// change so coordinate-aligned destabilizers are always probed.
std::optional<OnePsCertificate> one_ps_falsifier(const FramedRep& rep, Side side, int trials,
                                                 std::uint64_t seed);

// g . rep: framings g u, coframings v g^{-1}, loops g M g^{-1}.
FramedRep conjugate(const FramedRep& rep, const RatMat& g);

}  // namespace dtpt
