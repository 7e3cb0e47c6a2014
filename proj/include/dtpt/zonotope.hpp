#pragma once

#include "dtpt/lp.hpp"
#include "dtpt/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dtpt {

// Translated Minkowski sum of segments c * vec with c in [lo, hi] (either
// end possibly open), plus a lineality space.
struct ZonotopeGenerator {
    WeightVec vec;
    Rational lo, hi;
    bool lo_open = false;
    bool hi_open = false;
};

struct Zonotope {
    size_t dim = 0;
    WeightVec translate;
    std::vector<ZonotopeGenerator> generators;
    std::vector<WeightVec> lineality;
};

// The weight windows. Degenerate segments (a = 0 or r = 0) contribute only
// the origin and are dropped rather than stored as empty intervals.
Zonotope zono_W(long d);
Zonotope zono_W_slice(long d, long w);
Zonotope zono_V(long d, long r);
Zonotope zono_Wa(long d, long a);
Zonotope zono_Va(long d, long a, long r);

enum class ZonotopeKind { W, WSlice, V, Wa, Va };

struct ZonotopeSpec {
    ZonotopeKind kind;
    long d = 1;
    long w = 0;
    long r = 1;
    long a = 0;
};

Zonotope make_zonotope(const ZonotopeSpec& spec);

struct MembershipCertificate {
    bool feasible = false;
    std::vector<Rational> generator_coeffs;
    std::vector<Rational> lineality_coeffs;
};

struct EpsMembership {
    bool feasible = false;
    std::vector<EpsRational> generator_coeffs;
    std::vector<EpsRational> lineality_coeffs;
};

enum class LpMethod { Auto, FourierMotzkin, Simplex };

// Exact membership for a rational point; a feasible certificate re-evaluates
// to the point exactly and satisfies every open bound strictly.
MembershipCertificate contains(const Zonotope& z, const WeightVec& p, LpMethod method = LpMethod::Auto);

// Membership for points with infinitesimal coordinates (window tests at
// mu = base +- eps); coefficients stay symbolic.
EpsMembership contains_eps(const Zonotope& z, const EpsWeightVec& p, LpMethod method = LpMethod::Auto);

// Window conditions: chi is integral dominant, mu enters through delta =
// mu * sigma_d. Each test shifts chi by rho (and delta) and queries the
// matching window.
bool window_M(const WeightVec& chi, long d);
bool window_M_slice(const WeightVec& chi, long d, long w);
bool window_MM(const WeightVec& chi, long d, long r, const EpsRational& mu);
bool window_D(const WeightVec& chi, long d, long a, long r, const EpsRational& mu);

}  // namespace dtpt
