#pragma once

#include "dtpt/rational.hpp"

#include <optional>
#include <vector>

namespace dtpt {

// Exact linear feasibility over the ordered field Q(eps): find x with
// A x = b and per-variable interval bounds, where the right-hand sides and
// bounds may carry an infinitesimal part (strict inequalities enter as
// closed ones shifted by eps). All coefficient arithmetic stays rational;
// only constants live in Q(eps).
struct VarBounds {
    bool has_lower = false;
    bool has_upper = false;
    EpsRational lower;
    EpsRational upper;
};

struct FeasibilityProblem {
    size_t nvars = 0;
    std::vector<std::vector<Rational>> eq;  // each row has nvars coefficients
    std::vector<EpsRational> eq_rhs;
    std::vector<VarBounds> bounds;  // one per variable
};

// Fourier-Motzkin elimination with back-substitution. Exact; intended for
// small systems (the elimination can grow quadratically per step).
std::optional<std::vector<EpsRational>> solve_fourier_motzkin(const FeasibilityProblem& prob);

// Phase-one primal simplex with Bland's rule.
std::optional<std::vector<EpsRational>> solve_simplex(const FeasibilityProblem& prob);

// Exact check that x solves the problem (used to validate certificates).
bool check_solution(const FeasibilityProblem& prob, const std::vector<EpsRational>& x);

}  // namespace dtpt
