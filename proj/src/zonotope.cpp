#include "dtpt/zonotope.hpp"

#include <stdexcept>

namespace dtpt {

namespace {

void add_root_generators(Zonotope& z, long d) {
    // (3/2) sum over ordered pairs i != j of [0, beta_i - beta_j].
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            if (i == j) continue;
            WeightVec v(size_t(d), Rational(0));
            v[size_t(i)] = 1;
            v[size_t(j)] = -1;
            z.generators.push_back({std::move(v), Rational(0), rat(3, 2), false, false});
        }
}

Zonotope base(long d) {
    if (d < 0) throw std::invalid_argument("zonotope dimension must be >= 0");
    Zonotope z;
    z.dim = size_t(d);
    z.translate.assign(size_t(d), Rational(0));
    return z;
}

}  // namespace

Zonotope zono_W(long d) {
    Zonotope z = base(d);
    add_root_generators(z, d);
    if (d >= 1) z.lineality.push_back(special_weights(d).tau);
    return z;
}

Zonotope zono_W_slice(long d, long w) {
    Zonotope z = base(d);
    add_root_generators(z, d);
    if (d >= 1) {
        WeightVec tau = special_weights(d).tau;
        for (long k = 0; k < d; ++k) z.translate[size_t(k)] = Rational(w) * tau[size_t(k)];
    }
    return z;
}

Zonotope zono_V(long d, long r) {
    if (r < 0) throw std::invalid_argument("negative parameter r");
    Zonotope z = base(d);
    add_root_generators(z, d);
    for (long k = 0; k < d && r > 0; ++k) {
        WeightVec v(size_t(d), Rational(0));
        v[size_t(k)] = -1;
        z.generators.push_back({std::move(v), Rational(0), Rational(r), false, false});
    }
    return z;
}

Zonotope zono_Wa(long d, long a) {
    if (a < 0) throw std::invalid_argument("negative parameter a");
    Zonotope z = base(d);
    add_root_generators(z, d);
    for (long k = 0; k < d && a > 0; ++k) {
        WeightVec v(size_t(d), Rational(0));
        v[size_t(k)] = 1;
        z.generators.push_back({std::move(v), rat(-a, 2), rat(a, 2), /*lo_open=*/true, false});
    }
    return z;
}

Zonotope zono_Va(long d, long a, long r) {
    if (a < 0 || r < 0) throw std::invalid_argument("negative parameter");
    Zonotope z = base(d);
    add_root_generators(z, d);
    for (long k = 0; k < d && a > 0; ++k) {
        WeightVec v(size_t(d), Rational(0));
        v[size_t(k)] = 1;
        z.generators.push_back({std::move(v), rat(-a, 2), rat(a, 2), false, false});
    }
    for (long k = 0; k < d && r > 0; ++k) {
        WeightVec v(size_t(d), Rational(0));
        v[size_t(k)] = -1;
        z.generators.push_back({std::move(v), Rational(0), Rational(r), false, false});
    }
    return z;
}

Zonotope make_zonotope(const ZonotopeSpec& spec) {
    switch (spec.kind) {
        case ZonotopeKind::W: return zono_W(spec.d);
        case ZonotopeKind::WSlice: return zono_W_slice(spec.d, spec.w);
        case ZonotopeKind::V: return zono_V(spec.d, spec.r);
        case ZonotopeKind::Wa: return zono_Wa(spec.d, spec.a);
        case ZonotopeKind::Va: return zono_Va(spec.d, spec.a, spec.r);
    }
    throw std::invalid_argument("unknown zonotope kind");
}

namespace {

FeasibilityProblem membership_problem(const Zonotope& z, const EpsWeightVec& p) {
    if (p.size() != z.dim) throw std::invalid_argument("point dimension mismatch");
    FeasibilityProblem prob;
    size_t ng = z.generators.size(), nl = z.lineality.size();
    prob.nvars = ng + nl;
    prob.bounds.resize(prob.nvars);
    for (size_t i = 0; i < ng; ++i) {
        const auto& g = z.generators[i];
        prob.bounds[i].has_lower = true;
        prob.bounds[i].has_upper = true;
        prob.bounds[i].lower = EpsRational(g.lo, Rational(g.lo_open ? 1 : 0));
        prob.bounds[i].upper = EpsRational(g.hi, Rational(g.hi_open ? -1 : 0));
    }
    prob.eq.assign(z.dim, std::vector<Rational>(prob.nvars, Rational(0)));
    prob.eq_rhs.resize(z.dim);
    for (size_t k = 0; k < z.dim; ++k) {
        for (size_t i = 0; i < ng; ++i) prob.eq[k][i] = z.generators[i].vec[k];
        for (size_t j = 0; j < nl; ++j) prob.eq[k][ng + j] = z.lineality[j][k];
        prob.eq_rhs[k] = p[k] - EpsRational(z.translate[k]);
    }
    return prob;
}

std::optional<std::vector<EpsRational>> dispatch(const FeasibilityProblem& prob, size_t dim,
                                                 LpMethod method) {
    switch (method) {
        case LpMethod::FourierMotzkin: return solve_fourier_motzkin(prob);
        case LpMethod::Simplex: return solve_simplex(prob);
        case LpMethod::Auto:
            return dim <= 3 ? solve_fourier_motzkin(prob) : solve_simplex(prob);
    }
    return std::nullopt;
}

}  // namespace

EpsMembership contains_eps(const Zonotope& z, const EpsWeightVec& p, LpMethod method) {
    FeasibilityProblem prob = membership_problem(z, p);
    auto sol = dispatch(prob, z.dim, method);
    EpsMembership out;
    if (!sol) return out;
    out.feasible = true;
    size_t ng = z.generators.size();
    out.generator_coeffs.assign(sol->begin(), sol->begin() + long(ng));
    out.lineality_coeffs.assign(sol->begin() + long(ng), sol->end());
    return out;
}

MembershipCertificate contains(const Zonotope& z, const WeightVec& p, LpMethod method) {
    EpsMembership sym = contains_eps(z, to_eps(p), method);
    MembershipCertificate out;
    if (!sym.feasible) return out;

    // Pick a concrete eps small enough that every bound keeps its sign and
    // every open bound stays strict.
    Rational eps0(1);
    auto shrink = [&eps0](const EpsRational& slack) {
        // slack = a + b*eps >= 0 held symbolically; keep it nonnegative
        // (strictly positive when a > 0) at the concrete value.
        if (slack.b < 0 && slack.a > 0) {
            Rational cap = slack.a / (Rational(-2) * slack.b);
            if (cap < eps0) eps0 = cap;
        }
    };
    for (size_t i = 0; i < z.generators.size(); ++i) {
        const auto& g = z.generators[i];
        const EpsRational& c = sym.generator_coeffs[i];
        shrink(c - EpsRational(g.lo, Rational(g.lo_open ? 1 : 0)));
        shrink(EpsRational(g.hi, Rational(g.hi_open ? -1 : 0)) - c);
    }

    out.feasible = true;
    for (const auto& c : sym.generator_coeffs) out.generator_coeffs.push_back(c.at(eps0));
    for (const auto& c : sym.lineality_coeffs) out.lineality_coeffs.push_back(c.at(eps0));

    // A certificate must re-evaluate to the query point exactly and respect
    // open bounds strictly; anything else is an internal error.
    WeightVec recon = z.translate;
    for (size_t i = 0; i < z.generators.size(); ++i)
        for (size_t k = 0; k < z.dim; ++k) recon[k] += out.generator_coeffs[i] * z.generators[i].vec[k];
    for (size_t j = 0; j < z.lineality.size(); ++j)
        for (size_t k = 0; k < z.dim; ++k) recon[k] += out.lineality_coeffs[j] * z.lineality[j][k];
    if (recon != p) throw std::logic_error("membership certificate does not reproduce the point");
    for (size_t i = 0; i < z.generators.size(); ++i) {
        const auto& g = z.generators[i];
        const Rational& c = out.generator_coeffs[i];
        bool lo_ok = g.lo_open ? (c > g.lo) : (c >= g.lo);
        bool hi_ok = g.hi_open ? (c < g.hi) : (c <= g.hi);
        if (!lo_ok || !hi_ok) throw std::logic_error("membership certificate violates a bound");
    }
    return out;
}

bool window_M(const WeightVec& chi, long d) {
    const auto sw = special_weights(d);
    return contains(zono_W(d), add(chi, sw.rho)).feasible;
}

bool window_M_slice(const WeightVec& chi, long d, long w) {
    const auto sw = special_weights(d);
    return contains(zono_W_slice(d, w), add(chi, sw.rho)).feasible;
}

bool window_MM(const WeightVec& chi, long d, long r, const EpsRational& mu) {
    const auto sw = special_weights(d);
    return contains_eps(zono_V(d, r), add_eps(add(chi, sw.rho), scale(sw.sigma, mu))).feasible;
}

bool window_D(const WeightVec& chi, long d, long a, long r, const EpsRational& mu) {
    const auto sw = special_weights(d);
    return contains_eps(zono_Va(d, a, r), add_eps(add(chi, sw.rho), scale(sw.sigma, mu))).feasible;
}

}  // namespace dtpt
