#include "dtpt/adhm.hpp"

#include <stdexcept>

namespace dtpt {

CurveParam make_curve_param(long m, const std::map<std::pair<long, long>, Rational>& sparse) {
    if (m < 1) throw std::invalid_argument("curve degree m must be >= 1");
    CurveParam cp;
    cp.m = m;
    for (long i = 0; i <= m; ++i)
        for (long j = 0; i + j <= m; ++j)
            if (i + j >= 1) cp.alpha[{i, j}] = 0;
    for (const auto& [key, val] : sparse) {
        auto it = cp.alpha.find(key);
        if (it == cp.alpha.end())
            throw std::invalid_argument("alpha index outside the degree-" + std::to_string(m) + " index set");
        it->second = val;
    }
    return cp;
}

RatMat adhm_moment(const RatMat& u, const RatMat& v, const RatMat& A, const RatMat& B) {
    size_t d = A.rows();
    if (A.cols() != d || B.rows() != d || B.cols() != d)
        throw std::invalid_argument("loop matrices must be square of equal size");
    if (u.rows() != d || v.cols() != d || u.cols() != v.rows())
        throw std::invalid_argument("framing shape mismatch");
    return commutator(A, B) + u * v;
}

RatMat eval_f_alpha(const CurveParam& cp, const RatMat& A, const RatMat& B) {
    size_t d = A.rows();
    if (A.cols() != d || B.rows() != d || B.cols() != d)
        throw std::invalid_argument("f_alpha needs square matrices of equal size");
    RatMat out = RatMat::identity(d);
    for (const auto& [key, coeff] : cp.alpha) {
        if (coeff == 0) continue;
        out += coeff * (pow(A, unsigned(key.first)) * pow(B, unsigned(key.second)));
    }
    return out;
}

MatPoly MatPoly::constant(const RatMat& m) {
    MatPoly p{m.rows(), m.cols(), {}};
    p.add_term(0, 0, m);
    return p;
}

MatPoly MatPoly::scalar(const std::map<std::pair<long, long>, Rational>& poly, size_t n) {
    MatPoly p{n, n, {}};
    for (const auto& [deg, c] : poly) p.add_term(deg.first, deg.second, c * RatMat::identity(n));
    return p;
}

void MatPoly::add_term(long xd, long yd, const RatMat& m) {
    if (m.is_zero()) return;
    auto it = coeffs.find({xd, yd});
    if (it == coeffs.end()) {
        coeffs.emplace(std::make_pair(xd, yd), m);
    } else {
        it->second += m;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
    for (const auto& [deg, m] : o.coeffs) add_term(deg.first, deg.second, m);
    return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
    for (const auto& [deg, m] : o.coeffs) add_term(deg.first, deg.second, Rational(-1) * m);
    return *this;
}

MatPoly operator*(const MatPoly& l, const MatPoly& r) {
    MatPoly p{l.rows, r.cols, {}};
    for (const auto& [dl, ml] : l.coeffs)
        for (const auto& [dr, mr] : r.coeffs) p.add_term(dl.first + dr.first, dl.second + dr.second, ml * mr);
    return p;
}

bool operator==(const MatPoly& l, const MatPoly& r) { return l.coeffs == r.coeffs; }

MatPoly ABPoly::eval(const RatMat& A, const RatMat& B) const {
    MatPoly out{A.rows(), A.cols(), {}};
    for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        out.add_term(t.x_pow, t.y_pow,
                     t.coeff * (pow(A, unsigned(t.a_pow)) * pow(B, unsigned(t.b_pow))));
    }
    return out;
}

std::pair<ABPoly, ABPoly> division_polynomials(const CurveParam& cp) {
    // Monomialwise: A^i B^j - x^i y^j = (sum_{s<i} A^{i-1-s} x^s) y^j (A - x)
    //                                 + A^i (sum_{t<j} B^{j-1-t} y^t) (B - y).
    ABPoly g, h;
    for (const auto& [key, coeff] : cp.alpha) {
        if (coeff == 0) continue;
        long i = key.first, j = key.second;
        for (long s = 0; s < i; ++s) g.terms.push_back({coeff, i - 1 - s, 0, s, j});
        for (long t = 0; t < j; ++t) h.terms.push_back({coeff, i, j - 1 - t, 0, t});
    }
    return {g, h};
}

bool verify_division(const CurveParam& cp, const RatMat& A, const RatMat& B) {
    size_t d = A.rows();
    std::map<std::pair<long, long>, Rational> f_scalar;
    f_scalar[{0, 0}] = 1;
    for (const auto& [key, c] : cp.alpha)
        if (c != 0) f_scalar[key] = c;

    MatPoly lhs = MatPoly::constant(eval_f_alpha(cp, A, B)) - MatPoly::scalar(f_scalar, d);

    auto [g, h] = division_polynomials(cp);
    MatPoly a_minus_x = MatPoly::constant(A);
    a_minus_x.add_term(1, 0, Rational(-1) * RatMat::identity(d));
    MatPoly b_minus_y = MatPoly::constant(B);
    b_minus_y.add_term(0, 1, Rational(-1) * RatMat::identity(d));

    MatPoly rhs = g.eval(A, B) * a_minus_x + h.eval(A, B) * b_minus_y;
    return lhs == rhs;
}

std::pair<RatMat, RatMat> extended_adhm_map(const RatMat& u, const RatMat& v, const RatMat& A,
                                            const RatMat& B, const CurveParam& cp) {
    return {adhm_moment(u, v, A, B), v * eval_f_alpha(cp, A, B)};
}

Rational trace_W_rmd(const RatMat& u1, const RatMat& u2, const RatMat& v, const RatMat& A,
                     const RatMat& B, const RatMat& C, const CurveParam& cp) {
    RatMat first = v * eval_f_alpha(cp, A, B) * u2;
    RatMat second = C * adhm_moment(u1, v, A, B);
    return first.trace() + second.trace();
}

Potential trace_rmd_potential(const CurveParam& cp) {
    Potential pot;
    // Tr(v u2) from the constant part of f.
    pot.terms.push_back({Rational(1), {"u2", "v"}});
    for (const auto& [key, coeff] : cp.alpha) {
        if (coeff == 0) continue;
        std::vector<std::string> cycle = {"u2"};
        for (long t = 0; t < key.second; ++t) cycle.push_back("B");
        for (long s = 0; s < key.first; ++s) cycle.push_back("A");
        cycle.push_back("v");
        pot.terms.push_back({coeff, cycle});
    }
    pot.terms.push_back({Rational(1), {"B", "A", "C"}});
    pot.terms.push_back({Rational(-1), {"A", "B", "C"}});
    pot.terms.push_back({Rational(1), {"v", "u1", "C"}});
    return normalize(pot);
}

}  // namespace dtpt
