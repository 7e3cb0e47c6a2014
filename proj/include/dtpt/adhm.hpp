#pragma once

#include "dtpt/matrix.hpp"
#include "dtpt/quiver.hpp"
#include "dtpt/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dtpt {

// Parameters of the affine curve f = 1 + sum alpha_{ij} x^i y^j over the
// index set { (i,j) : 1 <= i+j <= m }.
struct CurveParam {
    long m = 1;
    std::map<std::pair<long, long>, Rational> alpha;  // keys exactly the index set
};

// Validates sparse keys against the index set and fills the rest with zero.
CurveParam make_curve_param(long m, const std::map<std::pair<long, long>, Rational>& sparse = {});

// [A,B] + u v with u of shape d x r, v of shape r x d, A, B of shape d x d.
RatMat adhm_moment(const RatMat& u, const RatMat& v, const RatMat& A, const RatMat& B);

// Id + sum alpha_{ij} A^i B^j; A-powers always left of B-powers.
RatMat eval_f_alpha(const CurveParam& cp, const RatMat& A, const RatMat& B);

// Polynomial in commuting x, y with matrix coefficients; zero coefficients
// are not stored.
struct MatPoly {
    size_t rows = 0, cols = 0;
    std::map<std::pair<long, long>, RatMat> coeffs;  // (x degree, y degree)

    static MatPoly zero(size_t rows, size_t cols) { return MatPoly{rows, cols, {}}; }
    static MatPoly constant(const RatMat& m);
    // p * Id for a scalar polynomial p given by (x,y)-degree -> Rational.
    static MatPoly scalar(const std::map<std::pair<long, long>, Rational>& p, size_t n);

    void add_term(long xd, long yd, const RatMat& m);
    MatPoly& operator+=(const MatPoly& o);
    MatPoly& operator-=(const MatPoly& o);
    friend MatPoly operator+(MatPoly l, const MatPoly& r) { return l += r; }
    friend MatPoly operator-(MatPoly l, const MatPoly& r) { return l -= r; }
    friend MatPoly operator*(const MatPoly& l, const MatPoly& r);
    friend bool operator==(const MatPoly& l, const MatPoly& r);
};

// Term c * A^p B^q x^s y^t with A, B formal noncommuting symbols and x, y
// central; A-powers stay left of B-powers throughout.
struct ABTerm {
    Rational coeff;
    long a_pow = 0, b_pow = 0, x_pow = 0, y_pow = 0;
};

struct ABPoly {
    std::vector<ABTerm> terms;
    MatPoly eval(const RatMat& A, const RatMat& B) const;
};

// The quotient pair (g, h) with f(A,B) - f * Id = g (A - x Id) + h (B - y Id),
// both of (x,y)-degree strictly below m.
std::pair<ABPoly, ABPoly> division_polynomials(const CurveParam& cp);

// Substitutes concrete A, B and checks the division identity coefficientwise.
bool verify_division(const CurveParam& cp, const RatMat& A, const RatMat& B);

// ( [A,B] + u v , v f(A,B) )
std::pair<RatMat, RatMat> extended_adhm_map(const RatMat& u, const RatMat& v, const RatMat& A,
                                            const RatMat& B, const CurveParam& cp);

// Tr( v f(A,B) u2 ) + Tr( C ([A,B] + u1 v) )
Rational trace_W_rmd(const RatMat& u1, const RatMat& u2, const RatMat& v, const RatMat& A,
                     const RatMat& B, const RatMat& C, const CurveParam& cp);

// The same function as a potential on the extended ADHM quiver, so the
// formal cyclic derivatives can be compared against the closed forms.
Potential trace_rmd_potential(const CurveParam& cp);

}  // namespace dtpt
