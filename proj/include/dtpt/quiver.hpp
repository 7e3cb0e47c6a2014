#pragma once

#include "dtpt/matrix.hpp"
#include "dtpt/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dtpt {

struct Arrow {
    std::string id;
    std::string src;
    std::string tgt;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::optional<std::string> framing;  // framing vertex, if any

    bool has_vertex(const std::string& v) const;
    const Arrow* find_arrow(const std::string& id) const;
    const Arrow& arrow(const std::string& id) const;  // throws if absent
};

// Throws std::invalid_argument on duplicate arrow ids or undeclared endpoints.
void validate_quiver(const Quiver& q);

using DimVector = std::map<std::string, long>;

struct Representation {
    Quiver quiver;
    DimVector dims;
    std::map<std::string, RatMat> matrices;  // arrow id -> (dim tgt) x (dim src)

    long dim(const std::string& vertex) const;
    const RatMat& matrix(const std::string& arrow_id) const;
};

void validate_representation(const Representation& rep);

// A potential term is a closed cycle of arrows stored in traversal order:
// tgt(cycle[k]) == src(cycle[k+1]), cyclically. Its value on a representation
// is the trace of the right-to-left matrix product, i.e. the cycle
// (e1, ..., en) evaluates to Tr(M(en) ... M(e1)).
struct PotentialTerm {
    Rational coeff;
    std::vector<std::string> cycle;
};

struct Potential {
    std::vector<PotentialTerm> terms;
};

void validate_potential(const Quiver& q, const Potential& pot);

// Rotates the cycle so the lexicographically least rotation comes first.
std::vector<std::string> canonical_rotation(const std::vector<std::string>& cycle);

// Canonical rotations, like terms combined, zero coefficients dropped,
// terms sorted by cycle.
Potential normalize(const Potential& pot);

// Sum of weighted paths sharing both endpoints, in the same traversal order
// as potential cycles. An empty path stands for the identity.
struct PathTerm {
    Rational coeff;
    std::vector<std::string> path;
};

struct PathSum {
    std::string src;
    std::string tgt;
    std::vector<PathTerm> terms;
};

enum class QuiverKind { Conifold, FramedConifold, Reduced, Adhm, Dtpt, DtptLoops, ExtendedAdhm };
enum class PotentialKind { Conifold, Reduced, TripleLoop, Dtpt };

struct QuiverParams {
    long r = 1;      // framing rank
    long a = 0;      // paired framing/coframing arrows
    long loops = 0;  // extra loops at the framing vertex
    long m = 1;      // curve degree
};

Quiver build_quiver(QuiverKind kind, const QuiverParams& p = {});
Potential build_potential(PotentialKind kind, const QuiverParams& p = {});

Rational trace_eval(const Representation& rep, const Potential& pot);

// Formal cyclic derivative: one summand per occurrence of the arrow, the
// cycle rotated to start just past the occurrence with the occurrence
// removed. An arrow absent from the potential yields an empty sum.
PathSum cyclic_derivative(const Quiver& q, const Potential& pot, const std::string& arrow_id);

RatMat eval_path_sum(const Representation& rep, const PathSum& ps);

// Gradient at arrow e has shape (dim src(e)) x (dim tgt(e)), so that the
// first-order variation of trace_eval in direction E at e is Tr(grad * E).
std::map<std::string, RatMat> gradient_eval(const Representation& rep, const Potential& pot);

bool is_critical(const Representation& rep, const Potential& pot);

}  // namespace dtpt
