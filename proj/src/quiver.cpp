#include "dtpt/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dtpt {

bool Quiver::has_vertex(const std::string& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const Arrow* Quiver::find_arrow(const std::string& id) const {
    for (const auto& a : arrows)
        if (a.id == id) return &a;
    return nullptr;
}

const Arrow& Quiver::arrow(const std::string& id) const {
    const Arrow* a = find_arrow(id);
    if (!a) throw std::invalid_argument("unknown arrow: " + id);
    return *a;
}

void validate_quiver(const Quiver& q) {
    std::set<std::string> seen;
    for (const auto& a : q.arrows) {
        if (!seen.insert(a.id).second) throw std::invalid_argument("duplicate arrow id: " + a.id);
        if (!q.has_vertex(a.src)) throw std::invalid_argument("arrow " + a.id + " has undeclared source " + a.src);
        if (!q.has_vertex(a.tgt)) throw std::invalid_argument("arrow " + a.id + " has undeclared target " + a.tgt);
    }
    if (q.framing && !q.has_vertex(*q.framing))
        throw std::invalid_argument("undeclared framing vertex " + *q.framing);
}

long Representation::dim(const std::string& vertex) const {
    auto it = dims.find(vertex);
    if (it == dims.end()) throw std::invalid_argument("no dimension for vertex " + vertex);
    return it->second;
}

const RatMat& Representation::matrix(const std::string& arrow_id) const {
    auto it = matrices.find(arrow_id);
    if (it == matrices.end()) throw std::invalid_argument("no matrix for arrow " + arrow_id);
    return it->second;
}

void validate_representation(const Representation& rep) {
    validate_quiver(rep.quiver);
    for (const auto& v : rep.quiver.vertices) {
        auto it = rep.dims.find(v);
        if (it == rep.dims.end()) throw std::invalid_argument("missing dimension for vertex " + v);
        if (it->second < 0) throw std::invalid_argument("negative dimension at vertex " + v);
    }
    if (rep.dims.size() != rep.quiver.vertices.size())
        throw std::invalid_argument("dimension vector defined off the vertex set");
    for (const auto& a : rep.quiver.arrows) {
        const RatMat& m = rep.matrix(a.id);
        if (m.rows() != size_t(rep.dim(a.tgt)) || m.cols() != size_t(rep.dim(a.src)))
            throw std::invalid_argument("matrix shape mismatch at arrow " + a.id);
    }
}

void validate_potential(const Quiver& q, const Potential& pot) {
    for (const auto& term : pot.terms) {
        if (term.cycle.empty()) throw std::invalid_argument("empty cycle in potential");
        for (size_t k = 0; k < term.cycle.size(); ++k) {
            const Arrow& cur = q.arrow(term.cycle[k]);
            const Arrow& next = q.arrow(term.cycle[(k + 1) % term.cycle.size()]);
            if (cur.tgt != next.src)
                throw std::invalid_argument("cycle not closed at arrow " + cur.id);
        }
    }
}

std::vector<std::string> canonical_rotation(const std::vector<std::string>& cycle) {
    if (cycle.empty()) return cycle;
    std::vector<std::string> best = cycle;
    std::vector<std::string> rot = cycle;
    for (size_t k = 1; k < cycle.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

Potential normalize(const Potential& pot) {
    std::map<std::vector<std::string>, Rational> combined;
    for (const auto& term : pot.terms) combined[canonical_rotation(term.cycle)] += term.coeff;
    Potential out;
    for (auto& [cycle, coeff] : combined)
        if (coeff != 0) out.terms.push_back({coeff, cycle});
    return out;
}

namespace {

Quiver two_vertex_loops(const std::string& framing_vertex, const std::string& main_vertex,
                        const std::vector<std::string>& loops) {
    Quiver q;
    q.vertices = {framing_vertex, main_vertex};
    q.framing = framing_vertex;
    for (const auto& l : loops) q.arrows.push_back({l, main_vertex, main_vertex});
    return q;
}

void check_nonneg(long v, const char* name) {
    if (v < 0) throw std::invalid_argument(std::string("negative parameter ") + name);
}

}  // namespace

Quiver build_quiver(QuiverKind kind, const QuiverParams& p) {
    check_nonneg(p.a, "a");
    check_nonneg(p.loops, "N");
    switch (kind) {
        case QuiverKind::Conifold: {
            Quiver q;
            q.vertices = {"1", "2"};
            q.arrows = {{"a1", "1", "2"}, {"a2", "1", "2"}, {"b1", "2", "1"}, {"b2", "2", "1"}};
            return q;
        }
        case QuiverKind::FramedConifold: {
            Quiver q;
            q.vertices = {"inf", "1", "2"};
            q.framing = "inf";
            q.arrows = {{"u", "inf", "1"},
                        {"a1", "1", "2"},
                        {"a2", "1", "2"},
                        {"b1", "2", "1"},
                        {"b2", "2", "1"}};
            return q;
        }
        case QuiverKind::Reduced: {
            if (p.r < 1) throw std::invalid_argument("reduced quiver needs r >= 1");
            Quiver q = two_vertex_loops("inf", "2", {"a1''", "a2''", "b1''"});
            for (long i = 1; i <= p.r; ++i) {
                q.arrows.push_back({"a1'_" + std::to_string(i), "inf", "2"});
                q.arrows.push_back({"a2'_" + std::to_string(i), "inf", "2"});
            }
            for (long i = 1; i <= p.r; ++i) q.arrows.push_back({"b1'_" + std::to_string(i), "2", "inf"});
            return q;
        }
        case QuiverKind::Adhm: {
            if (p.r < 1) throw std::invalid_argument("adhm quiver needs r >= 1");
            Quiver q = two_vertex_loops("inf", "1", {"A", "B"});
            q.arrows.push_back({"u", "inf", "1"});
            q.arrows.push_back({"v", "1", "inf"});
            return q;
        }
        case QuiverKind::ExtendedAdhm: {
            if (p.r < 1) throw std::invalid_argument("extended adhm quiver needs r >= 1");
            if (p.m < 1) throw std::invalid_argument("extended adhm quiver needs m >= 1");
            Quiver q = two_vertex_loops("inf", "1", {"A", "B", "C"});
            q.arrows.push_back({"u1", "inf", "1"});
            q.arrows.push_back({"u2", "inf", "1"});
            q.arrows.push_back({"v", "1", "inf"});
            return q;
        }
        case QuiverKind::Dtpt:
        case QuiverKind::DtptLoops: {
            if (p.r < 0) throw std::invalid_argument("negative parameter r");
            Quiver q = two_vertex_loops("0", "1", {"A", "B", "C"});
            for (long i = 1; i <= p.a; ++i) q.arrows.push_back({"u1_" + std::to_string(i), "0", "1"});
            for (long i = 1; i <= p.r; ++i) q.arrows.push_back({"u2_" + std::to_string(i), "0", "1"});
            for (long i = 1; i <= p.a; ++i) q.arrows.push_back({"v_" + std::to_string(i), "1", "0"});
            if (kind == QuiverKind::DtptLoops)
                for (long i = 1; i <= p.loops; ++i) q.arrows.push_back({"w_" + std::to_string(i), "0", "0"});
            return q;
        }
    }
    throw std::invalid_argument("unknown quiver kind");
}

Potential build_potential(PotentialKind kind, const QuiverParams& p) {
    Potential pot;
    auto term = [&](long coeff, std::vector<std::string> cycle) {
        pot.terms.push_back({Rational(coeff), std::move(cycle)});
    };
    switch (kind) {
        case PotentialKind::Conifold:
            // Tr(a1 b1 a2 b2) - Tr(a1 b2 a2 b1), cycles in traversal order.
            term(+1, {"b2", "a2", "b1", "a1"});
            term(-1, {"b1", "a2", "b2", "a1"});
            break;
        case PotentialKind::TripleLoop:
            // Tr C[A,B]
            term(+1, {"B", "A", "C"});
            term(-1, {"A", "B", "C"});
            break;
        case PotentialKind::Reduced: {
            if (p.r < 1) throw std::invalid_argument("reduced potential needs r >= 1");
            for (long i = 1; i <= p.r; ++i) {
                std::string s = std::to_string(i);
                term(+1, {"a1'_" + s, "a2''", "b1'_" + s});
                term(-1, {"a2'_" + s, "a1''", "b1'_" + s});
            }
            term(+1, {"a2''", "b1''", "a1''"});
            term(-1, {"a1''", "b1''", "a2''"});
            break;
        }
        case PotentialKind::Dtpt: {
            check_nonneg(p.a, "a");
            check_nonneg(p.r, "r");
            for (long i = 1; i <= p.a; ++i) {
                std::string s = std::to_string(i);
                term(+1, {"u1_" + s, "A", "v_" + s});
                if (i <= p.r) term(-1, {"u2_" + s, "B", "v_" + s});
            }
            term(+1, {"B", "A", "C"});
            term(-1, {"A", "B", "C"});
            for (long i = 1; i <= p.a; ++i) {
                std::string s = std::to_string(i);
                term(+1, {"v_" + s, "u1_" + s, "C"});
            }
            break;
        }
    }
    return normalize(pot);
}

namespace {

RatMat cycle_product(const Representation& rep, const std::vector<std::string>& path,
                     const std::string& start_vertex) {
    if (path.empty()) return RatMat::identity(size_t(rep.dim(start_vertex)));
    RatMat acc = rep.matrix(path[0]);
    for (size_t k = 1; k < path.size(); ++k) acc = rep.matrix(path[k]) * acc;
    return acc;
}

}  // namespace

Rational trace_eval(const Representation& rep, const Potential& pot) {
    validate_representation(rep);
    validate_potential(rep.quiver, pot);
    Rational total(0);
    for (const auto& term : pot.terms) {
        const std::string& start = rep.quiver.arrow(term.cycle.front()).src;
        total += term.coeff * cycle_product(rep, term.cycle, start).trace();
    }
    return total;
}

PathSum cyclic_derivative(const Quiver& q, const Potential& pot, const std::string& arrow_id) {
    PathSum out;
    const Arrow* e = q.find_arrow(arrow_id);
    if (e) {
        out.src = e->tgt;
        out.tgt = e->src;
    }
    std::map<std::vector<std::string>, Rational> combined;
    for (const auto& term : pot.terms) {
        for (size_t pos = 0; pos < term.cycle.size(); ++pos) {
            if (term.cycle[pos] != arrow_id) continue;
            std::vector<std::string> path;
            path.insert(path.end(), term.cycle.begin() + pos + 1, term.cycle.end());
            path.insert(path.end(), term.cycle.begin(), term.cycle.begin() + pos);
            combined[path] += term.coeff;
        }
    }
    for (auto& [path, coeff] : combined)
        if (coeff != 0) out.terms.push_back({coeff, path});
    return out;
}

RatMat eval_path_sum(const Representation& rep, const PathSum& ps) {
    size_t rows = size_t(rep.dim(ps.tgt));
    size_t cols = size_t(rep.dim(ps.src));
    RatMat acc(rows, cols);
    for (const auto& term : ps.terms) {
        if (term.path.empty()) {
            if (rows != cols) throw std::invalid_argument("identity path with mismatched endpoints");
            acc += term.coeff * RatMat::identity(rows);
        } else {
            acc += term.coeff * cycle_product(rep, term.path, ps.src);
        }
    }
    return acc;
}

std::map<std::string, RatMat> gradient_eval(const Representation& rep, const Potential& pot) {
    validate_representation(rep);
    validate_potential(rep.quiver, pot);
    std::map<std::string, RatMat> grad;
    for (const auto& a : rep.quiver.arrows)
        grad[a.id] = eval_path_sum(rep, cyclic_derivative(rep.quiver, pot, a.id));
    return grad;
}

bool is_critical(const Representation& rep, const Potential& pot) {
    for (const auto& [id, g] : gradient_eval(rep, pot))
        if (!g.is_zero()) return false;
    return true;
}

}  // namespace dtpt
