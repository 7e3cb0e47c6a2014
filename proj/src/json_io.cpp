#include "dtpt/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace dtpt {

Json rational_to_json(const Rational& q) { return rat_str(q); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a string");
    return rat_parse(j.get<std::string>());
}

Json matrix_to_json(const RatMat& m) {
    Json arr = Json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) arr.push_back(rat_str(m(i, j)));
    return arr;
}

RatMat matrix_from_json(const Json& j, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows * cols)
        throw std::invalid_argument("matrix entry count mismatch");
    RatMat m(rows, cols);
    size_t k = 0;
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[k++]);
    return m;
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertices;
    Json arrows = Json::array();
    for (const auto& a : q.arrows) arrows.push_back(Json{{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
    j["arrows"] = arrows;
    j["framing"] = q.framing ? Json(*q.framing) : Json(nullptr);
    return j;
}

Quiver quiver_from_json(const Json& j) {
    Quiver q;
    q.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(),
                            a.at("tgt").get<std::string>()});
    if (j.contains("framing") && !j.at("framing").is_null())
        q.framing = j.at("framing").get<std::string>();
    validate_quiver(q);
    return q;
}

Json potential_to_json(const Potential& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms) terms.push_back(Json{{"coeff", rat_str(t.coeff)}, {"cycle", t.cycle}});
    return Json{{"terms", terms}};
}

Potential potential_from_json(const Json& j) {
    Potential p;
    for (const auto& t : j.at("terms"))
        p.terms.push_back({rat_parse(t.at("coeff").get<std::string>()),
                           t.at("cycle").get<std::vector<std::string>>()});
    return p;
}

Json representation_to_json(const Representation& rep) {
    Json j;
    j["quiver"] = quiver_to_json(rep.quiver);
    Json dims;
    for (const auto& [v, d] : rep.dims) dims[v] = d;
    j["dims"] = dims;
    Json mats;
    for (const auto& [id, m] : rep.matrices) mats[id] = matrix_to_json(m);
    j["matrices"] = mats;
    return j;
}

Representation representation_from_json(const Json& j) {
    Representation rep;
    rep.quiver = quiver_from_json(j.at("quiver"));
    for (const auto& [v, d] : j.at("dims").items()) rep.dims[v] = d.get<long>();
    for (const auto& a : rep.quiver.arrows) {
        size_t rows = size_t(rep.dim(a.tgt)), cols = size_t(rep.dim(a.src));
        rep.matrices[a.id] = matrix_from_json(j.at("matrices").at(a.id), rows, cols);
    }
    validate_representation(rep);
    return rep;
}

Json framed_rep_to_json(const FramedRep& rep) {
    Json j;
    j["a"] = rep.a;
    j["r"] = rep.r;
    j["d"] = rep.d;
    Json mats = Json::array();
    auto push = [&](const std::string& id, const std::string& role, const RatMat& m) {
        mats.push_back(Json{{"id", id}, {"role", role}, {"data", matrix_to_json(m)}});
    };
    push("A", "loop", rep.A);
    push("B", "loop", rep.B);
    push("C", "loop", rep.C);
    for (size_t i = 0; i < rep.framings.size(); ++i)
        push("u" + std::to_string(i + 1), "framing", rep.framings[i]);
    for (size_t i = 0; i < rep.coframings.size(); ++i)
        push("v" + std::to_string(i + 1), "coframing", rep.coframings[i]);
    j["matrices"] = mats;
    return j;
}

FramedRep framed_rep_from_json(const Json& j) {
    FramedRep rep;
    rep.a = j.at("a").get<long>();
    rep.r = j.at("r").get<long>();
    rep.d = j.at("d").get<long>();
    size_t d = size_t(rep.d);
    rep.A = rep.B = rep.C = RatMat(d, d);
    for (const auto& entry : j.at("matrices")) {
        std::string id = entry.at("id").get<std::string>();
        std::string role = entry.at("role").get<std::string>();
        if (role == "loop") {
            RatMat m = matrix_from_json(entry.at("data"), d, d);
            if (id == "A") rep.A = m;
            else if (id == "B") rep.B = m;
            else if (id == "C") rep.C = m;
            else throw std::invalid_argument("unknown loop id " + id);
        } else if (role == "framing") {
            rep.framings.push_back(matrix_from_json(entry.at("data"), d, 1));
        } else if (role == "coframing") {
            rep.coframings.push_back(matrix_from_json(entry.at("data"), 1, d));
        } else {
            throw std::invalid_argument("unknown role " + role);
        }
    }
    validate_framed(rep);
    return rep;
}

Json verdict_to_json(const StabilityVerdict& v) {
    Json j;
    j["semistable"] = v.semistable;
    if (v.witness) {
        Json rows = Json::array();
        for (size_t i = 0; i < v.witness->rows(); ++i) {
            Json row = Json::array();
            for (size_t c = 0; c < v.witness->cols(); ++c) row.push_back(rat_str((*v.witness)(i, c)));
            rows.push_back(row);
        }
        j["witness"] = rows;
    }
    return j;
}

Json one_ps_to_json(const OnePsCertificate& c) {
    Json j;
    j["weights"] = c.weights;
    j["base_change"] = matrix_to_json(c.base_change);
    return j;
}

Json zonotope_to_json(const Zonotope& z) {
    Json j;
    j["dim"] = z.dim;
    Json tr = Json::array();
    for (const auto& c : z.translate) tr.push_back(rat_str(c));
    j["translate"] = tr;
    Json gens = Json::array();
    for (const auto& g : z.generators) {
        Json vec = Json::array();
        for (const auto& c : g.vec) vec.push_back(rat_str(c));
        gens.push_back(Json{{"vec", vec},
                            {"lo", rat_str(g.lo)},
                            {"hi", rat_str(g.hi)},
                            {"lo_open", g.lo_open},
                            {"hi_open", g.hi_open}});
    }
    j["generators"] = gens;
    Json lin = Json::array();
    for (const auto& l : z.lineality) {
        Json vec = Json::array();
        for (const auto& c : l) vec.push_back(rat_str(c));
        lin.push_back(vec);
    }
    j["lineality"] = lin;
    return j;
}

Zonotope zonotope_from_json(const Json& j) {
    Zonotope z;
    z.dim = j.at("dim").get<size_t>();
    for (const auto& c : j.at("translate")) z.translate.push_back(rational_from_json(c));
    for (const auto& g : j.at("generators")) {
        ZonotopeGenerator gen;
        for (const auto& c : g.at("vec")) gen.vec.push_back(rational_from_json(c));
        gen.lo = rat_parse(g.at("lo").get<std::string>());
        gen.hi = rat_parse(g.at("hi").get<std::string>());
        gen.lo_open = g.at("lo_open").get<bool>();
        gen.hi_open = g.at("hi_open").get<bool>();
        z.generators.push_back(std::move(gen));
    }
    for (const auto& l : j.at("lineality")) {
        WeightVec vec;
        for (const auto& c : l) vec.push_back(rational_from_json(c));
        z.lineality.push_back(std::move(vec));
    }
    return z;
}

Json certificate_to_json(const MembershipCertificate& c) {
    Json j;
    j["feasible"] = c.feasible;
    if (c.feasible) {
        Json gc = Json::array(), lc = Json::array();
        for (const auto& v : c.generator_coeffs) gc.push_back(rat_str(v));
        for (const auto& v : c.lineality_coeffs) lc.push_back(rat_str(v));
        j["generator_coeffs"] = gc;
        j["lineality_coeffs"] = lc;
    }
    return j;
}

Json summand_to_json(const SummandDescriptor& s) {
    Json parts = Json::array();
    for (const auto& p : s.parts) parts.push_back(Json{{"d", p.d}, {"w", p.w}, {"v", p.v}});
    return Json{{"d_prime", s.d_prime}, {"parts", parts}};
}

Json decomposition_to_json(const WeightDecomposition& d) {
    Json j = summand_to_json(d.summand);
    Json blocks = Json::array();
    for (const auto& b : d.chi_blocks) {
        Json vec = Json::array();
        for (const auto& c : b) vec.push_back(rat_str(c));
        blocks.push_back(vec);
    }
    j["chi_blocks"] = blocks;
    Json prime = Json::array();
    for (const auto& c : d.chi_prime) prime.push_back(rat_str(c));
    j["chi_prime"] = prime;
    return j;
}

Json series_to_json(const IntSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(c.get_str());
    return Json{{"coeffs", coeffs}};
}

WeightVec weight_from_string(const std::string& csv) {
    WeightVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t begin = item.find_first_not_of(" \t");
        size_t end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) throw std::invalid_argument("empty weight coordinate");
        out.push_back(rat_parse(item.substr(begin, end - begin + 1)));
    }
    return out;
}

}  // namespace dtpt
