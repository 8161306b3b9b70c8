#include "dessin/report.hpp"

#include <sstream>

#include "dessin/census.hpp"
#include "dessin/error.hpp"
#include "dessin/quiver.hpp"

namespace dessin {

namespace {

constexpr const char* kDualityNote =
    "oriented dual matches the opposite quiver under the arrow bijection "
    "i -> i^(sigma alpha); the bijection i -> i^alpha fails in general";

struct DualityChecks {
    bool labelled_equal;
    bool oriented_op_equal;
};

DualityChecks duality_checks(const Dessin& d) {
    const Quiver full = full_quiver(d);
    return {quiver_equal(full_quiver(dual(d)), full, QuiverComparison::Labelled),
            quiver_equal(full_quiver(oriented_dual(d)), opposite(full),
                         QuiverComparison::Unlabelled)};
}

struct CentreSummary {
    int formula_dim;
    int bruteforce_dim = -1; // -1 when unavailable
    bool available = false;
    bool mismatch = false;
};

CentreSummary centre_summary(const Dessin& d, int centre_bound) {
    CentreSummary c;
    c.formula_dim = centre_dimension_formula(d);
    try {
        const CentreResult oracle = centre_bruteforce(d, centre_bound);
        c.bruteforce_dim = oracle.dim;
        c.available = true;
        c.mismatch = oracle.dim != c.formula_dim;
    } catch (const DimensionBoundError&) {
        c.available = false;
    }
    return c;
}

} // namespace

nlohmann::ordered_json report_json(const Dessin& d, int centre_bound) {
    using json = nlohmann::ordered_json;
    const Algebra alg(d);
    const Quiver full = full_quiver(d);
    const Passport passport = d.passport();
    const Fingerprint fp = fingerprint(d);
    const CentreSummary centre = centre_summary(d, centre_bound);
    const DualityChecks duality = duality_checks(d);

    json j;
    j["n"] = d.size();
    j["sigma"] = d.sigma().image();
    j["alpha"] = d.alpha().image();
    j["phi"] = d.phi().image();
    j["passport"] = {{"black_degrees", passport.black_degrees},
                     {"white_degrees", passport.white_degrees},
                     {"face_degrees", passport.face_degrees},
                     {"genus", passport.genus}};
    json arrows = json::array();
    for (const auto& a : full.arrows)
        arrows.push_back({{"half_edge", a.half_edge},
                          {"source", a.source},
                          {"target", a.target},
                          {"formal", a.formal}});
    j["quiver"] = {{"vertices", full.vertices}, {"arrows", std::move(arrows)}};
    json type_one = json::array(), type_two = json::array(), type_three = json::array();
    for (const auto& r : alg.relations()) {
        switch (r.kind) {
        case RelationType::TypeOne:
            type_one.push_back({r.cycle_a.arrows, r.cycle_b.arrows});
            break;
        case RelationType::TypeTwo:
            type_two.push_back(r.monomial);
            break;
        case RelationType::TypeThree:
            type_three.push_back(r.monomial);
            break;
        }
    }
    j["relations"] = {{"type_one", std::move(type_one)},
                      {"type_two", std::move(type_two)},
                      {"type_three", std::move(type_three)}};
    j["basis_count"] = alg.dim();
    j["dim_formula"] = dimension_formula(d);
    j["centre"] = {{"formula_dim", centre.formula_dim},
                   {"bruteforce_dim",
                    centre.available ? nlohmann::ordered_json(centre.bruteforce_dim)
                                     : nlohmann::ordered_json(nullptr)},
                   {"bruteforce_available", centre.available},
                   {"mismatch", centre.mismatch}};
    j["fingerprint"] = {{"q0", fp.q0},
                        {"q1", fp.q1},
                        {"sigma_class_count", fp.sigma_class_count},
                        {"sigma_class_lengths", fp.sigma_class_lengths},
                        {"dim_algebra", fp.dim_algebra},
                        {"dim_centre_formula", fp.dim_centre_formula},
                        {"loop_count", fp.loop_count}};
    j["duality_checks"] = {{"labelled_equal", duality.labelled_equal},
                           {"oriented_op_equal", duality.oriented_op_equal},
                           {"note", kDualityNote}};
    return j;
}

std::string report_text(const Dessin& d, int centre_bound) {
    const Algebra alg(d);
    const Quiver full = full_quiver(d);
    const Passport passport = d.passport();
    const CentreSummary centre = centre_summary(d, centre_bound);
    const DualityChecks duality = duality_checks(d);

    std::ostringstream os;
    os << "n = " << d.size() << '\n';
    os << "sigma = " << d.sigma().to_cycle_string() << '\n';
    os << "alpha = " << d.alpha().to_cycle_string() << '\n';
    os << "phi   = " << d.phi().to_cycle_string() << '\n';
    os << "passport: " << passport.to_string() << '\n';
    int formal = 0;
    for (const auto& a : full.arrows)
        if (a.formal) ++formal;
    os << "quiver: " << full.vertex_count() << " vertices, " << full.arrows.size()
       << " arrows (" << formal << " formal)\n";
    for (int v = 0; v < full.vertex_count(); ++v) {
        os << "  vertex " << v << ": {";
        const auto& support = full.vertices[v];
        for (size_t i = 0; i < support.size(); ++i) {
            if (i) os << ' ';
            os << support[i];
        }
        os << "}\n";
    }
    for (const auto& a : full.arrows) {
        os << "  a" << a.half_edge << ": " << a.source << " -> " << a.target;
        if (a.formal) os << "  (formal)";
        else if (a.source == a.target) os << "  (loop)";
        os << '\n';
    }
    int t1 = 0, t2 = 0, t3 = 0;
    for (const auto& r : alg.relations()) {
        if (r.kind == RelationType::TypeOne) ++t1;
        else if (r.kind == RelationType::TypeTwo) ++t2;
        else ++t3;
    }
    auto path_text = [](const std::vector<int>& labels) {
        std::ostringstream p;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i) p << ' ';
            p << 'a' << labels[i];
        }
        return p.str();
    };
    os << "relations: " << t1 << " type-one, " << t2 << " type-two, " << t3 << " type-three\n";
    for (const auto& r : alg.relations()) {
        switch (r.kind) {
        case RelationType::TypeOne:
            os << "  [1] at vertex " << r.white_vertex << ": " << path_text(r.cycle_a.arrows)
               << " = " << path_text(r.cycle_b.arrows) << '\n';
            break;
        case RelationType::TypeTwo:
            os << "  [2] " << path_text(r.monomial) << '\n';
            break;
        case RelationType::TypeThree:
            os << "  [3] " << path_text(r.monomial) << '\n';
            break;
        }
    }
    os << "basis: " << alg.dim() << " elements; dimension formula " << dimension_formula(d)
       << '\n';
    os << "centre: formula " << centre.formula_dim << ", brute force ";
    if (centre.available)
        os << centre.bruteforce_dim << (centre.mismatch ? "  MISMATCH" : "  (agrees)");
    else
        os << "skipped (dimension over bound " << centre_bound << ")";
    os << '\n';
    os << "fingerprint: " << fingerprint(d).to_string() << '\n';
    os << "duality: labelled dual equal: " << (duality.labelled_equal ? "yes" : "NO")
       << "; oriented dual equals opposite: " << (duality.oriented_op_equal ? "yes" : "NO")
       << '\n';
    os << "  (" << kDualityNote << ")\n";
    return os.str();
}

} // namespace dessin
