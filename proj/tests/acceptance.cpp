// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <dessin/algebra.hpp>
#include <dessin/census.hpp>
#include <dessin/dessin.hpp>
#include <dessin/parse.hpp>
#include <dessin/quiver.hpp>
#include <dessin/report.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dessin;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// corpora shared by the exhaustive criteria, filled on first use
std::map<int, std::vector<Dessin>>& corpora() {
    static std::map<int, std::vector<Dessin>> store;
    return store;
}

const std::vector<Dessin>& corpus(int n) {
    auto& store = corpora();
    auto it = store.find(n);
    if (it == store.end()) it = store.emplace(n, enumerate_dessins(n, 4)).first;
    return it->second;
}

std::map<int, BasisElement> arrow_map(const Algebra& a) {
    std::map<int, BasisElement> m;
    auto elems = a.arrow_elements();
    for (size_t i = 0; i < elems.size(); ++i) m.emplace(a.quiver().arrows[i].half_edge, elems[i]);
    return m;
}

std::optional<BasisElement> eval_word(const Algebra& a, const std::map<int, BasisElement>& arrows,
                                      const std::vector<int>& labels) {
    if (labels.empty()) return std::nullopt;
    std::optional<BasisElement> acc = arrows.at(labels[0]);
    for (size_t i = 1; i < labels.size() && acc; ++i) acc = a.multiply(*acc, arrows.at(labels[i]));
    return acc;
}

// product of a coefficient-one sum with a basis element, as sorted index list
std::vector<int> sum_times(const Algebra& a, const std::vector<BasisElement>& sum,
                           const BasisElement& g, bool on_right) {
    std::vector<int> out;
    for (const auto& b : sum) {
        auto p = on_right ? a.multiply(b, g) : a.multiply(g, b);
        if (p) out.push_back(a.index_of(*p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool criterion1(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const std::string doc =
        "n = 12\n"
        "sigma = (1 2 3 4 5)(6 7)(8 9)\n"
        "alpha = (1 12)(2 10 11)(3 6 9)(4 5)(7 8)\n";
    const Dessin d = parse_dessin(doc);
    const int formula = dimension_formula(d);
    const Algebra a(d);
    const double elapsed = ms_since(start);
    std::ostringstream os;
    os << "dimension formula " << formula << ", basis " << a.dim() << ", " << elapsed << " ms";
    detail = os.str();
    return formula == 34 && a.dim() == 34 && elapsed < 1000.0;
}

bool criterion2(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const Dessin d = demo12();
    const Algebra a(d);

    const int formula = centre_dimension_formula(d);
    const CentreResult oracle = centre_bruteforce(d);

    // all generators of the algebra
    std::vector<BasisElement> gens;
    for (int v = 0; v < a.quiver().vertex_count(); ++v) gens.push_back(BasisElement::trivial(v));
    for (const auto& g : a.arrow_elements()) gens.push_back(g);

    // the identity sum and every socle commute with every generator
    std::vector<std::vector<BasisElement>> central;
    std::vector<BasisElement> identity;
    for (int v = 0; v < a.quiver().vertex_count(); ++v) identity.push_back(BasisElement::trivial(v));
    central.push_back(identity);
    for (int v = 0; v < a.quiver().vertex_count(); ++v) central.push_back({BasisElement::socle(v)});

    bool commute = true;
    for (const auto& sum : central)
        for (const auto& g : gens)
            if (sum_times(a, sum, g, true) != sum_times(a, sum, g, false)) commute = false;

    const auto j = report_json(d);
    const bool surfaced = j["centre"].contains("mismatch") &&
                          j["centre"]["mismatch"].is_boolean() &&
                          j["centre"]["mismatch"].get<bool>() == (oracle.dim != formula) &&
                          j["centre"]["bruteforce_available"].get<bool>();

    const double elapsed = ms_since(start);
    std::ostringstream os;
    os << "formula " << formula << ", commutant " << oracle.dim << ", identity and socles central, "
       << elapsed << " ms";
    detail = os.str();
    return formula == 7 && oracle.dim == 7 && commute && surfaced && elapsed < 5000.0;
}

bool criterion3(std::string& detail) {
    const auto rels = relations(demo12());

    std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> t1;
    std::vector<std::vector<int>> t2, t3;
    for (const auto& r : rels) {
        if (r.kind == RelationType::TypeOne)
            t1.emplace_back(r.white_vertex, r.cycle_a.arrows, r.cycle_b.arrows);
        else if (r.kind == RelationType::TypeTwo)
            t2.push_back(r.monomial);
        else
            t3.push_back(r.monomial);
    }

    const std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> want1 = {
        {2, {3, 4, 5, 1, 2}, {6, 7}}, {2, {3, 4, 5, 1, 2}, {9, 8}}, {2, {6, 7}, {9, 8}},
        {3, {4, 5, 1, 2, 3}, {5, 1, 2, 3, 4}}, {4, {7, 6}, {8, 9}}};
    const std::vector<std::vector<int>> want2 = {
        {1, 2, 3, 4, 5, 1}, {2, 3, 4, 5, 1, 2}, {3, 4, 5, 1, 2, 3}, {6, 7, 6},
        {9, 8, 9},          {4, 5, 1, 2, 3, 4}, {5, 1, 2, 3, 4, 5}, {7, 6, 7},
        {8, 9, 8}};
    const std::vector<std::vector<int>> want3 = {{2, 6}, {2, 9}, {3, 5}, {4, 4}, {6, 8},
                                                 {7, 3}, {7, 9}, {8, 3}, {8, 6}, {9, 7}};

    std::ostringstream os;
    os << t1.size() << " binomial, " << t2.size() << " cycle-overrun, " << t3.size()
       << " cross-cycle relations";
    detail = os.str();
    return t1 == want1 && t2 == want2 && t3 == want3;
}

bool criterion4(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        const Dessin d = nakayama(n);
        const Algebra a(d);
        if (dimension_formula(d) != 2 * n + n * (n - 1)) ok = false;
        if (a.dim() != dimension_formula(d)) ok = false;
        if (centre_dimension_formula(d) != 1 + n) ok = false;
        if (centre_bruteforce(d).dim != 1 + n) ok = false;
        if (!(dual(d) == d)) ok = false;
    }
    const double elapsed = ms_since(start);
    std::ostringstream os;
    os << "chains n=2..8 self-dual with dim 2n+n(n-1), centre 1+n, " << elapsed << " ms";
    detail = os.str();
    return ok && elapsed < 1000.0;
}

bool criterion5(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (int n = 3; n <= 8; ++n) {
        int c1 = 0, c2 = 0, c3 = 0;
        for (const auto& r : relations(polygon(n))) {
            if (r.kind == RelationType::TypeOne) {
                ++c1;
                if (r.cycle_a.arrows.size() != 2 || r.cycle_b.arrows.size() != 2) ok = false;
            } else if (r.kind == RelationType::TypeTwo) {
                ++c2;
            } else {
                ++c3;
                if (r.monomial.size() != 2) ok = false;
            }
            ++checked;
        }
        if (c1 != n || c2 != 2 * n || c3 != 2 * n) ok = false;
    }
    std::ostringstream os;
    os << checked << " relations over polygons n=3..8, all generators quadratic";
    detail = os.str();
    return ok;
}

bool criterion6(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<int> expected = {1, 3, 7, 26, 97, 624};
    bool ok = true;
    int faces_checked = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto& cs = corpus(n);
        if (static_cast<int>(cs.size()) != expected[n - 1]) ok = false;
        for (const auto& d : cs) {
            const Quiver q = full_quiver(d);
            const Permutation phi_inv = d.phi().inverse();
            const auto faces = face_cycle_decomposition(d);
            std::set<int> seen;
            std::vector<int> sizes;
            for (const auto& face : faces) {
                sizes.push_back(static_cast<int>(face.size()));
                for (int i : face) {
                    if (!seen.insert(i).second) ok = false;
                    const Arrow* a = q.arrow_by_label(i);
                    const Arrow* b = q.arrow_by_label(phi_inv.apply(i));
                    if (!a || !b || a->target != b->source) ok = false;
                }
            }
            if (static_cast<int>(seen.size()) != d.size()) ok = false;
            std::sort(sizes.rbegin(), sizes.rend());
            if (sizes != d.passport().face_degrees) ok = false;
            ++faces_checked;
        }
    }
    const double elapsed = ms_since(start);
    std::ostringstream os;
    os << faces_checked << " dessins up to degree 6, all walk partitions close, " << elapsed
       << " ms";
    detail = os.str();
    return ok && faces_checked == 758 && elapsed < 600000.0;
}

bool criterion7(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& d : corpus(n)) {
            const Quiver full = full_quiver(d);
            if (!quiver_equal(full_quiver(dual(d)), full, QuiverComparison::Labelled)) ok = false;
            const Quiver od = full_quiver(oriented_dual(d));
            const Quiver opp = opposite(full);
            if (!quiver_equal(od, opp, QuiverComparison::Unlabelled)) ok = false;
            const Permutation sigma_alpha = compose(d.sigma(), d.alpha());
            for (const auto& a : opp.arrows) {
                const Arrow* image = od.arrow_by_label(sigma_alpha.apply(a.half_edge));
                if (!image || image->source != a.source || image->target != a.target) ok = false;
            }
            ++checked;
        }
    }
    // the divergence from the naive relabelling is documented in every report
    const auto note = report_json(demo12())["duality_checks"]["note"].get<std::string>();
    const bool documented = note.find("i -> i^(sigma alpha)") != std::string::npos &&
                            note.find("i -> i^alpha") != std::string::npos;
    std::ostringstream os;
    os << checked << " dessins: dual quivers labelled-equal, oriented duals opposite under the "
       << "sigma-alpha relabelling; divergence note present";
    detail = os.str();
    return ok && documented && checked == 758;
}

bool criterion8(std::string& detail) {
    bool ok = true;
    int groups = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& [p, members] : group_by_passport(corpus(n))) {
            ++groups;
            const Fingerprint first = fingerprint(members.front());
            for (const auto& d : members) {
                const Fingerprint f = fingerprint(d);
                if (f.q0 != first.q0 || f.q1 != first.q1 ||
                    f.sigma_class_count != first.sigma_class_count ||
                    f.sigma_class_lengths != first.sigma_class_lengths ||
                    f.dim_algebra != first.dim_algebra)
                    ok = false;
            }
        }
    }
    std::ostringstream os;
    os << groups << " passport groups with constant degree-determined invariants";
    detail = os.str();
    return ok && groups > 0;
}

bool criterion9(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    int algebras = 0, max_dim = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& d : corpus(n)) {
            const Algebra a(d);
            const int dim = a.dim();
            if (dim > 64) { ok = false; continue; }  // all small-degree algebras fit
            max_dim = std::max(max_dim, dim);

            std::vector<std::vector<int>> t(dim, std::vector<int>(dim, -1));
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if (auto p = a.multiply(a.basis()[i], a.basis()[j]))
                        t[i][j] = a.index_of(*p);
            auto at = [&](int i, int j) { return (i < 0 || j < 0) ? -1 : t[i][j]; };
            for (int i = 0; i < dim && ok; ++i)
                for (int j = 0; j < dim && ok; ++j)
                    for (int k = 0; k < dim; ++k)
                        if (at(at(i, j), k) != at(i, at(j, k))) { ok = false; break; }

            // the sum of trivial paths is a two-sided identity
            for (int i = 0; i < dim; ++i) {
                const auto& b = a.basis()[i];
                int left = 0, right = 0;
                for (int v = 0; v < a.quiver().vertex_count(); ++v) {
                    if (auto p = a.multiply(BasisElement::trivial(v), b))
                        if (a.index_of(*p) == i) ++left;
                    if (auto p = a.multiply(b, BasisElement::trivial(v)))
                        if (a.index_of(*p) == i) ++right;
                }
                if (left != 1 || right != 1) ok = false;
            }

            // every presented relation holds in the product
            const auto arrows = arrow_map(a);
            for (const auto& r : a.relations()) {
                if (r.kind == RelationType::TypeOne) {
                    const auto lhs = eval_word(a, arrows, r.cycle_a.arrows);
                    const auto rhs = eval_word(a, arrows, r.cycle_b.arrows);
                    if (!lhs || !rhs || !(*lhs == *rhs)) ok = false;
                } else if (eval_word(a, arrows, r.monomial)) {
                    ok = false;
                }
            }
            ++algebras;
        }
    }
    const double elapsed = ms_since(start);
    std::ostringstream os;
    os << algebras << " algebras associative with two-sided identity (max dim " << max_dim
       << "), " << elapsed << " ms";
    detail = os.str();
    return ok && algebras == 758;
}

bool criterion10(std::string& detail) {
    const std::vector<int> expected = {1, 3, 7, 26, 97, 624};
    bool ok = true;
    for (int n = 1; n <= 6; ++n)
        if (static_cast<int>(corpus(n).size()) != expected[n - 1]) ok = false;
    // re-running with a different worker count yields the identical list
    for (int n : {5, 6}) {
        const auto serial = enumerate_dessins(n, 1);
        const auto& cached = corpus(n);
        if (serial.size() != cached.size()) ok = false;
        else
            for (size_t i = 0; i < serial.size(); ++i)
                if (!(serial[i] == cached[i])) ok = false;
    }
    detail = "counts 1, 3, 7, 26, 97, 624; serial and threaded runs agree";
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "twelve-edge demo dimension formula", criterion1},
        {2, "twelve-edge demo centre", criterion2},
        {3, "twelve-edge demo relation lists", criterion3},
        {4, "linear chain family", criterion4},
        {5, "polygon family quadratic relations", criterion5},
        {6, "exhaustive face decomposition", criterion6},
        {7, "exhaustive duality statements", criterion7},
        {8, "passport invariance", criterion8},
        {9, "exhaustive ring axioms and relations", criterion9},
        {10, "enumeration counts", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool passed = false;
        try {
            passed = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d: %s (%s)\n", passed ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!passed) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
