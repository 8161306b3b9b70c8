#include "dessin/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "dessin/error.hpp"

namespace dessin {

namespace {

std::vector<int> white_lookup(const Dessin& d) {
    std::vector<int> of(d.size() + 1, -1);
    const auto cycles = d.alpha().cycles();
    for (size_t v = 0; v < cycles.size(); ++v)
        for (int x : cycles[v]) of[x] = static_cast<int>(v);
    return of;
}

} // namespace

Algebra::Algebra(const Dessin& d)
    : dessin_(d), quiver_(restricted_quiver(d)), blacks_(d.sigma().cycles()),
      white_of_(white_lookup(d)) {
    // relations, sorted by white vertex then black-vertex ids
    const auto cycles = special_cycles(d, false);
    std::map<int, std::vector<const SpecialCycle*>> at_vertex;
    for (const auto& c : cycles) at_vertex[c.start_vertex].push_back(&c);
    for (auto& [v, list] : at_vertex) {
        std::sort(list.begin(), list.end(), [](const SpecialCycle* a, const SpecialCycle* b) {
            if (a->black_vertex != b->black_vertex) return a->black_vertex < b->black_vertex;
            return a->arrows.front() < b->arrows.front();
        });
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                Relation r;
                r.kind = RelationType::TypeOne;
                r.white_vertex = v;
                r.cycle_a = *list[i];
                r.cycle_b = *list[j];
                relations_.push_back(std::move(r));
            }
    }
    std::vector<Relation> type_two;
    for (const auto& c : cycles) {
        Relation r;
        r.kind = RelationType::TypeTwo;
        r.white_vertex = c.start_vertex;
        r.cycle_a = c;
        r.monomial = c.arrows;
        r.monomial.push_back(c.arrows.front());
        type_two.push_back(std::move(r));
    }
    std::sort(type_two.begin(), type_two.end(), [](const Relation& a, const Relation& b) {
        if (a.white_vertex != b.white_vertex) return a.white_vertex < b.white_vertex;
        if (a.cycle_a.black_vertex != b.cycle_a.black_vertex)
            return a.cycle_a.black_vertex < b.cycle_a.black_vertex;
        return a.monomial < b.monomial;
    });
    for (auto& r : type_two) relations_.push_back(std::move(r));
    std::vector<Relation> type_three;
    for (const auto& a : quiver_.arrows)
        for (const auto& b : quiver_.arrows) {
            if (a.target != b.source) continue;
            if (dessin_.sigma().apply(a.half_edge) == b.half_edge) continue; // inside a cycle
            Relation r;
            r.kind = RelationType::TypeThree;
            r.white_vertex = a.target;
            r.monomial = {a.half_edge, b.half_edge};
            type_three.push_back(std::move(r));
        }
    std::sort(type_three.begin(), type_three.end(), [](const Relation& a, const Relation& b) {
        return a.monomial < b.monomial;
    });
    for (auto& r : type_three) relations_.push_back(std::move(r));

    // basis: trivial paths, proper subpaths of the sigma-cycles, socles
    const int whites = quiver_.vertex_count();
    for (int v = 0; v < whites; ++v) basis_.push_back(BasisElement::trivial(v));
    for (size_t b = 0; b < blacks_.size(); ++b) {
        const int len = static_cast<int>(blacks_[b].size());
        if (len < 2) continue;
        for (int s = 0; s < len; ++s)
            for (int k = 1; k < len; ++k)
                basis_.push_back(BasisElement::proper_path(static_cast<int>(b), s, k));
    }
    // every white vertex has a special cycle once formal loops count as their
    // own cycles, so each one carries a socle
    for (int v = 0; v < whites; ++v) basis_.push_back(BasisElement::socle(v));

    path_offsets_.assign(blacks_.size(), -1);
    int offset = whites;
    for (size_t b = 0; b < blacks_.size(); ++b) {
        const int len = static_cast<int>(blacks_[b].size());
        if (len < 2) continue;
        path_offsets_[b] = offset;
        offset += len * (len - 1);
    }
    socle_offset_ = offset;
}

void Algebra::check_membership(const BasisElement& x) const {
    const int whites = quiver_.vertex_count();
    switch (x.kind) {
    case BasisElement::Kind::Trivial:
    case BasisElement::Kind::Socle:
        if (x.vertex < 0 || x.vertex >= whites)
            throw Error("element not from this algebra: vertex out of range");
        return;
    case BasisElement::Kind::ProperPath: {
        if (x.black < 0 || x.black >= static_cast<int>(blacks_.size()))
            throw Error("element not from this algebra: black vertex out of range");
        const int len = static_cast<int>(blacks_[x.black].size());
        if (len < 2 || x.start < 0 || x.start >= len || x.length < 1 || x.length >= len)
            throw Error("element not from this algebra: bad path coordinates");
        return;
    }
    }
    throw Error("element not from this algebra");
}

int Algebra::index_of(const BasisElement& x) const {
    check_membership(x);
    switch (x.kind) {
    case BasisElement::Kind::Trivial:
        return x.vertex;
    case BasisElement::Kind::ProperPath: {
        const int len = static_cast<int>(blacks_[x.black].size());
        return path_offsets_[x.black] + x.start * (len - 1) + (x.length - 1);
    }
    case BasisElement::Kind::Socle:
        return socle_offset_ + x.vertex;
    }
    throw Error("element not from this algebra");
}

int Algebra::source_vertex(const BasisElement& x) const {
    check_membership(x);
    if (x.kind == BasisElement::Kind::ProperPath) return white_of_[blacks_[x.black][x.start]];
    return x.vertex;
}

int Algebra::target_vertex(const BasisElement& x) const {
    check_membership(x);
    if (x.kind == BasisElement::Kind::ProperPath) {
        const int len = static_cast<int>(blacks_[x.black].size());
        return white_of_[blacks_[x.black][(x.start + x.length) % len]];
    }
    return x.vertex;
}

std::vector<int> Algebra::arrow_labels(const BasisElement& x) const {
    check_membership(x);
    std::vector<int> out;
    if (x.kind == BasisElement::Kind::ProperPath) {
        const auto& c = blacks_[x.black];
        const int len = static_cast<int>(c.size());
        for (int j = 0; j < x.length; ++j) out.push_back(c[(x.start + j) % len]);
    }
    return out;
}

std::string Algebra::describe(const BasisElement& x) const {
    check_membership(x);
    std::ostringstream os;
    switch (x.kind) {
    case BasisElement::Kind::Trivial:
        os << "e" << x.vertex;
        break;
    case BasisElement::Kind::Socle:
        os << "socle" << x.vertex;
        break;
    case BasisElement::Kind::ProperPath: {
        bool first = true;
        for (int label : arrow_labels(x)) {
            if (!first) os << ' ';
            os << 'a' << label;
            first = false;
        }
        break;
    }
    }
    return os.str();
}

std::vector<BasisElement> Algebra::arrow_elements() const {
    std::vector<BasisElement> out;
    for (const auto& a : quiver_.arrows)
        out.push_back(BasisElement::proper_path(a.black_vertex, a.position, 1));
    return out;
}

std::optional<BasisElement> Algebra::multiply(const BasisElement& x, const BasisElement& y) const {
    check_membership(x);
    check_membership(y);
    if (x.kind == BasisElement::Kind::Trivial)
        return source_vertex(y) == x.vertex ? std::optional<BasisElement>(y) : std::nullopt;
    if (y.kind == BasisElement::Kind::Trivial)
        return target_vertex(x) == y.vertex ? std::optional<BasisElement>(x) : std::nullopt;
    // socles absorb the two monomial relation families: anything beyond a full
    // cycle is zero
    if (x.kind == BasisElement::Kind::Socle || y.kind == BasisElement::Kind::Socle)
        return std::nullopt;
    if (x.black != y.black) return std::nullopt; // mixed-black concatenation
    const int len = static_cast<int>(blacks_[x.black].size());
    if (y.start != (x.start + x.length) % len) return std::nullopt; // not consecutive
    const int combined = x.length + y.length;
    if (combined < len) return BasisElement::proper_path(x.black, x.start, combined);
    if (combined == len) return BasisElement::socle(white_of_[blacks_[x.black][x.start]]);
    return std::nullopt;
}

std::vector<Relation> relations(const Dessin& d) { return Algebra(d).relations(); }

std::vector<BasisElement> basis(const Dessin& d) { return Algebra(d).basis(); }

int dimension_formula(const Dessin& d) {
    int total = 2 * static_cast<int>(d.alpha().cycles().size());
    for (const auto& c : d.sigma().cycles()) {
        const int len = static_cast<int>(c.size());
        if (len >= 2) total += len * (len - 1);
    }
    return total;
}

std::optional<BasisElement> multiply(const Dessin& d, const BasisElement& x,
                                     const BasisElement& y) {
    return Algebra(d).multiply(x, y);
}

AlgebraPresentation presentation(const Dessin& d) {
    Algebra a(d);
    AlgebraPresentation p;
    p.quiver = a.quiver();
    p.relations = a.relations();
    p.basis = a.basis();
    p.dim = a.dim();
    p.centre_dim_formula = centre_dimension_formula(d);
    return p;
}

std::vector<BasisSum> centre_basis_formula(const Dessin& d) {
    Algebra a(d);
    std::vector<BasisSum> out;
    BasisSum identity;
    for (int v = 0; v < a.quiver().vertex_count(); ++v)
        identity.push_back(BasisElement::trivial(v));
    out.push_back(std::move(identity));
    for (int v = 0; v < a.quiver().vertex_count(); ++v)
        out.push_back({BasisElement::socle(v)});
    for (const auto& arrow : a.quiver().arrows)
        if (arrow.source == arrow.target)
            out.push_back({BasisElement::proper_path(arrow.black_vertex, arrow.position, 1)});
    return out;
}

int centre_dimension_formula(const Dessin& d) {
    int loops = 0;
    for (const auto& arrow : restricted_quiver(d).arrows)
        if (arrow.source == arrow.target) ++loops;
    return 1 + static_cast<int>(d.alpha().cycles().size()) + loops;
}

CentreResult centre_bruteforce(const Dessin& d, int max_dim) {
    return centre_bruteforce(Algebra(d), max_dim);
}

CentreResult centre_bruteforce(const Algebra& algebra, int max_dim) {
    const int n = algebra.dim();
    if (n > max_dim) throw DimensionBoundError(n, max_dim);

    // x = sum c_i b_i is central iff for each generator g and basis element
    // b_j the coefficient of b_j in x*g equals that in g*x. Products of basis
    // elements are single basis elements, and b -> b*g (resp. g*b) hits each
    // b_j at most once, so every constraint is c_i = c_k or c_i = 0: solvable
    // exactly by union-find with a zero sink.
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    const int zero_node = n;
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    std::vector<BasisElement> generators;
    for (int v = 0; v < algebra.quiver().vertex_count(); ++v)
        generators.push_back(BasisElement::trivial(v));
    for (const auto& a : algebra.arrow_elements()) generators.push_back(a);

    std::vector<int> right(n), left(n); // product index by basis index, -1 for zero
    for (const auto& g : generators) {
        std::fill(right.begin(), right.end(), -1);
        std::fill(left.begin(), left.end(), -1);
        std::vector<int> right_pre(n, -1), left_pre(n, -1); // preimage by product index
        for (int i = 0; i < n; ++i) {
            if (auto r = algebra.multiply(algebra.basis()[i], g)) {
                const int j = algebra.index_of(*r);
                if (right_pre[j] != -1)
                    throw Error("internal: centraliser constraints are not two-sparse");
                right[i] = j;
                right_pre[j] = i;
            }
            if (auto l = algebra.multiply(g, algebra.basis()[i])) {
                const int j = algebra.index_of(*l);
                if (left_pre[j] != -1)
                    throw Error("internal: centraliser constraints are not two-sparse");
                left[i] = j;
                left_pre[j] = i;
            }
        }
        for (int j = 0; j < n; ++j) {
            const int a = right_pre[j], b = left_pre[j];
            if (a != -1 && b != -1) unite(a, b);
            else if (a != -1) unite(a, zero_node);
            else if (b != -1) unite(b, zero_node);
        }
    }

    std::map<int, std::vector<int>> components;
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (r == find(zero_node)) continue;
        components[r].push_back(i);
    }
    CentreResult result;
    result.dim = static_cast<int>(components.size());
    for (auto& [root, members] : components) result.central_elements.push_back(std::move(members));
    return result;
}

bool zero_product_check(const Dessin& d) { return zero_product_report(d).socle_products_all_zero; }

ZeroProductReport zero_product_report(const Dessin& d) {
    Algebra a(d);
    ZeroProductReport report;
    std::vector<BasisElement> socles, loops;
    for (const auto& sum : centre_basis_formula(d)) {
        if (sum.size() != 1) continue; // the identity sum is not a single element
        if (sum[0].kind == BasisElement::Kind::Socle) socles.push_back(sum[0]);
        else if (sum[0].kind == BasisElement::Kind::ProperPath) loops.push_back(sum[0]);
        // a lone Trivial is the identity of a one-vertex quiver: not a loop
    }
    for (const auto& x : socles)
        for (const auto& y : socles)
            if (a.multiply(x, y)) report.socle_products_all_zero = false;
    for (const auto& x : loops)
        for (const auto& y : loops)
            if (a.multiply(x, y)) report.loop_exceptions.emplace_back(x, y);
    return report;
}

bool centres_isomorphic_paper(const Dessin& a, const Dessin& b) {
    return centre_dimension_formula(a) == centre_dimension_formula(b);
}

} // namespace dessin
