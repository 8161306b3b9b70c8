#ifndef DESSIN_ALGEBRA_HPP
#define DESSIN_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/quiver.hpp"

namespace dessin {

enum class RelationType { TypeOne, TypeTwo, TypeThree };

// TypeOne: binomial cycle_a - cycle_b, two special cycles at a common white
// vertex. TypeTwo: monomial cycle_a followed by its own first arrow.
// TypeThree: monomial of two composable arrows not consecutive in any cycle.
struct Relation {
    RelationType kind;
    int white_vertex = -1;     // where the relation starts
    SpecialCycle cycle_a;      // TypeOne / TypeTwo
    SpecialCycle cycle_b;      // TypeOne only
    std::vector<int> monomial; // TypeTwo: cycle plus repeated first arrow; TypeThree: {a, b}
};

struct BasisElement {
    enum class Kind { Trivial, ProperPath, Socle };
    Kind kind = Kind::Trivial;
    int vertex = -1; // white vertex (Trivial, Socle)
    int black = -1;  // ProperPath: sigma-cycle index
    int start = -1;  // ProperPath: start position within the cycle
    int length = 0;  // ProperPath: number of arrows, 1 <= length < cycle length

    static BasisElement trivial(int v) { return {Kind::Trivial, v, -1, -1, 0}; }
    static BasisElement proper_path(int b, int s, int k) { return {Kind::ProperPath, -1, b, s, k}; }
    static BasisElement socle(int v) { return {Kind::Socle, v, -1, -1, 0}; }

    friend bool operator==(const BasisElement& a, const BasisElement& b) {
        return a.kind == b.kind && a.vertex == b.vertex && a.black == b.black &&
               a.start == b.start && a.length == b.length;
    }
    friend bool operator!=(const BasisElement& a, const BasisElement& b) { return !(a == b); }
};

// A sum of basis elements with coefficient one each.
using BasisSum = std::vector<BasisElement>;

// The algebra of a dessin with everything precomputed: quiver, relations,
// basis indexing, and the closed-form product (any two basis elements multiply
// to a basis element or to zero).
class Algebra {
public:
    explicit Algebra(const Dessin& d);

    const Dessin& dessin() const { return dessin_; }
    const Quiver& quiver() const { return quiver_; } // formal arrows omitted
    const std::vector<Relation>& relations() const { return relations_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    int index_of(const BasisElement& x) const; // throws if not from this algebra
    // std::nullopt encodes the zero element.
    std::optional<BasisElement> multiply(const BasisElement& x, const BasisElement& y) const;

    int source_vertex(const BasisElement& x) const;
    int target_vertex(const BasisElement& x) const;
    std::vector<int> arrow_labels(const BasisElement& x) const; // empty for Trivial/Socle
    std::string describe(const BasisElement& x) const;

    // Arrows of the presentation quiver as length-1 paths, by half-edge label.
    std::vector<BasisElement> arrow_elements() const;

private:
    void check_membership(const BasisElement& x) const;

    Dessin dessin_;
    Quiver quiver_;
    std::vector<std::vector<int>> blacks_; // sigma-cycles, min-first
    std::vector<int> white_of_;            // by half-edge label
    std::vector<Relation> relations_;
    std::vector<BasisElement> basis_;
    std::vector<int> path_offsets_; // basis index of each black's first path
    int socle_offset_ = 0;
};

std::vector<Relation> relations(const Dessin& d);
std::vector<BasisElement> basis(const Dessin& d);
int dimension_formula(const Dessin& d); // 2|Q0| + sum over cycles of l(l-1)
std::optional<BasisElement> multiply(const Dessin& d, const BasisElement& x,
                                     const BasisElement& y);

struct AlgebraPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<BasisElement> basis;
    int dim = 0;
    int centre_dim_formula = 0;
};

AlgebraPresentation presentation(const Dessin& d);

// The closed-form centre description: the identity (sum of all Trivial), one
// Socle per white vertex, and each non-formal loop arrow as a length-1 path.
std::vector<BasisSum> centre_basis_formula(const Dessin& d);
int centre_dimension_formula(const Dessin& d); // 1 + |Q0| + #non-formal loops

struct CentreResult {
    int dim = 0;
    // Each central element is a set of basis indices summed with coefficient
    // one; together they form a basis of the centre.
    std::vector<std::vector<int>> central_elements;
};

inline constexpr int kDefaultCentreBound = 512;

// Exact commutant computation from the structure constants: solves x*g = g*x
// for every generator (all Trivial elements and all arrows) over the integers.
// Every constraint has at most two unit coefficients, so the solve is a
// union-find and no rounding or overflow can occur.
CentreResult centre_bruteforce(const Dessin& d, int max_dim = kDefaultCentreBound);
CentreResult centre_bruteforce(const Algebra& algebra, int max_dim = kDefaultCentreBound);

// True iff every product of two socle members of centre_basis_formula is zero.
bool zero_product_check(const Dessin& d);

struct ZeroProductReport {
    bool socle_products_all_zero = true;
    // Loop-arrow pairs from centre_basis_formula whose product is nonzero.
    std::vector<std::pair<BasisElement, BasisElement>> loop_exceptions;
};

ZeroProductReport zero_product_report(const Dessin& d);

// Equal centre dimensions by the closed formula.
bool centres_isomorphic_paper(const Dessin& a, const Dessin& b);

} // namespace dessin

#endif
