#ifndef DESSIN_QUIVER_HPP
#define DESSIN_QUIVER_HPP

#include <vector>

#include "dessin/dessin.hpp"

namespace dessin {

struct Arrow {
    int half_edge = 0;    // label in 1..n; also the arrow's identity
    int source = -1;      // white-vertex index
    int target = -1;      // white-vertex index
    int black_vertex = -1; // index of the sigma-cycle containing half_edge
    int position = -1;    // index of half_edge within that sigma-cycle
    bool formal = false;  // true iff sigma fixes half_edge

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.half_edge == b.half_edge && a.source == b.source && a.target == b.target &&
               a.black_vertex == b.black_vertex && a.position == b.position &&
               a.formal == b.formal;
    }
};

// White vertices are alpha-cycles, identified by sorted half-edge support and
// ordered by minimum element; arrows are ordered by half-edge label.
struct Quiver {
    std::vector<std::vector<int>> vertices;
    std::vector<Arrow> arrows;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    const Arrow* arrow_by_label(int half_edge) const;
};

Quiver full_quiver(const Dessin& d);       // one arrow per half-edge
Quiver restricted_quiver(const Dessin& d); // full quiver minus formal arrows
Quiver opposite(const Quiver& q);          // every arrow reversed, labels kept

// One full rotation of a black vertex's cycle per start position.
struct SpecialCycle {
    int black_vertex = -1;
    int start_vertex = -1;          // white vertex of arrows.front()
    std::vector<int> arrows;        // half-edge labels in cyclic order
};

// Cycles of length >= 2, or >= 1 when include_formal (each formal loop is then
// its own special cycle). Ordered by (black_vertex, start position).
std::vector<SpecialCycle> special_cycles(const Dessin& d, bool include_formal);

// One class per phi-cycle, labels in phi-cycle order; arrow i ends at the
// white vertex of i's phi-predecessor, so each class is a closed walk.
std::vector<std::vector<int>> face_cycle_decomposition(const Dessin& d);

// For each face whose incident black and white vertices each contribute
// exactly two boundary sides, the closed arrow walk around it (consecutive
// pairs straddle distinct black vertices).
std::vector<std::vector<int>> polygonal_face_paths(const Dessin& d);

enum class QuiverComparison { Labelled, Unlabelled };

// Labelled: same vertex supports and, per half-edge label, the same
// (source, target). Unlabelled: same vertex supports and the same multiset of
// (source, target) pairs. Formal flags are ignored in both modes.
bool quiver_equal(const Quiver& a, const Quiver& b, QuiverComparison mode);

} // namespace dessin

#endif
