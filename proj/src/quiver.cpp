#include "dessin/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dessin {

namespace {

// white vertex index for each half-edge label (1-based lookup)
std::vector<int> white_index(const Dessin& d, std::vector<std::vector<int>>* supports = nullptr) {
    std::vector<int> of(d.size() + 1, -1);
    auto cycles = d.alpha().cycles();
    for (size_t v = 0; v < cycles.size(); ++v)
        for (int x : cycles[v]) of[x] = static_cast<int>(v);
    if (supports) {
        supports->clear();
        for (auto& c : cycles) {
            std::sort(c.begin(), c.end());
            supports->push_back(std::move(c));
        }
    }
    return of;
}

Quiver build_quiver(const Dessin& d, bool include_formal) {
    Quiver q;
    const auto white_of = white_index(d, &q.vertices);
    const auto blacks = d.sigma().cycles();
    std::vector<int> black_of(d.size() + 1, -1), pos_of(d.size() + 1, -1);
    for (size_t b = 0; b < blacks.size(); ++b)
        for (size_t p = 0; p < blacks[b].size(); ++p) {
            black_of[blacks[b][p]] = static_cast<int>(b);
            pos_of[blacks[b][p]] = static_cast<int>(p);
        }
    for (int i = 1; i <= d.size(); ++i) {
        const bool formal = d.sigma().apply(i) == i;
        if (formal && !include_formal) continue;
        q.arrows.push_back(Arrow{i, white_of[i], white_of[d.sigma().apply(i)], black_of[i],
                                 pos_of[i], formal});
    }
    return q;
}

} // namespace

const Arrow* Quiver::arrow_by_label(int half_edge) const {
    for (const auto& a : arrows)
        if (a.half_edge == half_edge) return &a;
    return nullptr;
}

Quiver full_quiver(const Dessin& d) { return build_quiver(d, true); }

Quiver restricted_quiver(const Dessin& d) { return build_quiver(d, false); }

Quiver opposite(const Quiver& q) {
    Quiver r = q;
    for (auto& a : r.arrows) std::swap(a.source, a.target);
    return r;
}

std::vector<SpecialCycle> special_cycles(const Dessin& d, bool include_formal) {
    const auto white_of = white_index(d);
    std::vector<SpecialCycle> out;
    int black = 0;
    for (const auto& c : d.sigma().cycles()) {
        const int len = static_cast<int>(c.size());
        if (len >= 2 || include_formal) {
            for (int s = 0; s < len; ++s) {
                SpecialCycle sc;
                sc.black_vertex = black;
                for (int j = 0; j < len; ++j) sc.arrows.push_back(c[(s + j) % len]);
                sc.start_vertex = white_of[sc.arrows.front()];
                out.push_back(std::move(sc));
            }
        }
        ++black;
    }
    return out;
}

std::vector<std::vector<int>> face_cycle_decomposition(const Dessin& d) {
    return d.phi().cycles();
}

std::vector<std::vector<int>> polygonal_face_paths(const Dessin& d) {
    const auto white_of = white_index(d);
    std::vector<int> black_of(d.size() + 1, -1);
    {
        int b = 0;
        for (const auto& c : d.sigma().cycles()) {
            for (int x : c) black_of[x] = b;
            ++b;
        }
    }
    const Permutation alpha_inv = d.alpha().inverse();
    std::vector<std::vector<int>> out;
    for (const auto& face : d.phi().cycles()) {
        const int k = static_cast<int>(face.size());
        if (k < 2) continue;
        std::set<int> blacks, whites, sides;
        for (int i : face) {
            blacks.insert(black_of[i]);
            whites.insert(white_of[i]);
            sides.insert(i);
            sides.insert(alpha_inv.apply(i));
        }
        // every corner on the boundary must contribute exactly two distinct sides
        if (static_cast<int>(blacks.size()) != k || static_cast<int>(whites.size()) != k ||
            static_cast<int>(sides.size()) != 2 * k)
            continue;
        // the walk traverses the face labels against phi's order
        std::vector<int> path{face[0]};
        for (int j = k - 1; j >= 1; --j) path.push_back(face[j]);
        out.push_back(std::move(path));
    }
    return out;
}

bool quiver_equal(const Quiver& a, const Quiver& b, QuiverComparison mode) {
    if (a.vertices != b.vertices) return false;
    if (a.arrows.size() != b.arrows.size()) return false;
    if (mode == QuiverComparison::Labelled) {
        std::map<int, std::pair<int, int>> ends;
        for (const auto& ar : a.arrows) ends[ar.half_edge] = {ar.source, ar.target};
        for (const auto& br : b.arrows) {
            auto it = ends.find(br.half_edge);
            if (it == ends.end() || it->second != std::make_pair(br.source, br.target))
                return false;
        }
        return true;
    }
    std::multiset<std::pair<int, int>> ea, eb;
    for (const auto& ar : a.arrows) ea.insert({ar.source, ar.target});
    for (const auto& br : b.arrows) eb.insert({br.source, br.target});
    return ea == eb;
}

} // namespace dessin
