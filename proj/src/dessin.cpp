#include "dessin/dessin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dessin/error.hpp"

namespace dessin {

std::string Passport::to_string() const {
    auto list = [](const std::vector<int>& v) {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ' ';
            os << v[i];
        }
        os << ']';
        return os.str();
    };
    std::ostringstream os;
    os << "black " << list(black_degrees) << " white " << list(white_degrees) << " faces "
       << list(face_degrees) << " genus " << genus;
    return os.str();
}

bool operator<(const Passport& a, const Passport& b) {
    if (a.black_degrees != b.black_degrees) return a.black_degrees < b.black_degrees;
    if (a.white_degrees != b.white_degrees) return a.white_degrees < b.white_degrees;
    if (a.face_degrees != b.face_degrees) return a.face_degrees < b.face_degrees;
    return a.genus < b.genus;
}

Dessin::Dessin(Permutation sigma, Permutation alpha)
    : sigma_(std::move(sigma)),
      alpha_(std::move(alpha)),
      phi_(compose(sigma_, alpha_).inverse()) {
    if (sigma_.degree() != alpha_.degree()) throw Error("degree mismatch between sigma and alpha");
    if (!acts_transitively(sigma_, alpha_)) throw NotTransitiveError();
}

Passport Dessin::passport() const {
    Passport p;
    p.black_degrees = sigma_.cycle_type();
    p.white_degrees = alpha_.cycle_type();
    p.face_degrees = phi_.cycle_type();
    const int cycles = static_cast<int>(p.black_degrees.size() + p.white_degrees.size() +
                                        p.face_degrees.size());
    const int euler = cycles - size();
    p.genus = (2 - euler) / 2;
    return p;
}

Dessin dual(const Dessin& d) { return Dessin(d.phi().inverse(), d.alpha().inverse()); }

Dessin mirror(const Dessin& d) { return Dessin(d.sigma().inverse(), d.alpha().inverse()); }

Dessin oriented_dual(const Dessin& d) { return mirror(dual(d)); }

// Transitivity forces an isomorphism once one label's image is chosen, so try
// each image of label 1 and propagate along sigma/alpha.
bool is_isomorphic(const Dessin& a, const Dessin& b) {
    if (a.size() != b.size()) return false;
    if (!(a.passport() == b.passport())) return false;
    const int n = a.size();
    for (int c = 1; c <= n; ++c) {
        std::vector<int> g(n + 1, 0);
        g[1] = c;
        std::vector<int> stack{1};
        bool ok = true;
        while (ok && !stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            const std::pair<int, int> steps[2] = {
                {a.sigma().apply(i), b.sigma().apply(g[i])},
                {a.alpha().apply(i), b.alpha().apply(g[i])}};
            for (const auto& [from, to] : steps) {
                if (g[from] == 0) {
                    g[from] = to;
                    stack.push_back(from);
                } else if (g[from] != to) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> hit(n + 1, 0);
        for (int i = 1; i <= n && ok; ++i) {
            if (g[i] == 0 || hit[g[i]]) ok = false;
            else hit[g[i]] = 1;
        }
        for (int i = 1; i <= n && ok; ++i) {
            if (g[a.sigma().apply(i)] != b.sigma().apply(g[i])) ok = false;
            if (g[a.alpha().apply(i)] != b.alpha().apply(g[i])) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

Dessin canonical_form(const Dessin& d) {
    const int n = d.size();
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 1);
    std::vector<int> best_s = d.sigma().image(), best_a = d.alpha().image();
    do {
        const Permutation gp = Permutation::from_image(g);
        const Permutation cs = conjugate(d.sigma(), gp);
        if (cs.image() > best_s) continue;
        const Permutation ca = conjugate(d.alpha(), gp);
        if (cs.image() < best_s || ca.image() < best_a) {
            best_s = cs.image();
            best_a = ca.image();
        }
    } while (std::next_permutation(g.begin(), g.end()));
    return Dessin(Permutation::from_image(best_s), Permutation::from_image(best_a));
}

Dessin nakayama(int n) {
    if (n < 2) throw Error("nakayama requires n >= 2");
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    return Dessin(Permutation::from_cycles(n, {full}), Permutation(n));
}

Dessin polygon(int n) {
    if (n < 3) throw Error("polygon requires n >= 3");
    std::vector<std::vector<int>> sides, corners;
    for (int i = 0; i < n; ++i) {
        sides.push_back({2 * i + 1, 2 * i + 2});
        corners.push_back({2 * i + 2, (2 * i + 2) % (2 * n) + 1});
    }
    return Dessin(Permutation::from_cycles(2 * n, sides), Permutation::from_cycles(2 * n, corners));
}

Dessin star(int n) {
    if (n < 1) throw Error("star requires n >= 1");
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    return Dessin(Permutation(n), Permutation::from_cycles(n, {full}));
}

Dessin demo11() {
    return Dessin(Permutation::from_cycles(11, {{1, 2, 3, 4, 5}, {6, 7}, {8, 9}}),
                  Permutation::from_cycles(11, {{2, 10, 11}, {3, 6, 9}, {4, 5}, {7, 8}}));
}

Dessin demo12() {
    return Dessin(Permutation::from_cycles(12, {{1, 2, 3, 4, 5}, {6, 7}, {8, 9}}),
                  Permutation::from_cycles(12, {{1, 12}, {2, 10, 11}, {3, 6, 9}, {4, 5}, {7, 8}}));
}

} // namespace dessin
