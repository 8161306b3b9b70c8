#include "dessin/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "dessin/error.hpp"

namespace dessin {

Permutation::Permutation(int n) {
    if (n < 1) throw Error("permutation degree must be positive");
    image_.resize(n);
    for (int i = 0; i < n; ++i) image_[i] = i + 1;
}

Permutation Permutation::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    if (n < 1) throw Error("permutation degree must be positive");
    std::vector<char> seen(n + 1, 0);
    for (int x : image) {
        if (x < 1 || x > n) throw Error("image entry out of range: " + std::to_string(x));
        if (seen[x]) throw Error("image is not a bijection: " + std::to_string(x) + " repeats");
        seen[x] = 1;
    }
    Permutation p(n);
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p(n);
    std::vector<char> seen(n + 1, 0);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            const int x = c[i];
            if (x < 1 || x > n) throw Error("label out of range: " + std::to_string(x));
            if (seen[x]) throw Error("repeated label: " + std::to_string(x));
            seen[x] = 1;
            p.image_[x - 1] = c[(i + 1) % c.size()];
        }
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation r(degree());
    for (int i = 1; i <= degree(); ++i) r.image_[image_[i - 1] - 1] = i;
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (image_[i] != i + 1) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = degree();
    std::vector<char> seen(n + 1, 0);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        std::vector<int> c{i};
        seen[i] = 1;
        for (int j = apply(i); j != i; j = apply(j)) {
            c.push_back(j);
            seen[j] = 1;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return any ? os.str() : "id";
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("degree mismatch in composition");
    std::vector<int> img(p.degree());
    for (int i = 1; i <= p.degree(); ++i) img[i - 1] = q.apply(p.apply(i));
    return Permutation::from_image(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    if (p.degree() != g.degree()) throw Error("degree mismatch in conjugation");
    std::vector<int> img(p.degree());
    for (int j = 1; j <= p.degree(); ++j) img[g.apply(j) - 1] = g.apply(p.apply(j));
    return Permutation::from_image(std::move(img));
}

bool acts_transitively(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("degree mismatch in transitivity check");
    const int n = p.degree();
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j : {p.apply(i), q.apply(i)}) {
            if (!seen[j]) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == n;
}

} // namespace dessin
