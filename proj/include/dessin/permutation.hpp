#ifndef DESSIN_PERMUTATION_HPP
#define DESSIN_PERMUTATION_HPP

#include <string>
#include <vector>

namespace dessin {

// Permutation of {1..n}. Composition is a right action throughout the project:
// apply(compose(p, q), i) == apply(q, apply(p, i)), i.e. p acts first.
class Permutation {
public:
    explicit Permutation(int n); // identity
    static Permutation from_image(std::vector<int> image);
    // Cycles need not mention fixed points; labels must be in 1..n and disjoint.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(image_.size()); }
    int apply(int i) const { return image_[i - 1]; }
    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const;
    bool is_identity() const;

    // Cycles sorted by their minimum label, each rotated to start at it;
    // fixed points appear as length-1 cycles.
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> cycle_type() const; // lengths, descending

    // Cycle notation with fixed points omitted; "id" for the identity.
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.image_ < b.image_;
    }

private:
    std::vector<int> image_;
};

// p then q.
Permutation compose(const Permutation& p, const Permutation& q);

// g^{-1} p g: the relabelling of p under g (conjugate(p,g).apply(g(i)) == g(p(i))).
Permutation conjugate(const Permutation& p, const Permutation& g);

// Does the group generated by {p, q} have a single orbit on {1..n}?
bool acts_transitively(const Permutation& p, const Permutation& q);

} // namespace dessin

#endif
