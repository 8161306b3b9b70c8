#ifndef DESSIN_DESSIN_HPP
#define DESSIN_DESSIN_HPP

#include <string>
#include <vector>

#include "dessin/permutation.hpp"

namespace dessin {

struct Passport {
    std::vector<int> black_degrees; // descending
    std::vector<int> white_degrees; // descending
    std::vector<int> face_degrees;  // descending
    int genus = 0;

    std::string to_string() const;
    friend bool operator==(const Passport& a, const Passport& b) {
        return a.black_degrees == b.black_degrees && a.white_degrees == b.white_degrees &&
               a.face_degrees == b.face_degrees && a.genus == b.genus;
    }
    friend bool operator<(const Passport& a, const Passport& b);
};

// A transitive pair (sigma, alpha) on {1..n}; phi is always derived so that
// sigma * alpha * phi = id under the project's right-action composition.
class Dessin {
public:
    Dessin(Permutation sigma, Permutation alpha);

    int size() const { return sigma_.degree(); }
    const Permutation& sigma() const { return sigma_; }
    const Permutation& alpha() const { return alpha_; }
    const Permutation& phi() const { return phi_; }

    Passport passport() const;

    friend bool operator==(const Dessin& a, const Dessin& b) {
        return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_;
    }
    friend bool operator!=(const Dessin& a, const Dessin& b) { return !(a == b); }
    friend bool operator<(const Dessin& a, const Dessin& b) {
        if (a.sigma_ != b.sigma_) return a.sigma_ < b.sigma_;
        return a.alpha_ < b.alpha_;
    }

private:
    Permutation sigma_, alpha_, phi_;
};

Dessin dual(const Dessin& d);          // (phi^-1, alpha^-1, sigma^-1); an involution
Dessin mirror(const Dessin& d);        // (sigma^-1, alpha^-1, alpha*sigma); an involution
Dessin oriented_dual(const Dessin& d); // mirror(dual(d)); not an involution

bool is_isomorphic(const Dessin& a, const Dessin& b);

// Lexicographically least (sigma.image, alpha.image) over all simultaneous
// relabellings. Brute force over all n! conjugators — intended for small n.
Dessin canonical_form(const Dessin& d);

// Named families and bundled demo dessins.
Dessin nakayama(int n); // ((1..n), id), n >= 2
Dessin polygon(int n);  // 2n half-edges around an n-gon, n >= 3
Dessin star(int n);     // (id, (1..n)), n >= 1
Dessin demo11();        // 11 half-edges, five black vertices, genus 0
Dessin demo12();        // demo11 plus an extra half-edge at the first white vertex

} // namespace dessin

#endif
