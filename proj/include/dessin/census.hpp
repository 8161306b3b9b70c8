#ifndef DESSIN_CENSUS_HPP
#define DESSIN_CENSUS_HPP

#include <map>
#include <string>
#include <vector>

#include "dessin/algebra.hpp"
#include "dessin/dessin.hpp"

namespace dessin {

struct Fingerprint {
    int q0 = 0;                           // white vertices
    int q1 = 0;                           // non-formal arrows
    int sigma_class_count = 0;            // black vertices of degree >= 2
    std::vector<int> sigma_class_lengths; // their degrees, descending
    int dim_algebra = 0;
    int dim_centre_formula = 0;
    int loop_count = 0; // non-formal loops; not determined by the passport

    std::string to_string() const;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.q0 == b.q0 && a.q1 == b.q1 && a.sigma_class_count == b.sigma_class_count &&
               a.sigma_class_lengths == b.sigma_class_lengths &&
               a.dim_algebra == b.dim_algebra && a.dim_centre_formula == b.dim_centre_formula &&
               a.loop_count == b.loop_count;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

Fingerprint fingerprint(const Dessin& d);

// All isomorphism classes of transitive pairs on {1..n}, as canonical
// representatives in ascending order. Iterates every pair and dedupes by
// marking whole conjugation orbits; workers split the sigma range and results
// are merged, so the output does not depend on the thread count.
std::vector<Dessin> enumerate_dessins(int n, int threads = 1);

std::map<Passport, std::vector<Dessin>> group_by_passport(const std::vector<Dessin>& corpus);

struct CorpusReport {
    int n = 0;
    int dessin_count = 0;
    int passport_groups = 0;
    int checks_passed = 0;
    int checks_failed = 0;
    std::vector<std::string> failures;
    // Formula-vs-oracle centre disagreements are surfaced, not failed.
    std::vector<std::string> centre_mismatches;
    int centre_oracle_skipped = 0;     // dessins over the dimension bound
    int loop_count_varying_groups = 0; // statistic only

    bool all_passed() const { return checks_failed == 0; }
    std::string summary() const;
};

// Runs every structural check over the exhaustive corpus for this n:
// validation, face decomposition, both duality statements, basis counts,
// relation evaluation, centrality of the closed-form central elements, and
// the brute-force centre against the formula; then passport-level constancy
// of the degree-determined fingerprint fields.
CorpusReport verify_corpus(int n, int threads = 1, int centre_bound = kDefaultCentreBound);
CorpusReport verify_corpus_of(const std::vector<Dessin>& corpus, int n,
                              int centre_bound = kDefaultCentreBound);

} // namespace dessin

#endif
