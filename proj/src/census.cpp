#include "dessin/census.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "dessin/error.hpp"
#include "dessin/quiver.hpp"

namespace dessin {

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "q0=" << q0 << " q1=" << q1 << " classes=" << sigma_class_count << " lengths=[";
    for (size_t i = 0; i < sigma_class_lengths.size(); ++i) {
        if (i) os << ' ';
        os << sigma_class_lengths[i];
    }
    os << "] dim=" << dim_algebra << " centre=" << dim_centre_formula
       << " loops=" << loop_count;
    return os.str();
}

Fingerprint fingerprint(const Dessin& d) {
    Fingerprint f;
    f.q0 = static_cast<int>(d.alpha().cycles().size());
    for (const auto& c : d.sigma().cycles()) {
        const int len = static_cast<int>(c.size());
        if (len >= 2) {
            f.q1 += len;
            ++f.sigma_class_count;
            f.sigma_class_lengths.push_back(len);
        }
    }
    std::sort(f.sigma_class_lengths.rbegin(), f.sigma_class_lengths.rend());
    f.dim_algebra = dimension_formula(d);
    f.dim_centre_formula = centre_dimension_formula(d);
    for (const auto& a : restricted_quiver(d).arrows)
        if (a.source == a.target) ++f.loop_count;
    return f;
}

namespace {

// Images of sigma and alpha packed into one 64-bit key, 3 bits per entry,
// sigma in the high bits: numeric order of keys is lexicographic order of the
// (sigma.image, alpha.image) pair, so the orbit minimum is the canonical form.
uint64_t pack_pair(const std::vector<int>& s, const std::vector<int>& a) {
    uint64_t key = 0;
    for (int x : s) key = (key << 3) | static_cast<uint64_t>(x);
    for (int x : a) key = (key << 3) | static_cast<uint64_t>(x);
    return key;
}

std::pair<std::vector<int>, std::vector<int>> unpack_pair(uint64_t key, int n) {
    std::vector<int> s(n), a(n);
    for (int i = n - 1; i >= 0; --i) {
        a[i] = static_cast<int>(key & 7);
        key >>= 3;
    }
    for (int i = n - 1; i >= 0; --i) {
        s[i] = static_cast<int>(key & 7);
        key >>= 3;
    }
    return {std::move(s), std::move(a)};
}

bool transitive_images(const std::vector<int>& s, const std::vector<int>& a) {
    const int n = static_cast<int>(s.size());
    unsigned seen = 1u << 1;
    int stack[8];
    int top = 0;
    stack[top++] = 1;
    int count = 1;
    while (top) {
        const int i = stack[--top];
        for (int j : {s[i - 1], a[i - 1]}) {
            if (!(seen & (1u << j))) {
                seen |= 1u << j;
                ++count;
                stack[top++] = j;
            }
        }
    }
    return count == n;
}

void conjugate_images(const std::vector<int>& p, const std::vector<int>& g, std::vector<int>& out) {
    const int n = static_cast<int>(p.size());
    for (int j = 0; j < n; ++j) out[g[j] - 1] = g[p[j] - 1];
}

std::vector<std::vector<int>> all_images(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

std::vector<Dessin> enumerate_dessins(int n, int threads) {
    if (n < 1 || n > 7) throw Error("n out of range: enumeration supports 1 <= n <= 7");
    if (threads < 1) threads = 1;
    const auto perms = all_images(n);
    const size_t total = perms.size();
    threads = std::min<int>(threads, static_cast<int>(total));

    std::vector<std::set<uint64_t>> worker_reps(threads);
    auto work = [&](int t) {
        std::unordered_set<uint64_t> seen;
        std::vector<int> cs(n), ca(n);
        auto& reps = worker_reps[t];
        const size_t begin = total * t / threads, end = total * (t + 1) / threads;
        for (size_t si = begin; si < end; ++si) {
            for (size_t ai = 0; ai < total; ++ai) {
                if (seen.count(pack_pair(perms[si], perms[ai]))) continue;
                if (!transitive_images(perms[si], perms[ai])) continue;
                uint64_t best = ~0ull;
                for (const auto& g : perms) {
                    conjugate_images(perms[si], g, cs);
                    conjugate_images(perms[ai], g, ca);
                    const uint64_t key = pack_pair(cs, ca);
                    seen.insert(key);
                    best = std::min(best, key);
                }
                reps.insert(best);
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::set<uint64_t> merged;
    for (const auto& reps : worker_reps) merged.insert(reps.begin(), reps.end());
    std::vector<Dessin> out;
    out.reserve(merged.size());
    for (uint64_t key : merged) {
        auto [s, a] = unpack_pair(key, n);
        out.emplace_back(Permutation::from_image(std::move(s)),
                         Permutation::from_image(std::move(a)));
    }
    return out;
}

std::map<Passport, std::vector<Dessin>> group_by_passport(const std::vector<Dessin>& corpus) {
    std::map<Passport, std::vector<Dessin>> groups;
    for (const auto& d : corpus) groups[d.passport()].push_back(d);
    return groups;
}

std::string CorpusReport::summary() const {
    std::ostringstream os;
    os << "n=" << n << ": " << dessin_count << " dessins, " << passport_groups
       << " passport groups, " << checks_passed << " checks passed, " << checks_failed
       << " failed; centre mismatches: " << centre_mismatches.size();
    if (centre_oracle_skipped) os << " (oracle skipped for " << centre_oracle_skipped << ")";
    if (loop_count_varying_groups)
        os << "; loop_count varies within " << loop_count_varying_groups << " passport groups";
    return os.str();
}

namespace {

struct Checker {
    CorpusReport& report;
    std::string label;

    void operator()(bool ok, const std::string& what) {
        if (ok) {
            ++report.checks_passed;
        } else {
            ++report.checks_failed;
            report.failures.push_back(label + ": " + what);
        }
    }
};

// multiply out a sequence of arrow labels; nullopt is zero
std::optional<BasisElement> evaluate_path(const Algebra& alg, const std::vector<int>& labels) {
    std::optional<BasisElement> acc;
    for (int label : labels) {
        const Arrow* arrow = alg.quiver().arrow_by_label(label);
        if (!arrow) return std::nullopt;
        const BasisElement step = BasisElement::proper_path(arrow->black_vertex, arrow->position, 1);
        if (!acc) acc = step;
        else acc = alg.multiply(*acc, step);
        if (!acc) return std::nullopt;
    }
    return acc;
}

// products of a one-coefficient sum with g, as a sorted index multiset
std::vector<int> sum_times(const Algebra& alg, const BasisSum& sum, const BasisElement& g,
                           bool on_left) {
    std::vector<int> out;
    for (const auto& x : sum) {
        const auto r = on_left ? alg.multiply(g, x) : alg.multiply(x, g);
        if (r) out.push_back(alg.index_of(*r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_dessin(const Dessin& d, int centre_bound, CorpusReport& report) {
    Checker check{report, d.sigma().to_cycle_string() + " / " + d.alpha().to_cycle_string()};
    const int n = d.size();

    // triple validity
    check(compose(compose(d.sigma(), d.alpha()), d.phi()).is_identity(),
          "sigma*alpha*phi is not the identity");
    check(acts_transitively(d.sigma(), d.alpha()), "pair is not transitive");

    const Quiver full = full_quiver(d);

    // face decomposition: partition, sizes, closed walks
    {
        const auto faces = face_cycle_decomposition(d);
        std::vector<int> labels;
        std::vector<int> sizes;
        for (const auto& f : faces) {
            labels.insert(labels.end(), f.begin(), f.end());
            sizes.push_back(static_cast<int>(f.size()));
        }
        std::sort(labels.begin(), labels.end());
        std::vector<int> expect(n);
        std::iota(expect.begin(), expect.end(), 1);
        check(labels == expect, "face classes do not partition the half-edges");
        std::sort(sizes.rbegin(), sizes.rend());
        check(sizes == d.passport().face_degrees, "face class sizes differ from face degrees");
        const Permutation phi_inv = d.phi().inverse();
        bool chained = true;
        for (int i = 1; i <= n; ++i) {
            const Arrow* cur = full.arrow_by_label(i);
            const Arrow* prev = full.arrow_by_label(phi_inv.apply(i));
            if (cur->target != prev->source) chained = false;
        }
        check(chained, "face walk does not chain along arrows");
    }

    // polygonal faces give closed type-three walks
    const Algebra alg(d);
    {
        std::set<std::pair<int, int>> type_three;
        for (const auto& r : alg.relations())
            if (r.kind == RelationType::TypeThree) type_three.insert({r.monomial[0], r.monomial[1]});
        bool ok = true;
        for (const auto& path : polygonal_face_paths(d))
            for (size_t i = 0; i < path.size(); ++i)
                if (!type_three.count({path[i], path[(i + 1) % path.size()]})) ok = false;
        check(ok, "polygonal face walk has a non-type-three pair");
    }

    // duality, labelled and oriented forms
    check(quiver_equal(full_quiver(dual(d)), full, QuiverComparison::Labelled),
          "dual quiver differs from the original (labelled)");
    {
        const Quiver od = full_quiver(oriented_dual(d));
        const Quiver opp = opposite(full);
        check(quiver_equal(od, opp, QuiverComparison::Unlabelled),
              "oriented dual is not the opposite quiver (unlabelled)");
        const Permutation sigma_alpha = compose(d.sigma(), d.alpha());
        bool bijection = true;
        for (const auto& a : opp.arrows) {
            const Arrow* image = od.arrow_by_label(sigma_alpha.apply(a.half_edge));
            if (!image || image->source != a.source || image->target != a.target)
                bijection = false;
        }
        check(bijection, "arrow bijection i -> i^(sigma alpha) fails");
    }

    // basis vs dimension formula
    check(alg.dim() == dimension_formula(d), "basis count differs from the dimension formula");

    // relation evaluation under the product
    {
        bool ok = true;
        for (const auto& r : alg.relations()) {
            if (r.kind == RelationType::TypeOne) {
                const auto lhs = evaluate_path(alg, r.cycle_a.arrows);
                const auto rhs = evaluate_path(alg, r.cycle_b.arrows);
                if (!lhs || !rhs || !(*lhs == *rhs)) ok = false;
            } else {
                if (evaluate_path(alg, r.monomial)) ok = false;
            }
        }
        check(ok, "a relation does not evaluate correctly");
    }

    // the identity and the socles are central
    {
        bool central = true;
        std::vector<BasisElement> generators;
        for (int v = 0; v < alg.quiver().vertex_count(); ++v)
            generators.push_back(BasisElement::trivial(v));
        for (const auto& a : alg.arrow_elements()) generators.push_back(a);
        for (const auto& sum : centre_basis_formula(d)) {
            if (sum.size() == 1 && sum[0].kind == BasisElement::Kind::ProperPath)
                continue; // loop arrows are reported via the oracle, not asserted
            for (const auto& g : generators)
                if (sum_times(alg, sum, g, false) != sum_times(alg, sum, g, true)) central = false;
        }
        check(central, "identity or a socle fails to commute");
    }

    // brute-force centre vs the formula
    if (alg.dim() <= centre_bound) {
        const CentreResult oracle = centre_bruteforce(alg, centre_bound);
        check(oracle.dim >= 1 + alg.quiver().vertex_count(),
              "centre lower bound 1 + |Q0| violated");
        if (oracle.dim != centre_dimension_formula(d)) {
            report.centre_mismatches.push_back(
                check.label + ": formula " + std::to_string(centre_dimension_formula(d)) +
                " vs oracle " + std::to_string(oracle.dim));
        }
    } else {
        ++report.centre_oracle_skipped;
    }
}

} // namespace

CorpusReport verify_corpus_of(const std::vector<Dessin>& corpus, int n, int centre_bound) {
    CorpusReport report;
    report.n = n;
    report.dessin_count = static_cast<int>(corpus.size());
    for (const auto& d : corpus) check_dessin(d, centre_bound, report);

    const auto groups = group_by_passport(corpus);
    report.passport_groups = static_cast<int>(groups.size());
    Checker check{report, "passport groups"};
    for (const auto& [passport, members] : groups) {
        const Fingerprint first = fingerprint(members.front());
        bool degree_fields_constant = true, loops_constant = true;
        for (const auto& d : members) {
            const Fingerprint f = fingerprint(d);
            if (f.q0 != first.q0 || f.q1 != first.q1 ||
                f.sigma_class_count != first.sigma_class_count ||
                f.sigma_class_lengths != first.sigma_class_lengths ||
                f.dim_algebra != first.dim_algebra)
                degree_fields_constant = false;
            if (f.loop_count != first.loop_count) loops_constant = false;
        }
        check(degree_fields_constant,
              "degree-determined fingerprint fields vary within passport " + passport.to_string());
        if (!loops_constant) ++report.loop_count_varying_groups;
    }
    return report;
}

CorpusReport verify_corpus(int n, int threads, int centre_bound) {
    return verify_corpus_of(enumerate_dessins(n, threads), n, centre_bound);
}

} // namespace dessin
