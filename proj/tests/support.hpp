#ifndef KGRAPH_TEST_SUPPORT_HPP
#define KGRAPH_TEST_SUPPORT_HPP

// Independent oracles for the property suites. Everything here recomputes
// results from definitions (exhaustive enumeration, all-orders rewriting)
// and must stay independent of the production code paths it checks.

#include <kgraph/algebra.hpp>
#include <kgraph/fixtures.hpp>
#include <kgraph/fock.hpp>
#include <kgraph/rng.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace kgraph::testing {

// MCE by definition: enumerate every path of degree d(mu) v d(nu) from the
// common source and keep those extending both.
inline std::vector<Path> brute_force_mce(const Path& mu, const Path& nu) {
    std::vector<Path> out;
    if (mu.source() != nu.source()) return out;
    for (const Path& g : enumerate_paths(mu.skeleton(), mu.degree().join(nu.degree()), mu.source()))
        if (has_prefix(g, mu) && has_prefix(g, nu)) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Path> brute_force_mce_family(const std::vector<Path>& G) {
    std::vector<Path> out;
    Degree join = G.front().degree();
    for (const Path& a : G) join = join.join(a.degree());
    for (const Path& g : enumerate_paths(G.front().skeleton(), join, G.front().source())) {
        bool all = true;
        for (const Path& a : G)
            if (!has_prefix(g, a)) { all = false; break; }
        if (all) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Path> brute_force_vee(const std::vector<Path>& F) {
    std::vector<Path> base = F;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    std::set<Path> closure;
    for (std::size_t mask = 1; mask < (1u << base.size()); ++mask) {
        std::vector<Path> subset;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (mask & (1u << i)) subset.push_back(base[i]);
        for (const Path& p : brute_force_mce_family(subset)) closure.insert(p);
    }
    return {closure.begin(), closure.end()};
}

// Applies square rewrites in every possible order and collects every
// color-sorted word reachable from the given edge sequence.
inline std::set<std::vector<int>> all_rewrite_normal_forms(const Skeleton& sk,
                                                           const std::vector<int>& start) {
    std::set<std::vector<int>> seen, sorted;
    std::vector<std::vector<int>> frontier{start};
    seen.insert(start);
    auto is_sorted = [&](const std::vector<int>& w) {
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            if (sk.edge(w[t]).color > sk.edge(w[t + 1]).color) return false;
        return true;
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            if (is_sorted(w)) sorted.insert(w);
            for (std::size_t t = 0; t + 1 < w.size(); ++t) {
                if (sk.edge(w[t]).color == sk.edge(w[t + 1]).color) continue;
                auto [a, b] = sk.swap_adjacent(w[t], w[t + 1]);
                std::vector<int> v = w;
                v[t] = a;
                v[t + 1] = b;
                if (seen.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return sorted;
}

// Every edge sequence realizing p with the target color word, found by
// exploring all swap schedules. Schedule independence means the result
// has exactly one element.
inline std::set<std::vector<int>> all_refactorings(const Path& p, const std::vector<int>& word) {
    const Skeleton& sk = p.skeleton();
    std::set<std::vector<int>> seen, matching;
    std::vector<std::vector<int>> frontier{p.edges()};
    seen.insert(p.edges());
    auto matches = [&](const std::vector<int>& w) {
        for (std::size_t t = 0; t < w.size(); ++t)
            if (sk.edge(w[t]).color != word[t]) return false;
        return true;
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            if (matches(w)) matching.insert(w);
            for (std::size_t t = 0; t + 1 < w.size(); ++t) {
                if (sk.edge(w[t]).color == sk.edge(w[t + 1]).color) continue;
                auto [a, b] = sk.swap_adjacent(w[t], w[t + 1]);
                std::vector<int> v = w;
                v[t] = a;
                v[t + 1] = b;
                if (seen.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return matching;
}

inline Path random_path(Rng& rng, const std::vector<Path>& pool) { return rng.pick(pool); }

// Random element with small integer coefficients supported on the pool.
inline FormalElement random_element(Rng& rng, const std::vector<Path>& pool, int max_terms) {
    FormalElement out;
    int want = rng.in_range(1, max_terms);
    for (int t = 0; t < want; ++t) {
        const Path& l = rng.pick(pool);
        std::vector<Path> partners;
        for (const Path& r : pool)
            if (r.range() == l.range()) partners.push_back(r);
        if (partners.empty()) continue;
        const Path& r = rng.pick(partners);
        int coeff = rng.in_range(-3, 3);
        if (coeff == 0) coeff = 1;
        out.accumulate(Term(l, r), Rational(coeff));
    }
    return out;
}

// Sampled source-closed family for the partition suites.
inline std::vector<Path> random_admissible_family(Rng& rng, const Skeleton& sk,
                                                  const std::vector<Path>& pool, int max_paths) {
    std::set<Path> family;
    int want = rng.in_range(1, max_paths);
    for (int i = 0; i < want; ++i) {
        const Path& p = rng.pick(pool);
        family.insert(p);
        family.insert(Path::at_vertex(sk, p.source()));
    }
    return {family.begin(), family.end()};
}

}  // namespace kgraph::testing

#endif
