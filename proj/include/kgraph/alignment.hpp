#ifndef KGRAPH_ALIGNMENT_HPP
#define KGRAPH_ALIGNMENT_HPP

#include <kgraph/path.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace kgraph {

// Minimal common extensions of a pair: the paths of degree d(mu) v d(nu)
// extending both. Empty whenever the sources differ.
struct MceSet {
    Path mu;
    Path nu;
    std::vector<Path> extensions;  // sorted, duplicate-free
};

// A finite path set together with its closure under minimal common
// extensions of nonempty subsets.
struct VeeClosure {
    std::vector<Path> base;     // sorted, duplicate-free
    std::vector<Path> closure;  // sorted; contains base
    bool contains(const Path& p) const;
};

// Prefix-constrained depth-first extension: grow candidates one edge at a
// time in normal-form color order, pruning any partial gamma with
// gamma(0, d v d(mu)) != mu(0, d v d(mu)) (v = meet) or likewise for nu.
MceSet mce(const Path& mu, const Path& nu);

// All paths of degree join_{a in G} d(a) extending every member of G,
// computed by folding pairwise mce over G.
std::vector<Path> mce_family(const std::vector<Path>& G);

// Union of mce_family(G) over nonempty G subset of F.
VeeClosure vee(const std::vector<Path>& F);

struct AlignmentReport {
    // Over single-edge pairs of distinct colors with a common source.
    int max_generator_mce = 0;
    std::vector<std::pair<Path, Path>> generator_argmax;
    // Over all path pairs with degrees componentwise <= bound.
    int max_bounded_mce = 0;
    std::vector<std::pair<Path, Path>> bounded_argmax;
    Degree bound;
    // Finite skeletons are always finitely aligned; the maxima above are
    // how growth under fixture truncation is surfaced.
    bool finitely_aligned = true;
};

// argmax lists are capped at `argmax_cap` pairs each.
AlignmentReport is_finitely_aligned(const Skeleton& sk, const Degree& bound,
                                    std::size_t argmax_cap = 8);

// The symbolic composition rule for a product of two rank-one operators:
// pairs (mu1 . sigma(p, p v q), nu2 . sigma(q, p v q)) over
// sigma in mce(mu2, nu1). Terms whose endpoints mismatch are dropped.
// Requires d(mu1) = d(mu2) and d(nu1) = d(nu2).
std::vector<std::pair<Path, Path>> compose_rank_one(const Path& mu1, const Path& mu2,
                                                    const Path& nu1, const Path& nu2);

// Searches for a path mu of degree (1,...,1) from v with
// mu(0, e_m) not in avoid[m-1] for every color m; backtracking over the
// inductive construction, one color per step. The prefix conditions are
// exactly the MCE obstructions: mu(0, e_m) in G_m iff mu extends some
// member of G_m. Returns nothing when the finite skeleton has no witness;
// that is a normal outcome, not an error.
std::optional<Path> find_avoiding_path(const Skeleton& sk, int vertex,
                                       const std::vector<std::vector<int>>& avoid);

}  // namespace kgraph

#endif
