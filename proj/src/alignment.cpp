#include <kgraph/alignment.hpp>

#include <kgraph/parallel.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace kgraph {

namespace {

void sort_unique(std::vector<Path>& paths) {
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
}

bool agrees_on_meet(const Path& partial, const Path& target) {
    Degree m = partial.degree().meet(target.degree());
    const Degree zero = partial.skeleton().zero_degree();
    return segment(partial, zero, m) == segment(target, zero, m);
}

}  // namespace

bool VeeClosure::contains(const Path& p) const {
    return std::binary_search(closure.begin(), closure.end(), p);
}

MceSet mce(const Path& mu, const Path& nu) {
    if (&mu.skeleton() != &nu.skeleton())
        throw std::invalid_argument("mce across different skeletons");
    const Skeleton& sk = mu.skeleton();
    MceSet out{mu, nu, {}};
    if (mu.source() != nu.source()) return out;

    const Degree target = mu.degree().join(nu.degree());
    std::vector<int> seq;

    std::function<void(int, int, int)> extend = [&](int vertex, int color, int used) {
        while (color <= sk.k() && used == target[static_cast<std::size_t>(color - 1)]) {
            ++color;
            used = 0;
        }
        Path partial = seq.empty() ? Path::at_vertex(sk, mu.source()) : Path::from_edges(sk, seq);
        if (!agrees_on_meet(partial, mu) || !agrees_on_meet(partial, nu)) return;
        if (color > sk.k()) {
            out.extensions.push_back(std::move(partial));
            return;
        }
        for (int e : sk.edges_by_color_source(color, vertex)) {
            seq.push_back(e);
            extend(sk.edge(e).range, color, used + 1);
            seq.pop_back();
        }
    };
    extend(mu.source(), 1, 0);
    sort_unique(out.extensions);
    return out;
}

std::vector<Path> mce_family(const std::vector<Path>& G) {
    if (G.empty()) throw std::invalid_argument("mce_family of an empty set");
    // Fold pairwise: every minimal common extension of G extends one of
    // MCE(G \ {a}) by the last element, and conversely every such
    // extension already satisfies all the prefix constraints.
    std::vector<Path> acc{G.front()};
    for (std::size_t i = 1; i < G.size(); ++i) {
        std::vector<Path> next;
        for (const Path& m : acc) {
            auto step = mce(m, G[i]);
            next.insert(next.end(), step.extensions.begin(), step.extensions.end());
        }
        sort_unique(next);
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

VeeClosure vee(const std::vector<Path>& F) {
    if (F.empty()) throw std::invalid_argument("vee of an empty set");
    VeeClosure out;
    out.base = F;
    sort_unique(out.base);
    const std::size_t n = out.base.size();
    if (n > 20) throw std::invalid_argument("vee over more than 20 paths");
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Path> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(out.base[i]);
        auto exts = mce_family(subset);
        out.closure.insert(out.closure.end(), exts.begin(), exts.end());
    }
    sort_unique(out.closure);
    return out;
}

AlignmentReport is_finitely_aligned(const Skeleton& sk, const Degree& bound,
                                    std::size_t argmax_cap) {
    AlignmentReport report;
    report.bound = bound;

    auto scan = [&](const std::vector<std::pair<Path, Path>>& pairs, int& best,
                    std::vector<std::pair<Path, Path>>& argmax) {
        std::vector<int> sizes(pairs.size(), 0);
        parallel_for(pairs.size(), [&](std::size_t i) {
            sizes[i] = static_cast<int>(mce(pairs[i].first, pairs[i].second).extensions.size());
        });
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (sizes[i] > best) {
                best = sizes[i];
                argmax.clear();
            }
            if (sizes[i] == best && best > 0 && argmax.size() < argmax_cap)
                argmax.push_back(pairs[i]);
        }
    };

    std::vector<std::pair<Path, Path>> generator_pairs;
    for (int ci = 1; ci <= sk.k(); ++ci) {
        for (int cj = ci + 1; cj <= sk.k(); ++cj) {
            for (int v = 0; v < static_cast<int>(sk.vertex_count()); ++v) {
                for (int e1 : sk.edges_by_color_source(ci, v))
                    for (int e2 : sk.edges_by_color_source(cj, v))
                        generator_pairs.emplace_back(Path::of_edge(sk, e1), Path::of_edge(sk, e2));
            }
        }
    }
    scan(generator_pairs, report.max_generator_mce, report.generator_argmax);

    auto all = enumerate_paths_up_to(sk, bound);
    std::vector<std::pair<Path, Path>> bounded_pairs;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
            if (all[i].source() == all[j].source())
                bounded_pairs.emplace_back(all[i], all[j]);
    scan(bounded_pairs, report.max_bounded_mce, report.bounded_argmax);

    return report;
}

std::vector<std::pair<Path, Path>> compose_rank_one(const Path& mu1, const Path& mu2,
                                                    const Path& nu1, const Path& nu2) {
    if (mu1.degree() != mu2.degree() || nu1.degree() != nu2.degree())
        throw std::invalid_argument("compose_rank_one needs d(mu1)=d(mu2) and d(nu1)=d(nu2)");
    const Degree p = mu1.degree();
    const Degree q = nu1.degree();
    const Degree top = p.join(q);

    std::vector<std::pair<Path, Path>> out;
    for (const Path& sigma : mce(mu2, nu1).extensions) {
        auto left = compose(mu1, segment(sigma, p, top));
        auto right = compose(nu2, segment(sigma, q, top));
        if (left && right) out.emplace_back(std::move(*left), std::move(*right));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Path> find_avoiding_path(const Skeleton& sk, int vertex,
                                       const std::vector<std::vector<int>>& avoid) {
    if (static_cast<int>(avoid.size()) != sk.k())
        throw std::invalid_argument("need one avoid set per color");
    std::vector<std::set<int>> banned(avoid.size());
    for (std::size_t m = 0; m < avoid.size(); ++m) {
        for (int e : avoid[m]) {
            const auto& ed = sk.edge(e);
            if (ed.color != static_cast<int>(m) + 1 || ed.source != vertex)
                throw std::invalid_argument("avoid set " + std::to_string(m + 1) +
                                            " contains an edge of the wrong color or source");
            banned[m].insert(e);
        }
    }

    std::vector<int> seq;
    std::function<std::optional<Path>(int, int)> step =
        [&](int at, int color) -> std::optional<Path> {
        if (color > sk.k())
            return seq.empty() ? Path::at_vertex(sk, vertex) : Path::from_edges(sk, seq);
        for (int e : sk.edges_by_color_source(color, at)) {
            seq.push_back(e);
            Path partial = Path::from_edges(sk, seq);
            const Degree zero = sk.zero_degree();
            bool ok = true;
            for (int c = 1; c <= color; ++c) {
                Path prefix = segment(partial, zero, sk.unit_degree(c));
                if (!prefix.is_vertex() && banned[static_cast<std::size_t>(c - 1)].count(prefix.edges()[0])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (auto found = step(sk.edge(e).range, color + 1)) return found;
            }
            seq.pop_back();
        }
        return std::nullopt;
    };
    return step(vertex, 1);
}

}  // namespace kgraph
