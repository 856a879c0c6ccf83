#include <kgraph/fixtures.hpp>

#include <kgraph/rng.hpp>

#include <map>
#include <numeric>
#include <stdexcept>

namespace kgraph {

namespace {

std::string color_letter(int color) {
    return std::string(1, static_cast<char>('a' + color - 1));
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

SkeletonDoc fixture_ex43(int m) {
    if (m < 0) throw std::invalid_argument("ex43 truncation must be >= 0");
    SkeletonDoc doc;
    doc.k = 2;
    doc.vertices = {"00", "01", "10", "11"};
    doc.edges.push_back({"lam", 1, "00", "10"});
    for (int i = 0; i <= m; ++i)
        doc.edges.push_back({"al" + std::to_string(i), 1, "01", "11"});
    doc.edges.push_back({"be", 2, "00", "01"});
    for (int i = 0; i <= m; ++i)
        doc.edges.push_back({"mu" + std::to_string(i), 2, "10", "11"});
    for (int i = 0; i <= m; ++i) {
        doc.squares.push_back({{"lam", "mu" + std::to_string(i)},
                               {"be", "al" + std::to_string(i)}});
    }
    return doc;
}

SkeletonDoc fixture_loops(int loops) {
    if (loops < 1 || loops > 26) throw std::invalid_argument("loops fixture wants 1..26 loops");
    SkeletonDoc doc;
    doc.k = 1;
    doc.vertices = {"v"};
    for (int i = 0; i < loops; ++i)
        doc.edges.push_back({std::string(1, static_cast<char>('a' + i)), 1, "v", "v"});
    return doc;
}

SkeletonDoc fixture_free(int n, int k) {
    if (n < 1 || k < 1 || k > 26) throw std::invalid_argument("free fixture wants n >= 1, 1 <= k <= 26");
    SkeletonDoc doc;
    doc.k = k;
    doc.vertices = {"v"};
    auto name = [&](int color, int i) { return color_letter(color) + std::to_string(i + 1); };
    for (int c = 1; c <= k; ++c)
        for (int i = 0; i < n; ++i) doc.edges.push_back({name(c, i), c, "v", "v"});
    for (int c = 1; c <= k; ++c)
        for (int cp = c + 1; cp <= k; ++cp)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    doc.squares.push_back({{name(c, i), name(cp, j)}, {name(cp, j), name(c, i)}});
    return doc;
}

SkeletonDoc fixture_exchange3(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("exchange3 wants n >= 1");
    SkeletonDoc doc;
    doc.k = 3;
    doc.vertices = {"v"};
    auto name = [&](int color, int i) { return color_letter(color) + std::to_string(i + 1); };
    for (int c = 1; c <= 3; ++c)
        for (int i = 0; i < n; ++i) doc.edges.push_back({name(c, i), c, "v", "v"});

    std::vector<std::vector<int>> perm(3, identity_perm(n));
    if (seed != 0) {
        Rng rng(seed);
        for (auto& p : perm) rng.shuffle(p);
    }
    std::vector<std::vector<int>> inv(3, std::vector<int>(static_cast<std::size_t>(n)));
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < n; ++i) inv[c][static_cast<std::size_t>(perm[c][static_cast<std::size_t>(i)])] = i;

    // x_i y_j = y_{pi_{c'}(pi_c^{-1}(i))} x_{pi_c(pi_{c'}^{-1}(j))}
    for (int c = 1; c <= 3; ++c) {
        for (int cp = c + 1; cp <= 3; ++cp) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    int ri = perm[cp - 1][static_cast<std::size_t>(inv[c - 1][static_cast<std::size_t>(i)])];
                    int rj = perm[c - 1][static_cast<std::size_t>(inv[cp - 1][static_cast<std::size_t>(j)])];
                    doc.squares.push_back({{name(c, i), name(cp, j)}, {name(cp, ri), name(c, rj)}});
                }
            }
        }
    }
    return doc;
}

SkeletonDoc fixture_random2(std::uint64_t seed, int size_hint) {
    Rng rng(seed ^ 0xabcdef12345ULL);
    if (size_hint < 1) size_hint = 1;
    if (size_hint > 3) size_hint = 3;
    const int V = rng.in_range(1, size_hint);

    SkeletonDoc doc;
    doc.k = 2;
    for (int v = 0; v < V; ++v) doc.vertices.push_back("v" + std::to_string(v));

    // circulant counts: count[c][(w - u) mod V] edges u -> w of color c
    auto draw_counts = [&](int budget) {
        std::vector<int> offs(static_cast<std::size_t>(V), 0);
        int per_offset_cap = std::max(1, budget / V);
        for (auto& c : offs) c = rng.in_range(0, std::min(3, per_offset_cap));
        if (std::accumulate(offs.begin(), offs.end(), 0) == 0)
            offs[rng.below(static_cast<std::size_t>(V))] = 1;
        return offs;
    };
    auto c1 = draw_counts(20 / V);
    auto c2 = draw_counts(20 / V);

    struct EdgeRef { std::string id; int source, range; };
    std::vector<std::vector<EdgeRef>> edges(2);
    for (int color = 1; color <= 2; ++color) {
        const auto& counts = color == 1 ? c1 : c2;
        int serial = 0;
        for (int u = 0; u < V; ++u) {
            for (int off = 0; off < V; ++off) {
                int w = (u + off) % V;
                for (int t = 0; t < counts[static_cast<std::size_t>(off)]; ++t) {
                    std::string id = (color == 1 ? "a" : "b") + std::to_string(serial++);
                    doc.edges.push_back({id, color, "v" + std::to_string(u), "v" + std::to_string(w)});
                    edges[static_cast<std::size_t>(color - 1)].push_back({id, u, w});
                }
            }
        }
    }

    // Circulant count matrices commute, so for every (u, w) the classes
    // {(f, g) : s(f)=u, r(g)=w} and {(g', f') : s(g')=u, r(f')=w} have the
    // same size; pair them up at random.
    for (int u = 0; u < V; ++u) {
        for (int w = 0; w < V; ++w) {
            std::vector<std::pair<std::string, std::string>> lefts, rights;
            for (const auto& f : edges[0])
                for (const auto& g : edges[1])
                    if (f.source == u && f.range == g.source && g.range == w)
                        lefts.emplace_back(f.id, g.id);
            for (const auto& gp : edges[1])
                for (const auto& fp : edges[0])
                    if (gp.source == u && gp.range == fp.source && fp.range == w)
                        rights.emplace_back(gp.id, fp.id);
            if (lefts.size() != rights.size())
                throw std::logic_error("circulant construction produced unbalanced classes");
            rng.shuffle(rights);
            for (std::size_t i = 0; i < lefts.size(); ++i)
                doc.squares.push_back({lefts[i], rights[i]});
        }
    }
    return doc;
}

SkeletonDoc make_fixture(const std::string& name, int m, std::uint64_t seed) {
    if (name == "ex43") return fixture_ex43(m < 0 ? 3 : m);
    if (name == "loops") return fixture_loops(m <= 0 ? 2 : m);
    if (name == "free2") return fixture_free(m <= 0 ? 2 : m, 2);
    if (name == "exchange3") return fixture_exchange3(m <= 0 ? 2 : m, seed);
    if (name == "random") return fixture_random2(seed, m <= 0 ? 2 : m);
    throw std::invalid_argument("unknown fixture '" + name +
                                "' (expected ex43|loops|free2|exchange3|random)");
}

SkeletonDoc transpose_square_rights(SkeletonDoc doc, std::size_t i, std::size_t j) {
    if (i >= doc.squares.size() || j >= doc.squares.size())
        throw std::invalid_argument("square index out of range");
    std::swap(doc.squares[i].right, doc.squares[j].right);
    return doc;
}

}  // namespace kgraph
