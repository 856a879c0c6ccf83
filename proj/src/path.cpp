#include <kgraph/path.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace kgraph {

namespace {

void check_same_skeleton(const Path& a, const Path& b) {
    if (&a.skeleton() != &b.skeleton())
        throw std::invalid_argument("paths belong to different skeletons");
}

// Bubble the sequence into ascending color order through square swaps.
void normalize(const Skeleton& sk, std::vector<int>& seq) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
            if (sk.edge(seq[t]).color > sk.edge(seq[t + 1]).color) {
                auto [a, b] = sk.swap_adjacent(seq[t], seq[t + 1]);
                seq[t] = a;
                seq[t + 1] = b;
                moved = true;
            }
        }
    }
}

Degree degree_of(const Skeleton& sk, const std::vector<int>& seq) {
    std::vector<int> coords(static_cast<std::size_t>(sk.k()), 0);
    for (int e : seq) ++coords[static_cast<std::size_t>(sk.edge(e).color - 1)];
    return Degree(std::move(coords));
}

}  // namespace

Path::Path(const Skeleton& sk, std::vector<int> edges, int source)
    : sk_(&sk),
      edges_(std::move(edges)),
      degree_(degree_of(sk, edges_)),
      source_(source),
      range_(edges_.empty() ? source : sk.edge(edges_.back()).range) {}

Path Path::at_vertex(const Skeleton& sk, int vertex) {
    if (vertex < 0 || vertex >= static_cast<int>(sk.vertex_count()))
        throw std::invalid_argument("vertex index out of range");
    return Path(sk, {}, vertex);
}

Path Path::of_edge(const Skeleton& sk, int edge) {
    if (edge < 0 || edge >= static_cast<int>(sk.edge_count()))
        throw std::invalid_argument("edge index out of range");
    return Path(sk, {edge}, sk.edge(edge).source);
}

Path Path::from_edges(const Skeleton& sk, const std::vector<int>& edges) {
    if (edges.empty())
        throw std::invalid_argument("empty edge sequence has no source; use at_vertex");
    for (std::size_t t = 0; t + 1 < edges.size(); ++t)
        if (sk.edge(edges[t]).range != sk.edge(edges[t + 1]).source)
            throw std::invalid_argument("edge sequence is not composable at position " +
                                        std::to_string(t));
    std::vector<int> seq = edges;
    normalize(sk, seq);
    return Path(sk, std::move(seq), sk.edge(edges.front()).source);
}

std::optional<Path> compose(const Path& a, const Path& b) {
    check_same_skeleton(a, b);
    if (a.range() != b.source()) return std::nullopt;
    if (a.is_vertex()) return b;
    if (b.is_vertex()) return a;
    std::vector<int> seq = a.edges();
    seq.insert(seq.end(), b.edges().begin(), b.edges().end());
    return Path::from_edges(a.skeleton(), seq);
}

std::vector<int> refactor(const Path& p, const std::vector<int>& colorword) {
    const Skeleton& sk = p.skeleton();
    std::vector<int> counts(static_cast<std::size_t>(sk.k()), 0);
    for (int c : colorword) {
        if (c < 1 || c > sk.k()) throw std::invalid_argument("color word mentions color " + std::to_string(c));
        ++counts[static_cast<std::size_t>(c - 1)];
    }
    if (Degree(counts) != p.degree())
        throw std::invalid_argument("color word is not a permutation of the path's colors");

    std::vector<int> cur = p.edges();
    for (std::size_t pos = 0; pos < cur.size(); ++pos) {
        std::size_t t = pos;
        while (sk.edge(cur[t]).color != colorword[pos]) ++t;
        // Everything strictly between pos and t has a different color, so
        // each leftward move is a legal square swap.
        for (std::size_t s = t; s > pos; --s) {
            auto [x, y] = sk.swap_adjacent(cur[s - 1], cur[s]);
            cur[s - 1] = x;
            cur[s] = y;
        }
    }
    return cur;
}

Path segment(const Path& p, const Degree& a, const Degree& b) {
    const Skeleton& sk = p.skeleton();
    if (!a.leq(b) || !b.leq(p.degree()))
        throw std::invalid_argument("segment bounds must satisfy 0 <= a <= b <= d(p)");

    std::vector<int> word;
    auto append_block = [&](const Degree& d) {
        for (int c = 1; c <= sk.k(); ++c)
            for (int i = 0; i < d[static_cast<std::size_t>(c - 1)]; ++i) word.push_back(c);
    };
    append_block(a);
    append_block(b.minus(a));
    append_block(p.degree().minus(b));

    std::vector<int> seq = refactor(p, word);
    std::size_t from = static_cast<std::size_t>(a.total());
    std::size_t to = static_cast<std::size_t>(b.total());
    if (from == to) {
        int v = from == 0 ? p.source() : sk.edge(seq[from - 1]).range;
        return Path::at_vertex(sk, v);
    }
    std::vector<int> mid(seq.begin() + static_cast<long>(from), seq.begin() + static_cast<long>(to));
    return Path::from_edges(sk, mid);
}

bool has_prefix(const Path& p, const Path& q) {
    if (&p.skeleton() != &q.skeleton()) return false;
    if (!q.degree().leq(p.degree())) return false;
    return segment(p, p.skeleton().zero_degree(), q.degree()) == q;
}

std::vector<Path> enumerate_paths(const Skeleton& sk, const Degree& n, std::optional<int> source) {
    if (n.rank() != static_cast<std::size_t>(sk.k()))
        throw std::invalid_argument("degree rank does not match skeleton");
    std::vector<Path> out;
    std::vector<int> seq;

    std::function<void(int, int, int)> extend = [&](int vertex, int color, int used) {
        while (color <= sk.k() && used == n[static_cast<std::size_t>(color - 1)]) {
            ++color;
            used = 0;
        }
        if (color > sk.k()) {
            out.push_back(seq.empty() ? Path::at_vertex(sk, source ? *source : vertex)
                                      : Path::from_edges(sk, seq));
            return;
        }
        for (int e : sk.edges_by_color_source(color, vertex)) {
            seq.push_back(e);
            extend(sk.edge(e).range, color, used + 1);
            seq.pop_back();
        }
    };

    if (source) {
        extend(*source, 1, 0);
    } else {
        for (int v = 0; v < static_cast<int>(sk.vertex_count()); ++v) extend(v, 1, 0);
    }
    return out;
}

std::vector<Path> enumerate_paths_up_to(const Skeleton& sk, const Degree& n) {
    // All degrees d <= n, in lexicographic order.
    std::vector<Path> out;
    std::vector<int> coords(static_cast<std::size_t>(sk.k()), 0);
    std::function<void(std::size_t)> sweep = [&](std::size_t i) {
        if (i == coords.size()) {
            auto paths = enumerate_paths(sk, Degree(coords));
            out.insert(out.end(), paths.begin(), paths.end());
            return;
        }
        for (int c = 0; c <= n[i]; ++c) {
            coords[i] = c;
            sweep(i + 1);
        }
        coords[i] = 0;
    };
    sweep(0);
    return out;
}

std::string path_literal(const Path& p) {
    if (p.is_vertex()) return p.skeleton().vertex_id(p.source());
    std::ostringstream os;
    for (std::size_t i = 0; i < p.edges().size(); ++i) {
        if (i) os << '.';
        os << p.skeleton().edge(p.edges()[i]).id;
    }
    return os.str();
}

Path parse_path_literal(const Skeleton& sk, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty path literal");
    std::vector<std::string> tokens;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, '.')) tokens.push_back(tok);

    if (tokens.size() == 1) {
        if (auto v = sk.find_vertex(tokens[0])) return Path::at_vertex(sk, *v);
    }
    std::vector<int> edges;
    for (const auto& t : tokens) {
        auto e = sk.find_edge(t);
        if (!e)
            throw std::invalid_argument("unknown path literal token '" + t + "'");
        edges.push_back(*e);
    }
    return Path::from_edges(sk, edges);
}

}  // namespace kgraph
