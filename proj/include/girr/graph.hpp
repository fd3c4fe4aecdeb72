#pragma once

// Simple undirected graphs with component/bipartition analysis, spanning
// forests, parity-constrained shortest walks and a few constructions.
// Values are immutable after parse; all queries are pure.

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace girr {

using Edge = std::pair<int, int>; // normalized u < v

class SimpleGraph {
  public:
    SimpleGraph() = default;

    SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    /// Index of edge {u,v} into edges(); throws if absent.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) throw std::invalid_argument("no such edge");
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const SimpleGraph&) const = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// ---- parsing ---------------------------------------------------------

/// Edge-list format: first line "n m", then m lines "u v", 0-indexed.
inline SimpleGraph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge line");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing tokens");
    return SimpleGraph(static_cast<int>(n), std::move(edges));
}

inline std::string encode_edgelist(const SimpleGraph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// graph6 printable encoding (column-major upper triangle, 6 bits per char).
inline SimpleGraph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw std::invalid_argument("graph6: orders above 258047 not supported");
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = static_cast<unsigned char>(text[i]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad order byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        int c = static_cast<unsigned char>(text[0]) - 63;
        if (c < 0 || c > 62) throw std::invalid_argument("graph6: bad order byte");
        n = c;
        pos = 1;
    }

    long long bits_needed = n * (n - 1) / 2;
    long long chars_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) != chars_needed)
        throw std::invalid_argument("graph6: wrong body length");

    std::vector<Edge> edges;
    long long bit = 0;
    int col = 1, row = 0;
    for (long long k = 0; k < chars_needed; ++k) {
        int c = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(k)]) - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad body byte");
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= bits_needed) {
                if ((c >> b) & 1) throw std::invalid_argument("graph6: nonzero padding");
                continue;
            }
            if ((c >> b) & 1) edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return SimpleGraph(static_cast<int>(n), std::move(edges));
}

inline std::string encode_graph6(const SimpleGraph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        throw std::invalid_argument("graph6: order too large to encode");
    }
    long long bits = n * (n - 1) / 2;
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    if (bits % 6 != 0) out += static_cast<char>((acc << (6 - bits % 6)) + 63);
    return out;
}

enum class GraphFormat { edgelist, graph6 };

/// Autodetects by first byte: edge lists start with a digit.
inline SimpleGraph parse_graph(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
    if (i == text.size()) throw std::invalid_argument("empty graph input");
    if (text[i] >= '0' && text[i] <= '9') return parse_edgelist(text.substr(i));
    return parse_graph6(text.substr(i));
}

inline SimpleGraph parse_graph(std::string_view text, GraphFormat fmt) {
    return fmt == GraphFormat::edgelist ? parse_edgelist(text) : parse_graph6(text);
}

// ---- components and bipartition ---------------------------------------

/// One connected component with its 2-coloring attempt. If bipartite,
/// classes[0] holds the class of the component's smallest vertex.
struct Component {
    std::vector<int> vertices;
    bool bipartite = false;
    std::array<std::vector<int>, 2> classes;

    int order() const { return static_cast<int>(vertices.size()); }
};

/// Parity classes used by the star-free construction: p1 bipartite with both
/// color classes odd, p2 both even, p3 mixed, p4 non-bipartite odd order,
/// p5 non-bipartite even order.
enum class PClass { bip_odd_odd, bip_even_even, bip_mixed, nonbip_odd, nonbip_even };

struct ComponentProfile {
    std::vector<Component> components;
    std::vector<int> comp_of; // vertex -> component index
    int p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0;
};

inline PClass p_class(const Component& c) {
    if (!c.bipartite) return c.order() % 2 ? PClass::nonbip_odd : PClass::nonbip_even;
    bool a = c.classes[0].size() % 2, b = c.classes[1].size() % 2;
    if (a && b) return PClass::bip_odd_odd;
    if (!a && !b) return PClass::bip_even_even;
    return PClass::bip_mixed;
}

inline ComponentProfile component_profile(const SimpleGraph& g) {
    ComponentProfile prof;
    prof.comp_of.assign(g.order(), -1);
    std::vector<int> color(g.order(), -1);
    for (int root = 0; root < g.order(); ++root) {
        if (prof.comp_of[root] != -1) continue;
        Component comp;
        comp.bipartite = true;
        int ci = static_cast<int>(prof.components.size());
        std::queue<int> q;
        q.push(root);
        prof.comp_of[root] = ci;
        color[root] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.vertices.push_back(u);
            for (int v : g.neighbors(u)) {
                if (prof.comp_of[v] == -1) {
                    prof.comp_of[v] = ci;
                    color[v] = color[u] ^ 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    comp.bipartite = false;
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        if (comp.bipartite)
            for (int v : comp.vertices) comp.classes[color[v]].push_back(v);
        switch (p_class(comp)) {
            case PClass::bip_odd_odd: prof.p1++; break;
            case PClass::bip_even_even: prof.p2++; break;
            case PClass::bip_mixed: prof.p3++; break;
            case PClass::nonbip_odd: prof.p4++; break;
            case PClass::nonbip_even: prof.p5++; break;
        }
        prof.components.push_back(std::move(comp));
    }
    return prof;
}

/// K_{1,u} detection, u >= 0: covers K_1 (u=0) and K_2 (u=1). Returns the
/// leaf count when the component is a star.
inline std::optional<int> star_leaf_count(const SimpleGraph& g, const Component& c) {
    int n = c.order();
    if (n == 1) return 0;
    if (n == 2) return 1;
    long long edge_sum = 0;
    int max_deg = 0;
    for (int v : c.vertices) {
        edge_sum += g.degree(v);
        max_deg = std::max(max_deg, g.degree(v));
    }
    if (edge_sum / 2 == n - 1 && max_deg == n - 1) return n - 1;
    return std::nullopt;
}

/// True when some component is a star K_{1,u} (hence also when any component
/// has order < 3).
inline bool has_small_or_star_components(const SimpleGraph& g) {
    auto prof = component_profile(g);
    for (const auto& c : prof.components)
        if (star_leaf_count(g, c)) return true;
    return false;
}

// ---- spanning forest ---------------------------------------------------

/// One spanning tree per component, found by BFS from each component's
/// smallest vertex with neighbors scanned in ascending order. Edges of the
/// first component of order >= 4 (when one exists) come first, so the head
/// of the list lies in a component of order at least 4.
inline std::vector<Edge> spanning_forest(const SimpleGraph& g) {
    auto prof = component_profile(g);
    int big = -1;
    for (std::size_t i = 0; i < prof.components.size(); ++i)
        if (prof.components[i].order() >= 4) {
            big = static_cast<int>(i);
            break;
        }

    std::vector<Edge> out;
    std::vector<char> seen(g.order(), 0);
    auto bfs_tree = [&](const Component& c) {
        int root = c.vertices.front();
        std::queue<int> q;
        q.push(root);
        seen[root] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (seen[v]) continue;
                seen[v] = 1;
                out.emplace_back(std::min(u, v), std::max(u, v));
                q.push(v);
            }
        }
    };
    if (big >= 0) bfs_tree(prof.components[static_cast<std::size_t>(big)]);
    for (std::size_t i = 0; i < prof.components.size(); ++i)
        if (static_cast<int>(i) != big) bfs_tree(prof.components[i]);
    return out;
}

// ---- parity walks -------------------------------------------------------

enum class WalkParity { even, odd };

/// Walk = vertex sequence, consecutive pairs adjacent, at least 2 vertices.
/// "Even walk" means an even number of vertices (repetitions counted).
struct Walk {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    WalkParity parity() const { return length() % 2 == 0 ? WalkParity::even : WalkParity::odd; }
};

inline bool walk_valid(const SimpleGraph& g, const Walk& w) {
    if (w.length() < 2) return false;
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!g.has_edge(w.vertices[i], w.vertices[i + 1])) return false;
    return true;
}

/// Minimum-length walk from x to y whose vertex count has the requested
/// parity, via BFS on (vertex, parity) states with neighbors in ascending
/// order. Supports closed walks (x == y, the trivial 1-vertex walk is
/// excluded). Returns nullopt when no such walk exists (bipartite parity
/// obstruction); throws when x and y are in different components.
inline std::optional<Walk> shortest_parity_walk(const SimpleGraph& g, int x, int y, WalkParity want) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
        throw std::invalid_argument("walk endpoint out of range");
    auto prof = component_profile(g);
    if (prof.comp_of[x] != prof.comp_of[y])
        throw std::invalid_argument("walk endpoints in different components");

    // dist/parent over states (v, count mod 2); start state is (x, 1 vertex)
    auto id = [&](int v, int par) { return v * 2 + par; };
    std::vector<int> dist(static_cast<std::size_t>(g.order()) * 2, -1);
    std::vector<int> parent(static_cast<std::size_t>(g.order()) * 2, -1);
    std::queue<int> q;
    dist[id(x, 1)] = 1;
    q.push(id(x, 1));
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        int v = s / 2, par = s % 2;
        for (int u : g.neighbors(v)) {
            int t = id(u, par ^ 1);
            if (dist[t] != -1) continue;
            dist[t] = dist[s] + 1;
            parent[t] = s;
            q.push(t);
        }
    }

    int want_par = want == WalkParity::odd ? 1 : 0;
    int target = id(y, want_par);
    // the start state is not a walk; reaching (x, odd) again needs >= 3 vertices
    if (y == x && want == WalkParity::odd) {
        int best = -1, best_nbr = -1;
        for (int u : g.neighbors(x)) {
            int s = id(u, 0);
            if (dist[s] != -1 && (best == -1 || dist[s] + 1 < best)) {
                best = dist[s] + 1;
                best_nbr = u;
            }
        }
        if (best == -1) return std::nullopt;
        Walk w;
        for (int s = id(best_nbr, 0); s != -1; s = parent[s]) w.vertices.push_back(s / 2);
        std::reverse(w.vertices.begin(), w.vertices.end());
        w.vertices.push_back(x);
        return w;
    }
    if (dist[target] == -1) return std::nullopt;
    Walk w;
    for (int s = target; s != -1; s = parent[s]) w.vertices.push_back(s / 2);
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
}

// ---- constructions ------------------------------------------------------

/// Lexicographic product H o K̄_r: vertex (u,i) -> u*r + i, with (u,i)~(x,j)
/// iff u~x in H.
inline SimpleGraph lexicographic_product(const SimpleGraph& h, int r) {
    if (r < 1) throw std::invalid_argument("blow-up factor must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(h.edge_count()) * static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
    for (auto [u, v] : h.edges())
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) edges.emplace_back(u * r + i, v * r + j);
    return SimpleGraph(h.order() * r, std::move(edges));
}

inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return SimpleGraph(a.order() + b.order(), std::move(edges));
}

// deterministic family builders shared by the CLI and the test corpus

inline SimpleGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, std::move(e));
}

inline SimpleGraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(e));
}

inline SimpleGraph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return SimpleGraph(n, std::move(e));
}

/// Star K_{1,u} with center 0; u = 0 gives K_1.
inline SimpleGraph make_star(int u) {
    if (u < 0) throw std::invalid_argument("star needs u >= 0");
    std::vector<Edge> e;
    for (int i = 1; i <= u; ++i) e.emplace_back(0, i);
    return SimpleGraph(u + 1, std::move(e));
}

inline SimpleGraph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("biclique needs both sides >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return SimpleGraph(a + b, std::move(e));
}

} // namespace girr
