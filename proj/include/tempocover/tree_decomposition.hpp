#pragma once

// Tree decompositions of the underlying undirected graph: exact treewidth by
// subset dynamic programming for small graphs, min-fill elimination beyond,
// and conversion to nice decompositions (leaf / introduce / forget / join
// with empty root and leaf bags) for the cover DP.

#include <set>
#include <sstream>

#include "temporal.hpp"
#include "weakly_chordal.hpp"

namespace tempocover {

inline StaticGraph underlying_graph(const TemporalDigraph& d) {
    StaticGraph g(d.vertex_count());
    for (const Arc& a : d.arcs()) g.add_edge(a.tail, a.head);
    return g;
}

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> edges;

    int width() const {
        std::size_t w = 0;
        for (const auto& b : bags) w = std::max(w, b.size());
        return static_cast<int>(w) - 1;
    }
};

namespace detail {

// Number of vertices outside R + {v} reachable from v through R only.
inline int eliminated_degree(const StaticGraph& g, std::uint32_t r, Vertex v) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    int count = 0;
    while (!stack.empty()) {
        Vertex at = stack.back();
        stack.pop_back();
        for (Vertex nb = 0; nb < n; ++nb) {
            if (!g.has_edge(at, nb) || seen[nb]) continue;
            seen[nb] = 1;
            if (r & (std::uint32_t{1} << nb))
                stack.push_back(nb);
            else
                ++count;
        }
    }
    return count;
}

// Subset DP over eliminated-vertex sets; f[S] is the least possible maximum
// back-degree over orderings that eliminate S first.
inline std::vector<int> treewidth_table(const StaticGraph& g) {
    int n = g.vertex_count();
    std::vector<int> f(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        int best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(s & (std::uint32_t{1} << v))) continue;
            std::uint32_t rest = s ^ (std::uint32_t{1} << v);
            best = std::min(best, std::max(f[rest], eliminated_degree(g, rest, v)));
        }
        f[s] = best;
    }
    return f;
}

}  // namespace detail

// Exact treewidth; exponential in n, so refuses large graphs.
inline int treewidth_exact(const StaticGraph& g) {
    if (g.vertex_count() > 16)
        throw ResourceLimit("treewidth_exact limited to 16 vertices, got " +
                            std::to_string(g.vertex_count()));
    if (g.vertex_count() == 0) return -1;
    auto f = detail::treewidth_table(g);
    return f.back();
}

namespace detail {

inline std::vector<Vertex> elimination_order_exact(const StaticGraph& g) {
    int n = g.vertex_count();
    auto f = treewidth_table(g);
    std::vector<Vertex> order(n);
    std::uint32_t s = (std::uint32_t{1} << n) - 1;
    for (int i = n - 1; i >= 0; --i) {
        Vertex pick = -1;
        int best = n + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (!(s & (std::uint32_t{1} << v))) continue;
            std::uint32_t rest = s ^ (std::uint32_t{1} << v);
            int w = std::max(f[rest], eliminated_degree(g, rest, v));
            if (w < best) {
                best = w;
                pick = v;
            }
        }
        order[i] = pick;
        s ^= std::uint32_t{1} << pick;
    }
    return order;
}

inline std::vector<Vertex> elimination_order_minfill(const StaticGraph& g) {
    int n = g.vertex_count();
    StaticGraph h = g;
    std::vector<char> gone(n, 0);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        long best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            std::vector<Vertex> nbs;
            for (Vertex w = 0; w < n; ++w)
                if (!gone[w] && h.has_edge(v, w)) nbs.push_back(w);
            long fill = 0;
            for (std::size_t i = 0; i < nbs.size(); ++i)
                for (std::size_t j = i + 1; j < nbs.size(); ++j)
                    if (!h.has_edge(nbs[i], nbs[j])) ++fill;
            if (pick < 0 || fill < best) {
                best = fill;
                pick = v;
            }
        }
        std::vector<Vertex> nbs;
        for (Vertex w = 0; w < n; ++w)
            if (!gone[w] && h.has_edge(pick, w)) nbs.push_back(w);
        for (std::size_t i = 0; i < nbs.size(); ++i)
            for (std::size_t j = i + 1; j < nbs.size(); ++j)
                if (!h.has_edge(nbs[i], nbs[j])) h.add_edge(nbs[i], nbs[j]);
        gone[pick] = 1;
        order.push_back(pick);
    }
    return order;
}

}  // namespace detail

// Tree decomposition from an elimination order via the fill-in construction.
inline TreeDecomposition decompose_with_order(const StaticGraph& g,
                                              const std::vector<Vertex>& order) {
    int n = g.vertex_count();
    StaticGraph h = g;
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    TreeDecomposition td;
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> later;
        for (Vertex w = 0; w < n; ++w)
            if (position[w] > i && h.has_edge(v, w)) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!h.has_edge(later[a], later[b])) h.add_edge(later[a], later[b]);
        std::vector<Vertex> bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
        int link = -1;
        for (Vertex w : later)
            if (link < 0 || position[w] < position[order[link]]) link = position[w];
        if (link < 0 && i + 1 < n) link = i + 1;
        if (link >= 0) td.edges.push_back({i, link});
    }
    if (td.bags.empty()) td.bags.push_back({});
    return td;
}

inline TreeDecomposition decompose(const StaticGraph& g) {
    auto order = g.vertex_count() <= 13 ? detail::elimination_order_exact(g)
                                : detail::elimination_order_minfill(g);
    return decompose_with_order(g, order);
}

inline bool validate_decomposition(const StaticGraph& g, const TreeDecomposition& td) {
    int n = g.vertex_count();
    int bags = static_cast<int>(td.bags.size());
    if (bags == 0) return n == 0;
    if (static_cast<int>(td.edges.size()) != bags - 1) return false;
    std::vector<std::vector<int>> adj(bags);
    for (auto [a, b] : td.edges) {
        if (a < 0 || a >= bags || b < 0 || b >= bags || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // tree connectivity
    std::vector<char> seen(bags, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int at = stack.back();
        stack.pop_back();
        for (int nb : adj[at])
            if (!seen[nb]) {
                seen[nb] = 1;
                ++reached;
                stack.push_back(nb);
            }
    }
    if (reached != bags) return false;
    // vertex and edge coverage, vertex subtree connectivity
    std::vector<std::vector<int>> holding(n);
    for (int i = 0; i < bags; ++i)
        for (Vertex v : td.bags[i]) {
            if (v < 0 || v >= n) return false;
            holding[v].push_back(i);
        }
    for (Vertex v = 0; v < n; ++v) {
        if (holding[v].empty()) return false;
        std::vector<char> in_set(bags, 0), vis(bags, 0);
        for (int i : holding[v]) in_set[i] = 1;
        std::vector<int> st{holding[v][0]};
        vis[holding[v][0]] = 1;
        std::size_t cnt = 1;
        while (!st.empty()) {
            int at = st.back();
            st.pop_back();
            for (int nb : adj[at])
                if (in_set[nb] && !vis[nb]) {
                    vis[nb] = 1;
                    ++cnt;
                    st.push_back(nb);
                }
        }
        if (cnt != holding[v].size()) return false;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            bool found = false;
            for (int i = 0; i < bags && !found; ++i)
                found = std::binary_search(td.bags[i].begin(), td.bags[i].end(), u) &&
                        std::binary_search(td.bags[i].begin(), td.bags[i].end(), v);
            if (!found) return false;
        }
    return true;
}

// PACE-style text export: solution line, then bag lines, then tree edges,
// all 1-based.
inline std::string to_td_format(const TreeDecomposition& td, int n) {
    std::ostringstream out;
    std::size_t maxbag = 0;
    for (const auto& b : td.bags) maxbag = std::max(maxbag, b.size());
    out << "s td " << td.bags.size() << ' ' << maxbag << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

struct NiceDecomposition {
    enum class Kind { Leaf, Introduce, Forget, Join };
    struct Node {
        Kind kind;
        Vertex vertex;  // introduced or forgotten vertex, -1 otherwise
        int left, right;
        std::vector<Vertex> bag;  // sorted
    };
    std::vector<Node> nodes;  // children precede parents
    int root = -1;

    int width() const {
        std::size_t w = 0;
        for (const auto& nd : nodes) w = std::max(w, nd.bag.size());
        return static_cast<int>(w) - 1;
    }
};

namespace detail {

inline int nice_leaf(NiceDecomposition& nd) {
    nd.nodes.push_back({NiceDecomposition::Kind::Leaf, -1, -1, -1, {}});
    return static_cast<int>(nd.nodes.size()) - 1;
}

inline int nice_introduce(NiceDecomposition& nd, int child, Vertex v) {
    auto bag = nd.nodes[child].bag;
    bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    nd.nodes.push_back({NiceDecomposition::Kind::Introduce, v, child, -1, bag});
    return static_cast<int>(nd.nodes.size()) - 1;
}

inline int nice_forget(NiceDecomposition& nd, int child, Vertex v) {
    auto bag = nd.nodes[child].bag;
    bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
    nd.nodes.push_back({NiceDecomposition::Kind::Forget, v, child, -1, bag});
    return static_cast<int>(nd.nodes.size()) - 1;
}

// forget everything in from-but-not-to, then introduce to-but-not-from
inline int nice_transition(NiceDecomposition& nd, int child, const std::vector<Vertex>& to) {
    int at = child;
    std::vector<Vertex> drop;
    for (Vertex v : nd.nodes[child].bag)
        if (!std::binary_search(to.begin(), to.end(), v)) drop.push_back(v);
    for (Vertex v : drop) at = nice_forget(nd, at, v);
    for (Vertex v : to)
        if (!std::binary_search(nd.nodes[at].bag.begin(), nd.nodes[at].bag.end(), v))
            at = nice_introduce(nd, at, v);
    return at;
}

}  // namespace detail

// Nice decomposition with empty root and leaf bags from a raw decomposition.
inline NiceDecomposition nicify(const TreeDecomposition& td) {
    int bags = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> adj(bags);
    for (auto [a, b] : td.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    NiceDecomposition nd;
    auto build = [&](auto&& self, int at, int parent) -> int {
        std::vector<int> tops;
        for (int ch : adj[at])
            if (ch != parent) {
                int sub = self(self, ch, at);
                tops.push_back(detail::nice_transition(nd, sub, td.bags[at]));
            }
        if (tops.empty()) {
            int leaf = detail::nice_leaf(nd);
            return detail::nice_transition(nd, leaf, td.bags[at]);
        }
        int acc = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i) {
            nd.nodes.push_back(
                {NiceDecomposition::Kind::Join, -1, acc, tops[i], td.bags[at]});
            acc = static_cast<int>(nd.nodes.size()) - 1;
        }
        return acc;
    };
    int top = build(build, 0, -1);
    nd.root = detail::nice_transition(nd, top, {});
    if (nd.nodes[nd.root].bag.size() != 0)
        throw std::logic_error("nicify: root bag not empty");
    return nd;
}

inline NiceDecomposition build_nice_decomposition(const TemporalDigraph& d) {
    return nicify(decompose(underlying_graph(d)));
}

}  // namespace tempocover
