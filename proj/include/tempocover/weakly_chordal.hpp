#pragma once

// Undirected graphs, hole/antihole detection, and exact optimization on
// weakly chordal graphs (no induced cycle of length >= 5 in the graph or its
// complement).
//
// Minimum clique cover is computed by colouring the complement: while the
// complement has two nonadjacent vertices, locate a two-pair (a nonadjacent
// pair whose chordless connecting paths all have exactly two edges) and
// contract it. Contracting a two-pair never changes the chromatic number
// (Kempe chain argument), and weakly chordal graphs that are not complete
// always contain a two-pair, so the loop ends with a complete graph whose
// vertices are the colour classes. Maximum independent sets come from the
// cover size by greedy self-reduction.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "temporal.hpp"

namespace tempocover {

class StaticGraph {
public:
    StaticGraph() = default;
    explicit StaticGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw MalformedInput("vertex count must be nonnegative");
    }

    int vertex_count() const { return n_; }

    void add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        if (u == v) throw MalformedInput("self-loop on vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
        adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }

    bool has_edge(Vertex u, Vertex v) const {
        return u != v && adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    int degree(Vertex u) const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d += has_edge(u, v);
        return d;
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v) m += has_edge(u, v);
        return m;
    }

    std::vector<Vertex> neighbors(Vertex u) const {
        std::vector<Vertex> ns;
        for (Vertex v = 0; v < n_; ++v)
            if (has_edge(u, v)) ns.push_back(v);
        return ns;
    }

    StaticGraph complement() const {
        StaticGraph g(n_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

    // Induced subgraph; vertex i of the result is verts[i].
    StaticGraph induced(const std::vector<Vertex>& verts) const {
        StaticGraph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

private:
    void check(Vertex v) const {
        if (v < 0 || v >= n_) throw MalformedInput("vertex out of range: " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<char> adj_;
};

// DIMACS-style edge list: "p edge n m" then "e u v" lines, 1-based.
inline std::string to_edge_list(const StaticGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

inline std::string to_dot(const StaticGraph& g) {
    std::ostringstream os;
    os << "graph g {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

namespace detail {

// Search for an induced cycle of exactly len vertices. Paths grow from their
// minimum vertex; interior vertices must avoid chords, and adjacency to the
// start is only allowed (and required) when closing.
inline bool hole_of_length(const StaticGraph& g, int len, std::vector<Vertex>& path,
                           std::vector<char>& used) {
    int k = static_cast<int>(path.size());
    Vertex last = path.back();
    for (Vertex w = path.front() + 1; w < g.vertex_count(); ++w) {
        if (used[w] || !g.has_edge(last, w)) continue;
        bool chord = false;
        for (int i = 1; i + 1 < k && !chord; ++i)
            if (g.has_edge(path[i], w)) chord = true;
        if (chord) continue;
        bool closes = g.has_edge(path.front(), w);
        if (k + 1 == len) {
            if (!closes) continue;
            path.push_back(w);
            return true;
        }
        if (closes && k > 1) continue;
        path.push_back(w);
        used[w] = 1;
        if (hole_of_length(g, len, path, used)) return true;
        used[w] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

// Shortest hole (induced cycle with at least 5 vertices), if any.
inline std::optional<std::vector<Vertex>> find_hole(const StaticGraph& g) {
    int n = g.vertex_count();
    for (int len = 5; len <= n; ++len) {
        for (Vertex s = 0; s + len <= n; ++s) {
            std::vector<Vertex> path = {s};
            std::vector<char> used(n, 0);
            used[s] = 1;
            if (detail::hole_of_length(g, len, path, used)) return path;
        }
    }
    return std::nullopt;
}

// Antihole: a hole of the complement, reported as its vertices in complement
// cycle order.
inline std::optional<std::vector<Vertex>> find_antihole(const StaticGraph& g) {
    return find_hole(g.complement());
}

inline bool is_weakly_chordal(const StaticGraph& g) {
    return !find_hole(g) && !find_antihole(g);
}

namespace detail {

// (x,y) nonadjacent is a two-pair iff deleting their common neighbors
// disconnects x from y; any surviving connection yields a chordless path of
// three or more edges.
inline bool is_two_pair(const StaticGraph& g, Vertex x, Vertex y) {
    int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    for (Vertex w = 0; w < n; ++w)
        if (g.has_edge(x, w) && g.has_edge(y, w)) blocked[w] = 1;
    std::vector<Vertex> stack = {x};
    std::vector<char> seen(n, 0);
    seen[x] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (v == y) return false;
        for (Vertex w = 0; w < n; ++w) {
            if (seen[w] || blocked[w] || !g.has_edge(v, w)) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return true;
}

// Colour a weakly chordal graph by two-pair contraction; returns the colour
// classes as sets of original vertices. Assumes (does not verify) weak
// chordality.
inline std::vector<std::vector<Vertex>> color_by_contraction(const StaticGraph& start) {
    StaticGraph h = start;
    std::vector<std::vector<Vertex>> classes(h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v) classes[v] = {v};
    while (true) {
        int n = h.vertex_count();
        std::optional<std::pair<Vertex, Vertex>> pick;
        bool complete = true;
        for (Vertex x = 0; x < n && !pick; ++x)
            for (Vertex y = x + 1; y < n && !pick; ++y) {
                if (h.has_edge(x, y)) continue;
                complete = false;
                if (is_two_pair(h, x, y)) pick = {x, y};
            }
        if (complete) break;
        if (!pick)
            throw std::logic_error("no two-pair in an incomplete weakly chordal graph");
        auto [x, y] = *pick;
        StaticGraph next(n - 1);
        auto remap = [&](Vertex v) { return v < y ? v : v - 1; };
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (!h.has_edge(u, v)) continue;
                Vertex a = u == y ? x : u, b = v == y ? x : v;
                if (a != b && !next.has_edge(remap(a), remap(b)))
                    next.add_edge(remap(a), remap(b));
            }
        classes[x].insert(classes[x].end(), classes[y].begin(), classes[y].end());
        classes.erase(classes.begin() + y);
        h = std::move(next);
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    return classes;
}

inline std::string cycle_to_string(const std::vector<Vertex>& cycle) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) os << ' ';
        os << cycle[i];
    }
    return os.str();
}

inline void require_weakly_chordal(const StaticGraph& g) {
    if (auto hole = find_hole(g))
        throw ClassMismatch("graph is not weakly chordal: hole " + cycle_to_string(*hole));
    if (auto anti = find_antihole(g))
        throw ClassMismatch("graph is not weakly chordal: antihole " + cycle_to_string(*anti));
}

}  // namespace detail

// Minimum clique cover of a weakly chordal graph: colour classes of the
// complement, found by two-pair contraction. Throws ClassMismatch naming a
// hole or antihole when the input is not weakly chordal.
inline std::vector<std::vector<Vertex>> min_clique_cover_wc(const StaticGraph& g) {
    detail::require_weakly_chordal(g);
    if (g.vertex_count() == 0) return {};
    return detail::color_by_contraction(g.complement());
}

// Maximum independent set of a weakly chordal graph. The cover size equals
// the independence number (these graphs are perfect), so a witness follows by
// self-reduction: repeatedly keep a vertex whose closed-neighborhood removal
// drops the cover size by exactly one.
inline std::vector<Vertex> max_independent_set_wc(const StaticGraph& g) {
    detail::require_weakly_chordal(g);
    std::vector<Vertex> live(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) live[v] = v;
    StaticGraph cur = g;
    std::size_t k = cur.vertex_count() == 0 ? 0 : detail::color_by_contraction(cur.complement()).size();
    std::vector<Vertex> result;
    while (k > 0) {
        bool advanced = false;
        for (Vertex v = 0; v < cur.vertex_count() && !advanced; ++v) {
            std::vector<Vertex> keep;
            for (Vertex w = 0; w < cur.vertex_count(); ++w)
                if (w != v && !cur.has_edge(v, w)) keep.push_back(w);
            StaticGraph sub = cur.induced(keep);
            std::size_t ks =
                sub.vertex_count() == 0 ? 0 : detail::color_by_contraction(sub.complement()).size();
            if (ks == k - 1) {
                result.push_back(live[v]);
                std::vector<Vertex> next_live;
                for (Vertex w : keep) next_live.push_back(live[w]);
                live = std::move(next_live);
                cur = std::move(sub);
                k = ks;
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("independent set self-reduction stalled");
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace tempocover
