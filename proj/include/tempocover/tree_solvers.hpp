#pragma once

// Polynomial solvers for tree-shaped inputs: minimum plain covers on oriented
// trees via the connectivity graph, and direct greedy constructions of
// vertex-disjoint optimal covers on oriented lines and rooted directed trees.

#include <numeric>

#include "reachability.hpp"
#include "temporal.hpp"
#include "weakly_chordal.hpp"

namespace tempocover {

namespace detail {

inline bool is_tree_class(GraphClass c) {
    return c == GraphClass::OrientedTree || c == GraphClass::RootedDirectedTree ||
           c == GraphClass::OrientedLine;
}

inline std::vector<std::vector<Vertex>> underlying_adjacency(const TemporalDigraph& d) {
    std::vector<std::vector<Vertex>> adj(d.vertex_count());
    for (const Arc& a : d.arcs()) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    return adj;
}

}  // namespace detail

// Turn a clique of the connectivity graph of an oriented tree into a temporal
// path containing it. Members are ordered by reachability, the unique tree
// routes between consecutive members are concatenated, and labels are chosen
// greedily earliest-first. Route intermediates may join the path.
inline TemporalPath realize_clique_as_path(const TemporalDigraph& d,
                                           std::vector<Vertex> clique) {
    if (!detail::is_tree_class(classify(d)))
        throw ClassMismatch("realize_clique_as_path expects an oriented tree");
    if (clique.empty()) throw std::invalid_argument("realize_clique_as_path: empty clique");
    std::sort(clique.begin(), clique.end());
    clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
    for (Vertex v : clique)
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("realize_clique_as_path: vertex out of range");
    if (clique.size() == 1) return TemporalPath::single(clique[0]);

    std::vector<std::vector<char>> reach;
    for (Vertex v : clique) reach.push_back(reach_set(d, v));
    std::vector<std::size_t> order(clique.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return reach[a][clique[b]];
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (!reach[order[i]][clique[order[i + 1]]])
            throw std::invalid_argument("realize_clique_as_path: not a connectivity clique");

    auto adj = detail::underlying_adjacency(d);
    auto route = [&](Vertex from, Vertex to) {
        std::vector<Vertex> prev(d.vertex_count(), -1);
        std::vector<Vertex> queue{from};
        prev[from] = from;
        for (std::size_t i = 0; i < queue.size() && prev[to] < 0; ++i)
            for (Vertex nb : adj[queue[i]])
                if (prev[nb] < 0) {
                    prev[nb] = queue[i];
                    queue.push_back(nb);
                }
        std::vector<Vertex> path;
        for (Vertex at = to; at != from; at = prev[at]) {
            if (at < 0) throw std::invalid_argument("realize_clique_as_path: members disconnected");
            path.push_back(at);
        }
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::vector<PathStep> steps;
    TimeLabel now = 0;
    Vertex at = clique[order[0]];
    for (std::size_t i = 1; i < order.size(); ++i) {
        for (Vertex next : route(at, clique[order[i]])) {
            if (next == at) continue;
            if (!d.has_arc(at, next))
                throw std::invalid_argument("realize_clique_as_path: route arc points backward");
            const auto& labels = *d.labels(at, next);
            auto it = std::upper_bound(labels.begin(), labels.end(), now);
            if (it == labels.end())
                throw std::invalid_argument("realize_clique_as_path: no feasible label on route");
            now = *it;
            steps.push_back({at, next, now});
            at = next;
        }
    }
    return TemporalPath::from_steps(steps);
}

// Minimum plain temporal path cover of an oriented tree or forest: color the
// complement of the connectivity graph, then realize each color class, which
// is a clique, as one path. The number of paths equals the maximum temporal
// antichain.
inline PathCover tpc_oriented_tree(const TemporalDigraph& d) {
    if (!detail::is_tree_class(classify(d)))
        throw ClassMismatch("tpc_oriented_tree expects an oriented tree, got " +
                            to_string(classify(d)));
    PathCover cover;
    cover.mode = CoverMode::Plain;
    for (const auto& clique : min_clique_cover_wc(connectivity_graph(d).graph))
        cover.paths.push_back(realize_clique_as_path(d, clique));
    return cover;
}

// Minimum cover of an oriented line by vertex-disjoint paths, optimal in both
// the plain and the temporally disjoint sense. Works leaf to leaf: a chunk
// ending at the leaf is grown backward with greedily largest labels, a chunk
// starting at the leaf forward with greedily smallest labels, and the rest of
// the line is handled the same way. Chunk start vertices form a temporal
// antichain, which certifies optimality.
inline PathCover solve_oriented_line(const TemporalDigraph& d) {
    if (classify(d) != GraphClass::OrientedLine)
        throw ClassMismatch("solve_oriented_line expects an oriented line, got " +
                            to_string(classify(d)));
    int n = d.vertex_count();
    auto adj = detail::underlying_adjacency(d);
    std::vector<char> seen(n, 0);
    PathCover cover;
    cover.mode = CoverMode::TemporallyDisjoint;

    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || adj[s].size() > 1) continue;
        std::vector<Vertex> line{s};
        seen[s] = 1;
        while (true) {
            Vertex at = line.back();
            Vertex next = -1;
            for (Vertex nb : adj[at])
                if (!seen[nb]) next = nb;
            if (next < 0) break;
            seen[next] = 1;
            line.push_back(next);
        }
        std::size_t a = 0;
        while (a < line.size()) {
            if (a + 1 == line.size()) {
                cover.paths.push_back(TemporalPath::single(line[a]));
                ++a;
                continue;
            }
            std::size_t j = a;
            if (d.has_arc(line[a + 1], line[a])) {
                std::vector<PathStep> back;
                TimeLabel now = std::numeric_limits<TimeLabel>::max();
                while (j + 1 < line.size() && d.has_arc(line[j + 1], line[j])) {
                    const auto& labels = *d.labels(line[j + 1], line[j]);
                    auto it = std::lower_bound(labels.begin(), labels.end(), now);
                    if (it == labels.begin()) break;
                    now = *std::prev(it);
                    back.push_back({line[j + 1], line[j], now});
                    ++j;
                }
                std::reverse(back.begin(), back.end());
                cover.paths.push_back(TemporalPath::from_steps(back));
            } else {
                std::vector<PathStep> fwd;
                TimeLabel now = 0;
                while (j + 1 < line.size() && d.has_arc(line[j], line[j + 1])) {
                    const auto& labels = *d.labels(line[j], line[j + 1]);
                    auto it = std::upper_bound(labels.begin(), labels.end(), now);
                    if (it == labels.end()) break;
                    now = *it;
                    fwd.push_back({line[j], line[j + 1], now});
                    ++j;
                }
                if (fwd.empty())
                    cover.paths.push_back(TemporalPath::single(line[a]));
                else
                    cover.paths.push_back(TemporalPath::from_steps(fwd));
            }
            a = j + 1;
        }
    }
    return cover;
}

// Minimum cover of a rooted directed tree (arcs away from the root) by
// vertex-disjoint paths. Deepest uncovered vertices first, each grows a
// maximal path toward the root with greedily largest labels; overlapping
// paths are then trimmed. The intersection of two paths is a shared ancestor
// segment and a proper leading segment of at least one of them; that one
// loses it (the younger path on ties). Path sinks form a temporal antichain.
inline PathCover solve_rooted_tree(const TemporalDigraph& d) {
    int n = d.vertex_count();
    bool rooted = detail::underlying_forest(d);
    for (Vertex v = 0; v < n && rooted; ++v)
        if (d.in_arcs(v).size() > 1) rooted = false;
    if (!rooted)
        throw ClassMismatch("solve_rooted_tree expects arcs oriented away from component roots");

    std::vector<Vertex> par(n, -1);
    for (const Arc& a : d.arcs()) par[a.head] = a.tail;
    std::vector<int> depth(n, -1);
    auto depth_of = [&](auto&& self, Vertex v) -> int {
        if (depth[v] >= 0) return depth[v];
        depth[v] = par[v] < 0 ? 0 : self(self, par[v]) + 1;
        return depth[v];
    };
    for (Vertex v = 0; v < n; ++v) depth_of(depth_of, v);

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });

    // chains run top (closest to root) to bottom; times[i] labels the arc
    // chain[i] -> chain[i+1]
    struct Chain {
        std::vector<Vertex> verts;
        std::vector<TimeLabel> times;
    };
    std::vector<Chain> chains;
    std::vector<char> covered(n, 0);
    for (Vertex v : order) {
        if (covered[v]) continue;
        Chain c;
        c.verts.push_back(v);
        TimeLabel now = std::numeric_limits<TimeLabel>::max();
        Vertex at = v;
        while (par[at] >= 0) {
            const auto& labels = *d.labels(par[at], at);
            auto it = std::lower_bound(labels.begin(), labels.end(), now);
            if (it == labels.begin()) break;
            now = *std::prev(it);
            c.verts.push_back(par[at]);
            c.times.push_back(now);
            at = par[at];
        }
        std::reverse(c.verts.begin(), c.verts.end());
        std::reverse(c.times.begin(), c.times.end());
        for (Vertex w : c.verts) covered[w] = 1;
        chains.push_back(std::move(c));
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < chains.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < chains.size() && !changed; ++j) {
                Chain& p = chains[i];
                Chain& q = chains[j];
                std::vector<char> in_q(n, 0);
                for (Vertex w : q.verts) in_q[w] = 1;
                std::size_t shared = 0;
                while (shared < p.verts.size() && in_q[p.verts[shared]]) ++shared;
                std::size_t shared_q = 0;
                {
                    std::vector<char> in_p(n, 0);
                    for (Vertex w : p.verts) in_p[w] = 1;
                    while (shared_q < q.verts.size() && in_p[q.verts[shared_q]]) ++shared_q;
                }
                bool any = false;
                for (Vertex w : p.verts)
                    if (in_q[w]) any = true;
                if (!any) continue;
                // the shared segment leads at least one chain; trim that one,
                // preferring the younger chain when it leads both
                Chain* victim;
                std::size_t cut;
                std::size_t inter = std::max(shared, shared_q);
                if (inter == 0)
                    throw std::logic_error("solve_rooted_tree: shared segment leads neither chain");
                if (shared == inter && shared_q == inter) {
                    victim = &q;
                    cut = shared_q;
                } else if (shared == inter) {
                    victim = &p;
                    cut = shared;
                } else {
                    victim = &q;
                    cut = shared_q;
                }
                victim->verts.erase(victim->verts.begin(), victim->verts.begin() + cut);
                victim->times.erase(victim->times.begin(),
                                    victim->times.begin() +
                                        std::min(cut, victim->times.size()));
                changed = true;
            }
    }

    PathCover cover;
    cover.mode = CoverMode::TemporallyDisjoint;
    for (const Chain& c : chains) {
        if (c.verts.size() == 1) {
            cover.paths.push_back(TemporalPath::single(c.verts[0]));
        } else {
            std::vector<PathStep> steps;
            for (std::size_t i = 0; i + 1 < c.verts.size(); ++i)
                steps.push_back({c.verts[i], c.verts[i + 1], c.times[i]});
            cover.paths.push_back(TemporalPath::from_steps(steps));
        }
    }
    return cover;
}

}  // namespace tempocover
