#pragma once

// Temporal reachability and the connectivity graph.
//
// u reaches v when a strict temporal path (at least one arc) goes from u to
// v. The connectivity graph joins u and v when either reaches the other; a
// temporal antichain is an independent set there.

#include <vector>

#include "temporal.hpp"
#include "weakly_chordal.hpp"

namespace tempocover {

// Earliest-arrival sweep from source: one pass over arc events in increasing
// label order. An event (a,b,t) fires when a was reached strictly before t.
inline std::vector<char> reach_set(const TemporalDigraph& d, Vertex source) {
    if (source < 0 || source >= d.vertex_count())
        throw MalformedInput("source out of range: " + std::to_string(source));
    struct Event {
        TimeLabel t;
        Vertex a, b;
    };
    std::vector<Event> events;
    for (const Arc& arc : d.arcs())
        for (TimeLabel t : arc.labels) events.push_back({t, arc.tail, arc.head});
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.t < y.t; });
    const TimeLabel unreached = std::numeric_limits<TimeLabel>::max();
    std::vector<TimeLabel> arrival(d.vertex_count(), unreached);
    arrival[source] = 0;
    for (const Event& e : events)
        if (arrival[e.a] < e.t && arrival[e.b] > e.t) arrival[e.b] = e.t;
    std::vector<char> reach(d.vertex_count(), 0);
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (v != source && arrival[v] != unreached) reach[v] = 1;
    return reach;
}

struct ConnectivityGraph {
    StaticGraph graph;
    // forward[u*n+v] records whether u reaches v; both directions can hold in
    // general digraphs, at most one on temporal DAGs.
    std::vector<char> forward;

    bool reaches(Vertex u, Vertex v) const {
        return forward[static_cast<std::size_t>(u) * graph.vertex_count() + v] != 0;
    }
};

inline ConnectivityGraph connectivity_graph(const TemporalDigraph& d) {
    int n = d.vertex_count();
    ConnectivityGraph cg;
    cg.graph = StaticGraph(n);
    cg.forward.assign(static_cast<std::size_t>(n) * n, 0);
    for (Vertex u = 0; u < n; ++u) {
        std::vector<char> r = reach_set(d, u);
        for (Vertex v = 0; v < n; ++v)
            if (r[v]) {
                cg.forward[static_cast<std::size_t>(u) * n + v] = 1;
                if (!cg.graph.has_edge(u, v)) cg.graph.add_edge(u, v);
            }
    }
    return cg;
}

// Maximum independent set search, branch and bound on the highest-degree
// open vertex. Used for antichains outside the weakly chordal classes.
namespace detail {

inline void mis_branch(const StaticGraph& g, std::vector<char>& open, std::vector<Vertex>& cur,
                       std::vector<Vertex>& best) {
    int n = g.vertex_count();
    int rem = 0;
    for (Vertex v = 0; v < n; ++v) rem += open[v];
    if (cur.size() + rem <= best.size()) return;
    Vertex pick = -1;
    int pick_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (!open[v]) continue;
        int deg = 0;
        for (Vertex w = 0; w < n; ++w)
            if (open[w] && g.has_edge(v, w)) ++deg;
        if (deg > pick_deg) {
            pick_deg = deg;
            pick = v;
        }
    }
    if (pick < 0) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    std::vector<Vertex> closed;
    closed.push_back(pick);
    open[pick] = 0;
    for (Vertex w = 0; w < n; ++w)
        if (open[w] && g.has_edge(pick, w)) {
            open[w] = 0;
            closed.push_back(w);
        }
    cur.push_back(pick);
    mis_branch(g, open, cur, best);
    cur.pop_back();
    for (Vertex w : closed) open[w] = 1;
    open[pick] = 0;
    mis_branch(g, open, cur, best);
    open[pick] = 1;
}

inline std::vector<Vertex> mis_exact(const StaticGraph& g) {
    std::vector<char> open(g.vertex_count(), 1);
    std::vector<Vertex> cur, best;
    mis_branch(g, open, cur, best);
    std::sort(best.begin(), best.end());
    return best;
}

}  // namespace detail

// Maximum temporal antichain. Oriented-tree classes go through the weakly
// chordal machinery (their connectivity graphs are weakly chordal); anything
// else falls back to exact branch and bound.
inline std::vector<Vertex> max_temporal_antichain(const TemporalDigraph& d) {
    ConnectivityGraph cg = connectivity_graph(d);
    GraphClass cls = classify(d);
    if (cls == GraphClass::OrientedTree || cls == GraphClass::RootedDirectedTree ||
        cls == GraphClass::OrientedLine)
        return max_independent_set_wc(cg.graph);
    return detail::mis_exact(cg.graph);
}

}  // namespace tempocover
