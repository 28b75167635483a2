#pragma once

// Core types for temporal digraphs and temporal path covers.
//
// A temporal digraph is a digraph whose arcs carry sets of integer time
// labels. A (strict) temporal path traverses arcs with strictly increasing
// labels and never repeats a vertex. Covers come in two flavours: plain
// (paths may overlap arbitrarily) and temporally disjoint (no two paths
// occupy the same vertex at the same time).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tempocover {

using Vertex = int;
using TimeLabel = int;

struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

struct ClassMismatch : std::runtime_error {
    explicit ClassMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    std::vector<TimeLabel> labels;  // sorted, distinct, nonempty

    bool operator==(const Arc& o) const {
        return tail == o.tail && head == o.head && labels == o.labels;
    }
};

class TemporalDigraph {
public:
    TemporalDigraph() = default;

    TemporalDigraph(int n, std::vector<Arc> arcs) : n_(n) {
        if (n < 0) throw MalformedInput("vertex count must be nonnegative");
        // Merge parallel arcs, validate ids and labels.
        std::unordered_map<std::int64_t, std::size_t> seen;
        for (const Arc& a : arcs) {
            if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
                throw MalformedInput("arc endpoint out of range: " + std::to_string(a.tail) +
                                     " -> " + std::to_string(a.head));
            if (a.tail == a.head)
                throw MalformedInput("self-loop on vertex " + std::to_string(a.tail));
            if (a.labels.empty())
                throw MalformedInput("arc without labels: " + std::to_string(a.tail) + " -> " +
                                     std::to_string(a.head));
            for (TimeLabel t : a.labels)
                if (t < 1) throw MalformedInput("nonpositive time label " + std::to_string(t));
            std::int64_t key = static_cast<std::int64_t>(a.tail) * n + a.head;
            auto it = seen.find(key);
            if (it == seen.end()) {
                seen.emplace(key, arcs_.size());
                arcs_.push_back(a);
            } else {
                auto& ls = arcs_[it->second].labels;
                ls.insert(ls.end(), a.labels.begin(), a.labels.end());
            }
        }
        for (Arc& a : arcs_) {
            std::sort(a.labels.begin(), a.labels.end());
            a.labels.erase(std::unique(a.labels.begin(), a.labels.end()), a.labels.end());
        }
        std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
            return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
        });
        out_.assign(n_, {});
        in_.assign(n_, {});
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            out_[arcs_[i].tail].push_back(i);
            in_[arcs_[i].head].push_back(i);
            index_.emplace(static_cast<std::int64_t>(arcs_[i].tail) * n_ + arcs_[i].head, i);
        }
    }

    int vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Maximum label present; 1 for graphs without arcs.
    TimeLabel t_max() const {
        TimeLabel t = 1;
        for (const Arc& a : arcs_) t = std::max(t, a.labels.back());
        return t;
    }

    // Maximum number of labels on a single arc; computed, never stored.
    std::size_t max_labels_per_arc() const {
        std::size_t l = 0;
        for (const Arc& a : arcs_) l = std::max(l, a.labels.size());
        return l;
    }

    bool has_arc(Vertex u, Vertex v) const { return arc_index(u, v).has_value(); }

    std::optional<std::size_t> arc_index(Vertex u, Vertex v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
        auto it = index_.find(static_cast<std::int64_t>(u) * n_ + v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<TimeLabel>* labels(Vertex u, Vertex v) const {
        auto idx = arc_index(u, v);
        return idx ? &arcs_[*idx].labels : nullptr;
    }

    bool has_label(Vertex u, Vertex v, TimeLabel t) const {
        const auto* ls = labels(u, v);
        return ls && std::binary_search(ls->begin(), ls->end(), t);
    }

    const std::vector<std::size_t>& out_arcs(Vertex v) const { return out_[v]; }
    const std::vector<std::size_t>& in_arcs(Vertex v) const { return in_[v]; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::unordered_map<std::int64_t, std::size_t> index_;
};

struct PathStep {
    Vertex from = 0;
    Vertex to = 0;
    TimeLabel t = 0;
};

// A temporal path: either a single vertex or a chain of arc steps with
// strictly increasing labels. Structural chain errors are rejected here;
// whether the steps exist in a given digraph is validate_path's business.
class TemporalPath {
public:
    static TemporalPath single(Vertex v) {
        TemporalPath p;
        p.vertices_.push_back(v);
        return p;
    }

    static TemporalPath from_steps(const std::vector<PathStep>& steps) {
        if (steps.empty()) throw MalformedInput("empty step list; use single() for one vertex");
        TemporalPath p;
        p.vertices_.push_back(steps.front().from);
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (i > 0 && steps[i].from != steps[i - 1].to)
                throw MalformedInput("steps do not chain at position " + std::to_string(i));
            p.vertices_.push_back(steps[i].to);
            p.times_.push_back(steps[i].t);
        }
        return p;
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<TimeLabel>& times() const { return times_; }
    std::size_t size() const { return vertices_.size(); }
    bool is_single() const { return times_.empty(); }

    std::vector<PathStep> steps() const {
        std::vector<PathStep> s;
        for (std::size_t i = 0; i < times_.size(); ++i)
            s.push_back({vertices_[i], vertices_[i + 1], times_[i]});
        return s;
    }

    bool operator==(const TemporalPath& o) const {
        return vertices_ == o.vertices_ && times_ == o.times_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<TimeLabel> times_;
};

// True iff P is a valid strict temporal path of D: every step is an arc of D
// carrying the step's label, labels strictly increase, no vertex repeats.
// Out-of-range vertices are a malformed path, not a "false".
inline bool validate_path(const TemporalDigraph& d, const TemporalPath& p) {
    for (Vertex v : p.vertices())
        if (v < 0 || v >= d.vertex_count())
            throw MalformedInput("path vertex out of range: " + std::to_string(v));
    std::vector<Vertex> sorted = p.vertices();
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const auto& vs = p.vertices();
    const auto& ts = p.times();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i > 0 && ts[i] <= ts[i - 1]) return false;
        if (!d.has_label(vs[i], vs[i + 1], ts[i])) return false;
    }
    return true;
}

// Occupation intervals. A path occupies its i-th vertex from the label of the
// arc it arrived by until the label of the arc it leaves by. Endpoints are
// half-unbounded: a source is occupied since forever, a sink forever after,
// and a single-vertex path occupies its vertex at all times.
struct TimeInterval {
    static constexpr std::int64_t neg_inf = std::numeric_limits<std::int64_t>::min() / 4;
    static constexpr std::int64_t pos_inf = std::numeric_limits<std::int64_t>::max() / 4;

    std::int64_t lo = neg_inf;
    std::int64_t hi = pos_inf;

    bool intersects(const TimeInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool operator==(const TimeInterval& o) const { return lo == o.lo && hi == o.hi; }
};

inline std::vector<std::pair<Vertex, TimeInterval>> occupation(const TemporalPath& p) {
    std::vector<std::pair<Vertex, TimeInterval>> occ;
    const auto& vs = p.vertices();
    const auto& ts = p.times();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        TimeInterval iv;
        if (i > 0) iv.lo = ts[i - 1];
        if (i + 1 < vs.size()) iv.hi = ts[i];
        occ.emplace_back(vs[i], iv);
    }
    return occ;
}

// Two paths are temporally disjoint iff at every shared vertex their
// occupation intervals are disjoint.
inline bool are_temporally_disjoint(const TemporalPath& a, const TemporalPath& b) {
    auto oa = occupation(a);
    auto ob = occupation(b);
    for (const auto& [va, ia] : oa)
        for (const auto& [vb, ib] : ob)
            if (va == vb && ia.intersects(ib)) return false;
    return true;
}

enum class GraphClass {
    General,
    Dag,
    OrientedTree,
    RootedDirectedTree,
    OrientedLine,
};

inline std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::General: return "general";
        case GraphClass::Dag: return "dag";
        case GraphClass::OrientedTree: return "oriented_tree";
        case GraphClass::RootedDirectedTree: return "rooted_directed_tree";
        case GraphClass::OrientedLine: return "oriented_line";
    }
    return "general";
}

namespace detail {

inline bool is_acyclic(const TemporalDigraph& d) {
    int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const Arc& a : d.arcs()) ++indeg[a.head];
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        ++seen;
        for (std::size_t ai : d.out_arcs(v))
            if (--indeg[d.arcs()[ai].head] == 0) queue.push_back(d.arcs()[ai].head);
    }
    return seen == n;
}

// Underlying undirected graph has no cycle (digraph orientation of a forest).
inline bool underlying_forest(const TemporalDigraph& d) {
    int n = d.vertex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Arc& a : d.arcs()) {
        int ra = find(a.tail), rb = find(a.head);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace detail

// Most specific class of D. Tree-like classes use forest semantics (each
// connected component a tree / arborescence / path), so deleting arcs never
// makes the class more general.
inline GraphClass classify(const TemporalDigraph& d) {
    if (!detail::is_acyclic(d)) return GraphClass::General;
    if (!detail::underlying_forest(d)) return GraphClass::Dag;
    int n = d.vertex_count();
    std::vector<int> deg(n, 0), indeg(n, 0);
    for (const Arc& a : d.arcs()) {
        ++deg[a.tail];
        ++deg[a.head];
        ++indeg[a.head];
    }
    bool line = true;
    for (int v = 0; v < n; ++v)
        if (deg[v] > 2) line = false;
    if (line) return GraphClass::OrientedLine;
    bool rooted = true;
    for (int v = 0; v < n; ++v)
        if (indeg[v] > 1) rooted = false;
    if (rooted) return GraphClass::RootedDirectedTree;
    return GraphClass::OrientedTree;
}

enum class CoverMode { Plain, TemporallyDisjoint };

inline std::string to_string(CoverMode m) {
    return m == CoverMode::Plain ? "plain" : "temporally_disjoint";
}

struct PathCover {
    CoverMode mode = CoverMode::Plain;
    std::vector<TemporalPath> paths;

    std::size_t size() const { return paths.size(); }
};

// True iff every path is valid, the paths together cover all vertices of D,
// and (in temporally disjoint mode) all pairs of paths are disjoint.
inline bool verify_cover(const TemporalDigraph& d, const PathCover& cover) {
    std::vector<char> covered(d.vertex_count(), 0);
    for (const TemporalPath& p : cover.paths) {
        if (!validate_path(d, p)) return false;
        for (Vertex v : p.vertices()) covered[v] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    if (cover.mode == CoverMode::TemporallyDisjoint)
        for (std::size_t i = 0; i < cover.paths.size(); ++i)
            for (std::size_t j = i + 1; j < cover.paths.size(); ++j)
                if (!are_temporally_disjoint(cover.paths[i], cover.paths[j])) return false;
    return true;
}

}  // namespace tempocover
