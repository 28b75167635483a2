#pragma once

// Instance generators: fixed families, hardness gadgets, and seeded random
// instances. All deterministic for a given argument list.

#include <array>
#include <numeric>
#include <random>

#include "temporal.hpp"

namespace tempocover {

// Transitive tournament on n vertices: arc i -> j for every i < j, labeled
// n - j. Labels strictly decrease along every directed path, so no temporal
// path uses more than one arc.
inline TemporalDigraph transitive_tournament(int n) {
    if (n < 1) throw MalformedInput("transitive_tournament needs n >= 1");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) arcs.push_back({i, j, {n - j}});
    return TemporalDigraph(n, arcs);
}

// Star with k spokes: sources 0..k-1 feed the center k at time 1, the center
// feeds sinks k+1..2k at time 2.
inline TemporalDigraph star(int k) {
    if (k < 1) throw MalformedInput("star needs k >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i) {
        arcs.push_back({i, k, {1}});
        arcs.push_back({k, k + 1 + i, {2}});
    }
    return TemporalDigraph(2 * k + 1, arcs);
}

// Reduction from three-dimensional matching. Elements of the three ground
// sets (each of size q) become vertices 0..3q-1; every triple adds a block of
// nine vertices wired so that all temporal paths have at most three vertices.
// The minimum cover size is 3p + q exactly when the triples contain a perfect
// matching.
inline TemporalDigraph gadget_3dm(const std::vector<std::array<int, 3>>& triples, int q) {
    if (q < 1) throw MalformedInput("gadget_3dm needs q >= 1");
    for (const auto& t : triples)
        for (int c = 0; c < 3; ++c)
            if (t[c] < 0 || t[c] >= q)
                throw MalformedInput("gadget_3dm triple coordinate out of range [0," +
                                     std::to_string(q) + ")");
    int p = static_cast<int>(triples.size());
    int n = 9 * p + 3 * q;
    std::vector<Arc> arcs;
    for (int i = 0; i < p; ++i) {
        int base = 3 * q + 9 * i;
        std::array<Vertex, 3> elem = {triples[i][0], q + triples[i][1], 2 * q + triples[i][2]};
        for (int r = 0; r < 3; ++r) {
            Vertex a1 = base + 3 * r, a2 = a1 + 1, a3 = a1 + 2;
            arcs.push_back({a1, a2, {1}});
            arcs.push_back({a2, a3, {2}});
            arcs.push_back({a2, elem[r], {2}});
        }
        arcs.push_back({base + 2, base + 5, {1}});
        arcs.push_back({base + 5, base + 8, {2}});
    }
    return TemporalDigraph(n, arcs);
}

namespace detail {

inline std::vector<TimeLabel> arith_labels(TimeLabel first, int count, TimeLabel offset) {
    std::vector<TimeLabel> out;
    for (int k = 0; k < count; ++k) out.push_back(offset + first + 2 * k);
    return out;
}

}  // namespace detail

// Reduction from unary bin packing: items x_1..x_n into b bins of capacity B,
// with sum x_i == b*B. A hub c is shared by b corridors (r -> s -> c -> t -> u,
// B copies of each leaf) that are labeled in every layer, plus per-item leaf
// pairs (v -> c, c -> w) labeled only in their own layer. The minimum
// temporally disjoint cover has size b*(b*B - n) + n exactly when the items
// pack.
inline TemporalDigraph gadget_binpacking(const std::vector<int>& x, int b, int B) {
    if (b < 1 || B < 1) throw MalformedInput("gadget_binpacking needs b >= 1 and B >= 1");
    int n = static_cast<int>(x.size());
    if (n < 1) throw MalformedInput("gadget_binpacking needs at least one item");
    for (int xi : x)
        if (xi < 1) throw MalformedInput("gadget_binpacking item sizes must be positive");
    if (std::accumulate(x.begin(), x.end(), 0) != b * B)
        throw MalformedInput("gadget_binpacking needs item sizes summing to b*B");

    Vertex c = 0;
    auto s = [&](int j) { return 1 + (j - 1); };
    auto t = [&](int j) { return 1 + b + (j - 1); };
    auto r = [&](int j, int k) { return 1 + 2 * b + (j - 1) * B + (k - 1); };
    auto u = [&](int j, int k) { return 1 + 2 * b + b * B + (j - 1) * B + (k - 1); };
    std::vector<int> vw_base(n + 1);
    vw_base[0] = 1 + 2 * b + 2 * b * B;
    std::vector<int> copies(n);
    for (int i = 0; i < n; ++i) {
        copies[i] = (x[i] - 1) * (b - 1);
        vw_base[i + 1] = vw_base[i] + 2 * copies[i];
    }
    auto v = [&](int i, int j) { return vw_base[i - 1] + (j - 1); };
    auto w = [&](int i, int j) { return vw_base[i - 1] + copies[i - 1] + (j - 1); };
    int total = vw_base[n];

    std::vector<Arc> arcs;
    auto add = [&](Vertex a, Vertex h, std::vector<TimeLabel> labels) {
        std::sort(labels.begin(), labels.end());
        arcs.push_back({a, h, labels});
    };

    TimeLabel offset = 0;
    for (int i = 1; i <= n; ++i) {
        int xi = x[i - 1];
        for (int j = 1; j <= b; ++j) {
            auto lr = detail::arith_labels(2 * (j - 1) * xi + 1, xi, offset);
            auto ls = detail::arith_labels(2 * (j - 1) * xi + 2, xi, offset);
            auto lt = detail::arith_labels(2 * (j - 1) * xi + 3, xi, offset);
            auto lu = detail::arith_labels(2 * (j - 1) * xi + 4, xi, offset);
            for (int k = 1; k <= B; ++k) {
                add(r(j, k), s(j), lr);
                add(t(j), u(j, k), lu);
            }
            add(s(j), c, ls);
            add(c, t(j), lt);
        }
        std::vector<TimeLabel> lv, lw;
        for (int k = 1; k <= b; ++k) {
            auto lt = detail::arith_labels(2 * (k - 1) * xi + 3, xi, offset);
            auto ls = detail::arith_labels(2 * (k - 1) * xi + 2, xi, offset);
            lv.insert(lv.end(), lt.begin(), lt.end() - 1);
            lw.insert(lw.end(), ls.begin() + 1, ls.end());
        }
        for (int j = 1; j <= copies[i - 1]; ++j) {
            add(v(i, j), c, lv);
            add(c, w(i, j), lw);
        }
        offset += 2 * b * xi + 4;
    }
    return TemporalDigraph(total, arcs);
}

// Target size of the bin packing gadget's cover when the items pack.
inline std::size_t binpacking_target(const std::vector<int>& x, int b, int B) {
    return static_cast<std::size_t>(b) * (static_cast<std::size_t>(b) * B - x.size()) + x.size();
}

namespace detail {

// Uniform labeled tree on n vertices from a random Pruefer sequence.
inline std::vector<std::pair<Vertex, Vertex>> random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (n < 2) return edges;
    if (n == 2) {
        edges.push_back({0, 1});
        return edges;
    }
    std::vector<int> pruefer(n - 2), degree(n, 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& p : pruefer) {
        p = pick(rng);
        ++degree[p];
    }
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int p : pruefer) {
        edges.push_back({leaf, p});
        if (--degree[p] == 1 && p < ptr) {
            leaf = p;
        } else {
            while (degree[++ptr] != 1) {
            }
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return edges;
}

inline std::vector<TimeLabel> random_labels(int ell, int t_max, std::mt19937_64& rng) {
    int max_k = std::min(ell, t_max);
    std::uniform_int_distribution<int> size_pick(1, max_k);
    int k = size_pick(rng);
    std::vector<TimeLabel> all(t_max);
    std::iota(all.begin(), all.end(), 1);
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> j(i, t_max - 1);
        std::swap(all[i], all[j(rng)]);
    }
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace detail

// Seeded random instance of the requested class. The produced digraph may
// classify as a strictly more special class (a rooted tree that happens to be
// a line, for instance), never as a more general one.
inline TemporalDigraph random_instance(GraphClass cls, int n, int ell, int t_max,
                                       std::uint64_t seed) {
    if (n < 1) throw MalformedInput("random_instance needs n >= 1");
    if (ell < 1 || t_max < 1) throw MalformedInput("random_instance needs ell >= 1 and t_max >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> oriented;
    std::uniform_int_distribution<int> coin(0, 1);

    switch (cls) {
        case GraphClass::General: {
            std::uniform_real_distribution<double> roll(0.0, 1.0);
            double p = std::min(1.0, 2.0 / n);
            for (Vertex a = 0; a < n; ++a)
                for (Vertex h = 0; h < n; ++h)
                    if (a != h && roll(rng) < p) oriented.push_back({a, h});
            break;
        }
        case GraphClass::Dag: {
            std::vector<int> rank(n);
            std::iota(rank.begin(), rank.end(), 0);
            std::shuffle(rank.begin(), rank.end(), rng);
            std::uniform_real_distribution<double> roll(0.0, 1.0);
            double p = std::min(1.0, 2.0 / n);
            for (Vertex a = 0; a < n; ++a)
                for (Vertex h = 0; h < n; ++h)
                    if (a != h && rank[a] < rank[h] && roll(rng) < p) oriented.push_back({a, h});
            break;
        }
        case GraphClass::OrientedTree: {
            for (auto [a, h] : detail::random_tree(n, rng))
                oriented.push_back(coin(rng) ? std::pair{h, a} : std::pair{a, h});
            break;
        }
        case GraphClass::RootedDirectedTree: {
            auto edges = detail::random_tree(n, rng);
            std::uniform_int_distribution<int> root_pick(0, n - 1);
            int root = root_pick(rng);
            std::vector<std::vector<Vertex>> adj(n);
            for (auto [a, h] : edges) {
                adj[a].push_back(h);
                adj[h].push_back(a);
            }
            std::vector<int> order{root};
            std::vector<char> seen(n, 0);
            seen[root] = 1;
            for (std::size_t i = 0; i < order.size(); ++i)
                for (Vertex nb : adj[order[i]])
                    if (!seen[nb]) {
                        seen[nb] = 1;
                        oriented.push_back({order[i], nb});
                        order.push_back(nb);
                    }
            break;
        }
        case GraphClass::OrientedLine: {
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i + 1 < n; ++i)
                oriented.push_back(coin(rng) ? std::pair{perm[i + 1], perm[i]}
                                             : std::pair{perm[i], perm[i + 1]});
            break;
        }
    }

    std::vector<Arc> arcs;
    for (auto [a, h] : oriented) arcs.push_back({a, h, detail::random_labels(ell, t_max, rng)});
    return TemporalDigraph(n, arcs);
}

}  // namespace tempocover
