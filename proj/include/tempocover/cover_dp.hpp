#pragma once

// Minimum path covers by dynamic programming over a nice tree decomposition.
// A state describes how the paths of a partial solution cross the current
// bag: per path the ordered bag visits, the connector between consecutive
// visits (a concrete arc, or a gap through vertices entirely on one side of
// the bag), and how the path continues at both ends. Gap and end promises on
// the far side carry pinned arc labels and are resolved when the matching
// vertices are introduced, or die when their bag vertex is forgotten.
// Feasible for small width and small maximum label only.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>

#include "tree_decomposition.hpp"

namespace tempocover {

struct ExpandedArc {
    Vertex tail, head;
    TimeLabel t;
    std::size_t orig_arc;
};

// Parallel single-label arcs, one per (arc, label) pair, with the index of
// the originating multi-label arc.
struct ExpandedDigraph {
    int n = 0;
    std::vector<ExpandedArc> arcs;
    std::vector<std::vector<std::size_t>> out, in;
};

inline ExpandedDigraph expand_multiarcs(const TemporalDigraph& d) {
    ExpandedDigraph e;
    e.n = d.vertex_count();
    e.out.resize(e.n);
    e.in.resize(e.n);
    for (std::size_t i = 0; i < d.arcs().size(); ++i)
        for (TimeLabel t : d.arcs()[i].labels) {
            e.out[d.arcs()[i].tail].push_back(e.arcs.size());
            e.in[d.arcs()[i].head].push_back(e.arcs.size());
            e.arcs.push_back({d.arcs()[i].tail, d.arcs()[i].head, t, i});
        }
    return e;
}

namespace dpdetail {

constexpr TimeLabel kNeg = std::numeric_limits<TimeLabel>::min() / 4;
constexpr TimeLabel kPos = std::numeric_limits<TimeLabel>::max() / 4;

constexpr int kBelow = 0;
constexpr int kAbove = 1;

struct Endpoint {
    bool open;  // false: the path truly starts or ends at the boundary visit
    int side;   // for open endpoints, where the continuation lives
    TimeLabel t;
};

struct Connector {
    bool direct;  // concrete in-bag arc; otherwise a gap on one side
    int side;
    TimeLabel t_out, t_in;  // leave previous visit / arrive at next visit
};

struct VisitRec {
    Vertex v;
    TimeLabel t_in, t_out;  // kNeg / kPos at true path ends
};

struct Part {
    Endpoint pre, post;
    std::vector<Vertex> visits;
    std::vector<Connector> conns;
    std::vector<VisitRec> wit;  // sorted by t_in

    std::vector<int> encode_full() const {
        std::vector<int> e{pre.open, pre.open ? pre.side : 0, pre.open ? pre.t : 0,
                           static_cast<int>(visits.size())};
        for (Vertex v : visits) e.push_back(v);
        for (const Connector& c : conns) {
            e.push_back(c.direct);
            e.push_back(c.direct ? 0 : c.side);
            e.push_back(c.t_out);
            e.push_back(c.t_in);
        }
        e.push_back(post.open);
        e.push_back(post.open ? post.side : 0);
        e.push_back(post.open ? post.t : 0);
        return e;
    }

    // join matching key: sides stripped, everything else kept
    std::vector<int> encode_match() const {
        std::vector<int> e{pre.open, pre.open ? pre.t : 0, static_cast<int>(visits.size())};
        for (Vertex v : visits) e.push_back(v);
        for (const Connector& c : conns) {
            e.push_back(c.direct);
            e.push_back(c.t_out);
            e.push_back(c.t_in);
        }
        e.push_back(post.open);
        e.push_back(post.open ? post.t : 0);
        return e;
    }
};

struct State {
    std::vector<Part> parts;  // sorted by encode_full
    int used = 0;
    std::vector<std::vector<VisitRec>> done;
};

inline void add_visit(Part& p, Vertex x, TimeLabel arr, TimeLabel dep) {
    VisitRec r{x, arr, dep};
    auto it = std::lower_bound(p.wit.begin(), p.wit.end(), r,
                               [](const VisitRec& a, const VisitRec& b) {
                                   return a.t_in < b.t_in;
                               });
    p.wit.insert(it, r);
}

inline void canonicalize(State& s) {
    std::stable_sort(s.parts.begin(), s.parts.end(), [](const Part& a, const Part& b) {
        return a.encode_full() < b.encode_full();
    });
}

inline std::vector<int> state_key(const State& s) {
    std::vector<int> key;
    for (const Part& p : s.parts) {
        auto e = p.encode_full();
        key.push_back(static_cast<int>(e.size()));
        key.insert(key.end(), e.begin(), e.end());
    }
    return key;
}

using Memo = std::map<std::vector<int>, State>;

struct Limits {
    int used_cap;
    std::size_t state_cap;
    std::string proxy;
};

inline void emit(Memo& memo, State s, const Limits& lim) {
    if (s.used > lim.used_cap) return;
    canonicalize(s);
    auto key = state_key(s);
    auto it = memo.find(key);
    if (it == memo.end()) {
        if (memo.size() >= lim.state_cap)
            throw ResourceLimit("cover dp state table overflow, " + lim.proxy);
        memo.emplace(std::move(key), std::move(s));
    } else if (s.used < it->second.used) {
        it->second = std::move(s);
    }
}

// one way of weaving the introduced vertex into the state
struct Insertion {
    int kind;  // 0 resolve pre, 1 resolve post, 2 split gap, 3 new part
    std::size_t slot = 0;
    Connector c1{}, c2{};
    Endpoint np{}, np2{};
    TimeLabel arr = kNeg, dep = kPos;
};

inline std::vector<Insertion> part_insertions(const TemporalDigraph& d, const Part& p, Vertex x,
                                              const std::vector<TimeLabel>& tin,
                                              const std::vector<TimeLabel>& tout) {
    std::vector<Insertion> opts;
    auto pre_variants = [&](TimeLabel before) {
        std::vector<Endpoint> v{{false, 0, 0}};
        for (TimeLabel t0 : tin)
            if (t0 < before) v.push_back({true, kAbove, t0});
        return v;
    };
    auto post_variants = [&](TimeLabel after) {
        std::vector<Endpoint> v{{false, 0, 0}};
        for (TimeLabel u : tout)
            if (u > after) v.push_back({true, kAbove, u});
        return v;
    };

    if (p.pre.open && p.pre.side == kAbove) {
        TimeLabel t1 = p.pre.t;
        if (d.has_label(x, p.visits.front(), t1))
            for (const Endpoint& np : pre_variants(t1))
                opts.push_back({0, 0, {true, 0, t1, t1}, {}, np, {},
                                np.open ? np.t : kNeg, t1});
        for (TimeLabel o : tout)
            if (o < t1)
                for (const Endpoint& np : pre_variants(o))
                    opts.push_back({0, 0, {false, kAbove, o, t1}, {}, np, {},
                                    np.open ? np.t : kNeg, o});
    }
    if (p.post.open && p.post.side == kAbove) {
        TimeLabel tk = p.post.t;
        if (d.has_label(p.visits.back(), x, tk))
            for (const Endpoint& np : post_variants(tk))
                opts.push_back({1, 0, {true, 0, tk, tk}, {}, np, {}, tk,
                                np.open ? np.t : kPos});
        for (TimeLabel i : tin)
            if (i > tk)
                for (const Endpoint& np : post_variants(i))
                    opts.push_back({1, 0, {false, kAbove, tk, i}, {}, np, {}, i,
                                    np.open ? np.t : kPos});
    }
    for (std::size_t j = 0; j < p.conns.size(); ++j) {
        const Connector& g = p.conns[j];
        if (g.direct || g.side != kAbove) continue;
        std::vector<Connector> firsts, seconds;
        if (d.has_label(p.visits[j], x, g.t_out)) firsts.push_back({true, 0, g.t_out, g.t_out});
        for (TimeLabel a : tin)
            if (g.t_out < a && a < g.t_in) firsts.push_back({false, kAbove, g.t_out, a});
        if (d.has_label(x, p.visits[j + 1], g.t_in)) seconds.push_back({true, 0, g.t_in, g.t_in});
        for (TimeLabel b : tout)
            if (g.t_out < b && b < g.t_in) seconds.push_back({false, kAbove, b, g.t_in});
        for (const Connector& c1 : firsts)
            for (const Connector& c2 : seconds)
                if (c1.t_in < c2.t_out)
                    opts.push_back({2, j, c1, c2, {}, {}, c1.t_in, c2.t_out});
    }
    return opts;
}

inline std::vector<Insertion> new_part_options(const std::vector<TimeLabel>& tin,
                                               const std::vector<TimeLabel>& tout) {
    std::vector<Endpoint> pres{{false, 0, 0}}, posts{{false, 0, 0}};
    for (TimeLabel t : tin) pres.push_back({true, kAbove, t});
    for (TimeLabel u : tout) posts.push_back({true, kAbove, u});
    std::vector<Insertion> opts;
    for (const Endpoint& a : pres)
        for (const Endpoint& b : posts) {
            if (a.open && b.open && a.t >= b.t) continue;
            opts.push_back({3, 0, {}, {}, a, b, a.open ? a.t : kNeg, b.open ? b.t : kPos});
        }
    return opts;
}

inline Part apply_insertion(const Part& p, const Insertion& ins, Vertex x) {
    Part q = p;
    if (ins.kind == 0) {
        q.visits.insert(q.visits.begin(), x);
        q.conns.insert(q.conns.begin(), ins.c1);
        q.pre = ins.np;
    } else if (ins.kind == 1) {
        q.visits.push_back(x);
        q.conns.push_back(ins.c1);
        q.post = ins.np;
    } else {
        q.visits.insert(q.visits.begin() + ins.slot + 1, x);
        q.conns[ins.slot] = ins.c1;
        q.conns.insert(q.conns.begin() + ins.slot + 1, ins.c2);
    }
    add_visit(q, x, ins.arr, ins.dep);
    return q;
}

inline Part make_new_part(const Insertion& ins, Vertex x) {
    Part q;
    q.pre = ins.np;
    q.post = ins.np2;
    q.visits = {x};
    add_visit(q, x, ins.arr, ins.dep);
    return q;
}

inline bool intervals_clash(const std::vector<std::pair<TimeLabel, TimeLabel>>& iv,
                            TimeLabel arr, TimeLabel dep) {
    for (auto [a, b] : iv)
        if (arr <= b && a <= dep) return true;
    return false;
}

// a pinned promise at a bag visit can only ever be resolved by weaving in a
// vertex that is still unseen, so once no unseen neighbour carries the exact
// label the state is dead and can be dropped
inline bool context_viable(const TemporalDigraph& d, Vertex v, bool incoming, TimeLabel t,
                           const std::vector<char>& seen) {
    const auto& idx = incoming ? d.in_arcs(v) : d.out_arcs(v);
    for (std::size_t ai : idx) {
        const Arc& a = d.arcs()[ai];
        Vertex other = incoming ? a.tail : a.head;
        if (seen[other]) continue;
        if (std::binary_search(a.labels.begin(), a.labels.end(), t)) return true;
    }
    return false;
}

inline bool state_viable(const TemporalDigraph& d, const State& s, const std::vector<char>& seen,
                         int unseen_count) {
    for (const Part& p : s.parts) {
        int above = 0;
        if (p.pre.open && p.pre.side == kAbove) {
            ++above;
            if (!context_viable(d, p.visits.front(), true, p.pre.t, seen)) return false;
        }
        if (p.post.open && p.post.side == kAbove) {
            ++above;
            if (!context_viable(d, p.visits.back(), false, p.post.t, seen)) return false;
        }
        for (std::size_t j = 0; j < p.conns.size(); ++j) {
            const Connector& g = p.conns[j];
            if (g.direct || g.side != kAbove) continue;
            ++above;
            if (!context_viable(d, p.visits[j], false, g.t_out, seen)) return false;
            if (!context_viable(d, p.visits[j + 1], true, g.t_in, seen)) return false;
        }
        // every weave resolves at most one context of this part, and each weave
        // spends a distinct future vertex
        if (above > unseen_count) return false;
    }
    return true;
}

inline void introduce_states(const TemporalDigraph& d, const State& s, Vertex x,
                             const std::vector<char>& seen, bool disjoint, Memo& out,
                             const Limits& lim) {
    std::vector<TimeLabel> tin, tout;
    for (std::size_t ai : d.in_arcs(x)) {
        const Arc& a = d.arcs()[ai];
        if (seen[a.tail]) continue;
        for (TimeLabel t : a.labels) tin.push_back(t);
    }
    for (std::size_t ai : d.out_arcs(x)) {
        const Arc& a = d.arcs()[ai];
        if (seen[a.head]) continue;
        for (TimeLabel t : a.labels) tout.push_back(t);
    }
    std::sort(tin.begin(), tin.end());
    tin.erase(std::unique(tin.begin(), tin.end()), tin.end());
    std::sort(tout.begin(), tout.end());
    tout.erase(std::unique(tout.begin(), tout.end()), tout.end());

    std::vector<std::vector<Insertion>> per_part;
    for (const Part& p : s.parts) per_part.push_back(part_insertions(d, p, x, tin, tout));
    std::vector<Insertion> fresh = new_part_options(tin, tout);

    std::vector<int> choice(s.parts.size(), -1);
    std::vector<std::pair<TimeLabel, TimeLabel>> iv;
    std::vector<Insertion> newbies;

    auto finish = [&](int visit_count) {
        if (visit_count == 0) return;
        State t;
        t.used = s.used + static_cast<int>(newbies.size());
        if (t.used > lim.used_cap) return;
        t.done = s.done;
        for (std::size_t i = 0; i < s.parts.size(); ++i)
            t.parts.push_back(choice[i] < 0 ? s.parts[i]
                                            : apply_insertion(s.parts[i], per_part[i][choice[i]], x));
        for (const Insertion& ins : newbies) t.parts.push_back(make_new_part(ins, x));
        emit(out, std::move(t), lim);
    };

    auto rec_new = [&](auto&& self, std::size_t from, int visit_count) -> void {
        finish(visit_count);
        if (s.used + static_cast<int>(newbies.size()) >= lim.used_cap) return;
        for (std::size_t k = from; k < fresh.size(); ++k) {
            if (disjoint && intervals_clash(iv, fresh[k].arr, fresh[k].dep)) continue;
            iv.push_back({fresh[k].arr, fresh[k].dep});
            newbies.push_back(fresh[k]);
            self(self, k, visit_count + 1);
            newbies.pop_back();
            iv.pop_back();
        }
    };

    auto rec_part = [&](auto&& self, std::size_t i, int visit_count) -> void {
        if (i == s.parts.size()) {
            rec_new(rec_new, 0, visit_count);
            return;
        }
        self(self, i + 1, visit_count);
        for (std::size_t k = 0; k < per_part[i].size(); ++k) {
            const Insertion& ins = per_part[i][k];
            if (disjoint && intervals_clash(iv, ins.arr, ins.dep)) continue;
            iv.push_back({ins.arr, ins.dep});
            choice[i] = static_cast<int>(k);
            self(self, i + 1, visit_count + 1);
            choice[i] = -1;
            iv.pop_back();
        }
    };
    rec_part(rec_part, 0, 0);
}

inline void forget_states(const State& s, Vertex z, Memo& out, const Limits& lim) {
    State t;
    t.used = s.used;
    t.done = s.done;
    for (const Part& p : s.parts) {
        auto pos_it = std::find(p.visits.begin(), p.visits.end(), z);
        if (pos_it == p.visits.end()) {
            t.parts.push_back(p);
            continue;
        }
        std::size_t pos = pos_it - p.visits.begin();
        bool first = pos == 0, last = pos + 1 == p.visits.size();
        if (first && p.pre.open && p.pre.side == kAbove) return;
        if (!first && !p.conns[pos - 1].direct && p.conns[pos - 1].side == kAbove) return;
        if (last && p.post.open && p.post.side == kAbove) return;
        if (!last && !p.conns[pos].direct && p.conns[pos].side == kAbove) return;
        if (first && last) {
            t.done.push_back(p.wit);
            continue;
        }
        Part q = p;
        if (first) {
            q.pre = {true, kBelow, q.conns[0].t_in};
            q.visits.erase(q.visits.begin());
            q.conns.erase(q.conns.begin());
        } else if (last) {
            q.post = {true, kBelow, q.conns[pos - 1].t_out};
            q.visits.pop_back();
            q.conns.pop_back();
        } else {
            Connector merged{false, kBelow, q.conns[pos - 1].t_out, q.conns[pos].t_in};
            q.conns[pos - 1] = merged;
            q.conns.erase(q.conns.begin() + pos);
            q.visits.erase(q.visits.begin() + pos);
        }
        t.parts.push_back(std::move(q));
    }
    emit(out, std::move(t), lim);
}

inline std::optional<Part> merge_parts(const Part& a, const Part& b) {
    Part m;
    auto merge_end = [](const Endpoint& x, const Endpoint& y) -> std::optional<Endpoint> {
        if (!x.open) return x;
        if (x.side == kBelow && y.side == kBelow) return std::nullopt;
        return Endpoint{true, x.side == kAbove && y.side == kAbove ? kAbove : kBelow, x.t};
    };
    auto pre = merge_end(a.pre, b.pre);
    auto post = merge_end(a.post, b.post);
    if (!pre || !post) return std::nullopt;
    m.pre = *pre;
    m.post = *post;
    m.visits = a.visits;
    for (std::size_t i = 0; i < a.conns.size(); ++i) {
        const Connector &x = a.conns[i], &y = b.conns[i];
        if (x.direct) {
            m.conns.push_back(x);
            continue;
        }
        if (x.side == kBelow && y.side == kBelow) return std::nullopt;
        m.conns.push_back({false, x.side == kAbove && y.side == kAbove ? kAbove : kBelow,
                           x.t_out, x.t_in});
    }
    m.wit.resize(a.wit.size() + b.wit.size());
    auto end = std::merge(a.wit.begin(), a.wit.end(), b.wit.begin(), b.wit.end(), m.wit.begin(),
                          [](const VisitRec& u, const VisitRec& v) { return u.t_in < v.t_in; });
    m.wit.resize(end - m.wit.begin());
    m.wit.erase(std::unique(m.wit.begin(), m.wit.end(),
                            [](const VisitRec& u, const VisitRec& v) {
                                return u.v == v.v && u.t_in == v.t_in && u.t_out == v.t_out;
                            }),
                m.wit.end());
    return m;
}

inline void join_states(const State& s1, const State& s2, Memo& out, const Limits& lim) {
    if (s1.parts.size() != s2.parts.size()) return;
    int used = s1.used + s2.used - static_cast<int>(s1.parts.size());
    if (used > lim.used_cap) return;
    std::map<std::vector<int>, std::pair<std::vector<const Part*>, std::vector<const Part*>>>
        groups;
    for (const Part& p : s1.parts) groups[p.encode_match()].first.push_back(&p);
    for (const Part& p : s2.parts) groups[p.encode_match()].second.push_back(&p);
    for (const auto& [key, g] : groups)
        if (g.first.size() != g.second.size()) return;

    std::vector<const std::pair<std::vector<const Part*>, std::vector<const Part*>>*> glist;
    for (const auto& [key, g] : groups) glist.push_back(&g);

    std::vector<Part> acc;
    auto rec_group = [&](auto&& self, std::size_t gi, std::size_t ai,
                         std::vector<char>& taken) -> void {
        if (gi == glist.size()) {
            State t;
            t.parts = acc;
            t.used = used;
            t.done = s1.done;
            t.done.insert(t.done.end(), s2.done.begin(), s2.done.end());
            emit(out, std::move(t), lim);
            return;
        }
        const auto& [la, lb] = *glist[gi];
        if (ai == la.size()) {
            std::vector<char> fresh(gi + 1 < glist.size() ? glist[gi + 1]->second.size() : 0, 0);
            self(self, gi + 1, 0, fresh);
            return;
        }
        std::set<std::vector<int>> tried;
        for (std::size_t bi = 0; bi < lb.size(); ++bi) {
            if (taken[bi]) continue;
            auto sig = lb[bi]->encode_full();
            if (!tried.insert(sig).second) continue;
            auto m = merge_parts(*la[ai], *lb[bi]);
            if (!m) continue;
            taken[bi] = 1;
            acc.push_back(std::move(*m));
            self(self, gi, ai + 1, taken);
            acc.pop_back();
            taken[bi] = 0;
        }
    };
    std::vector<char> taken0(glist.empty() ? 0 : glist[0]->second.size(), 0);
    rec_group(rec_group, 0, 0, taken0);
}

inline PathCover cover_from_state(const State& st, CoverMode mode) {
    PathCover cover;
    cover.mode = mode;
    for (const auto& wit : st.done) {
        if (wit.empty()) throw std::logic_error("cover dp: empty path witness");
        if (wit.size() == 1) {
            cover.paths.push_back(TemporalPath::single(wit[0].v));
            continue;
        }
        std::vector<PathStep> steps;
        for (std::size_t i = 0; i + 1 < wit.size(); ++i) {
            if (wit[i].t_out != wit[i + 1].t_in || wit[i].t_out == kPos || wit[i].t_out == kNeg)
                throw std::logic_error("cover dp: path witness does not chain");
            steps.push_back({wit[i].v, wit[i + 1].v, wit[i].t_out});
        }
        cover.paths.push_back(TemporalPath::from_steps(steps));
    }
    return cover;
}

inline std::optional<PathCover> attempt(const TemporalDigraph& d,
                                        const NiceDecomposition& nd, CoverMode mode,
                                        const Limits& lim) {
    bool disjoint = mode == CoverMode::TemporallyDisjoint;
    int n = d.vertex_count();
    bool debug = std::getenv("TEMPOCOVER_DP_DEBUG") != nullptr;
    std::vector<std::vector<char>> seen(nd.nodes.size(), std::vector<char>(n, 0));
    std::vector<Memo> memo(nd.nodes.size());
    for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
        const auto& node = nd.nodes[i];
        if (debug) {
            std::string kinds[] = {"leaf", "introduce", "forget", "join"};
            std::cerr << "cap " << lim.used_cap << " node " << i << " "
                      << kinds[static_cast<int>(node.kind)] << " v=" << node.vertex << " bag={";
            for (Vertex v : node.bag) std::cerr << v << ",";
            std::cerr << "} in=" << (node.left >= 0 ? memo[node.left].size() : 0);
            if (node.right >= 0) std::cerr << "x" << memo[node.right].size();
            std::cerr << std::endl;
        }
        switch (node.kind) {
            case NiceDecomposition::Kind::Leaf: {
                emit(memo[i], State{}, lim);
                break;
            }
            case NiceDecomposition::Kind::Introduce: {
                seen[i] = seen[node.left];
                seen[i][node.vertex] = 1;
                for (const auto& [key, s] : memo[node.left])
                    introduce_states(d, s, node.vertex, seen[i], disjoint, memo[i], lim);
                break;
            }
            case NiceDecomposition::Kind::Forget: {
                seen[i] = seen[node.left];
                for (const auto& [key, s] : memo[node.left])
                    forget_states(s, node.vertex, memo[i], lim);
                break;
            }
            case NiceDecomposition::Kind::Join: {
                seen[i] = seen[node.left];
                for (Vertex v = 0; v < n; ++v)
                    if (seen[node.right][v]) seen[i][v] = 1;
                // states can only join when their sorted multisets of
                // side-stripped part encodings agree, so pair within buckets
                auto match_sig = [](const State& s) {
                    std::vector<std::vector<int>> enc;
                    for (const Part& p : s.parts) enc.push_back(p.encode_match());
                    std::sort(enc.begin(), enc.end());
                    std::vector<int> sig;
                    for (const auto& e : enc) {
                        sig.push_back(static_cast<int>(e.size()));
                        sig.insert(sig.end(), e.begin(), e.end());
                    }
                    return sig;
                };
                std::map<std::vector<int>, std::vector<const State*>> buckets;
                for (const auto& [k2, s2] : memo[node.right])
                    buckets[match_sig(s2)].push_back(&s2);
                for (const auto& [k1, s1] : memo[node.left]) {
                    auto it = buckets.find(match_sig(s1));
                    if (it == buckets.end()) continue;
                    for (const State* s2 : it->second) join_states(s1, *s2, memo[i], lim);
                }
                break;
            }
        }
        if (node.left >= 0) Memo().swap(memo[node.left]);
        if (node.right >= 0) Memo().swap(memo[node.right]);
        int unseen = n - static_cast<int>(std::count(seen[i].begin(), seen[i].end(), 1));
        for (auto it = memo[i].begin(); it != memo[i].end();)
            it = state_viable(d, it->second, seen[i], unseen) ? std::next(it) : memo[i].erase(it);
    }
    const Memo& root = memo[nd.root];
    const State* best = nullptr;
    for (const auto& [key, s] : root)
        if (s.parts.empty() && (!best || s.used < best->used)) best = &s;
    if (!best) return std::nullopt;
    PathCover cover = cover_from_state(*best, mode);
    if (!verify_cover(d, cover)) throw std::logic_error("cover dp: witness failed verification");
    return cover;
}

inline PathCover run(const TemporalDigraph& d, CoverMode mode) {
    if (d.vertex_count() == 0) return PathCover{mode, {}};
    NiceDecomposition nd = build_nice_decomposition(d);
    int width = nd.width();
    TimeLabel tmax = d.t_max();
    int bagmax = width + 1;
    std::string proxy = "per-bag interface size p = " +
                        std::to_string(bagmax * (bagmax - 1) / 2 * tmax) + " (width " +
                        std::to_string(width) + ", t_max " + std::to_string(tmax) + ")";
    if (width > 3 || tmax > 4)
        throw ResourceLimit("cover dp needs width <= 3 and t_max <= 4, " + proxy);
    // deepen on the path budget: the first budget admitting a completed cover
    // is the optimum, and small budgets keep every state table small
    for (int cap = 1; cap <= d.vertex_count(); ++cap) {
        Limits lim{cap, 500000, proxy};
        if (auto cover = attempt(d, nd, mode, lim)) return *cover;
    }
    throw std::logic_error("cover dp: no cover within one path per vertex");
}

}  // namespace dpdetail

// Minimum temporally disjoint path cover, parameterized by treewidth and
// maximum label.
inline PathCover tdpc_dp(const TemporalDigraph& d) {
    return dpdetail::run(d, CoverMode::TemporallyDisjoint);
}

// Minimum plain temporal path cover, same parameterization.
inline PathCover tpc_dp(const TemporalDigraph& d) {
    return dpdetail::run(d, CoverMode::Plain);
}

}  // namespace tempocover
