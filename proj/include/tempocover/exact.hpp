#pragma once

// Exhaustive reference solvers: path enumeration, exact minimum covers by
// branch and bound, and the duality report. Exponential; guarded by a vertex
// budget (default 12, override with TEMPOCOVER_ORACLE_MAX_N).

#include <cstdlib>
#include <unordered_map>

#include <json.hpp>

#include "reachability.hpp"
#include "temporal.hpp"

namespace tempocover {

inline int oracle_max_n() {
    if (const char* s = std::getenv("TEMPOCOVER_ORACLE_MAX_N")) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw MalformedInput(std::string("TEMPOCOVER_ORACLE_MAX_N is not a number: ") + s);
        }
    }
    return 12;
}

namespace detail {

inline void check_oracle_budget(const TemporalDigraph& d) {
    int limit = oracle_max_n();
    if (d.vertex_count() > limit)
        throw ResourceLimit("exhaustive search limited to " + std::to_string(limit) +
                            " vertices (TEMPOCOVER_ORACLE_MAX_N to override), got " +
                            std::to_string(d.vertex_count()));
}

// Every strict temporal path, including every prefix and all singletons.
inline std::vector<TemporalPath> all_temporal_paths(const TemporalDigraph& d) {
    std::vector<TemporalPath> out;
    std::vector<PathStep> steps;
    std::vector<char> used(d.vertex_count(), 0);
    auto extend = [&](auto&& self, Vertex at, TimeLabel after) -> void {
        for (std::size_t ai : d.out_arcs(at)) {
            const Arc& a = d.arcs()[ai];
            if (used[a.head]) continue;
            for (TimeLabel t : a.labels) {
                if (t <= after) continue;
                steps.push_back({at, a.head, t});
                used[a.head] = 1;
                out.push_back(TemporalPath::from_steps(steps));
                self(self, a.head, t);
                used[a.head] = 0;
                steps.pop_back();
            }
        }
    };
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        out.push_back(TemporalPath::single(v));
        used[v] = 1;
        extend(extend, v, 0);
        used[v] = 0;
    }
    return out;
}

inline bool front_extendable(const TemporalDigraph& d, const TemporalPath& p) {
    if (p.is_single()) return false;
    Vertex v0 = p.vertices().front();
    TimeLabel t0 = p.times().front();
    for (std::size_t ai : d.in_arcs(v0)) {
        const Arc& a = d.arcs()[ai];
        if (std::find(p.vertices().begin(), p.vertices().end(), a.tail) != p.vertices().end())
            continue;
        if (a.labels.front() < t0) return true;
    }
    return false;
}

inline bool back_extendable(const TemporalDigraph& d, const TemporalPath& p) {
    Vertex vk = p.vertices().back();
    TimeLabel tk = p.times().empty() ? 0 : p.times().back();
    for (std::size_t ai : d.out_arcs(vk)) {
        const Arc& a = d.arcs()[ai];
        if (std::find(p.vertices().begin(), p.vertices().end(), a.head) != p.vertices().end())
            continue;
        if (a.labels.back() > tk) return true;
    }
    return false;
}

inline std::uint64_t vertex_mask(const TemporalPath& p) {
    std::uint64_t m = 0;
    for (Vertex v : p.vertices()) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace detail

// All maximal temporal paths (extendable at neither end) plus all
// single-vertex paths.
inline std::vector<TemporalPath> enumerate_temporal_paths(const TemporalDigraph& d) {
    detail::check_oracle_budget(d);
    std::vector<TemporalPath> out;
    for (const TemporalPath& p : detail::all_temporal_paths(d)) {
        if (p.is_single() || (!detail::front_extendable(d, p) && !detail::back_extendable(d, p)))
            out.push_back(p);
    }
    return out;
}

namespace detail {

// A temporal path can hold at most one in-degree-zero vertex (it must start
// there) and one out-degree-zero vertex, so uncovered sources and sinks each
// lower-bound the number of paths still needed.
inline std::pair<std::uint64_t, std::uint64_t> terminal_masks(const TemporalDigraph& d) {
    std::uint64_t src = 0, snk = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (d.in_arcs(v).empty()) src |= std::uint64_t{1} << v;
        if (d.out_arcs(v).empty()) snk |= std::uint64_t{1} << v;
    }
    return {src, snk};
}

// Minimum set cover by branch and bound over path vertex sets; memoized on
// the covered bitmask. Candidates dominated by a superset are dropped first.
inline std::vector<std::size_t> cover_branch_plain(int n, const std::vector<std::uint64_t>& masks,
                                                   std::uint64_t src, std::uint64_t snk) {
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::size_t> order(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int pa = __builtin_popcountll(masks[a]), pb = __builtin_popcountll(masks[b]);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
        bool dominated = false;
        for (std::size_t j : kept)
            if ((masks[i] | masks[j]) == masks[j]) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(i);
    }
    int max_sz = 1;
    for (std::size_t i : kept) max_sz = std::max(max_sz, __builtin_popcountll(masks[i]));

    std::vector<std::size_t> best, cur;
    std::size_t best_size = static_cast<std::size_t>(n) + 1;
    std::unordered_map<std::uint64_t, std::size_t> memo;
    auto rec = [&](auto&& self, std::uint64_t covered) -> void {
        if (covered == full) {
            if (cur.size() < best_size) {
                best = cur;
                best_size = cur.size();
            }
            return;
        }
        auto it = memo.find(covered);
        if (it != memo.end() && it->second <= cur.size()) return;
        memo[covered] = cur.size();
        int remaining = __builtin_popcountll(full & ~covered);
        int needed = (remaining + max_sz - 1) / max_sz;
        needed = std::max(needed, __builtin_popcountll(src & ~covered));
        needed = std::max(needed, __builtin_popcountll(snk & ~covered));
        if (cur.size() + needed >= best_size) return;
        Vertex pick = -1;
        std::size_t fewest = kept.size() + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (covered & (std::uint64_t{1} << v)) continue;
            std::size_t cnt = 0;
            for (std::size_t i : kept)
                if (masks[i] & (std::uint64_t{1} << v)) ++cnt;
            if (cnt < fewest) {
                fewest = cnt;
                pick = v;
            }
        }
        for (std::size_t i : kept) {
            if (!(masks[i] & (std::uint64_t{1} << pick))) continue;
            cur.push_back(i);
            self(self, covered | masks[i]);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace detail

// Exact minimum temporal path cover.
inline PathCover exact_tpc(const TemporalDigraph& d) {
    detail::check_oracle_budget(d);
    std::vector<TemporalPath> pool = enumerate_temporal_paths(d);
    std::vector<std::uint64_t> masks;
    for (const TemporalPath& p : pool) masks.push_back(detail::vertex_mask(p));
    auto [src, snk] = detail::terminal_masks(d);
    std::vector<std::size_t> chosen =
        detail::cover_branch_plain(d.vertex_count(), masks, src, snk);
    PathCover cover;
    cover.mode = CoverMode::Plain;
    for (std::size_t i : chosen) cover.paths.push_back(pool[i]);
    return cover;
}

namespace detail {

// Branch and bound for temporally disjoint covers over the full path pool.
// Branches on the uncovered vertex with the fewest still-compatible
// candidates; compatibility is checked against the chosen paths directly.
// Returns a cover of size <= cap if one exists.
inline std::optional<PathCover> tdpc_branch(const TemporalDigraph& d, std::size_t cap) {
    int n = d.vertex_count();
    if (n == 0) return PathCover{CoverMode::TemporallyDisjoint, {}};
    std::vector<TemporalPath> pool = all_temporal_paths(d);
    std::size_t P = pool.size();
    if (P > 65536)
        throw ResourceLimit("exhaustive disjoint-cover search needs a pairwise table over " +
                            std::to_string(P) + " candidate paths; limit is 65536");
    std::sort(pool.begin(), pool.end(), [](const TemporalPath& a, const TemporalPath& b) {
        return a.vertices().size() > b.vertices().size();
    });
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<std::pair<Vertex, TimeInterval>>> occs;
    for (const TemporalPath& p : pool) {
        masks.push_back(vertex_mask(p));
        occs.push_back(occupation(p));
    }
    int max_sz = 1;
    for (std::uint64_t m : masks) max_sz = std::max(max_sz, __builtin_popcountll(m));
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto [src, snk] = terminal_masks(d);

    // sources with identical out-arcs (and sinks with identical in-arcs) are
    // interchangeable under renaming; while such twins are uncovered no chosen
    // path mentions them, so a candidate may start or end at one only if it is
    // the smallest uncovered member of its class or the branch vertex itself
    std::map<std::vector<long long>, std::vector<Vertex>> sig_groups;
    for (Vertex v = 0; v < n; ++v) {
        if (!d.in_arcs(v).empty() && !d.out_arcs(v).empty()) continue;
        std::vector<std::vector<long long>> pieces;
        for (std::size_t ai : d.in_arcs(v)) {
            const Arc& a = d.arcs()[ai];
            std::vector<long long> p{0, a.tail};
            for (TimeLabel t : a.labels) p.push_back(t);
            pieces.push_back(std::move(p));
        }
        for (std::size_t ai : d.out_arcs(v)) {
            const Arc& a = d.arcs()[ai];
            std::vector<long long> p{1, a.head};
            for (TimeLabel t : a.labels) p.push_back(t);
            pieces.push_back(std::move(p));
        }
        std::sort(pieces.begin(), pieces.end());
        std::vector<long long> sig;
        for (const auto& p : pieces) {
            sig.push_back(static_cast<long long>(p.size()));
            sig.insert(sig.end(), p.begin(), p.end());
        }
        sig_groups[sig].push_back(v);
    }
    std::vector<int> twin(n, -1);
    std::vector<std::vector<Vertex>> twin_members;
    for (auto& [sig, vs] : sig_groups) {
        if (vs.size() < 2) continue;
        for (Vertex v : vs) twin[v] = static_cast<int>(twin_members.size());
        twin_members.push_back(vs);
    }
    std::vector<Vertex> pstart(P), pend(P);
    for (std::size_t i = 0; i < P; ++i) {
        pstart[i] = pool[i].vertices().front();
        pend[i] = pool[i].vertices().back();
    }

    // occupations at graph sources and sinks never constrain a second path
    // (two one-sided intervals always meet), so dominance between same-mask
    // candidates only compares the remaining vertices
    std::vector<std::vector<std::pair<Vertex, TimeInterval>>> occ_rel(P);
    for (std::size_t i = 0; i < P; ++i) {
        for (const auto& [v, iv] : occs[i])
            if (!((src | snk) >> v & 1)) occ_rel[i].emplace_back(v, iv);
        std::sort(occ_rel[i].begin(), occ_rel[i].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    auto dominates = [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < occ_rel[a].size(); ++k) {
            const TimeInterval &ia = occ_rel[a][k].second, &ib = occ_rel[b][k].second;
            if (ia.lo < ib.lo || ia.hi > ib.hi) return false;
        }
        return true;
    };

    // pairwise compatibility and per-vertex coverage as bitsets, so that
    // filtering against every chosen path is a running AND
    std::size_t words = (P + 63) / 64;
    auto bit = [&](std::vector<std::uint64_t>& row, std::size_t i) {
        row[i >> 6] |= std::uint64_t{1} << (i & 63);
    };
    std::vector<std::vector<std::uint64_t>> compat(P, std::vector<std::uint64_t>(words, 0));
    for (std::size_t a = 0; a < P; ++a) {
        bit(compat[a], a);
        for (std::size_t b = a + 1; b < P; ++b) {
            bool ok = true;
            if (masks[a] & masks[b]) {
                for (const auto& [va, ia] : occs[a]) {
                    for (const auto& [vb, ib] : occs[b])
                        if (va == vb && ia.intersects(ib)) {
                            ok = false;
                            break;
                        }
                    if (!ok) break;
                }
            }
            if (ok) {
                bit(compat[a], b);
                bit(compat[b], a);
            }
        }
    }
    std::vector<std::vector<std::uint64_t>> covering(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < P; ++i)
        for (Vertex v : pool[i].vertices()) bit(covering[v], i);

    std::vector<std::vector<std::uint64_t>> allowed(cap + 2,
                                                    std::vector<std::uint64_t>(words, 0));
    for (std::size_t w = 0; w < words; ++w) allowed[0][w] = ~std::uint64_t{0};
    if (P & 63) allowed[0][words - 1] = (std::uint64_t{1} << (P & 63)) - 1;

    std::vector<std::size_t> best, cur;
    std::size_t best_size = cap + 1;
    auto rec = [&](auto&& self, std::uint64_t covered, std::size_t depth) -> void {
        if (covered == full) {
            if (cur.size() < best_size) {
                best = cur;
                best_size = cur.size();
            }
            return;
        }
        int remaining = __builtin_popcountll(full & ~covered);
        int src_need = __builtin_popcountll(src & ~covered);
        int snk_need = __builtin_popcountll(snk & ~covered);
        int needed = std::max({(remaining + max_sz - 1) / max_sz, src_need, snk_need});
        if (cur.size() + needed >= best_size) return;
        int budget = static_cast<int>(best_size) - 1 - static_cast<int>(cur.size());
        // when terminals exhaust the budget, every further path must cover one
        bool must_src = src_need == budget, must_snk = snk_need == budget;
        std::vector<Vertex> min_unc(twin_members.size(), -1);
        for (std::size_t t = 0; t < twin_members.size(); ++t)
            for (Vertex v : twin_members[t])
                if (!(covered >> v & 1)) {
                    min_unc[t] = v;
                    break;
                }
        const auto& av = allowed[depth];
        Vertex pick = -1;
        int fewest = static_cast<int>(P) + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (covered & (std::uint64_t{1} << v)) continue;
            int cnt = 0;
            for (std::size_t w = 0; w < words; ++w)
                cnt += __builtin_popcountll(av[w] & covering[v][w]);
            if (cnt < fewest) {
                fewest = cnt;
                pick = v;
            }
        }
        if (fewest == 0) return;
        std::vector<std::size_t> cand;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = av[w] & covering[pick][w];
            while (bits) {
                std::size_t i = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                if (must_src && !(masks[i] & src & ~covered)) continue;
                if (must_snk && !(masks[i] & snk & ~covered)) continue;
                Vertex ps = pstart[i], pe = pend[i];
                if (twin[ps] >= 0 && ps != pick && !(covered >> ps & 1) &&
                    ps != min_unc[twin[ps]])
                    continue;
                if (pe != ps && twin[pe] >= 0 && pe != pick && !(covered >> pe & 1) &&
                    pe != min_unc[twin[pe]])
                    continue;
                cand.push_back(i);
            }
        }
        std::vector<char> dead(cand.size(), 0);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                if (dead[b] || masks[cand[a]] != masks[cand[b]]) continue;
                if (dominates(cand[a], cand[b]))
                    dead[b] = 1;
                else if (dominates(cand[b], cand[a])) {
                    dead[a] = 1;
                    break;
                }
            }
        }
        auto& next = allowed[depth + 1];
        for (std::size_t ci = 0; ci < cand.size(); ++ci) {
            if (dead[ci]) continue;
            std::size_t i = cand[ci];
            for (std::size_t w2 = 0; w2 < words; ++w2) next[w2] = av[w2] & compat[i][w2];
            cur.push_back(i);
            self(self, covered | masks[i], depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    if (best_size > cap) return std::nullopt;
    PathCover cover;
    cover.mode = CoverMode::TemporallyDisjoint;
    for (std::size_t i : best) cover.paths.push_back(pool[i]);
    return cover;
}

}  // namespace detail

// Exact minimum temporally disjoint path cover.
inline PathCover exact_tdpc(const TemporalDigraph& d) {
    detail::check_oracle_budget(d);
    auto cover = detail::tdpc_branch(d, static_cast<std::size_t>(d.vertex_count()));
    return *cover;  // n singletons always work, so the cap is never exceeded
}

// Decision variant: a temporally disjoint cover with at most k paths, if one
// exists. Shares the search but prunes at the cap, which keeps hardness
// gadget checks affordable.
inline std::optional<PathCover> tdpc_at_most(const TemporalDigraph& d, std::size_t k) {
    detail::check_oracle_budget(d);
    return detail::tdpc_branch(d, k);
}

// Exact maximum temporal antichain by branch and bound on the connectivity
// graph. Independent of the weakly chordal route, so the two can be compared.
inline std::vector<Vertex> exact_antichain(const TemporalDigraph& d) {
    detail::check_oracle_budget(d);
    return detail::mis_exact(connectivity_graph(d).graph);
}

inline nlohmann::ordered_json dilworth_report(const TemporalDigraph& d) {
    detail::check_oracle_budget(d);
    std::size_t tpc = exact_tpc(d).size();
    std::size_t tdpc = exact_tdpc(d).size();
    std::size_t antichain = exact_antichain(d).size();
    nlohmann::ordered_json j;
    j["tpc"] = tpc;
    j["tdpc"] = tdpc;
    j["antichain"] = antichain;
    j["dilworth_holds"] = (tpc == antichain);
    j["td_dilworth_holds"] = (tdpc == antichain);
    return j;
}

}  // namespace tempocover
