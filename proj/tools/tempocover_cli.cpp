// Command line front end: solve covers, report duality gaps, generate
// instances, verify covers, and convert between formats.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "tempocover/tempocover.hpp"

namespace tc = tempocover;
using nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitResource = 4;

tc::TemporalDigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tc::MalformedInput("cannot open " + path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw tc::MalformedInput(path + ": " + e.what());
        }
        return tc::graph_from_json(j);
    }
    return tc::read_tg(in);
}

void write_out(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

int dp_width(const tc::TemporalDigraph& d) {
    return tc::decompose(tc::underlying_graph(d)).width();
}

struct SolveResult {
    std::string method;
    tc::PathCover cover;
};

SolveResult solve_one(const tc::TemporalDigraph& d, const std::string& problem,
                      const std::string& method) {
    tc::GraphClass cls = tc::classify(d);
    bool tdpc = problem == "tdpc";
    auto by_tree = [&]() -> SolveResult {
        if (cls == tc::GraphClass::OrientedLine) return {"tree", tc::solve_oriented_line(d)};
        if (cls == tc::GraphClass::RootedDirectedTree) return {"tree", tc::solve_rooted_tree(d)};
        if (cls == tc::GraphClass::OrientedTree && !tdpc)
            return {"tree", tc::tpc_oriented_tree(d)};
        throw tc::ClassMismatch(
            tdpc ? "tree method solves tdpc only on oriented lines and rooted directed trees"
                 : "tree method needs an oriented tree, got " + tc::to_string(cls));
    };
    auto by_dp = [&]() -> SolveResult {
        return {"dp", tdpc ? tc::tdpc_dp(d) : tc::tpc_dp(d)};
    };
    auto by_oracle = [&]() -> SolveResult {
        return {"oracle", tdpc ? tc::exact_tdpc(d) : tc::exact_tpc(d)};
    };
    if (method == "tree") return by_tree();
    if (method == "dp") return by_dp();
    if (method == "oracle") return by_oracle();
    // automatic dispatch, most specific capability first
    if (cls == tc::GraphClass::OrientedLine || cls == tc::GraphClass::RootedDirectedTree)
        return by_tree();
    if (cls == tc::GraphClass::OrientedTree && !tdpc) return by_tree();
    if (dp_width(d) <= 3 && d.t_max() <= 4) return by_dp();
    return by_oracle();
}

ordered_json solve_report(const std::string& path, const std::string& problem,
                          const std::string& method) {
    tc::TemporalDigraph d = load_graph(path);
    auto t0 = std::chrono::steady_clock::now();
    SolveResult r = solve_one(d, problem, method);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    ordered_json j;
    j["schema"] = 1;
    j["class"] = tc::to_string(tc::classify(d));
    j["problem"] = problem;
    j["method_used"] = r.method;
    j["cover_size"] = r.cover.size();
    j["cover"] = tc::cover_to_json(r.cover);
    j["runtime_ms"] = ms;
    return j;
}

ordered_json gap_report(const std::string& path) {
    tc::TemporalDigraph d = load_graph(path);
    auto t0 = std::chrono::steady_clock::now();
    ordered_json rep = tc::dilworth_report(d);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    ordered_json j;
    j["schema"] = 1;
    j["class"] = tc::to_string(tc::classify(d));
    for (auto& [k, v] : rep.items()) j[k] = v;
    j["runtime_ms"] = ms;
    return j;
}

// run fn over the files, jobs at a time, preserving input order in results
std::vector<ordered_json> run_jobs(const std::vector<std::string>& files, int jobs,
                                   const std::function<ordered_json(const std::string&)>& fn) {
    std::vector<ordered_json> results(files.size());
    std::vector<std::exception_ptr> errors(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                results[i] = fn(files[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    int t = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

void emit_reports(const std::vector<std::string>& files, std::vector<ordered_json> reports,
                  const std::string& out) {
    if (files.size() == 1) {
        write_out(out, reports[0].dump(2));
        return;
    }
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        ordered_json item;
        item["input"] = files[i];
        for (auto& [k, v] : reports[i].items()) item[k] = v;
        arr.push_back(item);
    }
    write_out(out, arr.dump(2));
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw tc::MalformedInput("bad integer list item: " + item);
        }
        if (pos != item.size()) throw tc::MalformedInput("bad integer list item: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw tc::MalformedInput("empty integer list: " + s);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum temporal path covers of temporal digraphs"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string problem = "tpc", method = "auto", out, format = "tg";
    int jobs = 1;

    auto* solve = app.add_subcommand("solve", "compute a minimum cover");
    solve->add_option("inputs", files, "input graphs (.tg or .json)")->required();
    solve->add_option("--problem", problem, "tpc or tdpc")
        ->check(CLI::IsMember({"tpc", "tdpc"}));
    solve->add_option("--method", method, "auto, tree, dp, or oracle")
        ->check(CLI::IsMember({"auto", "tree", "dp", "oracle"}));
    solve->add_option("--out", out, "write the report here instead of stdout");
    solve->add_option("--jobs", jobs, "parallel workers across input files")
        ->check(CLI::PositiveNumber);

    auto* gap = app.add_subcommand("gap", "exact duality report (small inputs)");
    gap->add_option("inputs", files, "input graphs (.tg or .json)")->required();
    gap->add_option("--out", out, "write the report here instead of stdout");
    gap->add_option("--jobs", jobs, "parallel workers across input files")
        ->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("generate", "emit a generated instance");
    std::string family = "random", cls_name = "general", triples_arg, items_arg;
    int gen_n = 8, gen_k = 3, gen_q = 1, gen_ell = 2, gen_tmax = 4, gen_b = 1, gen_cap = 1;
    std::uint64_t gen_seed = 1;
    gen->add_option("--family", family, "tournament, star, 3dm, binpacking, or random")
        ->check(CLI::IsMember({"tournament", "star", "3dm", "binpacking", "random"}));
    gen->add_option("--n", gen_n, "vertices (tournament, random)");
    gen->add_option("--k", gen_k, "spokes (star)");
    gen->add_option("--triples", triples_arg, "3dm triples, e.g. 0,0,0;0,1,1");
    gen->add_option("--q", gen_q, "3dm ground set size");
    gen->add_option("--items", items_arg, "bin packing item sizes, e.g. 2,1,1");
    gen->add_option("--bins", gen_b, "bin packing bin count");
    gen->add_option("--capacity", gen_cap, "bin packing bin capacity");
    gen->add_option("--class", cls_name,
                    "random class: general, dag, oriented_tree, rooted_directed_tree, "
                    "oriented_line");
    gen->add_option("--ell", gen_ell, "random: max labels per arc");
    gen->add_option("--tmax", gen_tmax, "random: max label");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", out, "output file, default stdout");
    gen->add_option("--format", format, "tg, json, or dot")
        ->check(CLI::IsMember({"tg", "json", "dot"}));

    auto* verify = app.add_subcommand("verify", "check a cover against a graph");
    std::string cover_path;
    verify->add_option("input", files, "input graph")->required()->expected(1);
    verify->add_option("--cover", cover_path, "cover file (json)")->required();

    auto* convert = app.add_subcommand("convert", "rewrite a graph in another format");
    convert->add_option("input", files, "input graph")->required()->expected(1);
    convert->add_option("--format", format, "tg, json, dot, or td")
        ->check(CLI::IsMember({"tg", "json", "dot", "td"}));
    convert->add_option("--out", out, "output file, default stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            auto reports = run_jobs(files, jobs, [&](const std::string& f) {
                return solve_report(f, problem, method);
            });
            emit_reports(files, std::move(reports), out);
        } else if (gap->parsed()) {
            auto reports = run_jobs(files, jobs, gap_report);
            emit_reports(files, std::move(reports), out);
        } else if (gen->parsed()) {
            tc::TemporalDigraph d(0, {});
            if (family == "tournament") {
                d = tc::transitive_tournament(gen_n);
            } else if (family == "star") {
                d = tc::star(gen_k);
            } else if (family == "3dm") {
                std::vector<std::array<int, 3>> triples;
                std::istringstream in(triples_arg);
                std::string one;
                while (std::getline(in, one, ';')) {
                    auto xs = parse_int_list(one, ',');
                    if (xs.size() != 3)
                        throw tc::MalformedInput("each triple needs three coordinates");
                    triples.push_back({xs[0], xs[1], xs[2]});
                }
                d = tc::gadget_3dm(triples, gen_q);
            } else if (family == "binpacking") {
                d = tc::gadget_binpacking(parse_int_list(items_arg, ','), gen_b, gen_cap);
            } else {
                tc::GraphClass cls = tc::GraphClass::General;
                if (cls_name == "dag") cls = tc::GraphClass::Dag;
                else if (cls_name == "oriented_tree") cls = tc::GraphClass::OrientedTree;
                else if (cls_name == "rooted_directed_tree")
                    cls = tc::GraphClass::RootedDirectedTree;
                else if (cls_name == "oriented_line") cls = tc::GraphClass::OrientedLine;
                else if (cls_name != "general")
                    throw tc::MalformedInput("unknown class " + cls_name);
                d = tc::random_instance(cls, gen_n, gen_ell, gen_tmax, gen_seed);
            }
            if (format == "tg") write_out(out, tc::write_tg_string(d));
            else if (format == "json") write_out(out, tc::graph_to_json(d).dump(2));
            else write_out(out, tc::to_dot(d));
        } else if (verify->parsed()) {
            tc::TemporalDigraph d = load_graph(files[0]);
            std::ifstream in(cover_path);
            if (!in) throw tc::MalformedInput("cannot open " + cover_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                throw tc::MalformedInput(cover_path + ": " + e.what());
            }
            tc::PathCover cover = tc::cover_from_json(j);
            bool ok = tc::verify_cover(d, cover);
            ordered_json rep;
            rep["schema"] = 1;
            rep["valid"] = ok;
            rep["mode"] = tc::to_string(cover.mode);
            rep["paths"] = cover.size();
            write_out(out, rep.dump(2));
            return ok ? 0 : 1;
        } else if (convert->parsed()) {
            tc::TemporalDigraph d = load_graph(files[0]);
            if (format == "tg") write_out(out, tc::write_tg_string(d));
            else if (format == "json") write_out(out, tc::graph_to_json(d).dump(2));
            else if (format == "dot") write_out(out, tc::to_dot(d));
            else
                write_out(out, tc::to_td_format(tc::decompose(tc::underlying_graph(d)),
                                                d.vertex_count()));
        }
    } catch (const tc::MalformedInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const tc::ClassMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitClass;
    } catch (const tc::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
