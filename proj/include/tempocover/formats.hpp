#pragma once

// Text and JSON formats.
//
// .tg text format:
//   tg <n> <arc_count>
//   u v t1,t2,...        (one line per arc, 0-based ids)
// Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "temporal.hpp"

namespace tempocover {

inline TemporalDigraph read_tg(std::istream& is) {
    std::string line;
    int lineno = 0;
    auto next_payload = [&](std::string& out) {
        while (std::getline(is, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_payload(header)) throw MalformedInput("tg: missing header");
    std::istringstream hs(header);
    std::string magic;
    long long n = 0, m = 0;
    if (!(hs >> magic >> n >> m) || magic != "tg")
        throw MalformedInput("tg: bad header at line " + std::to_string(lineno));
    if (n < 0 || m < 0) throw MalformedInput("tg: negative counts in header");
    std::vector<Arc> arcs;
    for (long long k = 0; k < m; ++k) {
        std::string payload;
        if (!next_payload(payload))
            throw MalformedInput("tg: expected " + std::to_string(m) + " arcs, got " +
                                 std::to_string(k));
        std::istringstream ls(payload);
        Arc a;
        std::string labels;
        if (!(ls >> a.tail >> a.head >> labels))
            throw MalformedInput("tg: bad arc at line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest) throw MalformedInput("tg: trailing junk at line " + std::to_string(lineno));
        std::istringstream fs(labels);
        std::string field;
        while (std::getline(fs, field, ',')) {
            if (field.empty())
                throw MalformedInput("tg: empty label at line " + std::to_string(lineno));
            try {
                std::size_t pos = 0;
                int t = std::stoi(field, &pos);
                if (pos != field.size()) throw std::invalid_argument(field);
                a.labels.push_back(t);
            } catch (const std::exception&) {
                throw MalformedInput("tg: bad label '" + field + "' at line " +
                                     std::to_string(lineno));
            }
        }
        if (a.labels.empty())
            throw MalformedInput("tg: arc without labels at line " + std::to_string(lineno));
        arcs.push_back(std::move(a));
    }
    return TemporalDigraph(static_cast<int>(n), std::move(arcs));
}

inline TemporalDigraph read_tg_string(const std::string& text) {
    std::istringstream is(text);
    return read_tg(is);
}

inline TemporalDigraph read_tg_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MalformedInput("cannot open " + path);
    return read_tg(f);
}

inline void write_tg(std::ostream& os, const TemporalDigraph& d) {
    os << "tg " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) {
        os << a.tail << ' ' << a.head << ' ';
        for (std::size_t i = 0; i < a.labels.size(); ++i) {
            if (i) os << ',';
            os << a.labels[i];
        }
        os << '\n';
    }
}

inline std::string write_tg_string(const TemporalDigraph& d) {
    std::ostringstream os;
    write_tg(os, d);
    return os.str();
}

inline nlohmann::ordered_json graph_to_json(const TemporalDigraph& d) {
    nlohmann::ordered_json j;
    j["n"] = d.vertex_count();
    j["arcs"] = nlohmann::ordered_json::array();
    for (const Arc& a : d.arcs())
        j["arcs"].push_back({{"u", a.tail}, {"v", a.head}, {"labels", a.labels}});
    return j;
}

inline TemporalDigraph graph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Arc> arcs;
        for (const auto& ja : j.at("arcs")) {
            Arc a;
            a.tail = ja.at("u").get<int>();
            a.head = ja.at("v").get<int>();
            a.labels = ja.at("labels").get<std::vector<TimeLabel>>();
            arcs.push_back(std::move(a));
        }
        return TemporalDigraph(n, std::move(arcs));
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("graph json: ") + e.what());
    }
}

// Covers as JSON: a path is a list of [u,v,t] steps; a single-vertex path is
// [[v]].
inline nlohmann::ordered_json cover_to_json(const PathCover& cover) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(cover.mode);
    j["paths"] = nlohmann::ordered_json::array();
    for (const TemporalPath& p : cover.paths) {
        nlohmann::ordered_json jp = nlohmann::ordered_json::array();
        if (p.is_single()) {
            jp.push_back({p.vertices()[0]});
        } else {
            for (const PathStep& s : p.steps()) jp.push_back({s.from, s.to, s.t});
        }
        j["paths"].push_back(std::move(jp));
    }
    return j;
}

inline PathCover cover_from_json(const nlohmann::json& j) {
    try {
        PathCover cover;
        std::string mode = j.at("mode").get<std::string>();
        if (mode == "plain")
            cover.mode = CoverMode::Plain;
        else if (mode == "temporally_disjoint")
            cover.mode = CoverMode::TemporallyDisjoint;
        else
            throw MalformedInput("cover json: unknown mode '" + mode + "'");
        for (const auto& jp : j.at("paths")) {
            if (jp.size() == 1 && jp[0].size() == 1) {
                cover.paths.push_back(TemporalPath::single(jp[0][0].get<int>()));
                continue;
            }
            std::vector<PathStep> steps;
            for (const auto& js : jp) {
                if (js.size() != 3) throw MalformedInput("cover json: step needs [u,v,t]");
                steps.push_back({js[0].get<int>(), js[1].get<int>(), js[2].get<int>()});
            }
            cover.paths.push_back(TemporalPath::from_steps(steps));
        }
        return cover;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("cover json: ") + e.what());
    }
}

inline std::string to_dot(const TemporalDigraph& d) {
    std::ostringstream os;
    os << "digraph tg {\n";
    for (Vertex v = 0; v < d.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const Arc& a : d.arcs()) {
        os << "  " << a.tail << " -> " << a.head << " [label=\"";
        for (std::size_t i = 0; i < a.labels.size(); ++i) {
            if (i) os << ',';
            os << a.labels[i];
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tempocover
