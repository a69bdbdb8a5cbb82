#include "cli_io.hpp"

#include "geomet/error.hpp"

#include <fstream>
#include <sstream>

namespace geomet::cli {

namespace {

// nlohmann throws its own types; report them as parse errors.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad JSON ") + what + ": " + e.what());
    }
}

json path_json(const Path& p) { return json(p); }

Path path_from(const json& j) { return j.get<Path>(); }

}  // namespace

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back({g.edge(e).u, g.edge(e).v});
    json j{{"n", g.vertex_count()}, {"edges", edges}};
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

Graph graph_from_json(const json& j) {
    return guarded("graph", [&] {
        int n = j.at("n").get<int>();
        if (n < 0) fail(ErrorCode::ParseError, "negative vertex count");
        Graph g(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "edge must be a pair");
            g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
        return g;
    });
}

json system_to_json(const PathSystem& ps) {
    json paths = json::array();
    const int n = ps.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) paths.push_back({{"u", u}, {"v", v}, {"path", path_json(ps.path(u, v))}});
    return json{{"pathsystem", n}, {"paths", paths}};
}

PathSystem system_from_json(const json& j, const Graph& g) {
    // Reuse the text reader for all validation.
    std::ostringstream text;
    guarded("path system", [&] {
        text << "pathsystem " << j.at("pathsystem").get<long>() << '\n';
        for (const auto& p : j.at("paths")) {
            text << p.at("u").get<Vertex>() << ' ' << p.at("v").get<Vertex>() << " :";
            for (Vertex x : path_from(p.at("path"))) text << ' ' << x;
            text << '\n';
        }
        return 0;
    });
    return parse_path_system(text.str(), g);
}

json weights_to_json(const Graph& g, const Weights& w) {
    json arr = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) arr.push_back({{"u", g.edge(e).u}, {"v", g.edge(e).v}, {"w", to_text(w[e])}});
    return json{{"weights", arr}};
}

Weights weights_from_json(const json& j, const Graph& g) {
    std::ostringstream text;
    guarded("weights", [&] {
        for (const auto& x : j.at("weights"))
            text << x.at("u").get<Vertex>() << ' ' << x.at("v").get<Vertex>() << ' ' << x.at("w").get<std::string>() << '\n';
        return 0;
    });
    return parse_weights(text.str(), g);
}

json certificate_to_json(const Certificate& c) {
    json terms = json::array();
    for (const auto& t : c.terms)
        terms.push_back({{"lambda", to_text(t.multiplier)}, {"P", path_json(t.chosen)}, {"Q", path_json(t.competitor)}});
    return json{{"certificate", json{{"strict", c.strict}}}, {"terms", terms}};
}

Certificate certificate_from_json(const json& j) {
    return guarded("certificate", [&] {
        Certificate c;
        c.strict = j.at("certificate").at("strict").get<bool>();
        for (const auto& t : j.at("terms")) {
            CertificateTerm term;
            term.multiplier = parse_rational(t.at("lambda").get<std::string>());
            term.chosen = path_from(t.at("P"));
            term.competitor = path_from(t.at("Q"));
            c.terms.push_back(std::move(term));
        }
        return c;
    });
}

json circle_to_json(const std::vector<double>& values) { return json{{"circle", values.size()}, {"values", values}}; }

std::vector<double> circle_from_json(const json& j) {
    return guarded("circle", [&] {
        auto v = j.at("values").get<std::vector<double>>();
        if (j.at("circle").get<size_t>() != v.size()) fail(ErrorCode::ParseError, "sample count does not match header");
        return v;
    });
}

std::string format_system_list(const std::vector<PathSystem>& systems) {
    std::string out;
    for (size_t i = 0; i < systems.size(); ++i) {
        out += "# system " + std::to_string(i) + "\n";
        out += format_path_system(systems[i]);
    }
    return out;
}

std::vector<PathSystem> parse_system_list(const std::string& text, const Graph& g) {
    std::vector<PathSystem> out;
    std::istringstream in(text);
    std::string line, block;
    auto flush = [&] {
        if (block.find("pathsystem") != std::string::npos) out.push_back(parse_path_system(block, g));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.rfind("pathsystem", 0) == 0) flush();
        block += line + '\n';
    }
    flush();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

namespace {

json parse_json(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, path + ": " + e.what());
    }
}

}  // namespace

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? graph_from_json(parse_json(text, path)) : parse_graph(text);
}

PathSystem load_system(const std::string& path, const Graph& g) {
    std::string text = read_file(path);
    return looks_like_json(text) ? system_from_json(parse_json(text, path), g) : parse_path_system(text, g);
}

Weights load_weights(const std::string& path, const Graph& g) {
    std::string text = read_file(path);
    return looks_like_json(text) ? weights_from_json(parse_json(text, path), g) : parse_weights(text, g);
}

Certificate load_certificate(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? certificate_from_json(parse_json(text, path)) : parse_certificate(text);
}

std::vector<double> load_circle(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? circle_from_json(parse_json(text, path)) : parse_circle(text);
}

}  // namespace geomet::cli
