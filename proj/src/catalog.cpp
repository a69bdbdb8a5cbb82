#include "geomet/catalog.hpp"

#include "geomet/enumerate.hpp"
#include "geomet/error.hpp"

#include <algorithm>
#include <sstream>

namespace geomet {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::string& bundled_file(const std::string& name) {
    const auto& files = bundled_files();
    auto it = files.find(name);
    if (it == files.end()) fail(ErrorCode::InvalidArgument, "no bundled file '" + name + "'");
    return it->second;
}

namespace {

const std::string& need(const std::map<std::string, std::string>& files, const std::string& name) {
    auto it = files.find(name);
    if (it == files.end()) fail(ErrorCode::CorruptData, "missing data file " + name);
    return it->second;
}

void check_hash(const std::string& name, const std::string& content, const std::string& expected) {
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << fnv1a64(content);
    if (hex.str() != expected) fail(ErrorCode::CorruptData, "checksum mismatch for " + name);
}

CatalogEntry load_entry(const std::map<std::string, std::string>& files, const std::string& line) {
    std::istringstream in(line);
    CatalogEntry e;
    Vertex fu, fv;
    std::string hg, hp, hc;
    if (!(in >> e.id >> e.name >> fu >> fv >> hg >> hp >> hc)) fail(ErrorCode::CorruptData, "bad manifest line '" + line + "'");
    const std::string base = "catalog/" + e.name;
    const std::string& gtext = need(files, base + ".graph");
    const std::string& ptext = need(files, base + ".paths");
    const std::string& ctext = need(files, base + ".cert");
    check_hash(base + ".graph", gtext, hg);
    check_hash(base + ".paths", ptext, hp);
    check_hash(base + ".cert", ctext, hc);
    try {
        e.graph = parse_graph(gtext);
        e.system = parse_path_system(ptext, e.graph);
        e.certificate = parse_certificate(ctext);
    } catch (const Error& err) {
        fail(ErrorCode::CorruptData, base + ": " + err.what());
    }
    e.forced_edge = e.graph.edge_id(fu, fv);
    if (e.forced_edge < 0) fail(ErrorCode::CorruptData, base + ": forced edge is not an edge");
    if (!is_consistent(e.system)) fail(ErrorCode::CorruptData, base + ": system is not consistent");
    if (!verify_certificate(e.system, e.certificate)) fail(ErrorCode::CorruptData, base + ": certificate does not verify");
    auto bundled = forced_edges(e.system, e.certificate);
    if (!std::binary_search(bundled.begin(), bundled.end(), e.forced_edge))
        fail(ErrorCode::CorruptData, base + ": certificate does not force the stated edge");
    Verdict v = decide_metrizable(e.system, false);
    if (v.metrizable()) fail(ErrorCode::CorruptData, base + ": system is metrizable");
    return e;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::map<std::string, std::string>& files) {
    std::istringstream manifest(need(files, "catalog/MANIFEST"));
    std::vector<CatalogEntry> out;
    std::string line;
    while (std::getline(manifest, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(load_entry(files, line));
    }
    if (out.size() != 11) fail(ErrorCode::CorruptData, "expected 11 catalog entries, found " + std::to_string(out.size()));
    for (size_t i = 0; i < out.size(); ++i)
        if (out[i].id != static_cast<int>(i) + 1) fail(ErrorCode::CorruptData, "catalog ids must run 1..11 in order");
    return out;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = load_catalog(bundled_files());
    return entries;
}

std::optional<char> screen_structural(const Graph& g) {
    if (!is_biconnected(g)) fail(ErrorCode::NotBiconnected, "structural screens apply to 2-connected graphs");
    const int n = g.vertex_count();
    if (n < 7) return std::nullopt;  // every rule needs at least 7 vertices
    const int kappa = vertex_connectivity(g);
    if (kappa >= 4) return 'a';
    // Connectivity before planarity: Petersen must report (c).
    if (n >= 8 && kappa >= 3) return 'c';
    if (n >= 8 && !is_planar(g)) return 'b';
    if (n >= 13) {
        int min_deg = n;
        for (Vertex v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
        if (min_deg >= 3) return 'd';
    }
    if (n >= 8 && contains_subdivision(g, wheel_graph(5))) return 'e';
    if (contains_subdivision(g, prism_graph())) return 'f';
    return std::nullopt;
}

std::optional<CatalogHit> screen_catalog(const Graph& g) {
    for (const CatalogEntry& e : catalog())
        if (auto w = find_subdivision(g, e.graph)) return CatalogHit{e.id, std::move(*w)};
    return std::nullopt;
}

std::string_view to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::NonMetrizable: return "NonMetrizable";
        case VerdictKind::NotStrictlyMetrizable: return "NotStrictlyMetrizable";
        case VerdictKind::Unknown: return "Unknown";
        case VerdictKind::Metrizable: return "Metrizable";
        case VerdictKind::StrictlyMetrizable: return "StrictlyMetrizable";
    }
    return "?";
}

std::string_view to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::Small: return "small";
        case VerdictReason::Outerplanar: return "outerplanar";
        case VerdictReason::Structural: return "structural";
        case VerdictReason::Catalog: return "catalog";
        case VerdictReason::Exhaustive: return "exhaustive";
        case VerdictReason::Budget: return "budget";
    }
    return "?";
}

namespace {

BlockVerdict decide_block(Subgraph block, const DecideOptions& opt, std::uint64_t& budget) {
    BlockVerdict bv;
    bv.block = std::move(block);
    const Graph& g = bv.block.graph;
    if (opt.shortcuts) {
        bv.kind = VerdictKind::StrictlyMetrizable;
        if (g.vertex_count() <= 4) {
            bv.reason = VerdictReason::Small;
            return bv;
        }
        if (is_outerplanar(g)) {
            bv.reason = VerdictReason::Outerplanar;
            return bv;
        }
        bv.kind = VerdictKind::NonMetrizable;
        if (auto rule = screen_structural(g)) {
            bv.reason = VerdictReason::Structural;
            bv.rule = *rule;
            return bv;
        }
        if (auto hit = screen_catalog(g)) {
            bv.reason = VerdictReason::Catalog;
            bv.hit = std::move(hit);
            return bv;
        }
    }
    EnumerateOptions eo;
    eo.allow_large = true;
    eo.limit = budget;
    eo.jobs = opt.jobs;
    SearchOutcome out = find_first_system(g, eo, [&](const PathSystem& ps) { return !decide_metrizable(ps, opt.strict).metrizable(); });
    bv.systems = out.visited;
    budget -= std::min(budget, out.visited);
    if (out.hit) {
        Verdict loose = decide_metrizable(*out.hit, false);
        bv.reason = VerdictReason::Exhaustive;
        if (loose.metrizable()) {
            bv.kind = VerdictKind::NotStrictlyMetrizable;
            bv.certificate = decide_metrizable(*out.hit, true).certificate;
        } else {
            bv.kind = VerdictKind::NonMetrizable;
            bv.certificate = loose.certificate;
        }
        bv.witness = std::move(out.hit);
    } else if (out.exhausted) {
        bv.kind = opt.strict ? VerdictKind::StrictlyMetrizable : VerdictKind::Metrizable;
        bv.reason = VerdictReason::Exhaustive;
    } else {
        bv.kind = VerdictKind::Unknown;
        bv.reason = VerdictReason::Budget;
    }
    return bv;
}

}  // namespace

GraphVerdict decide_graph(const Graph& g, const DecideOptions& opt) {
    GraphVerdict gv;
    std::uint64_t budget = opt.budget_systems;
    for (const auto& comp : connected_components(g)) {
        Subgraph part = induced_subgraph(g, comp);
        for (Subgraph& b : biconnected_components(part.graph)) {
            for (Vertex& v : b.to_host) v = part.to_host[v];
            for (EdgeId& e : b.host_edges) e = part.host_edges[e];
            gv.blocks.push_back(decide_block(std::move(b), opt, budget));
            // Kinds are ordered from most to least decisive.
            if (gv.blocks.back().kind < gv.kind) {
                gv.kind = gv.blocks.back().kind;
                gv.deciding_block = static_cast<int>(gv.blocks.size()) - 1;
            }
            if (gv.kind == VerdictKind::NonMetrizable) return gv;
        }
    }
    return gv;
}

KnTwoResult kn2_family_check(int n, int max_exhaustive) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "K_{2,n} needs n >= 2");
    if (n > max_exhaustive) fail(ErrorCode::TooLarge, "K_{2," + std::to_string(n) + "} exceeds the exhaustive bound");
    Graph g = complete_bipartite(2, n);
    KnTwoResult r{true, true};
    enumerate_consistent_systems(g, {}, [&](const PathSystem& ps) {
        if (!decide_metrizable(ps, true).metrizable()) {
            r.strictly = false;
            if (!decide_metrizable(ps, false).metrizable()) r.metrizable = false;
        }
        return r.metrizable;
    });
    if (n == 4) {
        Graph fg = parse_graph(bundled_file("fixtures/k24.graph"));
        PathSystem witness = parse_path_system(bundled_file("fixtures/k24.paths"), fg);
        if (!fg.same_as(g) || decide_metrizable(witness, true).metrizable() || r.strictly)
            fail(ErrorCode::CorruptData, "bundled K_{2,4} witness does not behave as expected");
    }
    return r;
}

}  // namespace geomet
