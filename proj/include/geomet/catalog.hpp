#pragma once

#include "geomet/graph_algorithms.hpp"
#include "geomet/metrize.hpp"
#include "geomet/path_system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geomet {

// Data files compiled into the library, keyed by path relative to data/
// (e.g. "catalog/graph01.graph", "fixtures/petersen.paths").
const std::map<std::string, std::string>& bundled_files();
// Throws InvalidArgument for an unknown name.
const std::string& bundled_file(const std::string& name);

std::uint64_t fnv1a64(std::string_view bytes);

// A known topologically minimal non-metrizable graph with a witness system.
struct CatalogEntry {
    int id = 0;
    std::string name;
    Graph graph;
    PathSystem system;
    Certificate certificate;
    EdgeId forced_edge = -1;
};

// The eleven bundled entries, validated on first use (CorruptData on failure).
const std::vector<CatalogEntry>& catalog();
// Same validation over an explicit file map shaped like bundled_files().
std::vector<CatalogEntry> load_catalog(const std::map<std::string, std::string>& files);

// First firing rule 'a'..'f' for a 2-connected graph (NotBiconnected otherwise).
std::optional<char> screen_structural(const Graph& g);

struct CatalogHit {
    int entry_id = 0;
    SubdivisionWitness witness;
};
std::optional<CatalogHit> screen_catalog(const Graph& g);

enum class VerdictKind { NonMetrizable, NotStrictlyMetrizable, Unknown, Metrizable, StrictlyMetrizable };
enum class VerdictReason { Small, Outerplanar, Structural, Catalog, Exhaustive, Budget };
std::string_view to_string(VerdictKind k);
std::string_view to_string(VerdictReason r);

struct BlockVerdict {
    VerdictKind kind = VerdictKind::Unknown;
    VerdictReason reason = VerdictReason::Budget;
    Subgraph block;
    char rule = 0;                        // Structural
    std::optional<CatalogHit> hit;        // Catalog
    std::optional<PathSystem> witness;    // Exhaustive negative, on block.graph
    std::optional<Certificate> certificate;
    std::uint64_t systems = 0;            // systems examined by enumeration
};

struct GraphVerdict {
    VerdictKind kind = VerdictKind::StrictlyMetrizable;
    std::vector<BlockVerdict> blocks;
    int deciding_block = -1;  // block that fixed `kind`, -1 when all agree positively
};

struct DecideOptions {
    bool strict = false;
    std::uint64_t budget_systems = 1000000;
    int jobs = 1;
    bool shortcuts = true;  // small/outerplanar/screens; off forces enumeration
};
GraphVerdict decide_graph(const Graph& g, const DecideOptions& opt = {});

struct KnTwoResult {
    bool metrizable = false;
    bool strictly = false;
};
// K_{2,n}; exhaustive up to max_exhaustive (TooLarge beyond it).
KnTwoResult kn2_family_check(int n, int max_exhaustive = 4);

}  // namespace geomet
