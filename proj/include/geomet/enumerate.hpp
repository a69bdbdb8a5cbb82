#pragma once

#include "geomet/path_system.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace geomet {

struct EnumerateOptions {
    int max_vertices = 9;
    bool allow_large = false;              // lift the max_vertices guard
    std::optional<std::uint64_t> limit;    // stop after this many systems
    int jobs = 1;
};

// Return false to stop early.
using SystemVisitor = std::function<bool(const PathSystem&)>;

// Visits every consistent path system of g exactly once, in a fixed order.
// Returns the number of systems visited.
std::uint64_t enumerate_consistent_systems(const Graph& g, const EnumerateOptions& opt, const SystemVisitor& visit);
std::uint64_t count_consistent_systems(const Graph& g, const EnumerateOptions& opt = {});
std::vector<PathSystem> all_consistent_systems(const Graph& g, const EnumerateOptions& opt = {});

struct SearchOutcome {
    std::optional<PathSystem> hit;  // first system (in enumeration order) accepted by the predicate
    std::uint64_t visited = 0;
    bool exhausted = false;         // every system was examined
};

// Stops at the first system for which pred is true. With jobs > 1 the
// top-level branches run concurrently; the reported hit is still the first
// one in sequential order. opt.limit caps the number of systems examined.
SearchOutcome find_first_system(const Graph& g, const EnumerateOptions& opt,
                                const std::function<bool(const PathSystem&)>& pred);

// All simple paths from u to v, shortest first, then lexicographic.
std::vector<Path> all_simple_paths(const Graph& g, Vertex u, Vertex v);

}  // namespace geomet
