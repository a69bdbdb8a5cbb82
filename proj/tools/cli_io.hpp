#pragma once

#include "geomet/circle.hpp"
#include "geomet/metrize.hpp"
#include "geomet/path_system.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace geomet::cli {

using nlohmann::json;

// JSON mirrors of the text formats. Field names follow the text keywords.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);
json system_to_json(const PathSystem& ps);
PathSystem system_from_json(const json& j, const Graph& g);
json weights_to_json(const Graph& g, const Weights& w);
Weights weights_from_json(const json& j, const Graph& g);
json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);
json circle_to_json(const std::vector<double>& values);
std::vector<double> circle_from_json(const json& j);

// Several systems in one file: each block starts at a "pathsystem" header.
std::string format_system_list(const std::vector<PathSystem>& systems);
std::vector<PathSystem> parse_system_list(const std::string& text, const Graph& g);

// File readers accepting either the text format or its JSON mirror.
std::string read_file(const std::string& path);
Graph load_graph(const std::string& path);
PathSystem load_system(const std::string& path, const Graph& g);
Weights load_weights(const std::string& path, const Graph& g);
Certificate load_certificate(const std::string& path);
std::vector<double> load_circle(const std::string& path);

bool looks_like_json(const std::string& text);

}  // namespace geomet::cli
