#ifndef RESOLVEDIM_JSON_IO_HPP
#define RESOLVEDIM_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "resolvedim/constructions.hpp"
#include "resolvedim/graph.hpp"

namespace resolvedim {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

nlohmann::json report_to_json(const ConstructionReport& report);

} // namespace resolvedim

#endif
