#pragma once

// t3g-v1 and bmg-v1 instance files.
//
//   {"format":"t3g-v1","classes":[nA,nB,nC],"edges":[[a,b,c,m],...]}
//   {"format":"bmg-v1","classes":[nL,nR],"edges":[[u,v,m],...]}
//
// Indices are 0-based and m >= 1. Loading expands edges in file order with
// parallel copies consecutive. Saving writes the canonical form: edges
// sorted by endpoints, multiplicities merged, one compact line.

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "t3lab/hypercore.hpp"

namespace t3lab::io {

Tripartite3Graph t3g_from_json(const nlohmann::ordered_json& j);
BipartiteMultigraph bmg_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Tripartite3Graph& h);
nlohmann::ordered_json to_json(const BipartiteMultigraph& g);

std::string dump_t3g(const Tripartite3Graph& h);
std::string dump_bmg(const BipartiteMultigraph& g);

using Instance = std::variant<Tripartite3Graph, BipartiteMultigraph>;

// Dispatches on "format". Throws InputError on malformed content.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& path);
Tripartite3Graph load_t3g(const std::filesystem::path& path);
BipartiteMultigraph load_bmg(const std::filesystem::path& path);

void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace t3lab::io
