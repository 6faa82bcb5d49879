#include "t3lab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "t3lab/errors.hpp"

namespace t3lab::io {

namespace {

using Json = nlohmann::ordered_json;

int non_negative(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > (1LL << 30)) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return v.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_format(const Json& j, const char* format) {
  const Json& f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != format) {
    throw InputError(std::string("expected format ") + format);
  }
}

}  // namespace

Tripartite3Graph t3g_from_json(const Json& j) {
  expect_format(j, "t3g-v1");
  const Json& classes = field(j, "classes");
  if (!classes.is_array() || classes.size() != 3) throw InputError("t3g classes must have 3 sizes");
  Tripartite3Graph h({non_negative(classes[0], "class size"), non_negative(classes[1], "class size"),
                      non_negative(classes[2], "class size")});
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 4) throw InputError("t3g edge must be [a,b,c,m]");
    const int m = non_negative(e[3], "multiplicity");
    if (m < 1) throw InputError("multiplicity must be >= 1");
    h.add_edge(non_negative(e[0], "vertex"), non_negative(e[1], "vertex"),
               non_negative(e[2], "vertex"), m);
  }
  return h;
}

BipartiteMultigraph bmg_from_json(const Json& j) {
  expect_format(j, "bmg-v1");
  const Json& classes = field(j, "classes");
  if (!classes.is_array() || classes.size() != 2) throw InputError("bmg classes must have 2 sizes");
  BipartiteMultigraph g(non_negative(classes[0], "class size"), non_negative(classes[1], "class size"));
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) throw InputError("bmg edge must be [u,v,m]");
    const int m = non_negative(e[2], "multiplicity");
    if (m < 1) throw InputError("multiplicity must be >= 1");
    g.add_edge(non_negative(e[0], "vertex"), non_negative(e[1], "vertex"), m);
  }
  return g;
}

Json to_json(const Tripartite3Graph& h) {
  std::map<std::array<int, 3>, int> mult;
  for (const auto& e : h.edges()) ++mult[e.v];
  Json edges = Json::array();
  for (const auto& [v, m] : mult) edges.push_back({v[0], v[1], v[2], m});
  Json j;
  j["format"] = "t3g-v1";
  j["classes"] = h.class_sizes();
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const BipartiteMultigraph& g) {
  std::map<std::array<int, 2>, int> mult;
  for (const auto& e : g.edges()) ++mult[{e.u, e.v}];
  Json edges = Json::array();
  for (const auto& [v, m] : mult) edges.push_back({v[0], v[1], m});
  Json j;
  j["format"] = "bmg-v1";
  j["classes"] = {g.left_size(), g.right_size()};
  j["edges"] = std::move(edges);
  return j;
}

std::string dump_t3g(const Tripartite3Graph& h) { return to_json(h).dump() + "\n"; }
std::string dump_bmg(const BipartiteMultigraph& g) { return to_json(g).dump() + "\n"; }

Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  const Json& f = field(j, "format");
  if (!f.is_string()) throw InputError("format must be a string");
  const auto format = f.get<std::string>();
  if (format == "t3g-v1") return t3g_from_json(j);
  if (format == "bmg-v1") return bmg_from_json(j);
  throw InputError("unknown format '" + format + "'");
}

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_text(path)); }

Tripartite3Graph load_t3g(const std::filesystem::path& path) {
  auto inst = load_instance(path);
  if (auto* h = std::get_if<Tripartite3Graph>(&inst)) return std::move(*h);
  throw InputError(path.string() + " is not a t3g-v1 instance");
}

BipartiteMultigraph load_bmg(const std::filesystem::path& path) {
  auto inst = load_instance(path);
  if (auto* g = std::get_if<BipartiteMultigraph>(&inst)) return std::move(*g);
  throw InputError(path.string() + " is not a bmg-v1 instance");
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace t3lab::io
