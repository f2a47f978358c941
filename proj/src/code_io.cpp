#include "jnt/code_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "jnt/errors.hpp"

namespace jnt {

namespace {

std::vector<std::vector<Point>> lex_codewords(const Code& code) {
  std::vector<std::vector<Point>> out;
  out.reserve(code.size());
  for (const auto& c : code.codewords()) out.push_back(c.indices());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t read_size(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  const auto& x = j.at(key);
  if (!x.is_number_unsigned()) throw DomainError(std::string("field '") + key + "' must be a non-negative integer");
  return x.get<std::size_t>();
}

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

std::string flag_text(const std::optional<bool>& x) {
  if (!x) return "not computed";
  return *x ? "yes" : "no";
}

}  // namespace

Json code_to_json(const Code& code) {
  Json j;
  j["v"] = code.v();
  j["k"] = code.k();
  j["name"] = code.name();
  Json params = Json::object();
  for (const auto& [key, value] : code.params()) params[key] = value;
  j["params"] = params;
  j["codewords"] = lex_codewords(code);
  return j;
}

std::string code_to_string(const Code& code) { return code_to_json(code).dump() + "\n"; }

Code code_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("code JSON must be an object");
  const std::size_t v = read_size(j, "v");
  const std::size_t k = read_size(j, "k");
  if (v == 0 || v > kMaxDegree) throw DomainError("field 'v' must lie in 1.." + std::to_string(kMaxDegree));
  if (k > v) throw DomainError("field 'k' exceeds v");
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw DomainError("field 'name' must be a string");
    name = j.at("name").get<std::string>();
  }
  Params params;
  if (j.contains("params")) {
    const auto& p = j.at("params");
    if (!p.is_object()) throw DomainError("field 'params' must be an object");
    for (const auto& [key, value] : p.items()) {
      if (!value.is_string()) throw DomainError("field 'params." + key + "' must be a string");
      params.emplace_back(key, value.get<std::string>());
    }
  }
  if (!j.contains("codewords")) throw DomainError("missing field 'codewords'");
  const auto& cws = j.at("codewords");
  if (!cws.is_array()) throw DomainError("field 'codewords' must be an array");
  if (cws.empty()) throw DomainError("field 'codewords' must not be empty");
  std::vector<std::vector<Point>> lists;
  for (std::size_t i = 0; i < cws.size(); ++i) {
    const std::string at = "codewords[" + std::to_string(i) + "]";
    const auto& c = cws[i];
    if (!c.is_array()) throw DomainError(at + " must be an array");
    if (c.size() != k) throw DomainError(at + " has " + std::to_string(c.size()) + " entries, expected k = " + std::to_string(k));
    std::vector<Point> idx;
    for (std::size_t t = 0; t < c.size(); ++t) {
      const std::string here = at + "[" + std::to_string(t) + "]";
      if (!c[t].is_number_unsigned()) throw DomainError(here + " must be a non-negative integer");
      const auto x = c[t].get<std::uint64_t>();
      if (x >= v) throw DomainError(here + " = " + std::to_string(x) + " is out of range for v = " + std::to_string(v));
      if (!idx.empty() && x <= idx.back()) throw DomainError(here + " breaks the ascending order");
      idx.push_back(static_cast<Point>(x));
    }
    if (!lists.empty()) {
      if (idx == lists.back()) throw DomainError(at + " duplicates the previous codeword");
      if (idx < lists.back()) throw DomainError(at + " breaks the lexicographic order of codewords");
    }
    lists.push_back(std::move(idx));
  }
  std::vector<KSubset> sets;
  sets.reserve(lists.size());
  for (const auto& l : lists) sets.push_back(KSubset::from_indices(v, l));
  return Code(v, k, std::move(sets), std::move(name), std::move(params));
}

Code code_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  return code_from_json(j);
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return code_from_string(buf.str());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
  if (!out) throw DomainError("write failed for " + path);
}

Json report_to_json(const PropertyReport& r) {
  Json j;
  j["name"] = r.name;
  j["v"] = r.v;
  j["k"] = r.k;
  j["code_size"] = r.code_size;
  j["neighbour_count"] = r.neighbour_count;
  j["min_distance"] = optional_json(r.min_distance);
  j["degenerate"] = r.degenerate;
  Json flags;
  flags["code_transitive"] = optional_json(r.code_transitive);
  flags["neighbour_set_transitive"] = optional_json(r.neighbour_set_transitive);
  flags["neighbour_transitive"] = optional_json(r.neighbour_transitive);
  flags["incidence_transitive"] = optional_json(r.incidence_transitive);
  flags["strongly_incidence_transitive"] = optional_json(r.strongly_incidence_transitive);
  flags["completely_transitive"] = optional_json(r.completely_transitive);
  flags["completely_regular"] = optional_json(r.completely_regular);
  j["flags"] = flags;
  j["incidence_method"] = r.incidence_method;
  j["neighbourhoods_cover_neighbour_set"] = r.neighbourhoods_cover_neighbour_set;
  Json dp;
  dp["covering_index"] = optional_json(r.covering_index);
  dp["cell_sizes"] = r.cell_sizes;
  dp["intersection_numbers"] = r.intersection_numbers;
  j["distance_partition"] = dp;
  Json g;
  g["order"] = r.group_order.str();
  g["stabiliser_order"] = r.stabiliser_order.str();
  g["transitive_on_points"] = r.transitive_on_points;
  g["primitive_on_points"] = r.primitive_on_points;
  g["two_transitive_on_points"] = r.two_transitive_on_points;
  j["group"] = g;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json x;
    x["flag"] = w.flag;
    x["reason"] = w.reason;
    Json subsets = Json::array();
    for (const auto& s : w.subsets) subsets.push_back(s.indices());
    x["subsets"] = subsets;
    x["points"] = w.points;
    ws.push_back(x);
  }
  j["witnesses"] = ws;
  j["notes"] = r.notes;
  return j;
}

std::string report_summary(const PropertyReport& r) {
  std::ostringstream out;
  out << (r.name.empty() ? std::string("code") : r.name) << ": v=" << r.v << " k=" << r.k << " |code|=" << r.code_size
      << " |neighbours|=" << r.neighbour_count << " min distance="
      << (r.min_distance ? std::to_string(*r.min_distance) : std::string("none")) << (r.degenerate ? " (degenerate)" : "")
      << "\n";
  out << "  group order " << r.group_order << ", codeword stabiliser order " << r.stabiliser_order << ", "
      << (r.two_transitive_on_points ? "2-transitive"
          : r.primitive_on_points    ? "primitive"
          : r.transitive_on_points   ? "imprimitive"
                                     : "intransitive")
      << " on points\n";
  out << "  code-transitive:               " << flag_text(r.code_transitive) << "\n";
  out << "  neighbour-set-transitive:      " << flag_text(r.neighbour_set_transitive) << "\n";
  out << "  neighbour-transitive:          " << flag_text(r.neighbour_transitive) << "\n";
  out << "  incidence-transitive:          " << flag_text(r.incidence_transitive) << " (" << r.incidence_method << ")\n";
  out << "  strongly incidence-transitive: " << flag_text(r.strongly_incidence_transitive) << "\n";
  out << "  completely transitive:         " << flag_text(r.completely_transitive) << "\n";
  out << "  completely regular:            " << flag_text(r.completely_regular) << "\n";
  if (r.covering_index) out << "  covering index:                " << *r.covering_index << "\n";
  for (const auto& w : r.witnesses) out << "  witness [" << w.flag << "]: " << w.reason << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace jnt
