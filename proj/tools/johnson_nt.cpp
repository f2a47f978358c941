// johnson-nt: construct, verify and search codes in Johnson graphs.
#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "jnt/code_io.hpp"
#include "jnt/codes.hpp"
#include "jnt/errors.hpp"
#include "jnt/group_spec.hpp"

namespace {

enum Exit { kOk = 0, kFindings = 1, kUsage = 2, kResource = 3 };

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    jnt::write_text_file(path, text);
  }
}

std::optional<bool> flag_value(const jnt::PropertyReport& r, const std::string& name) {
  using jnt::Predicate;
  switch (jnt::parse_predicate(name)) {
    case Predicate::code_transitive: return r.code_transitive;
    case Predicate::neighbour_set_transitive: return r.neighbour_set_transitive;
    case Predicate::neighbour_transitive: return r.neighbour_transitive;
    case Predicate::incidence_transitive: return r.incidence_transitive;
    case Predicate::strongly_incidence_transitive: return r.strongly_incidence_transitive;
    case Predicate::completely_transitive: return r.completely_transitive;
    case Predicate::completely_regular: return r.completely_regular;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codes in Johnson graphs: constructions, transitivity checks and orbit searches"};
  app.require_subcommand(1);
  std::size_t cap_orbit = jnt::kDefaultOrbitCap;
  std::size_t cap_partition = jnt::kDefaultPartitionCap;
  app.add_option("--cap-orbit", cap_orbit, "Largest orbit or incidence set enumerated")->capture_default_str();
  app.add_option("--cap-partition", cap_partition, "Largest C(v,k) for distance partitions and searches")
      ->capture_default_str();

  // construct
  auto* construct = app.add_subcommand("construct", "Build a catalog code and write it as JSON");
  std::string family;
  std::string output;
  std::string inner_path;
  std::string inner_group;
  std::string variant;
  jnt::ConstructionSpec spec;
  construct->add_option("--family", family, "Construction family (see 'catalog')")->required();
  construct->add_option("--v", spec.v, "Number of points (intransitive)");
  construct->add_option("--u", spec.u, "Size of U = {0..u-1} (intransitive)");
  construct->add_option("--k", spec.k, "Codeword size");
  construct->add_option("--variant", variant, "Intransitive variant a, b or c")->check(CLI::IsMember({"a", "b", "c"}));
  construct->add_option("--a", spec.a, "Part size (utype, blowup)");
  construct->add_option("--b", spec.b, "Number of parts (utype)");
  construct->add_option("--line", spec.line, "U-type table line 1..7");
  construct->add_option("--c", spec.c, "Per-part size for utype line 5");
  construct->add_option("--n", spec.n, "Vector dimension (subspace families)");
  construct->add_option("--s", spec.s, "Subspace dimension");
  construct->add_option("--q", spec.q, "Field order");
  construct->add_option("--q0", spec.q0, "Subfield order (baer_subline)");
  construct->add_option("--inner", inner_path, "Inner code JSON (blowup)");
  construct->add_option("--inner-group", inner_group, "Group spec acting on the inner code (blowup)");
  construct->add_option("-o,--output", output, "Output file (default standard output)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the transitivity properties of a code under a group");
  std::string code_path;
  std::string group_text;
  std::string report_path;
  std::vector<std::string> required;
  bool no_partition = false;
  verify->add_option("code", code_path, "Code JSON file")->required();
  verify->add_option("--group", group_text, "Group spec (default: the code's 'group' parameter)");
  verify->add_option("--require", required, "Flags that must hold, e.g. strongly_incidence_transitive");
  verify->add_option("--report", report_path, "Write the JSON report here instead of standard output");
  verify->add_flag("--no-partition", no_partition, "Skip the distance partition");

  // search
  auto* search = app.add_subcommand("search", "Orbit codes of a group satisfying a property");
  std::string search_group;
  std::size_t search_k = 0;
  std::string predicate = "neighbour_transitive";
  std::size_t max_union = 1;
  std::string search_out;
  search->add_option("--group", search_group, "Group spec")->required();
  search->add_option("--k", search_k, "Codeword size")->required();
  search->add_option("--predicate", predicate, "Property to test")->capture_default_str();
  search->add_option("--max-union", max_union, "Largest number of orbits in a union (1..3)")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  search->add_option("-o,--output", search_out, "Output file (default standard output)");

  // catalog
  auto* cat = app.add_subcommand("catalog", "List the construction families");
  bool cat_json = false;
  cat->add_flag("--json", cat_json, "Emit JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  jnt::CheckOptions check;
  check.orbit_cap = cap_orbit;
  check.partition_cap = cap_partition;

  try {
    if (*construct) {
      spec.family = jnt::parse_family(family);
      if (!variant.empty()) spec.variant = variant[0];
      if (!inner_path.empty()) spec.inner = jnt::read_code_file(inner_path);
      if (!inner_group.empty()) {
        if (!spec.inner) throw jnt::DomainError("--inner-group needs --inner");
        spec.inner_group = jnt::parse_group_spec(inner_group, spec.inner->v());
      }
      const auto built = jnt::build(spec);
      for (const auto& note : built.notes) std::cerr << "note: " << note << "\n";
      emit(output, jnt::code_to_string(built.code));
      return kOk;
    }

    if (*verify) {
      const jnt::Code code = jnt::read_code_file(code_path);
      if (group_text.empty()) {
        const auto hint = code.param("group");
        if (!hint) throw jnt::DomainError("no --group given and the code has no 'group' parameter");
        group_text = *hint;
      }
      const jnt::PermGroup g = jnt::parse_group_spec(group_text, code.v());
      check.distance_partition = !no_partition;
      const auto report = jnt::check_properties(code, g, check);
      const auto consistency = jnt::check_theorem_consistency(code, g, report);
      auto j = jnt::report_to_json(report);
      j["group_spec"] = group_text;
      j["consistency"] = consistency.skipped ? jnt::Json("skipped") : jnt::Json(consistency.violations);
      if (report_path.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        jnt::write_text_file(report_path, j.dump(2) + "\n");
      }
      std::cout << jnt::report_summary(report);
      int rc = kOk;
      for (const auto& v : consistency.violations) {
        std::cout << "  violation: " << v << "\n";
        rc = kFindings;
      }
      for (const auto& name : required) {
        const auto value = flag_value(report, name);
        if (!value) {
          std::cout << "  required " << name << ": not computed (resource cap)\n";
          rc = kResource;
        } else if (!*value) {
          std::cout << "  required " << name << ": FAIL\n";
          if (rc == kOk) rc = kFindings;
        }
      }
      return rc;
    }

    if (*search) {
      const jnt::PermGroup g = jnt::parse_group_spec(search_group);
      jnt::SearchOptions opt;
      opt.max_union = max_union;
      opt.cap = cap_partition;
      opt.check = check;
      const auto p = jnt::parse_predicate(predicate);
      auto found = jnt::classify_search(g, search_k, p, opt);
      jnt::Json arr = jnt::Json::array();
      for (auto& c : found) {
        c.set_param("group", search_group);
        arr.push_back(jnt::code_to_json(c));
      }
      emit(search_out, arr.dump() + "\n");
      std::cerr << found.size() << " code(s) satisfy " << jnt::predicate_name(p) << "\n";
      return kOk;
    }

    if (*cat) {
      const auto entries = jnt::catalog();
      if (cat_json) {
        jnt::Json arr = jnt::Json::array();
        for (const auto& e : entries) {
          arr.push_back({{"family", e.family},
                         {"parameters", e.parameters},
                         {"description", e.description},
                         {"reference", e.reference}});
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& e : entries) {
          std::cout << e.family << "\n  parameters:  " << e.parameters << "\n  description: " << e.description
                    << "\n  reference:   " << e.reference << "\n";
        }
      }
      return kOk;
    }
  } catch (const jnt::ResourceError& e) {
    std::cerr << "error: resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const jnt::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const jnt::ConstructionError& e) {
    std::cerr << "error: construction failed: " << e.what() << "\n";
    return kFindings;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
