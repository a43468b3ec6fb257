// uberhom: bold and über homology, domination polynomials, and the reference table from the
// command line. Exit codes: 0 success, 1 failed check, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reference_table.hpp"
#include "uberhom/bold.hpp"
#include "uberhom/domination.hpp"
#include "uberhom/error.hpp"
#include "uberhom/graph6.hpp"
#include "uberhom/graphgen.hpp"
#include "uberhom/uber.hpp"

using json = nlohmann::json;
using namespace uberhom;

namespace {

constexpr int kSchemaVersion = 1;

struct Common {
  std::string field = "2";
  bool as_json = false;
  bool no_timing = false;
};

struct Input {
  std::string g6;
  std::string edges;
  std::string family;
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
};

struct CheckFailed {
  int code = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--field", c.field, "2, an odd prime p, or Q")->capture_default_str();
  sub->add_flag("--json", c.as_json, "JSON output");
  sub->add_flag("--no-timing", c.no_timing, "omit timing metadata");
}

void add_input(CLI::App* sub, Input& in) {
  auto* g6 = sub->add_option("--g6", in.g6, "graph6 string");
  auto* edges = sub->add_option("--edges", in.edges, "edge-list file: n, then one 'u v' per line");
  auto* family = sub->add_option("--family", in.family, "generator family name");
  sub->add_option("--params", in.params, "family parameters")->delimiter(',')->needs(family);
  sub->add_option("--seed", in.seed, "seed for random families")->needs(family);
  g6->excludes(edges)->excludes(family);
  edges->excludes(family);
  sub->callback([sub] {
    if (sub->count("--g6") + sub->count("--edges") + sub->count("--family") == 0) {
      throw CLI::RequiredError("one of --g6, --edges, --family");
    }
  });
}

Graph load(const Input& in, json& descriptor) {
  if (!in.g6.empty()) {
    descriptor = {{"graph6", in.g6}};
    return parse_graph6(in.g6);
  }
  if (!in.edges.empty()) {
    descriptor = {{"edges", in.edges}};
    std::ifstream file(in.edges);
    if (!file) throw Error(ErrorCode::kMalformedInput, "cannot read " + in.edges);
    std::stringstream text;
    text << file.rdbuf();
    return parse_edge_list(text.str());
  }
  descriptor = {{"family", in.family}, {"params", in.params}};
  if (in.seed) descriptor["seed"] = *in.seed;
  return generate({in.family, in.params, in.seed});
}

json degree_ranks(const std::map<Multidegree, std::size_t>& ranks, std::size_t arity) {
  json out = json::object();
  for (const auto& [d, r] : ranks) {
    std::string key = std::to_string(d[0]);
    for (std::size_t i = 1; i < arity; ++i) key += "," + std::to_string(d[i]);
    out[key] = r;
  }
  return out;
}

long long chi_of(const std::map<Multidegree, std::size_t>& ranks) {
  long long chi = 0;
  for (const auto& [d, r] : ranks) chi += (d[0] % 2 ? -1 : 1) * static_cast<long long>(r);
  return chi;
}

BoldPath parse_via(const std::string& via) {
  if (via == "dh") return BoldPath::kDominating;
  if (via == "ch") return BoldPath::kBold;
  return BoldPath::kBoth;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_ranks_text(const json& ranks, const std::string& header) {
  std::cout << std::left << std::setw(12) << header << "rank\n";
  if (ranks.empty()) std::cout << "(zero)\n";
  for (const auto& [k, v] : ranks.items()) std::cout << std::left << std::setw(12) << k << v.get<std::size_t>() << "\n";
}

void emit(const Common& c, json doc, double seconds, const std::function<void(const json&)>& text) {
  doc["schema_version"] = kSchemaVersion;
  if (!c.no_timing) doc["timing"] = {{"seconds", seconds}};
  if (c.as_json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (doc.contains("input")) std::cout << std::left << std::setw(12) << "input" << doc["input"].dump() << "\n";
  if (doc.contains("field")) std::cout << std::left << std::setw(12) << "field" << doc["field"].get<std::string>() << "\n";
  text(doc);
  if (!c.no_timing) std::cout << std::left << std::setw(12) << "seconds" << seconds << "\n";
}

json base(const std::string& command, const json& input, const Field& f) {
  return {{"command", command}, {"input", input}, {"field", f.name()}};
}

int run_bold(const Common& c, const Input& in, const std::string& via) {
  Timer t;
  json input;
  Graph g = load(in, input);
  Field f = Field::parse(c.field);
  auto h = bold_homology(g, f, parse_via(via));
  json doc = base("bold", input, f);
  doc["via"] = via;
  doc["ranks"] = degree_ranks(h.ranks, 1);
  doc["chi"] = chi_of(h.ranks);
  emit(c, doc, t.seconds(), [](const json& d) {
    print_ranks_text(d["ranks"], "degree");
    std::cout << std::left << std::setw(12) << "chi" << d["chi"].get<long long>() << "\n";
  });
  return 0;
}

int run_uber(const Common& c, const Input& in, bool force) {
  Timer t;
  json input;
  Graph g = load(in, input);
  if (g.vertex_count() > 14 && !force) {
    throw Error(ErrorCode::kGuard, "über homology refuses more than 14 vertices without --force");
  }
  Field f = Field::parse(c.field);
  auto h = uber_homology(g.as_complex(), f);
  json doc = base("uber", input, f);
  doc["ranks"] = degree_ranks(h.ranks, 3);
  emit(c, doc, t.seconds(), [](const json& d) { print_ranks_text(d["ranks"], "j,i,k"); });
  return 0;
}

int run_domp(const Common& c, const Input& in, bool connected_only, bool allow_large) {
  Timer t;
  json input;
  Graph g = load(in, input);
  json doc = {{"command", "domp"}, {"input", input}};
  doc["connected_domination"] = connected_domination_polynomial(g, allow_large).coefficients();
  if (!connected_only) doc["domination"] = domination_polynomial(g, allow_large).coefficients();
  emit(c, doc, t.seconds(), [](const json& d) {
    auto line = [](const std::string& name, const json& coefficients) {
      IntPolynomial p(coefficients.get<std::vector<std::int64_t>>());
      std::cout << std::left << std::setw(12) << name << p.to_string() << "\n";
    };
    line("D^c", d["connected_domination"]);
    if (d.contains("domination")) line("D", d["domination"]);
  });
  return 0;
}

int run_euler(const Common& c, const Input& in, const std::string& via) {
  Timer t;
  json input;
  Graph g = load(in, input);
  Field f = Field::parse(c.field);
  auto r = euler_check(g, f, parse_via(via));
  json doc = base("euler", input, f);
  doc["via"] = via;
  doc["chi"] = r.chi;
  doc["dc_at_minus1"] = r.dc_at_minus1;
  doc["pass"] = r.pass;
  emit(c, doc, t.seconds(), [](const json& d) {
    std::cout << std::left << std::setw(12) << "chi" << d["chi"].get<long long>() << "\n"
              << std::setw(12) << "D^c(-1)" << d["dc_at_minus1"].get<long long>() << "\n"
              << std::setw(12) << "result" << (d["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  });
  return r.pass ? 0 : 1;
}

int run_reduce(const Common& c, const Input& in) {
  Timer t;
  json input;
  Graph g = load(in, input);
  Field f = Field::parse(c.field);
  auto complex = bold_complex(g, f);
  auto dh = dominating_complex(g, f);
  auto m = retraction_matching(g);
  auto cert = layered_acyclicity(complex, m.matching, m.layers);
  auto reduced = morse_reduce_with_map(complex, m.matching, &m.layers);

  json doc = base("reduce", input, f);
  json chain = json::object(), dominating = json::object(), critical = json::object();
  for (const auto& d : complex.degrees()) chain[std::to_string(d[0])] = complex.size(d);
  for (const auto& d : dh.degrees()) dominating[std::to_string(d[0])] = dh.size(d);
  std::vector<std::string> critical_labels, dominating_labels;
  for (const auto& [d, idx] : reduced.critical) {
    if (!idx.empty()) critical[std::to_string(d[0])] = idx.size();
    for (auto i : idx) critical_labels.push_back(complex.basis(d)[i]);
  }
  for (const auto& d : dh.degrees()) {
    for (const auto& label : dh.basis(d)) dominating_labels.push_back(label);
  }
  std::sort(critical_labels.begin(), critical_labels.end());
  std::sort(dominating_labels.begin(), dominating_labels.end());
  bool same = critical_labels == dominating_labels;

  doc["chain_generators"] = chain;
  doc["dominating_generators"] = dominating;
  doc["critical_generators"] = critical;
  doc["matched_pairs"] = m.matching.size();
  doc["certificate"] = {{"ok", cert.ok}, {"detail", cert.detail}};
  doc["certificate"]["violated_clause"] = cert.violated_clause ? json(*cert.violated_clause) : json(nullptr);
  doc["critical_equals_dominating"] = same;
  emit(c, doc, t.seconds(), [](const json& d) {
    std::cout << std::left << std::setw(12) << "degree" << std::setw(10) << "C" << std::setw(10) << "D"
              << "critical\n";
    std::set<std::string> keys;
    for (const auto& [k, v] : d["chain_generators"].items()) keys.insert(k);
    std::vector<std::string> ordered(keys.begin(), keys.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return std::stoi(a) < std::stoi(b); });
    auto count = [](const json& obj, const std::string& k) { return obj.contains(k) ? obj[k].get<std::size_t>() : 0; };
    for (const auto& k : ordered) {
      std::cout << std::left << std::setw(12) << k << std::setw(10) << count(d["chain_generators"], k) << std::setw(10)
                << count(d["dominating_generators"], k) << count(d["critical_generators"], k) << "\n";
    }
    std::cout << std::setw(12) << "pairs" << d["matched_pairs"].get<std::size_t>() << "\n"
              << std::setw(12) << "certified" << (d["certificate"]["ok"].get<bool>() ? "yes" : "no") << "\n"
              << std::setw(12) << "critical=D" << (d["critical_equals_dominating"].get<bool>() ? "yes" : "no") << "\n";
  });
  return cert.ok && same ? 0 : 1;
}

std::string show(const std::map<int, std::size_t>& r) {
  if (r.empty()) return "0";
  std::string out;
  for (const auto& [d, k] : r) out += (out.empty() ? "" : " + ") + std::to_string(k) + "@" + std::to_string(d);
  return out;
}

int run_reference_table(const Common& c) {
  Timer total;
  Field f = Field::parse(c.field);
  json rows = json::array();
  json row_times = json::object();
  bool all_pass = true;
  for (const auto& row : cli::reference_rows()) {
    Timer t;
    json graphs = json::array();
    bool row_pass = true;
    for (const auto& [name, make] : row.graphs) {
      Graph g = make();
      std::map<int, std::size_t> got;
      for (const auto& [d, r] : bold_homology(g, f).ranks) got[d[0]] = r;
      long long chi = 0;
      for (const auto& [d, r] : got) chi += (d % 2 ? -1 : 1) * static_cast<long long>(r);
      auto expected = row.expected(g);
      long long expected_chi = row.expected_chi(g);
      bool pass = got == expected && chi == expected_chi;
      row_pass = row_pass && pass;
      auto to_json = [](const std::map<int, std::size_t>& m) {
        json o = json::object();
        for (const auto& [d, k] : m) o[std::to_string(d)] = k;
        return o;
      };
      graphs.push_back({{"graph", name},
                        {"ranks", to_json(got)},
                        {"expected_ranks", to_json(expected)},
                        {"chi", chi},
                        {"expected_chi", expected_chi},
                        {"pass", pass}});
    }
    all_pass = all_pass && row_pass;
    rows.push_back({{"row", row.name}, {"graphs", graphs}, {"pass", row_pass}});
    row_times[row.name] = t.seconds();
  }
  json skipped = json::array();
  for (const auto& [name, why] : cli::reference_skipped()) skipped.push_back({{"row", name}, {"reason", why}});

  json doc = {{"command", "table1"}, {"field", f.name()}, {"rows", rows}, {"skipped", skipped}, {"pass", all_pass}};
  if (!c.no_timing) doc["row_seconds"] = row_times;
  emit(c, doc, total.seconds(), [](const json& d) {
    for (const auto& row : d["rows"]) {
      for (const auto& g : row["graphs"]) {
        if (g["pass"].get<bool>() && row["graphs"].size() > 1) continue;
        auto ranks = [](const json& o) {
          std::map<int, std::size_t> m;
          for (const auto& [k, v] : o.items()) m[std::stoi(k)] = v.get<std::size_t>();
          return m;
        };
        std::cout << (g["pass"].get<bool>() ? "ok    " : "DIFF  ") << std::left << std::setw(14)
                  << g["graph"].get<std::string>() << "computed " << std::setw(12) << show(ranks(g["ranks"]))
                  << " chi " << std::setw(4) << g["chi"].get<long long>() << " table " << std::setw(12)
                  << show(ranks(g["expected_ranks"])) << " chi " << g["expected_chi"].get<long long>() << "\n";
      }
      if (row["graphs"].size() > 1 && row["pass"].get<bool>()) {
        std::cout << "ok    " << row["row"].get<std::string>() << " (" << row["graphs"].size() << " graphs)\n";
      }
    }
    for (const auto& s : d["skipped"]) {
      std::cout << "skip  " << std::left << std::setw(14) << s["row"].get<std::string>() << s["reason"].get<std::string>()
                << "\n";
    }
    std::cout << (d["pass"].get<bool>() ? "all rows match\n" : "some rows differ from the table\n");
  });
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bold homology, überhomology and connected domination"};
  app.require_subcommand(1);
  Common common;
  Input input;
  std::string via = "dh";
  bool force = false, connected_only = false, allow_large = false;

  auto* bold = app.add_subcommand("bold", "bold homology ranks");
  add_common(bold, common);
  add_input(bold, input);
  bold->add_option("--via", via, "dh (dominating complex), ch (full bold complex), or both")
      ->check(CLI::IsMember({"dh", "ch", "both"}))
      ->capture_default_str();

  auto* uber = app.add_subcommand("uber", "triply graded über homology ranks keyed by j,i,k");
  add_common(uber, common);
  add_input(uber, input);
  uber->add_flag("--force", force, "allow more than 14 vertices");

  auto* domp = app.add_subcommand("domp", "domination polynomial coefficients, constant term first");
  add_common(domp, common);
  add_input(domp, input);
  domp->add_flag("--connected-only", connected_only, "only the connected domination polynomial");
  domp->add_flag("--allow-large", allow_large, "allow more than 28 vertices");

  auto* euler = app.add_subcommand("euler", "compare chi of bold homology with D^c(-1)");
  add_common(euler, common);
  add_input(euler, input);
  euler->add_option("--via", via, "dh, ch, or both")->check(CLI::IsMember({"dh", "ch", "both"}))->capture_default_str();

  auto* table1 = app.add_subcommand("table1", "recompute the table of known bold homologies");
  add_common(table1, common);

  auto* reduce = app.add_subcommand("reduce", "retraction matching statistics on the bold complex");
  add_common(reduce, common);
  add_input(reduce, input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*bold) return run_bold(common, input, via);
    if (*uber) return run_uber(common, input, force);
    if (*domp) return run_domp(common, input, connected_only, allow_large);
    if (*euler) return run_euler(common, input, via);
    if (*table1) return run_reference_table(common);
    if (*reduce) return run_reduce(common, input);
  } catch (const Error& e) {
    std::cerr << "uberhom: " << e.what() << "\n";
    return e.code() == ErrorCode::kContractViolation ? 1 : 2;
  }
  return 2;
}
