// snarkflow: generators, flow-number solvers, certificate checks and the
// proof audits behind one command.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "snarkflow/families.hpp"
#include "snarkflow/flows.hpp"
#include "snarkflow/graph_io.hpp"
#include "snarkflow/proofcheck/audit.hpp"
#include "snarkflow/proofcheck/block_model.hpp"
#include "snarkflow/proofcheck/catalog.hpp"
#include "snarkflow/proofcheck/end_to_end.hpp"
#include "snarkflow/valuations.hpp"

namespace {

using namespace snarkflow;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kClaimFailed = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

Family family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

/// Input file, or a generated family when no file is given.
Graph load_graph(const std::string& input, const std::string& family, int k) {
  if (!input.empty()) return parse_graph_text(read_file(input));
  if (family.empty()) throw UsageError("give an input file or --family");
  return make_family(family_or_throw(family), k).graph;
}

// ------------------------------------------------------------------ gen

int cmd_gen(const std::string& family, int k, const std::string& format, const std::string& out_path) {
  const LabeledGraph lg = make_family(family_or_throw(family), k);
  std::string fmt = format;
  if (fmt.empty()) fmt = lg.family == Family::reduced_goldberg ? "json" : "graph6";
  if (fmt == "graph6") {
    const std::string line = emit_graph6(lg.graph);
    if (out_path.empty()) {
      std::cout << line << "\n";
    } else {
      std::ofstream(out_path) << line << "\n";
    }
    return kOk;
  }
  json j = graph_to_json(lg.graph);
  j["labels"] = lg.labels;
  j["family"] = family_name(lg.family);
  if (lg.family != Family::petersen) j["k"] = lg.k;
  emit(j, out_path);
  return kOk;
}

// ------------------------------------------------------------------ phi

int cmd_phi(const Graph& g, const std::string& method, const std::string& cert_path, std::int64_t cap,
            double budget) {
  const Deadline deadline(budget);
  json rep;
  rep["n"] = g.n();
  rep["m"] = g.m();
  rep["method"] = method;
  std::optional<Rational> by_flows, by_valuations;
  try {
    if (method == "flows" || method == "both") {
      auto res = phi_via_flows(g, cap, deadline);
      by_flows = res.phi;
      rep["phi_flows"] = res.phi.str();
      rep["certificate"] = certificate_to_json(res.certificate);
      if (!cert_path.empty()) emit(certificate_to_json(res.certificate), cert_path);
    }
    if (method == "valuations" || method == "both") {
      auto res = phi_via_valuations(g, deadline);
      by_valuations = res.phi;
      rep["phi_valuations"] = res.phi.str();
      rep["valuation"] = valuation_to_json(res.b);
    }
  } catch (const BudgetExceeded&) {
    rep["completed"] = false;
    std::cout << rep.dump(2) << "\n";
    return kOk;
  }
  rep["completed"] = true;
  const Rational phi = by_flows ? *by_flows : *by_valuations;
  rep["phi"] = phi.str();
  int code = kOk;
  if (by_flows && by_valuations) {
    rep["agree"] = *by_flows == *by_valuations;
    if (*by_flows != *by_valuations) code = kVerifyFailed;
  }
  std::cout << rep.dump(2) << "\n";
  return code;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const Graph& g, const std::string& cert_path, const std::string& r_text) {
  if (cert_path.empty()) throw UsageError("--certificate is required");
  json cj;
  try {
    cj = json::parse(read_file(cert_path));
  } catch (const json::parse_error& ex) {
    throw UsageError(std::string("certificate is not JSON: ") + ex.what());
  }
  const FlowCertificate cert = certificate_from_json(cj);
  const Rational r = r_text.empty() ? cert.r : Rational::parse(r_text);
  const FlowCheck check = verify_circular_flow(g, cert, r);
  json rep{{"r", r.str()}, {"ok", check.ok}};
  if (!check.ok) {
    rep["message"] = check.message;
    if (check.edge >= 0) rep["edge"] = check.edge;
    if (check.vertex >= 0) rep["vertex"] = check.vertex;
  }
  std::cout << rep.dump(2) << "\n";
  return check.ok ? kOk : kVerifyFailed;
}

// ------------------------------------------------------------------ proofcheck

using namespace snarkflow::proofcheck;

json suite_configurations(bool& ok) {
  const auto classes = enumerate_configurations();
  json list = json::array();
  std::set<int> ids;
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(colouring_str(m));
    list.push_back({{"configuration", c.id}, {"members", members}});
    ids.insert(c.id);
  }
  // Configuration 4 is the twist of configuration 2 (closed under reverse).
  std::set<std::string> twisted, four;
  const auto tw = letter_part(ext_permutation(BlockSymmetry::twist));
  for (const auto& c : classes) {
    if (c.id == 2)
      for (const auto& m : c.members) twisted.insert(colouring_str(permute(m, tw)));
    if (c.id == 4)
      for (const auto& m : c.members) four.insert(colouring_str(m));
  }
  const bool twist_ok = !four.empty() && twisted == four;
  ok = classes.size() == 4 && ids == std::set<int>{1, 2, 3, 4} && twist_ok;
  return {{"classes", list}, {"class_count", classes.size()}, {"configuration4_is_twisted_2", twist_ok}};
}

json pattern_json(const BlockPattern& p) {
  return colouring_str(p.colour) + " " + membership_str(p.membership) + " " + outside_str(p.outside);
}

json suite_blocktypes(bool& ok) {
  ok = true;
  json per = json::array();
  const auto& cat = catalog();
  for (int cfg = 1; cfg <= 3; ++cfg) {
    std::set<BlockPattern> stored;
    for (const auto& e : cat)
      if (e.configuration == cfg) stored.insert(e.pattern);
    for (const std::string mode : {"paper", "relaxed"}) {
      const auto found = enumerate_block_types(cfg, mode == "paper" ? kPaperRules : kRelaxedRules);
      std::set<BlockPattern> got(found.begin(), found.end());
      json missing = json::array(), extra = json::array();
      for (const auto& p : stored)
        if (!got.count(p) && !got.count(transform(p, BlockSymmetry::reverse))) missing.push_back(pattern_json(p));
      for (const auto& p : got)
        if (!stored.count(p) && !stored.count(transform(p, BlockSymmetry::reverse))) extra.push_back(pattern_json(p));
      if (mode == "paper" && (!missing.empty() || !extra.empty())) ok = false;
      per.push_back({{"configuration", cfg},
                     {"mode", mode},
                     {"count", found.size()},
                     {"catalogued", stored.size()},
                     {"missing", missing},
                     {"extra", extra}});
    }
  }
  // Configuration 4 entries are the twisted configuration-2 entries.
  std::set<BlockPattern> four, twisted;
  for (const auto& e : cat) {
    if (e.configuration == 4) {
      four.insert(e.pattern);
      four.insert(transform(e.pattern, BlockSymmetry::reverse));
    }
    if (e.configuration == 2) {
      const auto t = transform(e.pattern, BlockSymmetry::twist);
      twisted.insert(t);
      twisted.insert(transform(t, BlockSymmetry::reverse));
    }
  }
  const bool twist_ok = four == twisted;
  int config4 = 0;
  for (const auto& e : cat) config4 += e.configuration == 4;
  ok = ok && twist_ok && config4 == 8;

  bool closed = true;
  std::set<BlockPattern> all;
  for (const auto& t : directed_types()) all.insert(t.pattern);
  for (const auto& t : directed_types()) {
    const auto r = transform(t.pattern, BlockSymmetry::reverse);
    if (!all.count(r) || transform(r, BlockSymmetry::reverse) != t.pattern) closed = false;
    if (transform(transform(t.pattern, BlockSymmetry::twist), BlockSymmetry::twist) != t.pattern) closed = false;
  }
  ok = ok && closed;
  return {{"checksum", catalog_checksum_hex()},
          {"per_configuration", per},
          {"configuration4_types", config4},
          {"configuration4_is_twisted_2", twist_ok},
          {"directed_types", directed_types().size()},
          {"reverse_closed", closed}};
}

json suite_discharging(const std::vector<int>& lengths, double budget, bool& ok, bool& completed) {
  ok = true;
  completed = true;
  json runs = json::array();
  for (int L : lengths) {
    const Deadline deadline(budget);
    const auto exact = audit_sequences(L, SequenceRules{}, deadline);
    SequenceRules local;
    local.optimal = false;
    const auto loc = audit_sequences(L, local, deadline);
    ok = ok && exact.claims_hold();
    completed = completed && exact.completed && loc.completed;
    runs.push_back({{"length", L}, {"rules", "exact"}, {"audit", audit_to_json(exact)}});
    SequenceRules bare{false, false, false, false, false, false};
    const auto compat = audit_sequences(L, bare, deadline);
    completed = completed && compat.completed;
    runs.push_back({{"length", L}, {"rules", "local"}, {"audit", audit_to_json(loc)}, {"informational", true}});
    runs.push_back({{"length", L}, {"rules", "compatible"}, {"audit", audit_to_json(compat)}, {"informational", true}});
  }
  return {{"runs", runs}};
}

json suite_coloring(int k, bool& ok) {
  ok = true;
  const LabeledGraph lg = reduced_goldberg(k);
  json blocks = json::array();
  for (int i = 0; i < lg.block_count(); ++i) {
    const auto rep = extended_block_parity(lg, i);
    ok = ok && rep.holds;
    json b{{"block", i}, {"holds", rep.holds}, {"colourings", rep.colourings}};
    if (!rep.holds) b["counterexample"] = rep.counterexample;
    blocks.push_back(b);
  }
  return {{"k", k}, {"blocks", blocks}};
}

int cmd_proofcheck(const std::string& suite, int k, bool k_given, double budget, const std::string& out_path) {
  bool ok = true, completed = true;
  json rep{{"suite", suite}};
  if (suite == "configurations") {
    rep["result"] = suite_configurations(ok);
  } else if (suite == "blocktypes") {
    rep["result"] = suite_blocktypes(ok);
  } else if (suite == "discharging") {
    std::vector<int> lengths = k_given ? std::vector<int>{2 * k + 1} : std::vector<int>{3, 5};
    rep["result"] = suite_discharging(lengths, budget, ok, completed);
  } else if (suite == "coloring") {
    rep["result"] = suite_coloring(k, ok);
  } else if (suite == "endtoend") {
    const auto r = end_to_end_check(k, budget);
    completed = r.completed;
    ok = r.hard_ok() && !r.unclassifiable && !r.boundary_excess && !r.over_cap && !r.lemma_failures;
    if (!r.completed) ok = r.lemma5_failures == 0 && r.conservation_failures == 0;
    rep["result"] = end_to_end_to_json(r);
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  rep["completed"] = completed;
  rep["claims_hold"] = ok;
  emit(rep, out_path);
  return ok ? kOk : kClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snarkflow: circular flow numbers and proof audits for Goldberg snarks"};
  app.require_subcommand(1, 1);

  std::string family, format, input, method = "both", cert_path, r_text, suite, out_path;
  int k = 1;
  std::int64_t cap = 0;
  double budget = 0;

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("--family", family, "goldberg | reduced-goldberg | flower | petersen")->required();
  gen->add_option("--k", k, "family parameter (k >= 1)");
  gen->add_option("--format", format, "graph6 | json")->check(CLI::IsMember({"graph6", "json"}));
  gen->add_option("-o,--output", out_path, "output file");

  auto* phi = app.add_subcommand("phi", "compute the circular flow number");
  phi->add_option("input", input, "graph6 or JSON graph file");
  phi->add_option("--family", family, "generate the input instead");
  phi->add_option("--k", k, "family parameter");
  phi->add_option("--method", method, "flows | valuations | both")
      ->check(CLI::IsMember({"flows", "valuations", "both"}));
  phi->add_option("--certificate", cert_path, "write the flow certificate here");
  phi->add_option("--denominator-cap", cap, "largest denominator tried by the flow solver (default |V|)");
  phi->add_option("--budget-seconds", budget, "wall-clock budget, 0 = none");

  auto* verify = app.add_subcommand("verify", "check a flow certificate");
  verify->add_option("input", input, "graph6 or JSON graph file");
  verify->add_option("--family", family, "generate the graph instead");
  verify->add_option("--k", k, "family parameter");
  verify->add_option("--certificate", cert_path, "certificate JSON")->required();
  verify->add_option("--r", r_text, "flow value p/q (default: the certificate's r)");

  auto* proof = app.add_subcommand("proofcheck", "run an audit suite");
  auto* k_opt = proof->add_option("--k", k, "family parameter");
  proof->add_option("--suite", suite, "configurations | blocktypes | discharging | coloring | endtoend")
      ->required()
      ->check(CLI::IsMember({"configurations", "blocktypes", "discharging", "coloring", "endtoend"}));
  proof->add_option("--budget-seconds", budget, "wall-clock budget, 0 = none");
  proof->add_option("-o,--output", out_path, "report file");

  auto* cat = app.add_subcommand("catalog", "print the block-type catalog");
  cat->add_option("-o,--output", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (k < 1 && !(*gen && family == "petersen")) throw UsageError("--k must be at least 1");
    if (*gen) return cmd_gen(family, k, format, out_path);
    if (*phi) return cmd_phi(load_graph(input, family, k), method, cert_path, cap, budget);
    if (*verify) return cmd_verify(load_graph(input, family, k), cert_path, r_text);
    if (*proof) return cmd_proofcheck(suite, k, k_opt->count() > 0, budget, out_path);
    if (*cat) {
      emit(json{{"checksum", catalog_checksum_hex()}, {"types", catalog_to_json()}}, out_path);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BridgeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
