#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbundle/builders.hpp"
#include "qbundle/calculus.hpp"
#include "qbundle/galois.hpp"
#include "qbundle/homology.hpp"
#include "qbundle/instance.hpp"
#include "qbundle/zoo.hpp"

namespace qbcli {

using nlohmann::ordered_json;

namespace {

constexpr const char* kViolation = "THEOREM VIOLATION — implementation bug";

struct Outcome {
  int code = 0;
  ordered_json report = ordered_json::object();
  std::string text;
};

/// Invalid input that is not a parse error: failed axioms before an oracle.
class InvalidInstance : public qb::Error {
 public:
  using qb::Error::Error;
};

ordered_json matrix_json(const qb::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(qb::format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(const qb::Matrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = qb::format_scalar(m(r, c));
      width = std::max(width, cells[r][c].size());
    }
  std::string s;
  for (const auto& row : cells) {
    s += indent + "[";
    for (std::size_t c = 0; c < row.size(); ++c)
      s += (c ? " " : "") + std::string(width - row[c].size(), ' ') + row[c];
    s += "]\n";
  }
  return s;
}

ordered_json axioms_json(const qb::AxiomReport& r) {
  ordered_json out;
  out["ok"] = r.ok();
  ordered_json vs = ordered_json::array();
  for (const qb::Violation& v : r.violations) vs.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  out["violations"] = std::move(vs);
  return out;
}

std::string axioms_text(const qb::AxiomReport& r) {
  if (r.ok()) return "ok";
  std::string s = "FAIL";
  for (const qb::Violation& v : r.violations) {
    s += " " + v.axiom + " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) s += (i ? "," : "") + std::to_string(v.witness[i]);
    s += ")";
  }
  return s;
}

struct AxiomSummary {
  qb::AxiomReport hopf, algebra, comodule;
  bool comodule_checked = false;
  bool ok() const { return hopf.ok() && algebra.ok() && comodule_checked && comodule.ok(); }
};

AxiomSummary check_all(const qb::ComoduleAlgebraData& p) {
  AxiomSummary s;
  s.hopf = qb::check_hopf(p.hopf());
  s.algebra = qb::check_algebra(p.algebra());
  if (s.hopf.ok() && s.algebra.ok()) {
    s.comodule = qb::check_comodule_algebra(p);
    s.comodule_checked = true;
  }
  return s;
}

ordered_json axioms_summary_json(const AxiomSummary& s) {
  ordered_json out;
  out["hopf"] = axioms_json(s.hopf);
  out["algebra"] = axioms_json(s.algebra);
  out["comodule"] = s.comodule_checked ? axioms_json(s.comodule) : ordered_json("skipped");
  out["pass"] = s.ok();
  return out;
}

void require_valid(const AxiomSummary& s) {
  if (s.ok()) return;
  for (const auto* r : {&s.hopf, &s.algebra, &s.comodule})
    if (!r->ok()) throw InvalidInstance("invalid instance: axiom " + r->violations.front().axiom + " fails");
  throw InvalidInstance("invalid instance");
}

// ------------------------------------------------------------------ reports

struct GaloisFacts {
  std::size_t dim_b = 0, dim_balanced = 0, dim_target = 0, rank = 0;
  bool galois = false;
  std::string verdict;
};

GaloisFacts galois_facts(const qb::GaloisContext& ctx) {
  GaloisFacts g;
  g.dim_b = ctx.coinvariants().dim();
  g.dim_balanced = ctx.balanced().quotient_dim();
  g.dim_target = ctx.can().codomain_dim();
  g.rank = qb::rank(ctx.can());
  g.galois = qb::is_galois(ctx);
  g.verdict = g.galois ? "GALOIS"
                       : "NOT GALOIS (rank " + std::to_string(g.rank) + "/" +
                             std::to_string(std::max(g.dim_balanced, g.dim_target)) + ")";
  return g;
}

ordered_json galois_json(const GaloisFacts& g) {
  return {{"dim_p_tensor_b_p", g.dim_balanced}, {"dim_b", g.dim_b},           {"dim_p_tensor_h", g.dim_target},
          {"can_rank", g.rank},                 {"galois", g.galois},         {"verdict", g.verdict}};
}

ordered_json prop2_json(const qb::Prop2Report& r) {
  return {{"galois", r.galois},
          {"sequence_exact", r.sequence_exact},
          {"agree", r.agree()},
          {"can_rank", r.can_rank},
          {"dim_b", r.coinvariants_dim},
          {"dim_p_tensor_b_p", r.balanced_dim},
          {"dim_omega1_p", r.omega1P_dim},
          {"dim_p_omega1_b_p", r.omega1B_dim},
          {"dim_ker_can_bar", r.ker_can_bar_dim},
          {"dim_image_can_bar", r.image_can_bar_dim},
          {"dim_p_tensor_hplus", r.p_hplus_dim}};
}

std::string prop2_text(const qb::Prop2Report& r) {
  std::ostringstream os;
  os << "side 1 (can bijective): " << (r.galois ? "true" : "false") << "\n"
     << "side 2 (0 -> P(O1B)P -> O1P -> P(x)H+ -> 0 exact): " << (r.sequence_exact ? "true" : "false") << "\n"
     << "  rank can = " << r.can_rank << ", dim B = " << r.coinvariants_dim
     << ", dim P(x)_B P = " << r.balanced_dim << "\n"
     << "  dim O1P = " << r.omega1P_dim << ", dim P(O1B)P = " << r.omega1B_dim
     << ", dim Ker can_bar = " << r.ker_can_bar_dim << ", dim Im can_bar = " << r.image_can_bar_dim
     << ", dim P(x)H+ = " << r.p_hplus_dim << "\n";
  return os.str();
}

ordered_json oracle_json(const qb::OracleReport& r) {
  return {{"side1", r.side1},
          {"side2", r.side2},
          {"agree", r.agree()},
          {"galois", r.galois},
          {"quotient_sequence_exact", r.e3_exact},
          {"condition_np_ker", r.condition},
          {"compat_equality", r.compat_equality},
          {"compat_inclusion", r.compat_inclusion},
          {"p_v_in_can_bar_n_p", r.p_v_in_image},
          {"dim_n_p", r.n_p_dim},
          {"dim_v", r.v_dim},
          {"dim_omega1", r.omega1_quotient_dim},
          {"dim_ker_can_bar", r.ker_can_bar_dim},
          {"dim_p_omega1_b_p", r.omega1B_dim},
          {"dim_horizontal", r.horizontal_dim},
          {"dim_ker_chi", r.ker_chi_dim},
          {"dim_coker_chi", r.coker_chi_dim},
          {"dim_ker_chi_bar", r.ker_chi_bar_dim},
          {"dim_coker_chi_bar", r.coker_chi_bar_dim},
          {"dim_coker_can_bar", r.coker_can_bar_dim}};
}

std::string oracle_text(const qb::OracleReport& r, int which) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  std::ostringstream os;
  if (which == 3) {
    os << "side 1 (can bijective): " << b(r.side1) << "\n"
       << "side 2 (quotient sequence exact and N_P cap Ker can_bar in P(O1B)P): " << b(r.side2) << "\n"
       << "  quotient sequence exact: " << b(r.e3_exact) << ", condition: " << b(r.condition) << "\n";
  } else {
    os << "side 1 (can bijective and P(x)V in can_bar(N_P)): " << b(r.side1) << "\n"
       << "side 2 (quotient sequence exact and N_P cap Ker can_bar in P(O1B)P): " << b(r.side2) << "\n"
       << "  galois: " << b(r.galois) << ", P(x)V in can_bar(N_P): " << b(r.p_v_in_image)
       << ", quotient sequence exact: " << b(r.e3_exact) << ", condition: " << b(r.condition) << "\n";
  }
  os << "  dim N_P = " << r.n_p_dim << ", dim V = " << r.v_dim << ", dim O1(P) = " << r.omega1_quotient_dim << "\n"
     << "  dim Ker can_bar = " << r.ker_can_bar_dim << ", dim P(O1B)P = " << r.omega1B_dim
     << ", dim horizontal = " << r.horizontal_dim << "\n"
     << "  dim Ker chi = " << r.ker_chi_dim << ", dim Coker chi = " << r.coker_chi_dim
     << ", dim Ker chi_bar = " << r.ker_chi_bar_dim << ", dim Coker chi_bar = " << r.coker_chi_bar_dim
     << ", dim Coker can_bar = " << r.coker_can_bar_dim << "\n";
  return os.str();
}

// ----------------------------------------------------------------- commands

Outcome cmd_check(const std::string& path) {
  const qb::InstanceFile inst = qb::load_instance(path);
  const AxiomSummary s = check_all(inst.comodule);
  Outcome o;
  o.report["command"] = "check";
  o.report["instance"] = inst.name;
  o.report["axioms"] = axioms_summary_json(s);
  o.code = s.ok() ? 0 : 1;
  std::ostringstream os;
  os << "hopf axioms: " << axioms_text(s.hopf) << "\n"
     << "algebra axioms: " << axioms_text(s.algebra) << "\n"
     << "comodule axioms: " << (s.comodule_checked ? axioms_text(s.comodule) : "skipped") << "\n"
     << (s.ok() ? "PASS" : "FAIL") << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_galois(const std::string& path) {
  const qb::InstanceFile inst = qb::load_instance(path);
  require_valid(check_all(inst.comodule));
  const qb::GaloisContext ctx = qb::canonical_map(inst.comodule);
  const GaloisFacts g = galois_facts(ctx);
  Outcome o;
  o.report["command"] = "galois";
  o.report["instance"] = inst.name;
  o.report.update(galois_json(g));
  o.report["can"] = matrix_json(ctx.can().matrix());
  o.code = g.galois ? 0 : 1;
  std::ostringstream os;
  os << "dim B = " << g.dim_b << "\n"
     << "dim P(x)_B P = " << g.dim_balanced << "\n"
     << "dim P(x)H = " << g.dim_target << "\n"
     << "rank can = " << g.rank << "\n"
     << "can =\n"
     << matrix_text(ctx.can().matrix(), "  ") << g.verdict << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_prop2(const std::string& path) {
  const qb::InstanceFile inst = qb::load_instance(path);
  require_valid(check_all(inst.comodule));
  const qb::Prop2Report r = qb::prop2_equivalence(qb::canonical_map(inst.comodule));
  Outcome o;
  o.report["command"] = "prop2";
  o.report["instance"] = inst.name;
  o.report.update(prop2_json(r));
  o.code = r.agree() ? 0 : 1;
  o.text = prop2_text(r) + (r.agree() ? "sides agree\n" : std::string(kViolation) + "\n");
  return o;
}

struct PairInput {
  qb::Subspace n_p;
  qb::Subspace v;
};

PairInput pair_from(const qb::UniversalCalculus& uc, const std::vector<qb::Vector>& n_p_gens,
                    const std::vector<qb::Vector>& v_gens) {
  return {qb::subbimodule_closure(uc, n_p_gens), qb::Subspace::span(uc.dim_h(), v_gens)};
}

Outcome cmd_prop34(const std::string& path, int which) {
  const qb::InstanceFile inst = qb::load_instance(path);
  require_valid(check_all(inst.comodule));
  const auto uc = qb::universal_calculus(qb::canonical_map(inst.comodule));
  const PairInput in = pair_from(*uc, inst.n_p_generators, inst.v_generators);
  const qb::OracleReport r = which == 3 ? qb::prop3_oracle(uc, in.n_p, in.v) : qb::prop4_oracle(uc, in.n_p, in.v);
  Outcome o;
  o.report["command"] = which == 3 ? "prop3" : "prop4";
  o.report["instance"] = inst.name;
  o.report.update(oracle_json(r));
  o.report["right_covariant_n_p"] = qb::right_covariant(*uc, in.n_p);
  o.report["adr_invariant_right_ideal_v"] = qb::adr_invariant_right_ideal(inst.comodule.hopf(), in.v);
  o.code = r.agree() ? 0 : 1;
  std::ostringstream os;
  os << oracle_text(r, which) << "  N_P right covariant: " << (qb::right_covariant(*uc, in.n_p) ? "true" : "false")
     << ", V ad-invariant right ideal: "
     << (qb::adr_invariant_right_ideal(inst.comodule.hopf(), in.v) ? "true" : "false") << "\n"
     << (r.agree() ? "sides agree" : kViolation) << "\n";
  o.text = os.str();
  return o;
}

struct PairRun {
  ordered_json report;
  bool ok = true;
  std::size_t prop3 = 0, prop4 = 0;
};

PairRun run_pair(const std::shared_ptr<const qb::UniversalCalculus>& uc, const std::string& label,
                 const qb::Subspace& n_p, const qb::Subspace& v) {
  PairRun pr;
  pr.report["label"] = label;
  pr.report["dim_n_p"] = n_p.dim();
  pr.report["dim_v"] = v.dim();
  const bool eq = qb::compat_check(*uc, n_p, v, qb::CompatMode::equality);
  const bool inc = qb::compat_check(*uc, n_p, v, qb::CompatMode::inclusion);
  const bool surj = qb::can_surjective(uc->context());
  pr.report["compat_equality"] = eq;
  pr.report["compat_inclusion"] = inc;
  if (eq) {
    const qb::OracleReport r = qb::prop3_oracle(uc, n_p, v);
    pr.report["prop3"] = oracle_json(r);
    pr.ok = pr.ok && r.agree();
    ++pr.prop3;
  }
  if (surj && inc) {
    const qb::OracleReport r = qb::prop4_oracle(uc, n_p, v);
    pr.report["prop4"] = oracle_json(r);
    pr.ok = pr.ok && r.agree();
    ++pr.prop4;
  }
  if (inc) {
    const qb::D2Report d2 = qb::build_d2(qb::build_chi(uc, n_p, v));
    const bool shape = (!eq || d2.coker_chi_bar_zero) && (!surj || d2.coker_can_bar_zero);
    pr.report["d2"] = {{"coker_chi_bar_zero", d2.coker_chi_bar_zero},
                       {"coker_can_bar_zero", d2.coker_can_bar_zero},
                       {"shape_ok", shape}};
    pr.ok = pr.ok && shape;
  }
  pr.report["ok"] = pr.ok;
  return pr;
}

struct EntryRun {
  ordered_json report;
  std::string line;
  bool ok = false;
};

EntryRun run_entry(const qb::ZooEntry& e) {
  EntryRun er;
  er.report["name"] = e.name;
  try {
    const qb::ComoduleAlgebraData p = e.build();
    const AxiomSummary s = check_all(p);
    er.report["axioms"] = axioms_summary_json(s);
    if (!s.ok()) {
      er.line = e.name + ": axioms " + axioms_text(s.hopf.ok() ? (s.algebra.ok() ? s.comodule : s.algebra) : s.hopf);
      er.report["ok"] = false;
      return er;
    }
    const qb::GaloisContext ctx = qb::canonical_map(p);
    const GaloisFacts g = galois_facts(ctx);
    er.report["galois"] = galois_json(g);
    er.report["can"] = matrix_json(ctx.can().matrix());
    const qb::Prop2Report p2 = qb::prop2_equivalence(ctx);
    er.report["prop2"] = prop2_json(p2);
    bool ok = p2.agree();

    const auto uc = qb::universal_calculus(ctx);
    ordered_json pairs = ordered_json::array();
    std::size_t n3 = 0, n4 = 0, n = 0;
    auto take = [&](const std::string& label, const qb::Subspace& n_p, const qb::Subspace& v) {
      PairRun pr = run_pair(uc, label, n_p, v);
      ok = ok && pr.ok;
      n3 += pr.prop3;
      n4 += pr.prop4;
      ++n;
      pairs.push_back(std::move(pr.report));
    };
    for (const qb::PairSpec& ps : qb::standard_pairs(*uc)) take(ps.label, ps.n_p, ps.v);
    for (const qb::ZooEntry::Extra& x : e.extras) {
      const PairInput in = pair_from(*uc, x.n_p_generators, x.v_generators);
      take(x.label, in.n_p, in.v);
    }
    er.report["pairs"] = std::move(pairs);
    er.report["ok"] = ok;
    er.ok = ok;
    std::ostringstream os;
    os << e.name << ": axioms ok, " << g.verdict << ", prop2 " << (p2.agree() ? "agree" : "DISAGREE") << ", " << n
       << " pairs (prop3 " << n3 << ", prop4 " << n4 << "): " << (ok ? "PASS" : "FAIL");
    er.line = os.str();
  } catch (const qb::Error& ex) {
    er.report["ok"] = false;
    er.report["error"] = ex.what();
    er.line = e.name + ": error: " + ex.what();
  }
  return er;
}

Outcome cmd_zoo_list() {
  Outcome o;
  o.report["command"] = "zoo list";
  ordered_json entries = ordered_json::array();
  for (const qb::ZooEntry& e : qb::zoo()) {
    entries.push_back({{"name", e.name}, {"description", e.description}});
    o.text += e.name + "  " + e.description + "\n";
  }
  o.report["entries"] = std::move(entries);
  return o;
}

Outcome usage_error(const std::string& command, const std::string& message) {
  Outcome o;
  o.code = 2;
  o.report["command"] = command;
  o.report["error"] = message;
  return o;
}

Outcome cmd_zoo_run(const std::string& name, bool all) {
  std::vector<const qb::ZooEntry*> entries;
  if (all) {
    for (const qb::ZooEntry& e : qb::zoo()) entries.push_back(&e);
  } else if (const qb::ZooEntry* e = qb::find_zoo(name)) {
    entries.push_back(e);
  } else {
    return usage_error("zoo run", name.empty() ? "zoo run needs a name or --all" : "unknown zoo entry '" + name + "'");
  }
  Outcome o;
  o.report["command"] = "zoo run";
  ordered_json results = ordered_json::array();
  std::size_t passed = 0;
  for (const qb::ZooEntry* e : entries) {
    EntryRun er = run_entry(*e);
    passed += er.ok;
    o.text += er.line + "\n";
    results.push_back(std::move(er.report));
  }
  o.report["entries"] = std::move(results);
  o.report["passed"] = passed;
  o.report["total"] = entries.size();
  o.code = passed == entries.size() ? 0 : 1;
  o.text += std::to_string(passed) + "/" + std::to_string(entries.size()) + " entries pass\n";
  return o;
}

Outcome cmd_zoo_export(const std::string& name, const std::string& path) {
  const qb::ZooEntry* e = qb::find_zoo(name);
  if (!e) return usage_error("zoo export", "unknown zoo entry '" + name + "'");
  const std::string doc = qb::dump_instance(e->instance());
  Outcome o;
  o.report["command"] = "zoo export";
  o.report["name"] = name;
  if (path.empty()) {
    o.text = doc;
    o.report["instance"] = ordered_json::parse(doc);
    return o;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << doc)) return usage_error("zoo export", "cannot write " + path);
  o.report["path"] = path;
  o.text = "wrote " + path + "\n";
  return o;
}

Outcome cmd_snake_selftest(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome o;
  o.report["command"] = "snake selftest";
  o.report["count"] = count;
  o.report["seed"] = seed;
  ordered_json trials = ordered_json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const qb::SnakeDiagram d = qb::random_snake_diagram(rng);
    ordered_json t;
    t["trial"] = i;
    t["dims"] = {d.top_in().domain_dim(), d.top_in().codomain_dim(), d.top_out().codomain_dim(),
                 d.bottom_in().domain_dim(), d.bottom_in().codomain_dim(), d.bottom_out().codomain_dim()};
    try {
      const qb::SnakeResult r = qb::snake(d);
      const bool exact = qb::is_exact_padded(r.six_term);
      t["six_term"] = r.six_term.spaces();
      t["connecting_rank"] = qb::rank(r.connecting);
      t["exact"] = exact;
      passed += exact;
    } catch (const qb::InternalError& ex) {
      t["exact"] = false;
      t["error"] = ex.what();
    }
    trials.push_back(std::move(t));
  }
  o.report["passed"] = passed;
  o.report["trials"] = std::move(trials);
  o.code = passed == count ? 0 : 1;
  o.text = "snake selftest: " + std::to_string(passed) + "/" + std::to_string(count) + " six-term sequences exact (seed " +
           std::to_string(seed) + ")\n";
  return o;
}

Outcome guarded(const std::string& command, const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const qb::HypothesisViolation& e) {
    return usage_error(command, std::string("hypothesis: ") + e.what());
  } catch (const qb::CompatibilityViolation& e) {
    return usage_error(command, std::string("hypothesis: ") + e.what());
  } catch (const qb::InternalError& e) {
    Outcome o = usage_error(command, std::string("internal error: ") + e.what());
    o.code = 1;
    return o;
  } catch (const qb::Error& e) {
    return usage_error(command, e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hopf-Galois and calculus verifier over Q", "qbundle"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string path;
  auto* check = app.add_subcommand("check", "Check Hopf and comodule algebra axioms");
  check->add_option("path", path, "Instance file")->required();
  auto* galois = app.add_subcommand("galois", "Decide whether the canonical map is bijective");
  galois->add_option("path", path, "Instance file")->required();
  CLI::App* props[3];
  const char* prop_help[3] = {"Galois verdict against exactness of the universal calculus sequence",
                               "Galois verdict against the quotient calculus (equality compatible pair)",
                               "Galois verdict against the quotient calculus (inclusion compatible pair)"};
  for (int k = 2; k <= 4; ++k) {
    props[k - 2] = app.add_subcommand("prop" + std::to_string(k), prop_help[k - 2]);
    props[k - 2]->add_option("path", path, "Instance file")->required();
  }

  auto* zoo = app.add_subcommand("zoo", "Built-in example instances");
  zoo->require_subcommand(1);
  zoo->add_subcommand("list", "List entries");
  auto* zoo_run = zoo->add_subcommand("run", "Run every check on an entry");
  std::string name;
  bool all = false;
  zoo_run->add_option("name", name, "Entry name");
  zoo_run->add_flag("--all", all, "Run every entry");
  auto* zoo_export = zoo->add_subcommand("export", "Write an entry as an instance file");
  std::string output;
  zoo_export->add_option("name", name, "Entry name")->required();
  zoo_export->add_option("-o,--output", output, "Output path");

  auto* snake = app.add_subcommand("snake", "Snake lemma engine");
  snake->require_subcommand(1);
  auto* selftest = snake->add_subcommand("selftest", "Randomized six-term exactness trials");
  std::size_t count = 200;
  std::uint64_t seed = 42;
  selftest->add_option("--count", count, "Number of diagrams");
  selftest->add_option("--seed", seed, "RNG seed");

  for (CLI::App* sub : {check, galois, props[0], props[1], props[2], zoo, snake}) sub->fallthrough();
  for (CLI::App* sub : zoo->get_subcommands({})) sub->fallthrough();
  selftest->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  std::string command;
  std::function<Outcome()> fn;
  if (*check) {
    command = "check", fn = [&] { return cmd_check(path); };
  } else if (*galois) {
    command = "galois", fn = [&] { return cmd_galois(path); };
  } else if (*props[0]) {
    command = "prop2", fn = [&] { return cmd_prop2(path); };
  } else if (*props[1] || *props[2]) {
    const int which = *props[1] ? 3 : 4;
    command = "prop" + std::to_string(which), fn = [&, which] { return cmd_prop34(path, which); };
  } else if (*zoo_run) {
    command = "zoo run", fn = [&] { return cmd_zoo_run(name, all); };
  } else if (*zoo_export) {
    command = "zoo export", fn = [&] { return cmd_zoo_export(name, output); };
  } else if (*zoo) {
    command = "zoo list", fn = [] { return cmd_zoo_list(); };
  } else {
    command = "snake selftest", fn = [&] { return cmd_snake_selftest(count, seed); };
  }

  Outcome o = guarded(command, fn);
  o.report["exit"] = o.code;
  if (o.code == 2 && o.report.contains("error")) err << o.report["error"].get<std::string>() << "\n";
  if (json) {
    out << o.report.dump(2) << "\n";
  } else {
    if (o.code == 1 && o.report.contains("error")) err << o.report["error"].get<std::string>() << "\n";
    out << o.text;
  }
  return o.code;
}

}  // namespace qbcli
