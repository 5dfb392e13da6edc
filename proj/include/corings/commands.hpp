#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corings/registry.hpp"

namespace corings {

inline constexpr int report_schema_version = 1;

// unknown command, missing arguments, bad target: the invocation itself is
// wrong, so no report is produced
struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WitnessOut {
  std::string name;
  std::size_t rows = 0, cols = 0;
  Json entries;
};

struct CommandResult {
  std::string cmd;
  std::vector<std::string> targets;
  std::string subject;
  Tri verdict = Tri::Unknown;
  std::string note;
  std::vector<std::string> issues;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<WitnessOut> witnesses;
  Effort effort;
};

namespace cmdio {

template <class F>
WitnessOut witness_out(F f, const std::string& name, const Mat<F>& m) {
  return WitnessOut{name, m.rows, m.cols, regio::matrix_out(f, m)};
}

template <class F>
const RegEntry<F>& target(const Registry<F>& reg, const Command& c, std::size_t pos,
                          const char* kind) {
  if (pos >= c.targets.size())
    throw CommandError("command '" + c.cmd + "' is missing a " + kind + " argument");
  const auto* e = reg.find(c.targets[pos]);
  if (!e) throw CommandError("no structure named '" + c.targets[pos] + "'");
  if (e->kind != kind)
    throw CommandError("'" + c.targets[pos] + "' has kind " + e->kind + ", expected " + kind);
  return *e;
}

inline void expect_arity(const Command& c, std::size_t lo, std::size_t hi) {
  if (c.targets.size() < lo)
    throw CommandError("command '" + c.cmd + "' needs " + std::to_string(lo) + " target(s)");
  if (c.targets.size() > hi)
    throw CommandError("command '" + c.cmd + "' takes at most " + std::to_string(hi) +
                       " target(s)");
}

inline CommandResult base_result(const Command& c) {
  CommandResult r;
  r.cmd = c.cmd;
  r.targets = c.targets;
  return r;
}

inline void from_report(CommandResult& r, const Report& rep) {
  r.subject = rep.subject;
  r.verdict = rep.ok() ? Tri::Yes : Tri::No;
  for (const auto& i : rep.issues) r.issues.push_back(i);
  if (!rep.ok()) r.note = std::to_string(rep.issues.size()) + " law(s) violated";
}

// a command aimed at a structure that failed validation reports that failure
// instead of running
template <class F>
bool reject_invalid(CommandResult& r, const RegEntry<F>& e) {
  if (e.valid) return false;
  r.subject = e.label;
  r.verdict = Tri::No;
  r.note = "target '" + e.name + "' failed validation";
  for (const auto& i : e.report.issues) r.issues.push_back(i);
  return true;
}

}  // namespace cmdio

template <class F>
std::vector<CommandResult> run_command(const Command& c, const Registry<F>& reg,
                                       const SessionConfig& cfg) {
  using namespace cmdio;
  auto f = reg.f;
  std::vector<CommandResult> out;

  bool known = false;
  for (const auto& n : command_names())
    if (n == c.cmd) { known = true; break; }
  if (!known) throw CommandError("unknown command '" + c.cmd + "'");

  if (c.cmd == "check") {
    // no targets means every declared structure, in declaration order
    std::vector<std::string> names = c.targets;
    if (names.empty())
      for (const auto& e : reg.entries) names.push_back(e.name);
    for (const auto& name : names) {
      const auto* e = reg.find(name);
      if (!e) throw CommandError("no structure named '" + name + "'");
      CommandResult r;
      r.cmd = c.cmd;
      r.targets = {name};
      r.subject = e->label;
      r.verdict = e->valid ? Tri::Yes : Tri::No;
      r.note = e->valid ? "all laws hold" : "structure failed validation";
      for (const auto& i : e->report.issues) r.issues.push_back(i);
      r.facts.emplace_back("kind", e->kind);
      r.facts.emplace_back("construct", e->construct);
      out.push_back(std::move(r));
    }
    return out;
  }

  CommandResult r = base_result(c);
  try {
    if (c.cmd == "cotensor") {
      expect_arity(c, 2, 2);
      const auto& em = target(reg, c, 0, "bicomodule");
      const auto& en = target(reg, c, 1, "bicomodule");
      if (reject_invalid(r, em) || reject_invalid(r, en)) { out.push_back(std::move(r)); return out; }
      auto k = cotensor(*em.bicomodule, *en.bicomodule);
      auto b = cotensor_bicomodule(*em.bicomodule, *en.bicomodule, k);
      from_report(r, check_bicomodule(b));
      r.facts.emplace_back("dimension", std::to_string(k.dim()));
      if (r.verdict == Tri::Yes) r.note = "cotensor carries the induced bicomodule structure";

    } else if (c.cmd == "dual") {
      expect_arity(c, 1, 1);
      const auto& ec = target(reg, c, 0, "coring");
      if (reject_invalid(r, ec)) { out.push_back(std::move(r)); return out; }
      Report rep{"duals of " + ec.coring->label, {}};
      rep.absorb(check_unit_antimorphisms(ec.coring));
      auto iso = end_ring_iso(ec.coring);
      rep.absorb(iso.report);
      from_report(r, rep);
      auto dl = dual_algebra(ec.coring, DualVariant::Left);
      r.facts.emplace_back("right dual dimension", std::to_string(iso.dual.alg.dim));
      r.facts.emplace_back("left dual dimension", std::to_string(dl.alg.dim));
      r.facts.emplace_back("endomorphism ring dimension", std::to_string(iso.end_alg.dim));
      if (r.verdict == Tri::Yes)
        r.note = "unit maps reverse products and End(C) matches the right dual";

    } else if (c.cmd == "cointegral" || c.cmd == "cosplit") {
      expect_arity(c, 1, 1);
      const auto& ec = target(reg, c, 0, "coring");
      if (reject_invalid(r, ec)) { out.push_back(std::move(r)); return out; }
      auto lv = c.cmd == "cointegral" ? find_cointegral(*ec.coring) : find_cosplit(*ec.coring);
      r.subject = ec.coring->label;
      r.verdict = lv.kind;
      r.note = lv.note;
      r.facts.emplace_back("solution space dimension",
                           std::to_string(lv.homogeneous.basis.cols));
      if (lv.witness)
        r.witnesses.push_back(
            witness_out(f, c.cmd == "cointegral" ? "cointegral" : "section", *lv.witness));

    } else if (c.cmd == "frobenius") {
      expect_arity(c, 1, 1);
      const auto& ec = target(reg, c, 0, "coring");
      if (reject_invalid(r, ec)) { out.push_back(std::move(r)); return out; }
      auto fo = check_frobenius_coring(ec.coring, cfg);
      r.subject = ec.coring->label;
      r.verdict = fo.verdict.kind;
      r.note = fo.verdict.note;
      r.effort = fo.verdict.effort;
      if (fo.j) r.witnesses.push_back(witness_out(f, "isomorphism", *fo.j));
      if (fo.eta) r.witnesses.push_back(witness_out(f, "eta", *fo.eta));
      if (fo.pi) r.witnesses.push_back(witness_out(f, "pi", *fo.pi));

    } else if (c.cmd == "entwine") {
      expect_arity(c, 1, 1);
      const auto& ee = target(reg, c, 0, "entwining");
      r.subject = ee.label;
      from_report(r, ee.valid ? check_entwining(*ee.entwining) : ee.report);
      if (r.verdict == Tri::Yes) r.note = "entwining axioms hold";

    } else if (c.cmd == "takeuchi") {
      expect_arity(c, 1, 1);
      const auto& ee = target(reg, c, 0, "entwining");
      if (reject_invalid(r, ee)) { out.push_back(std::move(r)); return out; }
      auto tak = assemble_takeuchi(*ee.entwining);
      Report rep = check_coring(tak);
      auto rec = coring_from_data_recovers_entwining(ee.entwining->A, ee.entwining->C,
                                                     tak.C->ract);
      rep.require(rec.has_value() && rec->psi == ee.entwining->psi,
                  "entwining recovered from the assembled coring");
      from_report(r, rep);
      r.subject = tak.label;
      r.facts.emplace_back("dimension", std::to_string(tak.dim()));
      if (r.verdict == Tri::Yes)
        r.note = "coring assembled and the entwining read back off its right action";

    } else if (c.cmd == "graded-bridge") {
      expect_arity(c, 1, 1);
      const auto& eg = target(reg, c, 0, "graded-module");
      if (reject_invalid(r, eg)) { out.push_back(std::move(r)); return out; }
      const auto& gm = *eg.graded_module;
      auto cor = share_coring(build_graded_coring(gm.algebra, gm.gset));
      auto com = graded_to_comodule(gm, cor);
      Report rep{gm.label + " over " + cor->label, {}};
      rep.absorb(check_comodule(com));
      auto back = comodule_to_graded(com, gm.algebra, gm.gset);
      rep.require(back.deg == gm.deg, "degrees recovered from the coaction");
      from_report(r, rep);
      r.facts.emplace_back("dimension", std::to_string(gm.dim()));
      std::string degs;
      for (auto d : gm.deg) degs += (degs.empty() ? "" : " ") + std::to_string(d);
      r.facts.emplace_back("degrees", degs);
      if (r.verdict == Tri::Yes) r.note = "graded module and comodule translate both ways";

    } else if (c.cmd == "inner") {
      expect_arity(c, 1, 2);
      const auto& et = target(reg, c, 0, "automorphism");
      if (reject_invalid(r, et)) { out.push_back(std::move(r)); return out; }
      if (c.targets.size() == 2) {
        const auto& ec = target(reg, c, 1, "coring");
        if (!ec.coring || !same_coring(*et.automorphism->coring, *ec.coring))
          throw CommandError("automorphism '" + c.targets[0] + "' is not defined on coring '" +
                             c.targets[1] + "'");
      }
      auto io = is_inner(*et.automorphism, cfg);
      r.subject = et.name + " on " + et.automorphism->coring->label;
      r.verdict = io.verdict.kind;
      r.note = io.verdict.note;
      r.effort = io.verdict.effort;
      r.facts.emplace_back("solution space dimension", std::to_string(io.space.basis.cols));
      if (io.p) r.witnesses.push_back(witness_out(f, "p", *io.p));

    } else if (c.cmd == "context-verify") {
      expect_arity(c, 1, 1);
      const auto& ek = target(reg, c, 0, "context");
      r.subject = ek.label;
      from_report(r, ek.valid ? verify_context(*ek.context) : ek.report);
      if (r.verdict == Tri::Yes) r.note = "context laws hold";

    } else if (c.cmd == "comatrix") {
      expect_arity(c, 1, 1);
      const auto& ek = target(reg, c, 0, "context");
      if (reject_invalid(r, ek)) { out.push_back(std::move(r)); return out; }
      auto g = build_generalized_comatrix(*ek.context);
      from_report(r, check_coring(g.coring));
      r.subject = g.coring.label;
      r.facts.emplace_back("dimension", std::to_string(g.coring.dim()));
      r.facts.emplace_back("ambient dimension", std::to_string(g.carrier.MN->qdim()));
      if (r.verdict == Tri::Yes) r.note = "generalized comatrix coring assembled";
    }
  } catch (const CommandError&) {
    throw;
  } catch (const std::exception& ex) {
    // the computation itself refused the inputs: a definite failure, reported
    if (r.subject.empty()) r.subject = c.cmd;
    r.verdict = Tri::No;
    r.issues.push_back(ex.what());
    r.note = "computation aborted";
  }
  out.push_back(std::move(r));
  return out;
}

template <class F>
std::vector<CommandResult> run_commands(const std::vector<Command>& cs, const Registry<F>& reg,
                                        const SessionConfig& cfg) {
  std::vector<CommandResult> out;
  for (const auto& c : cs)
    for (auto& r : run_command(c, reg, cfg)) out.push_back(std::move(r));
  return out;
}

// 1 when any check failed or a solver said no, else 2 when anything stayed
// unknown, else 0
inline int exit_code(const std::vector<CommandResult>& rs) {
  bool unknown = false;
  for (const auto& r : rs) {
    if (r.verdict == Tri::No) return 1;
    if (r.verdict == Tri::Unknown) unknown = true;
  }
  return unknown ? 2 : 0;
}

enum class ReportFormat { Text, Machine };

inline Json result_json(const CommandResult& r) {
  Json j = Json::object();
  j["command"] = r.cmd;
  j["targets"] = r.targets;
  j["subject"] = r.subject;
  j["verdict"] = tri_str(r.verdict);
  j["note"] = r.note;
  j["issues"] = r.issues;
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  j["facts"] = std::move(facts);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj = Json::object();
    wj["name"] = w.name;
    wj["rows"] = w.rows;
    wj["cols"] = w.cols;
    wj["entries"] = w.entries;
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  Json timing = Json::object();
  timing["trials"] = r.effort.trials;
  timing["enumerated"] = r.effort.enumerated;
  j["timing"] = std::move(timing);
  return j;
}

inline std::string scalar_text(const Json& s) {
  return s.is_string() ? s.get<std::string>() : s.dump();
}

inline std::string result_text(const CommandResult& r) {
  std::string s = r.cmd;
  for (const auto& t : r.targets) s += " " + t;
  s += ": " + tri_str(r.verdict) + "\n";
  if (!r.subject.empty()) s += "  subject: " + r.subject + "\n";
  if (!r.note.empty()) s += "  note: " + r.note + "\n";
  for (const auto& i : r.issues) s += "  issue: " + i + "\n";
  for (const auto& [k, v] : r.facts) s += "  " + k + ": " + v + "\n";
  for (const auto& w : r.witnesses) {
    s += "  " + w.name + " (" + std::to_string(w.rows) + "x" + std::to_string(w.cols) + "):\n";
    for (const auto& row : w.entries) {
      s += "   ";
      for (const auto& v : row) s += " " + scalar_text(v);
      s += "\n";
    }
  }
  if (r.effort.trials || r.effort.enumerated)
    s += "  effort: trials " + std::to_string(r.effort.trials) + ", enumerated " +
         std::to_string(r.effort.enumerated) + "\n";
  return s;
}

// machine reports carry the full session config so any unknown verdict can be
// reproduced from the report alone
template <class F>
std::string emit_report(const std::vector<CommandResult>& rs, ReportFormat fmt, F f,
                        const SessionConfig& cfg) {
  if (fmt == ReportFormat::Machine) {
    Json doc = Json::object();
    doc["schema_version"] = report_schema_version;
    doc["field"] = f.name();
    Json conf = Json::object();
    conf["seed"] = cfg.seed;
    conf["budget"] = cfg.budget;
    conf["enum_cap"] = cfg.enum_cap;
    doc["config"] = std::move(conf);
    Json results = Json::array();
    for (const auto& r : rs) results.push_back(result_json(r));
    doc["results"] = std::move(results);
    doc["exit"] = exit_code(rs);
    return dump_document(doc);
  }
  std::string s;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) s += "\n";
    s += result_text(rs[i]);
  }
  return s;
}

}  // namespace corings
