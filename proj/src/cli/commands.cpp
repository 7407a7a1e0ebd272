#include "measlat/cli/commands.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "measlat/cli/workspace.hpp"
#include "measlat/decomposition.hpp"
#include "measlat/oracle.hpp"

namespace measlat::cli {

using Json = nlohmann::ordered_json;

namespace {

// Runs `body`, mapping every failure onto an exit code and a diagnostic.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const CliError& e) {
    err << e.what();
    return static_cast<int>(e.code());
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return static_cast<int>(e.kind() == ErrorKind::TooLargeToEnumerate ? ExitCode::ResourceCap
                                                                        : ExitCode::SemanticError);
  }
}

[[noreturn]] void cap_exceeded(const std::string& message) {
  throw CliError(ExitCode::ResourceCap, "error: " + message + "\n");
}

void require_set_cap(const MeasurableSpace& space, const Options& opts) {
  if (space.size() > opts.cap_atoms) {
    cap_exceeded("the space has " + std::to_string(space.size()) + " atoms, above the set enumeration cap of " +
                 std::to_string(opts.cap_atoms) + " (--cap-atoms)");
  }
}

template <class Weights>
Json weights_json(const MeasurableSpace& space, const Weights& weights) {
  Json j = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i)
    j[space.atom_name(i)] = weights[i].to_string();
  return j;
}

Json set_json(const MeasurableSet& s) {
  Json j = Json::array();
  for (std::size_t i : s.indices())
    j.push_back(s.space().atom_name(i));
  return j;
}

} // namespace

// ---------------------------------------------------------------------- eval

int cmd_eval(const std::string& workspace_path, const std::string& measure_expr, const std::string& set_expr,
             const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Workspace ws = load_workspace(workspace_path);
    const MeasureExpr expr = parse_measure_expression(measure_expr);
    const MeasurableSet set = evaluate_set(set_expr, ws.space);
    const Measure m = evaluate_measure(expr, measure_expr, ws.space,
                                       [&](const std::string& name) { return ws.find_measure(name); });
    const ExtNonneg value = eval(m, set);
    if (opts.json)
      out << Json{{"value", value.to_string()}, {"set", set.to_expression()}, {"measure", weights_json(ws.space, m.weights())}}.dump() << "\n";
    else
      out << value << "\n";
    return 0;
  });
}

// --------------------------------------------------------------------- check

int cmd_check(const std::string& workspace_path, const std::string& table_path, const Options& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Workspace ws = load_workspace(workspace_path);
    require_set_cap(ws.space, opts);
    const SetFunctionTable table = load_table(table_path, ws.space);
    const AdditivityReport report = is_measure(table);
    if (opts.json) {
      Json j{{"result", report.is_measure ? "PASS" : "FAIL"}};
      if (report.witness) {
        Json atoms = Json::array();
        for (const auto& v : report.witness->atom_values)
          atoms.push_back(v.to_string());
        j["witness"] = report.witness->set.to_expression();
        j["atom_values"] = atoms;
        j["set_value"] = report.witness->set_value.to_string();
        j["mismatch"] = report.witness->mismatch();
      }
      out << j.dump() << "\n";
    } else if (report.is_measure) {
      out << "PASS\n";
    } else {
      out << "FAIL witness " << report.witness->set.to_expression() << ": " << report.witness->mismatch() << "\n";
    }
    return static_cast<int>(report.is_measure ? ExitCode::Ok : ExitCode::CheckFailed);
  });
}

// -------------------------------------------------------------------- jordan

int cmd_jordan(const std::string& workspace_path, const std::string& signed_name, const Options& opts,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Workspace ws = load_workspace(workspace_path);
    const SignedMeasure* s = ws.find_signed(signed_name);
    if (s == nullptr)
      throw CliError(ExitCode::SemanticError, "error: unknown signed measure '" + signed_name + "'\n");
    const JordanPair parts = jordan_decompose(*s);
    const HahnDecomposition hahn = hahn_decompose(*s);
    if (opts.json) {
      out << Json{{"positive", weights_json(ws.space, parts.positive.weights())},
                  {"negative", weights_json(ws.space, parts.negative.weights())},
                  {"hahn", {{"positive", set_json(hahn.positive_set)}, {"negative", set_json(hahn.negative_set)}}}}
                 .dump()
          << "\n";
    } else {
      out << "positive: " << parts.positive.to_string() << "\n";
      out << "negative: " << parts.negative.to_string() << "\n";
      out << "hahn: P=" << hahn.positive_set.to_string() << " N=" << hahn.negative_set.to_string() << "\n";
    }
    return 0;
  });
}

// -------------------------------------------------------------------- verify

namespace {

struct CheckLine {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string unit;
};

class VerifyRun {
public:
  VerifyRun(const Workspace& ws, const Options& opts) : ws_(ws), opts_(opts) {}

  void check_caps() const {
    const auto& space = ws_.space;
    require_set_cap(space, opts_);
    const std::size_t k = ws_.measures.size();
    if (k == 0)
      return;
    if (space.size() > opts_.cap_partition_atoms) {
      cap_exceeded("the space has " + std::to_string(space.size()) +
                   " atoms, above the partition enumeration cap of " + std::to_string(opts_.cap_partition_atoms) +
                   " (--cap-partition-atoms)");
    }
    if (k > opts_.cap_family) {
      cap_exceeded("the workspace family has " + std::to_string(k) + " measures, above the family cap of " +
                   std::to_string(opts_.cap_family) + " (--cap-family)");
    }
  }

  void run() {
    const auto sets = enumerate_sets(ws_.space, opts_.cap_atoms);
    const auto& ms = ws_.measures;
    OracleLimits limits;
    limits.set_atoms = opts_.cap_atoms;
    limits.partition_atoms = opts_.cap_partition_atoms;
    limits.family_size = opts_.cap_family;

    CheckLine meet{"meet2", 0, 0, "sets"};
    CheckLine join{"join2", 0, 0, "sets"};
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        const auto& [mname, m] = ms[i];
        const auto& [nname, n] = ms[j];
        const Measure lo = meet2(m, n);
        const Measure hi = join2(m, n);
        for (const auto& a : sets) {
          const std::string where = "(" + mname + ", " + nname + ") at " + a.to_expression();
          const auto o1 = oracle_meet2(m, n, a, limits);
          tally(meet, eval(lo, a), o1.value, "meet2" + where, "B = " + o1.witness.to_string());
          const auto o2 = oracle_join2(m, n, a, limits);
          tally(join, eval(hi, a), o2.value, "join2" + where, "B = " + o2.witness.to_string());
        }
      }
    }
    lines_.push_back(meet);
    lines_.push_back(join);

    if (ms.empty())
      return;
    std::vector<std::string> labels;
    std::vector<Measure> members;
    for (const auto& [name, m] : ms) {
      labels.push_back(name);
      members.push_back(m);
    }
    const MeasureFamily f(labels, members);
    const Measure lo = meet_family(f);
    const Measure hi = join_family(f);
    CheckLine fmeet{"meet_family", 0, 0, "sets"};
    CheckLine fjoin{"join_family", 0, 0, "sets"};
    CheckLine index{"index_partition", 0, 0, "sets"};
    for (const auto& a : sets) {
      const std::string where = " at " + a.to_expression();
      const auto o1 = oracle_family_meet(f, a, limits);
      tally(fmeet, eval(lo, a), o1.value, "meet_family" + where, "witness " + o1.witness.to_string(f));
      const auto o2 = oracle_family_join(f, a, limits);
      tally(fjoin, eval(hi, a), o2.value, "join_family" + where, "witness " + o2.witness.to_string(f));
      tally(index, index_partition_formula(f, a), eval(lo, a), "index_partition" + where, "against meet_family");
    }
    lines_.push_back(fmeet);
    lines_.push_back(fjoin);
    lines_.push_back(index);

    lines_.push_back(bound_line("glb", oracle_is_glb(lo, f, opts_.samples, opts_.seed), f));
    lines_.push_back(bound_line("lub", oracle_is_lub(hi, f, opts_.samples, opts_.seed + 1), f));
  }

  bool passed() const { return !counterexample_; }

  void report(std::ostream& out) const {
    if (opts_.json) {
      Json checks = Json::array();
      for (const auto& l : lines_)
        checks.push_back({{"name", l.name}, {"passed", l.passed}, {"total", l.total}, {"unit", l.unit}});
      Json j{{"result", passed() ? "PASS" : "FAIL"}, {"checks", checks}};
      j["counterexample"] = counterexample_ ? Json(*counterexample_) : Json(nullptr);
      out << j.dump() << "\n";
      return;
    }
    for (const auto& l : lines_)
      out << l.name << ": " << l.passed << "/" << l.total << " " << l.unit << (l.passed == l.total ? " OK" : " FAILED")
          << "\n";
    if (counterexample_)
      out << "FAIL: " << *counterexample_ << "\n";
    else
      out << "PASS\n";
  }

private:
  void tally(CheckLine& line, const ExtNonneg& fast, const ExtNonneg& oracle, const std::string& where,
             const std::string& detail) {
    ++line.total;
    if (fast == oracle) {
      ++line.passed;
      return;
    }
    if (!counterexample_)
      counterexample_ = where + ": fast path " + fast.to_string() + ", oracle " + oracle.to_string() + " (" + detail + ")";
  }

  CheckLine bound_line(const std::string& name, const GlbReport& r, const MeasureFamily& f) {
    CheckLine line{name, 0, opts_.samples, "samples"};
    if (r.is_glb) {
      line.passed = opts_.samples;
    } else if (!counterexample_) {
      counterexample_ = name + ": " +
                        (r.violated_member ? "candidate is not a bound of member " + f.label(*r.violated_member)
                                           : "sampled bound " + r.counterexample->to_string() + " is not dominated by the candidate");
    }
    return line;
  }

  const Workspace& ws_;
  const Options& opts_;
  std::vector<CheckLine> lines_;
  std::optional<std::string> counterexample_;
};

} // namespace

int cmd_verify(const std::string& workspace_path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Workspace ws = load_workspace(workspace_path);
    VerifyRun run(ws, opts);
    run.check_caps();
    run.run();
    run.report(out);
    return static_cast<int>(run.passed() ? ExitCode::Ok : ExitCode::CheckFailed);
  });
}

// ----------------------------------------------------------------- dispatch

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact meets, joins and decompositions of measures on finite spaces", "measlat"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--cap-atoms", opts.cap_atoms, "Max atoms when enumerating all measurable sets")
      ->capture_default_str();
  app.add_option("--cap-partition-atoms", opts.cap_partition_atoms, "Max atoms when enumerating partitions")
      ->capture_default_str();
  app.add_option("--cap-family", opts.cap_family, "Max family size for the partition-assignment oracle")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", opts.samples, "Sampled bounds per glb/lub check")->capture_default_str();
  app.add_flag("--json", opts.json, "Machine-readable report");

  std::string workspace;
  std::string arg1;
  std::string arg2;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a measure expression on a set expression");
  eval_cmd->add_option("workspace", workspace)->required();
  eval_cmd->add_option("measure", arg1, "e.g. \"meet(mu, nu)\"")->required();
  eval_cmd->add_option("set", arg2, "e.g. \"~(a|b) & c\"")->required();

  auto* check_cmd = app.add_subcommand("check", "Check whether a set-function table is a measure");
  check_cmd->add_option("workspace", workspace)->required();
  check_cmd->add_option("table", arg1)->required();

  auto* jordan_cmd = app.add_subcommand("jordan", "Jordan and Hahn decomposition of a signed measure");
  jordan_cmd->add_option("workspace", workspace)->required();
  jordan_cmd->add_option("signed", arg1)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Certify meets and joins against brute-force oracles");
  verify_cmd->add_option("workspace", workspace)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::ParseError);
  }

  if (eval_cmd->parsed())
    return cmd_eval(workspace, arg1, arg2, opts, out, err);
  if (check_cmd->parsed())
    return cmd_check(workspace, arg1, opts, out, err);
  if (jordan_cmd->parsed())
    return cmd_jordan(workspace, arg1, opts, out, err);
  return cmd_verify(workspace, opts, out, err);
}

} // namespace measlat::cli
