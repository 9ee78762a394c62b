#include "toroidal/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "toroidal/error.hpp"
#include "toroidal/oracle.hpp"
#include "toroidal/verify.hpp"

namespace toroidal {

namespace {

int report_error(std::ostream& out, std::ostream& err, int code, const std::string& kind,
                 const std::string& message, const std::string& field = {}) {
  json report{{"status", "error"}, {"kind", kind}, {"message", message}};
  if (!field.empty()) report["field"] = field;
  out << dump(report);
  err << "toroidal: " << kind << ": " << message << "\n";
  return code;
}

bool write_file(const std::filesystem::path& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "toroidal: cannot write " << path.string() << "\n";
    return false;
  }
  f << text;
  return bool(f);
}

std::string snapshot_text(const InvariantSnapshot& s) {
  std::ostringstream os;
  os << "Omega_max=" << s.bigomega_max << " omega_max=" << s.omega_max;
  return os.str();
}

}  // namespace

std::string render_text(const ScenarioFile& f, const std::vector<RoundResult>& rounds) {
  std::ostringstream os;
  os << "n=" << f.scenario.n << " charts=" << f.scenario.m_charts << "\n";
  for (const auto& r : rounds) {
    os << "\nround " << r.round << " over ";
    os << (r.base_point ? "the " + std::string(to_string(*r.base_point)) + " point of the last exceptional curve"
                        : std::string("q"));
    os << "\n";
    for (const auto* group : {&r.initial.presentations, &r.initial.leaves}) {
      for (const auto& e : *group) {
        os << "  #" << e.id << " chart " << e.presentation.context().chart_index << "  "
           << describe(e.presentation) << (group == &r.initial.leaves ? "  principal" : "") << "\n";
      }
    }
    for (const auto& st : r.trace.steps) {
      os << "step " << st.index << "  chart " << st.chart << "  " << to_string(st.phase) << "  #" << st.target
         << " " << describe(st.center) << " value " << st.target_value;
      if (st.parents.size() > 1) os << "  (" << st.parents.size() << " matching presentations)";
      os << "\n    " << snapshot_text(st.before) << "  ->  " << snapshot_text(st.after) << "\n";
      for (const auto& d : st.descendants) {
        os << "    #" << d.id << " <- #" << d.parent << " " << to_string(d.label) << "  " << describe(d.presentation)
           << (d.principal ? "  principal" : "") << "\n";
      }
    }
    os << "locus empty after " << r.trace.steps.size() << " step(s)\n";
    for (const auto& leaf : r.leaves) {
      os << "  leaf #" << leaf.id << "  " << describe(leaf.presentation) << "  ->  ";
      if (leaf.lifted.local_template) {
        os << describe(*leaf.lifted.local_template);
      } else {
        os << "smooth";
      }
      os << " at " << to_string(leaf.lifted.point) << ", E has " << leaf.branches.branch_count
         << " branch(es): " << describe(leaf.global) << "\n";
    }
  }
  return os.str();
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  ScenarioFile file;
  try {
    file = load_scenario(opts.scenario);
  } catch (const ValidationError& e) {
    return report_error(out, err, kExitSchema, "schema", e.what(), e.field());
  }
  if (opts.max_steps && *opts.max_steps == 0) {
    return report_error(out, err, kExitUsage, "usage", "--max-steps must be positive");
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<RoundResult> rounds;
  try {
    rounds = run_rounds(file.scenario, file.y_blowups, opts.max_steps);
  } catch (const StepBudgetExceeded& e) {
    return report_error(out, err, kExitBudget, "budget_exceeded", e.what());
  } catch (const NoTemplateMatch& e) {
    return report_error(out, err, kExitClassification, "classification", e.what());
  } catch (const NotPrincipalError& e) {
    return report_error(out, err, kExitClassification, "classification", e.what());
  } catch (const ValidationError& e) {
    return report_error(out, err, kExitSchema, "schema", e.what(), e.field());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::size_t steps = 0;
  for (const auto& r : rounds) steps += r.trace.steps.size();
  const json doc = trace_document(file, rounds, {{"elapsed_ms", ms}, {"steps", steps}});
  const std::string text = dump(doc);
  if (opts.trace_out && !write_file(*opts.trace_out, text, err)) return kExitUsage;
  if (opts.format == OutputFormat::Text) {
    out << render_text(file, rounds);
  } else if (!opts.trace_out) {
    out << text;
  }
  return kExitOk;
}

int cmd_verify(const std::filesystem::path& trace, std::ostream& out, std::ostream& err) {
  std::ifstream in(trace, std::ios::binary);
  if (!in) {
    VerifyFailure f{"format", std::nullopt, std::nullopt, "cannot read " + trace.string()};
    out << dump(f.to_json());
    err << "toroidal: verify: " << f.message << "\n";
    return kExitVerify;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::optional<VerifyFailure> failure;
  try {
    failure = verify_trace(parse_json_text(buf.str()));
  } catch (const ValidationError& e) {
    failure = VerifyFailure{"format", std::nullopt, std::nullopt, e.what()};
  }
  if (failure) {
    out << dump(failure->to_json());
    err << "toroidal: verify: " << failure->invariant;
    if (failure->round) err << " (round " << *failure->round;
    if (failure->step) err << ", step " << *failure->step;
    if (failure->round) err << ")";
    err << ": " << failure->message << "\n";
    return kExitVerify;
  }
  out << dump(json{{"status", "ok"}});
  return kExitOk;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  ScenarioFile file;
  try {
    file = load_scenario(opts.scenario);
  } catch (const ValidationError& e) {
    return report_error(out, err, kExitSchema, "schema", e.what(), e.field());
  }
  const oracle::SearchBound bound{opts.max_entry, opts.max_k, opts.depth};
  auto path_json = [](const std::vector<oracle::PathStep>& path) {
    json arr = json::array();
    for (const auto& p : path) {
      arr.push_back({{"point", oracle::to_string(p.point)}, {"s", p.s + 1}, {"t", p.t + 1}, {"child", p.child}});
    }
    return arr;
  };
  try {
    const oracle::SearchResult r = oracle::exhaustive_search(file.scenario, bound);
    json roots = json::array();
    for (const auto& root : r.roots) {
      roots.push_back({{"point", oracle::to_string(root.point)},
                       {"min_depth", root.min_depth},
                       {"max_depth", root.max_depth}});
    }
    out << dump(json{{"status", "ok"},
                     {"all_terminate", r.all_terminate},
                     {"depth_bound", opts.depth},
                     {"min_depth", r.min_depth},
                     {"max_depth", r.max_depth},
                     {"states", r.states},
                     {"roots", roots},
                     {"longest_path", path_json(r.longest_path)}});
    return kExitOk;
  } catch (const oracle::BoundExceeded& e) {
    out << dump(json{{"status", "bound_exceeded"},
                     {"depth_bound", opts.depth},
                     {"message", e.what()},
                     {"path", path_json(e.path())}});
    err << "toroidal: oracle: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    return report_error(out, err, kExitSchema, "bounds", e.what());
  }
}

}  // namespace toroidal
