#include "toroidal/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

std::string at(const std::string& field, std::string_view key) {
  return field.empty() ? std::string(key) : field + "." + std::string(key);
}

std::string at(const std::string& field, std::size_t idx) {
  return field + "[" + std::to_string(idx) + "]";
}

const json& require(const json& j, std::string_view key, const std::string& field) {
  if (!j.is_object()) throw ValidationError("expected an object", field);
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError("missing required field", at(field, key));
  return *it;
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed,
                    const std::string& field) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto key : allowed) ok = ok || it.key() == key;
    if (!ok) throw ValidationError("unknown field", at(field, it.key()));
  }
}

std::size_t size_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ValidationError("expected a non-negative integer", field);
  }
  return j.get<std::size_t>();
}

bool bool_from_json(const json& j, const std::string& field) {
  if (!j.is_boolean()) throw ValidationError("expected a boolean", field);
  return j.get<bool>();
}

std::string string_from_json(const json& j, const std::string& field) {
  if (!j.is_string()) throw ValidationError("expected a string", field);
  return j.get<std::string>();
}

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError("JSON syntax error at line " + std::to_string(line) + ", column " +
                              std::to_string(col),
                          "$");
  }
}

json exponent_to_json(const Exponent& e) {
  if (e <= std::numeric_limits<std::uint64_t>::max()) return e.convert_to<std::uint64_t>();
  return e.str();
}

Exponent exponent_from_json(const json& j, const std::string& field) {
  if (j.is_number_unsigned()) return Exponent(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Exponent(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.size() > 4096 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("expected a decimal string of digits", field);
    }
    return Exponent(s);
  }
  if (j.is_number_integer()) throw ValidationError("exponents must be non-negative", field);
  throw ValidationError("expected a non-negative integer", field);
}

json row_to_json(const ExponentRow& row) {
  json out = json::array();
  for (const auto& e : row) out.push_back(exponent_to_json(e));
  return out;
}

ExponentRow row_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError("expected an array of exponents", field);
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(exponent_from_json(j[i], at(field, i)));
  return ExponentRow(std::move(out));
}

json presentation_to_json(const MonomialPresentation& p) {
  json out;
  out["form"] = std::string(to_string(p.form()));
  out["chart"] = p.context().chart_index;
  switch (p.form()) {
    case FormTag::F4:
      out["g"] = row_to_json(p.g_row());
      out["m"] = exponent_to_json(p.m());
      out["t"] = exponent_to_json(p.t());
      break;
    case FormTag::F7:
      out["alpha_nonzero"] = p.alpha_nonzero();
      break;
    case FormTag::F6:
    case FormTag::F8:
      break;
    default:
      out["u"] = row_to_json(p.u_row());
      out["v"] = row_to_json(p.v_row());
  }
  return out;
}

MonomialPresentation presentation_from_json(const json& j, std::size_t n,
                                            const std::vector<bool>& q_in_E, const std::string& field) {
  if (!j.is_object()) throw ValidationError("expected an object", field);
  const std::string tag_text = string_from_json(require(j, "form", field), at(field, "form"));
  const auto tag = parse_form_tag(tag_text);
  if (!tag) throw ValidationError("unknown form '" + tag_text + "'", at(field, "form"));
  const std::size_t chart = size_from_json(require(j, "chart", field), at(field, "chart"));
  if (chart == 0 || chart > q_in_E.size()) {
    throw ValidationError("chart index outside 1.." + std::to_string(q_in_E.size()), at(field, "chart"));
  }
  const ChartContext ctx{chart, bool(q_in_E[chart - 1])};
  try {
    switch (*tag) {
      case FormTag::F4:
        reject_unknown(j, {"form", "chart", "g", "m", "t"}, field);
        return MonomialPresentation::f4(n, row_from_json(require(j, "g", field), at(field, "g")),
                                        exponent_from_json(require(j, "m", field), at(field, "m")),
                                        exponent_from_json(require(j, "t", field), at(field, "t")), ctx);
      case FormTag::F6:
        reject_unknown(j, {"form", "chart"}, field);
        return MonomialPresentation::f6(n, ctx);
      case FormTag::F7:
        reject_unknown(j, {"form", "chart", "alpha_nonzero"}, field);
        return MonomialPresentation::f7(
            n, bool_from_json(require(j, "alpha_nonzero", field), at(field, "alpha_nonzero")), ctx);
      case FormTag::F8:
        reject_unknown(j, {"form", "chart"}, field);
        return MonomialPresentation::f8(n, ctx);
      default:
        break;
    }
    reject_unknown(j, {"form", "chart", "u", "v"}, field);
    ExponentRow u = row_from_json(require(j, "u", field), at(field, "u"));
    ExponentRow v = row_from_json(require(j, "v", field), at(field, "v"));
    switch (*tag) {
      case FormTag::F1:
        return MonomialPresentation::f1(n, std::move(u), std::move(v), ctx);
      case FormTag::F2:
        return MonomialPresentation::f2(n, std::move(u), std::move(v), ctx);
      case FormTag::F3:
        return MonomialPresentation::f3(n, std::move(u), std::move(v), ctx);
      default:
        return MonomialPresentation::f5(n, std::move(u), std::move(v), ctx);
    }
  } catch (const ValidationError& e) {
    if (!e.field().empty()) throw;
    throw ValidationError(e.what(), field);
  } catch (const DomainError& e) {
    throw ValidationError(e.what(), field);
  }
}

json template_to_json(const ToroidalTemplate& t) {
  json out;
  out["tag"] = std::string(to_string(t.tag()));
  switch (t.tag()) {
    case TemplateTag::T1:
      out["a"] = row_to_json(t.u_row());
      break;
    case TemplateTag::T2:
      out["g"] = row_to_json(t.u_row());
      out["m"] = exponent_to_json(t.m());
      out["t"] = exponent_to_json(t.t());
      break;
    case TemplateTag::T3:
      out["a"] = row_to_json(t.u_row());
      out["b"] = row_to_json(t.v_row());
      break;
  }
  return out;
}

ToroidalTemplate template_from_json(const json& j, const std::string& field) {
  const std::string tag = string_from_json(require(j, "tag", field), at(field, "tag"));
  try {
    if (tag == "T1") return ToroidalTemplate::t1(row_from_json(require(j, "a", field), at(field, "a")));
    if (tag == "T2") {
      return ToroidalTemplate::t2(row_from_json(require(j, "g", field), at(field, "g")),
                                  exponent_from_json(require(j, "m", field), at(field, "m")),
                                  exponent_from_json(require(j, "t", field), at(field, "t")));
    }
    if (tag == "T3") {
      return ToroidalTemplate::t3(row_from_json(require(j, "a", field), at(field, "a")),
                                  row_from_json(require(j, "b", field), at(field, "b")));
    }
  } catch (const NoTemplateMatch& e) {
    throw ValidationError(e.what(), field);
  }
  throw ValidationError("unknown template '" + tag + "'", at(field, "tag"));
}

json center_to_json(const Center& c) {
  json out;
  out["kind"] = c.kind == CenterKind::VarVar ? "var_var" : "var_free";
  out["i"] = c.i;
  if (c.kind == CenterKind::VarVar) out["j"] = c.j;
  return out;
}

Center center_from_json(const json& j, const std::string& field) {
  const std::string kind = string_from_json(require(j, "kind", field), at(field, "kind"));
  const std::size_t i = size_from_json(require(j, "i", field), at(field, "i"));
  if (kind == "var_free") return Center::var_free(i);
  if (kind == "var_var") {
    const std::size_t jj = size_from_json(require(j, "j", field), at(field, "j"));
    if (i == jj) throw ValidationError("center variables must differ", field);
    return Center::var_var(i, jj);
  }
  throw ValidationError("unknown center kind '" + kind + "'", at(field, "kind"));
}

ScenarioFile parse_scenario(const json& j) {
  if (!j.is_object()) throw ValidationError("expected an object", "$");
  reject_unknown(j, {"version", "n", "m_charts", "q_in_E", "e_branches", "presentations", "y_blowups"}, "");
  const std::size_t version = size_from_json(require(j, "version", ""), "version");
  if (version != 1) throw ValidationError("unsupported version", "version");
  const std::size_t n = size_from_json(require(j, "n", ""), "n");
  if (n < 2) throw ValidationError("n must be at least 2", "n");
  const std::size_t m = size_from_json(require(j, "m_charts", ""), "m_charts");
  if (m == 0) throw ValidationError("m_charts must be at least 1", "m_charts");

  const json& q = require(j, "q_in_E", "");
  if (!q.is_array()) throw ValidationError("expected an array of booleans", "q_in_E");
  if (q.size() != m) throw ValidationError("expected one entry per chart", "q_in_E");
  std::vector<bool> q_in_E;
  for (std::size_t i = 0; i < q.size(); ++i) q_in_E.push_back(bool_from_json(q[i], at("q_in_E", i)));

  BaseBranches declared;
  if (auto it = j.find("e_branches"); it != j.end()) {
    if (!it->is_array()) throw ValidationError("expected an array", "e_branches");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string b = string_from_json((*it)[i], at("e_branches", i));
      if (b == "u") {
        declared.u = true;
      } else if (b == "v") {
        declared.v = true;
      } else {
        throw ValidationError("expected \"u\" or \"v\"", at("e_branches", i));
      }
    }
  }

  const json& ps = require(j, "presentations", "");
  if (!ps.is_array()) throw ValidationError("expected an array", "presentations");
  std::vector<MonomialPresentation> presentations;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    presentations.push_back(presentation_from_json(ps[i], n, q_in_E, at("presentations", i)));
  }

  ScenarioFile out;
  if (auto it = j.find("y_blowups"); it != j.end()) {
    if (!it->is_array()) throw ValidationError("expected an array", "y_blowups");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string text = string_from_json((*it)[i], at("y_blowups", i));
      auto point = parse_target_point(text);
      if (!point || *point == TargetPoint::ExceptionalGeneric) {
        throw ValidationError("expected \"u_origin\" or \"v_origin\"", at("y_blowups", i));
      }
      out.y_blowups.push_back(*point);
    }
  }
  out.scenario = make_scenario(n, m, std::move(q_in_E), declared, presentations);
  return out;
}

ScenarioFile parse_scenario_text(std::string_view text) { return parse_scenario(parse_json_text(text)); }

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string(), "$");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

namespace {

json branches_to_json(const BaseBranches& b) {
  json out = json::array();
  if (b.u) out.push_back("u");
  if (b.v) out.push_back("v");
  return out;
}

json entries_to_json(const std::vector<ScenarioEntry>& entries, bool principal) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"id", e.id}, {"presentation", presentation_to_json(e.presentation)},
                   {"principal", principal}});
  }
  return out;
}

json snapshot_to_json(const InvariantSnapshot& s) {
  return {{"bigomega_max", exponent_to_json(s.bigomega_max)}, {"omega_max", exponent_to_json(s.omega_max)}};
}

std::string_view kind_name(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::BigOmega:
      return "big_omega";
    case InvariantKind::SmallOmega:
      return "small_omega";
    case InvariantKind::None:
      break;
  }
  return "none";
}

}  // namespace

json scenario_to_json(const ScenarioFile& f) {
  const Scenario& s = f.scenario;
  json out;
  out["version"] = 1;
  out["n"] = s.n;
  out["m_charts"] = s.m_charts;
  out["q_in_E"] = json::array();
  for (bool b : s.q_in_E) out["q_in_E"].push_back(b);
  out["e_branches"] = branches_to_json(s.e_branches);
  // Presentations in id order, which is input order for a freshly parsed file.
  std::vector<ScenarioEntry> all = s.presentations;
  all.insert(all.end(), s.leaves.begin(), s.leaves.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  out["presentations"] = json::array();
  for (const auto& e : all) out["presentations"].push_back(presentation_to_json(e.presentation));
  out["y_blowups"] = json::array();
  for (auto p : f.y_blowups) out["y_blowups"].push_back(std::string(to_string(p)));
  return out;
}

json locus_to_json(const LocusReport& r) {
  json out;
  out["bigomega_max"] = exponent_to_json(r.bigomega_max);
  out["omega_max"] = exponent_to_json(r.omega_max);
  out["centers"] = json::array();
  for (const auto& c : r.centers) {
    out["centers"].push_back({{"id", c.id},
                              {"chart", c.chart},
                              {"center", center_to_json(c.center)},
                              {"kind", std::string(kind_name(c.kind))},
                              {"value", exponent_to_json(c.value)}});
  }
  return out;
}

json step_to_json(const TraceStep& step) {
  json out;
  out["step"] = step.index;
  out["chart"] = step.chart;
  out["phase"] = std::string(to_string(step.phase));
  out["target"] = step.target;
  out["center"] = center_to_json(step.center);
  out["target_value"] = exponent_to_json(step.target_value);
  out["before"] = snapshot_to_json(step.before);
  out["after"] = snapshot_to_json(step.after);
  out["parents"] = step.parents;
  out["descendants"] = json::array();
  for (const auto& d : step.descendants) {
    out["descendants"].push_back({{"id", d.id},
                                  {"parent", d.parent},
                                  {"label", std::string(to_string(d.label))},
                                  {"presentation", presentation_to_json(d.presentation)},
                                  {"principal", d.principal},
                                  {"exceptional_slot", d.exceptional_slot ? json(*d.exceptional_slot) : json()}});
  }
  return out;
}

json round_to_json(const RoundResult& r) {
  json out;
  out["round"] = r.round;
  out["point"] = r.base_point ? json(std::string(to_string(*r.base_point))) : json();
  out["initial"] = {{"e_branches", branches_to_json(r.initial.e_branches)},
                    {"active", entries_to_json(r.initial.presentations, false)},
                    {"principal", entries_to_json(r.initial.leaves, true)}};
  out["steps"] = json::array();
  for (const auto& step : r.trace.steps) out["steps"].push_back(step_to_json(step));
  out["terminal_report"] = locus_to_json(r.trace.terminal_report);
  out["leaves"] = json::array();
  for (const auto& leaf : r.leaves) {
    const auto& l = leaf.lifted;
    json lift;
    lift["kind"] = l.kind == LiftKind::Smooth ? "smooth" : "toroidal";
    lift["local_template"] = l.local_template ? template_to_json(*l.local_template) : json();
    lift["point"] = std::string(to_string(l.point));
    lift["chart_divisor_branches"] = l.chart_divisor_branches;
    lift["note"] = l.note;
    out["leaves"].push_back({{"id", leaf.id},
                             {"presentation", presentation_to_json(leaf.presentation)},
                             {"lift", lift},
                             {"branch_count", leaf.branches.branch_count},
                             {"global_template", template_to_json(leaf.global)}});
  }
  return out;
}

json trace_document(const ScenarioFile& f, const std::vector<RoundResult>& rounds, const json& timing) {
  json canonical;
  canonical["format"] = "toroidal-trace";
  canonical["version"] = 1;
  canonical["scenario"] = scenario_to_json(f);
  canonical["rounds"] = json::array();
  for (const auto& r : rounds) canonical["rounds"].push_back(round_to_json(r));
  canonical["status"] = "ok";
  return {{"canonical", std::move(canonical)}, {"timing", timing}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace toroidal
