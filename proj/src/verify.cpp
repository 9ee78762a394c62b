#include "toroidal/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toroidal/descent.hpp"
#include "toroidal/error.hpp"
#include "toroidal/json_io.hpp"
#include "toroidal/oracle.hpp"

namespace toroidal {

nlohmann::json VerifyFailure::to_json() const {
  nlohmann::json out;
  out["status"] = "verify_failed";
  out["invariant"] = invariant;
  out["round"] = round ? nlohmann::json(*round) : nlohmann::json();
  out["step"] = step ? nlohmann::json(*step) : nlohmann::json();
  out["message"] = message;
  return out;
}

namespace {

struct Violation {
  std::string invariant;
  std::string message;
};

[[noreturn]] void fail(std::string invariant, std::string message) {
  throw Violation{std::move(invariant), std::move(message)};
}

void expect(bool cond, const char* invariant, const std::string& message) {
  if (!cond) fail(invariant, message);
}

struct Tracked {
  MonomialPresentation presentation;
  bool principal = false;
};

// Omega lives on the centers of 1-point presentations through the free variable.
bool is_one_point(const MonomialPresentation& p) { return p.form() == FormTag::F1; }

Exponent max_value(const oracle::Point& raw) {
  Exponent best = 0;
  for (std::size_t s = 0; s < raw.size(); ++s) {
    for (std::size_t t = s + 1; t < raw.size(); ++t) best = std::max(best, oracle::crossing_value(raw[s], raw[t]));
  }
  return best;
}

InvariantSnapshot chart_maxima(const std::map<PresentationId, Tracked>& active, std::size_t chart,
                               const std::vector<bool>& q_in_E) {
  InvariantSnapshot snap;
  if (!q_in_E[chart - 1]) return snap;
  for (const auto& [id, t] : active) {
    if (t.presentation.context().chart_index != chart) continue;
    const Exponent v = max_value(oracle::raw_point(t.presentation));
    Exponent& slot = is_one_point(t.presentation) ? snap.bigomega_max : snap.omega_max;
    slot = std::max(slot, v);
  }
  return snap;
}

InvariantSnapshot snapshot_from_json(const json& j, const std::string& field) {
  return {exponent_from_json(j.at("bigomega_max"), field + ".bigomega_max"),
          exponent_from_json(j.at("omega_max"), field + ".omega_max")};
}

std::multiset<oracle::Point> as_multiset(const std::array<oracle::Point, 3>& kids) {
  std::multiset<oracle::Point> out;
  for (const auto& k : kids) out.insert(oracle::canonical(k));
  return out;
}

bool valid_global_template(const ToroidalTemplate& t) {
  switch (t.tag()) {
    case TemplateTag::T1:
      return !t.u_row().empty() &&
             std::all_of(t.u_row().begin(), t.u_row().end(), [](const Exponent& e) { return e > 0; });
    case TemplateTag::T2: {
      if (t.m() <= 0 || t.t() <= 0 || t.u_row().empty()) return false;
      Exponent g = 0;
      for (const auto& e : t.u_row()) {
        if (e <= 0) return false;
        g = boost::multiprecision::gcd(g, e);
      }
      return g == 1;
    }
    case TemplateTag::T3:
      for (std::size_t j = 0; j < t.u_row().size(); ++j) {
        if (t.u_row()[j] == 0 && t.v_row()[j] == 0) return false;
      }
      return oracle::oracle_rank(t.u_row(), t.v_row()) == 2;
  }
  return false;
}

class Replayer {
 public:
  explicit Replayer(const json& doc) : doc_(doc) {}

  void run() {
    expect(doc_.is_object() && doc_.contains("canonical"), "format", "missing canonical section");
    const json& c = doc_.at("canonical");
    expect(c.value("format", "") == "toroidal-trace" && c.value("version", 0) == 1, "format",
           "unknown trace format");
    expect(c.value("status", "") == "ok", "format", "trace does not record a successful run");
    file_ = parse_scenario(c.at("scenario"));
    const json& rounds = c.at("rounds");
    expect(rounds.is_array() && rounds.size() == file_.y_blowups.size() + 1, "round_chaining",
           "expected one round per base blowup");
    for (std::size_t r = 0; r < rounds.size(); ++r) {
      round_ = r + 1;
      step_.reset();
      replay_round(rounds[r]);
    }
  }

  std::optional<std::size_t> round() const { return round_; }
  std::optional<std::size_t> step() const { return step_; }

 private:
  MonomialPresentation parse_p(const json& j, const std::string& field) const {
    return presentation_from_json(j, file_.scenario.n, std::vector<bool>(q_in_E_.begin(), q_in_E_.end()),
                                  field);
  }

  void replay_round(const json& r) {
    expect(r.at("round") == *round_, "round_chaining", "round numbers out of order");
    const Scenario& base = file_.scenario;
    q_in_E_ = round_ == 1 ? base.q_in_E : std::vector<bool>(base.m_charts, true);

    // Initial presentations: the scenario for round 1, lifted leaves afterwards.
    std::map<PresentationId, Tracked> expected;
    BaseBranches e_branches;
    if (round_ == 1) {
      expect(r.at("point").is_null(), "round_chaining", "round 1 is over q");
      for (const auto* group : {&base.presentations, &base.leaves}) {
        for (const auto& e : *group) expected[e.id] = {e.presentation, false};
      }
      e_branches = base.e_branches;
    } else {
      const std::string point = std::string(to_string(file_.y_blowups[*round_ - 2]));
      expect(r.at("point") == point, "round_chaining", "round point differs from the scenario");
      for (const auto& [id, p] : next_initial_) {
        if (p.second == point) expected[id] = {p.first, false};
      }
      e_branches = next_branches_.at(point);
    }

    active_.clear();
    std::set<PresentationId> leaves;
    const json& init = r.at("initial");
    std::size_t seen = 0;
    for (const char* key : {"active", "principal"}) {
      for (const auto& e : init.at(key)) {
        const PresentationId id = e.at("id").get<PresentationId>();
        const MonomialPresentation p = parse_p(e.at("presentation"), "initial");
        expect(expected.count(id) && expected.at(id).presentation == p, "round_chaining",
               "initial presentation " + std::to_string(id) + " does not match its source");
        const bool principal = oracle::principal(oracle::point_of(p));
        expect(principal == (std::string(key) == "principal"), "principal_flag",
               "presentation " + std::to_string(id) + " is filed under the wrong principality");
        if (principal) {
          leaves.insert(id);
          leaf_data_[id] = p;
        } else {
          active_[id] = {p, false};
        }
        known_.insert(id);
        ++seen;
      }
    }
    expect(seen == expected.size(), "round_chaining", "initial presentations missing");

    std::size_t index = 0;
    for (const auto& st : r.at("steps")) {
      ++index;
      step_ = index;
      expect(st.at("step") == index, "format", "step numbers out of order");
      replay_step(st, leaves);
    }
    step_.reset();

    expect(active_.empty(), "final_emptiness",
           std::to_string(active_.size()) + " presentation(s) still non-principal at the end of the trace");
    const json& report = r.at("terminal_report");
    expect(report.at("centers").empty() && report.at("omega_max") == 0 && report.at("bigomega_max") == 0,
           "final_emptiness", "terminal locus report is not empty");

    // Leaves: lift and classify again, and check the template invariants independently.
    std::set<PresentationId> recorded;
    next_initial_.clear();
    for (const auto& leaf : r.at("leaves")) {
      const PresentationId id = leaf.at("id").get<PresentationId>();
      recorded.insert(id);
      expect(leaves.count(id) > 0, "leaves", "leaf " + std::to_string(id) + " is not a principal presentation");
      const MonomialPresentation p = parse_p(leaf.at("presentation"), "leaves");
      expect(p == leaf_data_.at(id), "leaves", "leaf " + std::to_string(id) + " presentation differs");
      const ToroidalTemplate global = template_from_json(leaf.at("global_template"), "global_template");
      expect(valid_global_template(global), "toroidality",
             "leaf " + std::to_string(id) + " template fails rank/positivity: " + describe(global));
      LiftedPresentation lifted = lift(p, id);
      const EBranchData branches = branch_data(lifted, e_branches);
      const ToroidalTemplate again = classify_global(lifted, branches);
      expect(again == global && leaf.at("branch_count") == branches.branch_count, "toroidality",
             "leaf " + std::to_string(id) + " classification does not reproduce");
      expect(leaf.at("lift").at("point") == to_string(lifted.point), "toroidality",
             "leaf " + std::to_string(id) + " lifted to a different point");
      next_initial_[id] = {template_to_presentation(global, base.n, lifted.chart),
                           std::string(to_string(lifted.point))};
    }
    expect(recorded == leaves, "leaves", "leaf list differs from the principal presentations");
    for (TargetPoint pt : {TargetPoint::UChartOrigin, TargetPoint::VChartOrigin}) {
      LiftedPresentation probe;
      probe.point = pt;
      next_branches_[std::string(to_string(pt))] = {true, branch_data(probe, e_branches).branch_count == 2};
    }
  }

  void replay_step(const json& st, std::set<PresentationId>& leaves) {
    const std::size_t chart = st.at("chart").get<std::size_t>();
    expect(chart >= 1 && chart <= q_in_E_.size(), "format", "chart index out of range");

    // Policy: lowest chart with a non-principal presentation.
    std::size_t first = SIZE_MAX;
    for (const auto& [id, t] : active_) first = std::min(first, t.presentation.context().chart_index);
    expect(first == chart, "policy", "step works in chart " + std::to_string(chart) + ", expected " +
                                         std::to_string(first));

    const PresentationId target = st.at("target").get<PresentationId>();
    const json& parents = st.at("parents");
    expect(active_.count(target) > 0, "persistence",
           "target " + std::to_string(target) + " is not an active non-principal presentation");
    const MonomialPresentation& tp = active_.at(target).presentation;
    const Center center = center_from_json(st.at("center"), "center");
    const auto cols = oracle::center_columns(tp, center);
    expect(cols.has_value(), "permissibility", "center does not name two variables of the target");
    const oracle::Point raw = oracle::raw_point(tp);
    const Exponent value = oracle::crossing_value(raw[cols->first], raw[cols->second]);
    expect(value > 0, "permissibility", "center is not contained in the non-principal locus");

    const InvariantSnapshot before = chart_maxima(active_, chart, q_in_E_);
    expect(snapshot_from_json(st.at("before"), "before") == before, "invariants",
           "recorded maxima before the step do not match");
    const Exponent recorded = exponent_from_json(st.at("target_value"), "target_value");
    std::string phase;
    if (!q_in_E_[chart - 1]) {
      phase = "not_in_E";
      expect(recorded == 0, "invariants", "centers off E carry value 0");
    } else {
      const bool one_point = before.bigomega_max > 0;
      phase = one_point ? "big_omega" : "small_omega";
      expect(is_one_point(tp) == one_point, "policy", "target is not in the current phase");
      expect(recorded == value, "invariants", "recorded target value differs from the center");
      expect(value == (one_point ? before.bigomega_max : before.omega_max), "policy",
             "target value " + value.str() + " is not the chart maximum");
    }
    expect(st.at("phase") == phase, "policy", "phase should be " + phase);

    // Matching: every parent has the target's columns.
    const auto target_point = oracle::canonical(raw);
    std::set<PresentationId> parent_ids;
    for (const auto& pj : parents) {
      const PresentationId id = pj.get<PresentationId>();
      expect(active_.count(id) > 0, "persistence",
             "parent " + std::to_string(id) + " is principal or already transformed");
      const auto& pp = active_.at(id).presentation;
      expect(pp.context().chart_index == chart && pp.form() == tp.form() &&
                 oracle::point_of(pp) == target_point,
             "policy", "parent " + std::to_string(id) + " differs from the target");
      parent_ids.insert(id);
    }
    expect(parent_ids.count(target) > 0, "format", "target missing from parents");

    // Descendants against the oracle's blowup children.
    std::map<PresentationId, std::vector<const json*>> by_parent;
    for (const auto& d : st.at("descendants")) by_parent[d.at("parent").get<PresentationId>()].push_back(&d);
    expect(by_parent.size() == parent_ids.size(), "descendants", "descendant parents differ from the parent list");
    const oracle::Column cs = raw[cols->first];
    const oracle::Column ct = raw[cols->second];
    for (PresentationId pid : parent_ids) {
      expect(by_parent.count(pid) > 0, "descendants", "parent " + std::to_string(pid) + " has no descendants");
      const auto& kids = by_parent.at(pid);
      const MonomialPresentation parent = active_.at(pid).presentation;
      const oracle::Point praw = oracle::raw_point(parent);
      std::multiset<oracle::Point> got;
      std::vector<MonomialPresentation> kid_p;
      std::vector<std::optional<std::size_t>> kid_slot;
      for (const json* d : kids) {
        const PresentationId id = d->at("id").get<PresentationId>();
        expect(known_.insert(id).second, "descendants", "descendant id " + std::to_string(id) + " reused");
        kid_p.push_back(parse_p(d->at("presentation"), "descendants"));
        kid_slot.push_back(d->at("exceptional_slot").is_null()
                               ? std::nullopt
                               : std::optional<std::size_t>(d->at("exceptional_slot").get<std::size_t>()));
        got.insert(oracle::point_of(kid_p.back()));
      }
      bool matched = false;
      for (const auto& [s, t] : oracle::centers(praw)) {
        const bool same = (praw[s] == cs && praw[t] == ct) || (praw[s] == ct && praw[t] == cs);
        if (same && as_multiset(oracle::children(praw, s, t)) == got) matched = true;
      }
      expect(matched, "descendants",
             "descendants of " + std::to_string(pid) + " are not the blowup of the recorded center");

      for (std::size_t i = 0; i < kids.size(); ++i) {
        const json& d = *kids[i];
        const PresentationId id = d.at("id").get<PresentationId>();
        const MonomialPresentation& p = kid_p[i];
        const oracle::Point draw = oracle::raw_point(p);
        const bool principal = oracle::principal(oracle::canonical(draw));
        expect(d.at("principal") == principal, "principal_flag",
               "descendant " + std::to_string(id) + " principal flag is wrong");
        if (principal) {
          leaves.insert(id);
          leaf_data_[id] = p;
          continue;
        }
        const bool closed = (parent.form() == FormTag::F1 && p.form() == FormTag::F1) ||
                            (parent.form() == FormTag::F5 && p.form() == FormTag::F5);
        expect(closed, "closure",
               "non-principal descendant " + std::to_string(id) + " left the form family of its parent");
        expect(p.context().chart_index == chart, "closure", "descendant changed chart");
        if (q_in_E_[chart - 1]) {
          expect(kid_slot[i].has_value() && *kid_slot[i] >= 1 && *kid_slot[i] <= draw.size(), "descent",
                 "descendant " + std::to_string(id) + " lacks its exceptional variable");
          const std::size_t e = *kid_slot[i] - 1;
          for (std::size_t o = 0; o < draw.size(); ++o) {
            if (o == e) continue;
            const Exponent v = oracle::crossing_value(draw[e], draw[o]);
            if (v == 0) continue;
            const bool ok = phase == "big_omega" ? v == value - 1 : v < value;
            expect(ok, "descent",
                   "descendant " + std::to_string(id) + " has a center of value " + v.str() +
                       " on the exceptional divisor, target was " + value.str());
          }
        }
        active_[id] = {p, false};
      }
    }
    for (PresentationId pid : parent_ids) active_.erase(pid);

    const InvariantSnapshot after = chart_maxima(active_, chart, q_in_E_);
    expect(snapshot_from_json(st.at("after"), "after") == after, "invariants",
           "recorded maxima after the step do not match");
    expect(after.bigomega_max <= before.bigomega_max && after.omega_max <= before.omega_max, "descent",
           "chart maximum increased");
  }

  const json& doc_;
  ScenarioFile file_;
  std::vector<bool> q_in_E_;
  std::map<PresentationId, Tracked> active_;
  std::map<PresentationId, MonomialPresentation> leaf_data_;
  std::set<PresentationId> known_;
  std::map<PresentationId, std::pair<MonomialPresentation, std::string>> next_initial_;
  std::map<std::string, BaseBranches> next_branches_;
  std::optional<std::size_t> round_;
  std::optional<std::size_t> step_;
};

}  // namespace

std::optional<VerifyFailure> verify_trace(const nlohmann::json& document) {
  Replayer replay(document);
  try {
    replay.run();
    return std::nullopt;
  } catch (const Violation& v) {
    return VerifyFailure{v.invariant, replay.round(), replay.step(), v.message};
  } catch (const ValidationError& e) {
    return VerifyFailure{"format", replay.round(), replay.step(), e.what()};
  } catch (const json::exception& e) {
    return VerifyFailure{"format", replay.round(), replay.step(), e.what()};
  } catch (const Error& e) {
    return VerifyFailure{"format", replay.round(), replay.step(), e.what()};
  }
}

}  // namespace toroidal
