// Acceptance checks. Prints one PASS/FAIL line per criterion; exits 1 if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "helpers.hpp"
#include "toroidal/cli.hpp"
#include "toroidal/error.hpp"
#include "toroidal/json_io.hpp"
#include "toroidal/oracle.hpp"
#include "toroidal/principalize.hpp"
#include "toroidal/verify.hpp"

using namespace toroidal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Scenario single(const MonomialPresentation& p) { return make_scenario(p.n(), 1, {true}, {}, {p}); }

Exponent max_crossing(const oracle::Point& p) {
  Exponent best = 0;
  for (const auto& [s, t] : oracle::centers(p)) best = std::max(best, oracle::crossing_value(p[s], p[t]));
  return best;
}

std::size_t tree_height(const Trace& t) {
  std::map<PresentationId, std::size_t> depth;
  std::size_t height = 0;
  for (const auto& st : t.steps) {
    for (const auto& d : st.descendants) {
      depth[d.id] = depth[d.parent] + 1;
      height = std::max(height, depth[d.id]);
    }
  }
  return height;
}

// Runs `body(first_entry)` for each value of the first grid entry on its own thread.
template <class Body>
void parallel_over(long lo, long hi, Body body) {
  std::vector<std::future<void>> jobs;
  for (long x = lo; x <= hi; ++x) jobs.push_back(std::async(std::launch::async, body, x));
  for (auto& j : jobs) j.get();
}

Outcome omega_exact_drop() {
  Outcome o;
  for (int a = 2; a <= 8; ++a) {
    for (int b = 1; b < a; ++b) {
      const auto p = MonomialPresentation::f1(2, ExponentRow{a}, ExponentRow{b});
      const RunResult r = run(single(p), default_step_budget(single(p)));
      std::size_t omega_steps = 0;
      Exponent expected = a - b;
      for (const auto& st : r.trace.steps) {
        if (st.phase != Phase::BigOmega) continue;
        ++omega_steps;
        if (st.before.bigomega_max != expected || st.after.bigomega_max != expected - 1) {
          o.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + ": drop is not 1");
        }
        --expected;
      }
      if (omega_steps != std::size_t(a - b) || expected != 0) {
        o.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + ": " + std::to_string(omega_steps) +
               " Omega steps");
      }
      if (!r.scenario.presentations.empty()) o.fail("locus not empty");
    }
  }
  return o;
}

Outcome omega_strict_descent(std::size_t& count) {
  Outcome o;
  std::mutex lock;
  std::atomic<std::size_t> n{0};
  parallel_over(0, 5, [&](long first) {
    testing::for_each_row(3, 0, 5, [&](const std::vector<long>& rest) {
      const std::vector<long> u{first, rest[0]};
      const std::vector<long> v{rest[1], rest[2]};
      if (u[0] + v[0] == 0 || u[1] + v[1] == 0) return;
      const ExponentRow ur = testing::to_row(u), vr = testing::to_row(v);
      if (oracle::oracle_rank(ur, vr) != 2 || oracle::oracle_principal(ur, vr)) return;
      const auto p = MonomialPresentation::f5(2, ur, vr);
      const RunResult r = run(single(p), default_step_budget(single(p)));
      std::string why;
      for (const auto& st : r.trace.steps) {
        if (st.phase != Phase::SmallOmega) why = "step outside the omega phase";
        for (const auto& d : st.descendants) {
          const Exponent w = max_crossing(oracle::point_of(d.presentation));
          if (w >= st.target_value) why = "descendant omega " + w.str() + " >= " + st.target_value.str();
        }
      }
      if (!r.scenario.presentations.empty()) why = "locus not empty";
      const auto search = oracle::exhaustive_search(oracle::point_of(p), 64);
      if (tree_height(r.trace) > search.max_depth) why = "deeper than the oracle bound";
      ++n;
      if (!why.empty()) {
        std::lock_guard g(lock);
        o.fail(describe(p) + ": " + why);
      }
    });
  });
  count = n;
  return o;
}

// Every F1 (k <= 4) and F5 (2 <= k <= 4) presentation with entries <= 6, with
// n = k + 1. `visit` receives each one; construction goes through the engine.
void for_each_grid_presentation(const std::function<void(const MonomialPresentation&, bool)>& visit) {
  for (std::size_t k = 1; k <= 4; ++k) {
    parallel_over(0, 6, [&](long first) {
      testing::for_each_row(2 * k - 1, 0, 6, [&](const std::vector<long>& rest) {
        std::vector<long> u(k), v(k);
        u[0] = first;
        for (std::size_t i = 1; i < k; ++i) u[i] = rest[i - 1];
        for (std::size_t i = 0; i < k; ++i) v[i] = rest[k - 1 + i];
        const ExponentRow ur = testing::to_row(u), vr = testing::to_row(v);
        bool f1 = true;
        for (std::size_t i = 0; i < k; ++i) f1 = f1 && u[i] > 0 && v[i] <= u[i];
        if (f1) visit(MonomialPresentation::f1(k + 1, ur, vr), oracle::oracle_principal(ur, vr, true));
        if (k < 2) return;
        for (std::size_t i = 0; i < k; ++i) {
          if (u[i] + v[i] == 0) return;
        }
        if (oracle::oracle_rank(ur, vr) != 2) return;
        visit(MonomialPresentation::f5(k + 1, ur, vr), oracle::oracle_principal(ur, vr));
      });
    });
  }
}

Outcome principal_equivalence(std::size_t& count) {
  Outcome o;
  std::mutex lock;
  std::atomic<std::size_t> n{0};
  for_each_grid_presentation([&](const MonomialPresentation& p, bool expected) {
    ++n;
    if (is_principal(p) != expected) {
      std::lock_guard g(lock);
      o.fail("disagreement on " + describe(p));
    }
  });
  count = n;
  if (count < 100000) o.fail("only " + std::to_string(count) + " cases");
  return o;
}

Outcome closure(std::size_t& count) {
  Outcome o;
  std::mutex lock;
  std::atomic<std::size_t> n{0};
  for_each_grid_presentation([&](const MonomialPresentation& p, bool principal) {
    if (principal) return;
    for (const Center& c : enumerate_centers(p)) {
      for (const auto& d : blowup(p, c).descendants) {
        ++n;
        if (oracle::principal(oracle::point_of(d.presentation))) continue;
        if (d.presentation.form() != p.form()) {
          std::lock_guard g(lock);
          o.fail(describe(p) + " at " + describe(c) + " gave " + describe(d.presentation));
        }
      }
    }
  });
  count = n;
  return o;
}

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(FIXTURE_DIR)) {
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct RunCapture {
  int code = -1;
  json doc;
};

RunCapture run_fixture(const fs::path& p) {
  std::ostringstream out, err;
  RunOptions opts;
  opts.scenario = p;
  RunCapture c;
  c.code = cmd_run(opts, out, err);
  if (c.code == kExitOk) c.doc = json::parse(out.str());
  return c;
}

std::string template_problem(const json& t) {
  const std::string tag = t.at("tag");
  auto row = [](const json& j) { return row_from_json(j, "row"); };
  if (tag == "T1") {
    const ExponentRow a = row(t.at("a"));
    for (const auto& e : a.entries()) {
      if (e <= 0) return "T1 entry not positive";
    }
    return "";
  }
  if (tag == "T2") {
    const ExponentRow g = row(t.at("g"));
    Exponent d = 0;
    for (const auto& e : g.entries()) {
      if (e <= 0) return "T2 base not positive";
      d = boost::multiprecision::gcd(d, e);
    }
    if (d != 1) return "T2 base not primitive";
    if (exponent_from_json(t.at("m"), "m") <= 0 || exponent_from_json(t.at("t"), "t") <= 0) {
      return "T2 power not positive";
    }
    return "";
  }
  if (tag == "T3") {
    const ExponentRow a = row(t.at("a")), b = row(t.at("b"));
    if (oracle::oracle_rank(a, b) != 2) return "T3 rank below 2";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] + b[i] <= 0) return "T3 zero column";
    }
    return "";
  }
  return "unknown template " + tag;
}

Outcome end_to_end(const std::vector<fs::path>& files, std::size_t& leaves) {
  Outcome o;
  if (files.size() < 20) o.fail("only " + std::to_string(files.size()) + " fixtures");
  for (const auto& f : files) {
    const RunCapture c = run_fixture(f);
    if (c.code != kExitOk) {
      o.fail(f.filename().string() + " exited " + std::to_string(c.code));
      continue;
    }
    for (const auto& r : c.doc["canonical"]["rounds"]) {
      for (const auto& l : r["leaves"]) {
        ++leaves;
        const std::string why = template_problem(l["global_template"]);
        if (!why.empty()) o.fail(f.filename().string() + " leaf " + l["id"].dump() + ": " + why);
      }
    }
  }
  return o;
}

Outcome persistence(const std::vector<fs::path>& files, std::size_t& traces) {
  Outcome o;
  for (const auto& f : files) {
    const RunCapture c = run_fixture(f);
    if (c.code != kExitOk) continue;
    ++traces;
    for (const auto& r : c.doc["canonical"]["rounds"]) {
      std::set<std::uint64_t> principal;
      for (const auto& e : r["initial"]["principal"]) principal.insert(e["id"].get<std::uint64_t>());
      for (const auto& st : r["steps"]) {
        for (const auto& id : st["parents"]) {
          if (principal.count(id.get<std::uint64_t>())) {
            o.fail(f.filename().string() + ": principal " + id.dump() + " blown up at step " + st["step"].dump());
          }
        }
        for (const auto& d : st["descendants"]) {
          if (d["principal"].get<bool>()) principal.insert(d["id"].get<std::uint64_t>());
        }
      }
      for (const auto& e : r["terminal_report"]["centers"]) {
        if (principal.count(e["id"].get<std::uint64_t>())) o.fail(f.filename().string() + ": principal in locus");
      }
    }
  }
  return o;
}

int verify_doc(const json& doc) {
  const fs::path p = fs::temp_directory_path() / "toroidal_acceptance_trace.json";
  std::ofstream(p) << doc.dump(2);
  std::ostringstream out, err;
  return cmd_verify(p, out, err);
}

Outcome determinism(const std::vector<fs::path>& files) {
  Outcome o;
  for (const auto& f : files) {
    const RunCapture a = run_fixture(f), b = run_fixture(f);
    if (a.code != kExitOk || b.code != kExitOk) {
      o.fail(f.filename().string() + " did not run");
      continue;
    }
    if (a.doc["canonical"].dump() != b.doc["canonical"].dump()) o.fail(f.filename().string() + " not deterministic");
    if (verify_doc(a.doc) != kExitOk) o.fail(f.filename().string() + " rejected by verify");
  }
  const json base = run_fixture(fs::path(FIXTURE_DIR) / "euclid.json").doc;
  json raised = base;
  raised["canonical"]["rounds"][0]["steps"][1]["after"]["omega_max"] = 7;
  json truncated = base;
  truncated["canonical"]["rounds"][0]["steps"].erase(2);
  json flipped = base;
  flipped["canonical"]["rounds"][0]["steps"][0]["descendants"][2]["principal"] = false;
  for (const auto& [name, doc] : {std::pair{"raised omega", raised}, std::pair{"truncated", truncated},
                                  std::pair{"flipped principal", flipped}}) {
    if (verify_doc(doc) == kExitOk) o.fail(std::string("accepted corrupted trace: ") + name);
  }
  return o;
}

bool report(int index, const std::string& name, const Outcome& o, const std::string& stats) {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << index << "  " << name << "  (" << stats << ")";
  if (!o.ok) std::cout << "  " << o.detail;
  std::cout << '\n';
  return o.ok;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  bool all = true;
  auto timed = [](auto&& f) {
    const auto t0 = clock::now();
    auto r = f();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    return std::pair{r, std::to_string(ms) + " ms"};
  };

  try {
    {
      auto [o, t] = timed(omega_exact_drop);
      all &= report(1, "Omega drops by exactly 1 per step", o, "1 <= b < a <= 8, " + t);
    }
    {
      std::size_t n = 0;
      auto [o, t] = timed([&] { return omega_strict_descent(n); });
      all &= report(2, "omega strictly descends", o, std::to_string(n) + " scenarios, " + t);
    }
    {
      std::size_t n = 0;
      auto [o, t] = timed([&] { return principal_equivalence(n); });
      all &= report(3, "is_principal agrees with the oracle", o, std::to_string(n) + " cases, " + t);
    }
    {
      std::size_t n = 0;
      auto [o, t] = timed([&] { return closure(n); });
      all &= report(4, "non-principal descendants keep their form", o, std::to_string(n) + " descendants, " + t);
    }
    const auto files = fixture_files();
    {
      std::size_t leaves = 0;
      auto [o, t] = timed([&] { return end_to_end(files, leaves); });
      all &= report(5, "fixtures end toroidal", o,
                    std::to_string(files.size()) + " fixtures, " + std::to_string(leaves) + " leaves, " + t);
    }
    {
      std::size_t traces = 0;
      auto [o, t] = timed([&] { return persistence(files, traces); });
      all &= report(6, "principal stays principal", o, std::to_string(traces) + " traces, " + t);
    }
    {
      auto [o, t] = timed([&] { return determinism(files); });
      all &= report(7, "deterministic traces replay", o, t);
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL  aborted: " << e.what() << '\n';
    return 1;
  }
  return all ? 0 : 1;
}
