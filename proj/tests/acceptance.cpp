// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "s1s/testing/suites.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>

using namespace s1s::testing;

namespace {

constexpr std::uint64_t seed = 7;

struct timed {
  suite_result result;
  double seconds;
};

template <class F>
timed measure(F f) {
  auto t0 = std::chrono::steady_clock::now();
  suite_result r = f();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return {std::move(r), dt.count()};
}

int failed = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
  if (!ok) ++failed;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " " << what << ": " << detail << "\n";
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::size_t checks(const suite_result& r, const std::string& p) {
  auto* q = r.find(p);
  return q ? q->checks : 0;
}

std::size_t failures(const suite_result& r, const std::string& p) {
  auto* q = r.find(p);
  return q ? q->failures : 0;
}

std::size_t total_failures(const suite_result& r) {
  std::size_t n = 0;
  for (const auto& p : r.properties) n += p.failures;
  return n;
}

std::string run_child(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  pclose(f);
  return out;
}

} // namespace

int main() {
  {
    auto t = measure([] { return s1s_regression_suite(); });
    const auto& r = t.result;
    std::size_t sat = 0;
    for (const auto& c : regression_sentences()) sat += c.expected;
    bool ok = checks(r, "decide") == 20 && failures(r, "decide") == 0 && checks(r, "witness") == sat &&
              failures(r, "witness") == 0 && t.seconds < 10;
    report(1, "s1s regression", ok,
           "decided " + std::to_string(checks(r, "decide") - failures(r, "decide")) + "/20, witnesses " +
               std::to_string(checks(r, "witness") - failures(r, "witness")) + "/" + std::to_string(sat) +
               ", " + secs(t.seconds) + " (limit 10s)");
    print(std::cout, r);
  }
  {
    auto t = measure([] { return complement_suite(seed, 200); });
    const auto& r = t.result;
    bool ok = checks(r, "methods_equivalent") >= 200 && total_failures(r) == 0 && t.seconds < 60;
    report(2, "complementation oracle", ok,
           std::to_string(checks(r, "methods_equivalent")) + " NBAs, " + std::to_string(total_failures(r)) +
               " failures, " + secs(t.seconds) + " (limit 60s)");
    print(std::cout, r);
  }
  {
    auto t = measure([] { return borel_suite(seed, 100); });
    const auto& r = t.result;
    bool ok = checks(r, "designated_label") >= 4 && total_failures(r) == 0 && checks(r, "duality") > 0;
    report(3, "borel classification", ok,
           std::to_string(checks(r, "consistent")) + " reports, " + std::to_string(checks(r, "designated_label")) +
               " designated labels, " + std::to_string(total_failures(r)) + " failures");
    print(std::cout, r);
  }
  {
    auto t = measure([] { return axiom_suite(seed, 200); });
    const auto& r = t.result;
    bool ok = total_failures(r) == 0 && t.seconds < 30;
    std::size_t least = SIZE_MAX;
    for (const auto& p : r.properties) {
      if (p.name.rfind("T11i", 0) == 0 && p.name.find("geometric") != std::string::npos) continue;
      if (p.name.rfind("T11ii", 0) == 0) continue;
      least = std::min(least, p.checks);
    }
    ok = ok && least >= 200 && checks(r, "T11ii[geometric:4]") > 0;
    report(4, "axiom suite", ok,
           "min " + std::to_string(least) + " instances per property (need 200), T11ii gated " +
               std::to_string(checks(r, "T11ii[geometric:4]")) + ", " + std::to_string(total_failures(r)) +
               " failures, " + secs(t.seconds) + " (limit 30s)");
    print(std::cout, r);
  }
  {
    auto t = measure([] { return nu_suite(seed, 100); });
    const auto& r = t.result;
    bool ok = checks(r, "certified") >= 100 && total_failures(r) == 0 && t.seconds < 30;
    report(5, "nu cross-validation", ok,
           std::to_string(checks(r, "certified")) + " certified (need 100), " +
               std::to_string(checks(r, "refused_by_certificate")) + " refused, " +
               std::to_string(total_failures(r)) + " mismatches (tolerance 0), " + secs(t.seconds) +
               " (limit 30s)");
    print(std::cout, r);
  }
  {
    auto t = measure([] { return construction_suite(); });
    const auto& r = t.result;
    report(6, "construction cross-checks", r.ok(),
           std::to_string(r.properties.size()) + " checks, " + std::to_string(total_failures(r)) +
               " failures (exact)");
    print(std::cout, r);
  }
  {
    auto t = measure([] { return template_suite(seed, 50); });
    const auto& r = t.result;
    bool ok = total_failures(r) == 0;
    for (const char* p : {"theta", "psi", "omega"}) ok = ok && checks(r, p) >= 50;
    report(7, "logic/kernel coherence", ok,
           "theta " + std::to_string(checks(r, "theta")) + ", psi " + std::to_string(checks(r, "psi")) +
               ", omega " + std::to_string(checks(r, "omega")) + " (need 50 each), " +
               std::to_string(total_failures(r)) + " failures");
    print(std::cout, r);
  }
  {
    const std::string cmd = std::string("\"") + S1S_CLI_PATH + "\" selftest --seed 7 2>&1";
    std::string a = run_child(cmd), b = run_child(cmd);
    bool ok = !a.empty() && a == b;
    report(8, "determinism", ok,
           std::to_string(a.size()) + " bytes, runs " + (a == b ? "identical" : "differ"));
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all passed"))
            << "\n";
  return failed ? 1 : 0;
}
