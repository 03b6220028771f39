// Acceptance report: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Exit status is 0 iff the set of failing criteria equals the expected set.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "mahlerlab/errors.hpp"
#include "mahlerlab/identities.hpp"
#include "mahlerlab/liouville.hpp"
#include "mahlerlab/mahler.hpp"
#include "mahlerlab/result_store.hpp"
#include "oracle.hpp"

namespace {

using namespace mahlerlab;
using nlohmann::json;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Line {
  bool pass = true;
  std::string detail;
};

class Pass {
 public:
  Pass(fs::path dir, unsigned threads) : dir_(std::move(dir)), threads_(std::to_string(threads)) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Pass() { fs::remove_all(dir_); }

  // Runs the CLI; the raw standard output is recorded for the determinism check.
  json cli(int criterion, std::vector<std::string> args, bool sweep = false) {
    if (sweep) args.insert(args.end(), {"--threads", threads_});
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    if (code != 0) throw std::runtime_error("command failed (" + std::to_string(code) + "): " + err.str());
    outputs[criterion] += out.str();
    if (std::find(args.begin(), args.end(), "jsonl") == args.end()) return json::parse(out.str());
    json lines = json::array();
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
    return lines.size() == 1 ? lines[0] : lines;
  }
  void record(int criterion, const std::string& text) { outputs[criterion] += text + "\n"; }
  std::string store(const std::string& name) const { return (dir_ / name).string(); }

  std::map<int, std::string> outputs;
  std::map<int, Line> lines;
  std::vector<std::vector<WnRecord>> sweeps_n1, sweeps_n2;
  std::vector<std::pair<unsigned, std::pair<Integer, Integer>>> witnesses;

 private:
  fs::path dir_;
  std::string threads_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, const char* f = "%.3f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<WnRecord> records_of(const json& doc) {
  std::vector<WnRecord> out;
  for (const json& r : doc["records"]) {
    json copy = r;
    copy.erase("exact");
    out.push_back(record_from_json(copy.dump()));
  }
  return out;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

void criterion1(Pass& p) {
  Line& l = p.lines[1];
  const auto t0 = Clock::now();
  const NumberSpec L = parse_number("liouville:10");
  unsigned long fact = 1;
  for (unsigned k = 1; k <= 6; ++k) {
    fact *= k;
    json w = p.cli(1, {"witness", "--xi", "liouville:10", "--n", std::to_string(k), "--format", "jsonl"});
    const Integer P(w["p"].get<std::string>()), Q(w["q"].get<std::string>());
    if (!w["certified"].get<bool>() || Q != pow10(fact)) {
      l.pass = false;
      l.detail += " bad witness at n=" + std::to_string(k) + ";";
    }
    json v = p.cli(1, {"verify-witness", "--xi", "liouville:10", "--n", std::to_string(k), "--p", P.get_str(), "--q",
                       Q.get_str(), "--format", "jsonl"});
    if (v["status"] != "Certified") {
      l.pass = false;
      l.detail += " verify failed at n=" + std::to_string(k) + ";";
    }
    p.witnesses.push_back({k, {P, Q}});
  }
  const double dt = seconds_since(t0);
  json edge = p.cli(1, {"verify-witness", "--xi", "liouville:10", "--n", "3", "--p", "11", "--q", "100", "--format",
                        "jsonl"});
  const bool edge_ok = edge["status"] == "Refuted" && edge["failed"] == "upper";
  l.pass = l.pass && edge_ok && dt < 5.0;
  l.detail += " witnesses n=1..6 with q=10^(n!) certified and verified in " + fmt(dt) + " s (limit 5 s); edge 11/100 at n=3: " +
              edge["status"].get<std::string>() + "(" + (edge["failed"].is_null() ? "-" : edge["failed"].get<std::string>()) + ")";
}

bool same_record(const WnRecord& a, const WnRecord& b) {
  return a.w_lo == b.w_lo && a.w_hi == b.w_hi && a.argmin == b.argmin && a.exact == b.exact;
}

void criterion2(Pass& p) {
  Line& l = p.lines[2];
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> den(1, 12), n_dist(1, 2), h_dist(1, 6);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const long b = den(rng);
    const long a = std::uniform_int_distribution<long>(-3 * b, 3 * b)(rng);
    const NumberSpec x = ExactRational{make_rational(a, b)};
    const unsigned n = static_cast<unsigned>(n_dist(rng));
    const Integer H(h_dist(rng));
    WnRecord fast = wn_search(x, n, H), slow = wn_naive(x, n, H);
    if (!same_record(fast, slow)) ++failures;
    p.record(2, to_json_line(fast));
  }
  l.pass = failures == 0;
  l.detail = " 200 random rational instances (denominator <= 12, n <= 2, H <= 6): " + std::to_string(failures) +
             " mismatches between pruned search and full enumeration";
}

void criterion3(Pass& p) {
  Line& l = p.lines[3];
  int bad = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (long H = 1; H <= 7; ++H) {
      WnRecord r = wn_search(parse_number("rational:0/1"), n, Integer(H));
      if (!r.exact || *r.exact != 1) ++bad;
      p.record(3, to_json_line(r));
    }
  }
  WnRecord half = wn_search(parse_number("rational:1/2"), 1, Integer(1));
  WnRecord third = wn_search(parse_number("rational:1/3"), 1, Integer(2));
  const bool half_ok = half.exact && *half.exact == make_rational(1, 2);
  const bool third_ok = third.exact && *third.exact == make_rational(1, 3);
  WnRecord root = wn_search(parse_number("sqrt:2/1"), 2, Integer(1));
  for (const WnRecord* r : {&half, &third, &root}) p.record(3, to_json_line(*r));
  oracle::Real truth(512);
  mpfr_sqrt_ui(truth.get(), 2, MPFR_RNDN);
  mpfr_sub_ui(truth.get(), truth.get(), 1, MPFR_RNDN);
  const Rational t = truth.to_rational();
  const Rational tol(Integer(1), Integer(1) << 64);
  const bool root_ok = root.w_lo <= t + tol && root.w_hi >= t - tol && root.w_hi - root.w_lo <= tol;
  l.pass = bad == 0 && half_ok && third_ok && root_ok;
  l.detail = " w_n(0,H)=1 on 21 pairs (" + std::to_string(bad) + " wrong); w_1(1/2,1)=" +
             (half.exact ? to_string(*half.exact) : "?") + "; w_1(1/3,2)=" + (third.exact ? to_string(*third.exact) : "?") +
             "; w_2(sqrt2,1) " + (root_ok ? "within" : "outside") + " 2^-64 of sqrt2-1";
}

void criterion4(Pass& p) {
  Line& l = p.lines[4];
  const auto t0 = Clock::now();
  json s = p.cli(4, {"wn", "sweep", "--xi", "sqrt:2/1", "--n", "1", "--h-min", "16", "--h-max", "4096", "--ratio", "4",
                     "--store", p.store("c4.jsonl"), "--stats", "--format", "jsonl"}, true);
  (void)s;
  json sq = p.cli(4, {"wn", "sweep", "--xi", "sqrt:2/1", "--n", "1", "--h-min", "16", "--h-max", "4096", "--ratio", "4",
                      "--store", p.store("c4.jsonl"), "--stats"}, true);
  json lv = p.cli(4, {"wn", "sweep", "--xi", "liouville:10", "--n", "1", "--h-min", "10", "--h-max", "10^6", "--ratio",
                      "10", "--store", p.store("c4.jsonl"), "--stats"}, true);
  const double dt = seconds_since(t0);
  std::vector<WnRecord> rs = records_of(sq), rl = records_of(lv);
  p.sweeps_n1.push_back(rs);
  p.sweeps_n1.push_back(rl);
  SlopeEstimate es = estimate_wn_exponent(rs), el = estimate_wn_exponent(rl);
  const Rational bound = make_rational(2, 1) / pow10(18);
  const bool resumed = sq["stats"]["computed"] == 0;
  const bool w_ok = rl.back().H == pow10(6) && rl.back().w_hi <= bound;
  l.pass = es.regression_slope >= 0.8 && es.regression_slope <= 1.2 && el.max_ratio >= 2.5 && w_ok && dt < 60.0;
  l.detail = " sqrt2 slope " + fmt(es.regression_slope) + " (need [0.8,1.2]); liouville max ratio " + fmt(el.max_ratio) +
             " (need >= 2.5); w_1(L,10^6) <= " + fmt(rl.back().w_hi.get_d(), "%.4g") + " (need <= 2e-18); " + fmt(dt) +
             " s (limit 60 s); resumed sweep recomputed " + sq["stats"]["computed"].dump();
  if (!resumed) l.pass = false;
}

void criterion5(Pass& p) {
  Line& l = p.lines[5];
  const std::vector<std::string> vanishing = {"arcsin-dependence", "arcsinh-dependence", "exp-log-roundtrip",
                                              "sin-exponential",   "tan-ratio",          "arctan-log-form",
                                              "maillet-sinh",      "maillet-cosh"};
  const Dyadic limit = Dyadic::pow2(-128);
  int bad_vanishing = 0, checked = 0;
  for (const std::string& id : vanishing) {
    p.cli(5, {"identities", "verify", "--case", id, "--prec", "256", "--format", "jsonl"});
    for (const NumberSpec& a : default_identity_samples()) {
      for (const IdentityVerdict& v : verify_identity(id, a, 256)) {
        const bool principal = !v.branch || *v.branch == 0;
        if (!principal) continue;
        ++checked;
        if (v.verdict != Verdict::kVerified || v.residual.re().rad() > limit || v.residual.im().rad() > limit) {
          ++bad_vanishing;
        }
      }
    }
  }
  const std::vector<std::pair<std::string, std::string>> pairs = {{"sinh-root-paper", "sinh-root-corrected"},
                                                                  {"tan-cubic-paper", "tan-quadratic-derived"},
                                                                  {"arctan-dependence-paper", "arctan-dependence-corrected"}};
  int bad_pairs = 0;
  std::size_t min_points = 1000;
  for (const auto& [printed, corrected] : pairs) {
    std::size_t refuted = 0;
    for (int k = 1; k <= 12; ++k) {
      const std::string alpha = "rational:" + std::to_string(k) + "/13";
      json a = p.cli(5, {"identities", "verify", "--case", printed, "--alpha", alpha, "--format", "jsonl"});
      json b = p.cli(5, {"identities", "verify", "--case", corrected, "--alpha", alpha, "--format", "jsonl"});
      if (a["verdict"] == "Refuted" && b["verdict"] == "Verified") {
        ++refuted;
      } else {
        ++bad_pairs;
      }
    }
    min_points = std::min(min_points, refuted);
  }
  l.pass = bad_vanishing == 0 && bad_pairs == 0 && min_points >= 10;
  l.detail = " 8 vanishing cases at " + std::to_string(checked) + " (case, point) pairs: " +
             std::to_string(bad_vanishing) + " not Verified with radius <= 2^-128; printed variants Refuted and corrected Verified at " +
             std::to_string(min_points) + " of 12 points each (need >= 10)";
}

void criterion6(Pass& p) {
  Line& l = p.lines[6];
  std::string failure;
  json s2 = p.cli(6, {"wn", "sweep", "--xi", "sqrt:2/1", "--n", "2", "--h-min", "16", "--h-max", "1024", "--ratio", "4",
                      "--store", p.store("c6.jsonl"), "--stats"}, true);
  json l2 = p.cli(6, {"wn", "sweep", "--xi", "liouville:10", "--n", "2", "--grid", "10,100,1000", "--store",
                      p.store("c6.jsonl"), "--stats"}, true);
  p.sweeps_n2 = {records_of(s2), records_of(l2)};
  std::size_t sweeps = 0;
  try {
    for (const auto& s : p.sweeps_n1) check_monotone_in_height(s), ++sweeps;
    for (const auto& s : p.sweeps_n2) check_monotone_in_height(s), ++sweeps;
    for (std::size_t i = 0; i < p.sweeps_n2.size() && i < p.sweeps_n1.size(); ++i) {
      check_monotone_in_degree(p.sweeps_n1[i], p.sweeps_n2[i]);
    }
  } catch (const Error& e) {
    failure = e.what();
  }
  int downgrade_bad = 0, downgrade_checks = 0;
  const NumberSpec L = parse_number("liouville:10");
  for (const auto& [n, pq] : p.witnesses) {
    for (unsigned m = 1; m <= n; ++m) {
      ++downgrade_checks;
      if (verify_witness(L, m, pq.first, pq.second).status != WitnessStatus::kCertified) ++downgrade_bad;
    }
  }
  l.pass = failure.empty() && downgrade_bad == 0 && sweeps == 4;
  l.detail = " " + std::to_string(sweeps) + " sweeps non-increasing in H, n=1 vs n=2 non-increasing in n" +
             (failure.empty() ? "" : " [" + failure + "]") + "; downgrade law " +
             std::to_string(downgrade_checks - downgrade_bad) + "/" + std::to_string(downgrade_checks);
}

void criterion7(Pass& p) {
  Line& l = p.lines[7];
  const auto t0 = Clock::now();
  json rows = p.cli(7, {"maillet", "--R", "cosh", "--xi", "liouville:10", "--depths", "1,2,3,4", "--prec", "512"});
  const double dt = seconds_since(t0);
  bool nondecreasing = true;
  std::optional<double> last;
  std::string seq;
  for (const json& r : rows) {
    if (r["exponent"].is_null()) {
      seq += "-,";
      continue;
    }
    const double e = std::stod(r["exponent"].get<std::string>());
    seq += fmt(e) + ",";
    if (last && e < *last) nondecreasing = false;
    last = e;
  }
  seq.pop_back();
  const bool final_ok = !rows.back()["exponent"].is_null() && last && *last >= 5.0;
  l.pass = nondecreasing && final_ok && dt < 30.0;
  l.detail = " best exponents by depth [" + seq + "] " + (nondecreasing ? "nondecreasing" : "decreasing") +
             ", final " + (last ? fmt(*last) : "-") + " (need >= 5); " + fmt(dt) + " s (limit 30 s)";
}

using Criterion = void (*)(Pass&);
constexpr Criterion kCriteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7};

void run_all(Pass& p) {
  int i = 1;
  for (Criterion c : kCriteria) {
    try {
      c(p);
    } catch (const std::exception& e) {
      p.lines[i].pass = false;
      p.lines[i].detail += std::string(" error: ") + e.what();
    }
    ++i;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail" && i + 1 < argc) {
      expected.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }
  const fs::path base = fs::temp_directory_path() / ("mahlerlab_acceptance_" + std::to_string(::getpid()));
  std::set<int> failed;
  std::map<int, std::string> first_outputs;
  {
    Pass first(base / "a", 0);
    run_all(first);
    for (const auto& [k, line] : first.lines) {
      std::cout << "criterion " << k << ": " << (line.pass ? "PASS" : "FAIL") << " " << line.detail << std::endl;
      if (!line.pass) failed.insert(k);
    }
    first_outputs = first.outputs;
  }
  {
    Pass second(base / "b", 1);
    run_all(second);
    std::vector<int> differing;
    for (int k = 1; k <= 7; ++k) {
      if (first_outputs[k] != second.outputs[k]) differing.push_back(k);
    }
    std::size_t bytes = 0;
    for (const auto& [k, s] : first_outputs) bytes += s.size();
    const bool pass = differing.empty();
    std::string which;
    for (int k : differing) which += " " + std::to_string(k);
    std::cout << "criterion 8: " << (pass ? "PASS" : "FAIL") << " two runs (threads auto vs 1) of criteria 1-7, "
              << bytes << " bytes of JSON, " << (pass ? "byte-identical" : "differ in:" + which) << std::endl;
    if (!pass) failed.insert(8);
  }
  fs::remove_all(base);
  if (failed != expected) {
    std::cout << "unexpected outcome set" << std::endl;
    return 1;
  }
  return 0;
}
