#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "mahlerlab/classify.hpp"
#include "mahlerlab/errors.hpp"
#include "mahlerlab/functions.hpp"
#include "mahlerlab/identities.hpp"
#include "mahlerlab/liouville.hpp"
#include "mahlerlab/mahler.hpp"
#include "mahlerlab/maillet.hpp"
#include "mahlerlab/number_spec.hpp"
#include "mahlerlab/result_store.hpp"

namespace mahlerlab::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kJsonl, kTable };

struct Common {
  Precision prec = kDefaultPrecision;
  std::string format = "json";
  unsigned threads = 0;
};

struct Options {
  Common common;
  std::string xi;
  unsigned n = 0;
  std::string H, p, q;
  bool naive = false;
  std::string grid;
  std::string h_min, h_max;
  long ratio = 4;
  std::string store;
  bool stats = false;
  unsigned n_max = 0;
  std::string case_id;
  std::vector<std::string> alphas;
  long branches = 3;
  std::string rfun = "cosh";
  std::string depths = "1,2,3,4";
  std::string fn, im;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "jsonl") return Format::kJsonl;
  if (s == "table") return Format::kTable;
  throw UsageError("unknown format '" + s + "' (json, jsonl, table)");
}

NumberSpec spec_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  try {
    return parse_number(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// Decimal integer, or b^e.
Integer integer_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  auto digits = [](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const std::size_t caret = text.find('^');
  if (caret == std::string::npos) {
    if (!digits(text)) throw UsageError(std::string(flag) + ": not an integer: " + text);
    return Integer(text);
  }
  const std::string b = text.substr(0, caret), e = text.substr(caret + 1);
  if (!digits(b) || !digits(e) || e[0] == '-' || e.size() > 6) {
    throw UsageError(std::string(flag) + ": not an integer: " + text);
  }
  Integer r;
  Integer base(b);
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), std::stoul(e));
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

void require_positive(long v, const char* flag) {
  if (v < 1) throw UsageError(std::string(flag) + " must be positive");
}

std::vector<Integer> grid_arg(const Options& o) {
  if (!o.grid.empty()) {
    std::vector<Integer> g;
    for (const std::string& part : split(o.grid, ',')) g.push_back(integer_arg(part, "--grid"));
    return g;
  }
  if (o.h_min.empty() || o.h_max.empty()) throw UsageError("give --grid or both --h-min and --h-max");
  if (o.ratio < 2) throw UsageError("--ratio must be at least 2");
  return geometric_grid(integer_arg(o.h_min, "--h-min"), integer_arg(o.h_max, "--h-max"), o.ratio);
}

std::filesystem::path store_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("MAHLERLAB_STORE"); env != nullptr && *env != '\0') return env;
  return "mahlerlab.jsonl";
}

SearchOptions search_options(const Common& c) {
  SearchOptions s;
  s.threads = c.threads;
  return s;
}

json record_json(const WnRecord& r) {
  json j = json::parse(to_json_line(r));
  if (r.exact) j["exact"] = to_string(*r.exact);
  return j;
}

std::string_view domain_name(AlphaDomain d) {
  switch (d) {
    case AlphaDomain::kUnitInterval:
      return "unit-interval";
    case AlphaDomain::kTanNonzeroFinite:
      return "tan-nonzero-finite";
    case AlphaDomain::kReal:
      break;
  }
  return "real";
}

// Commands. Each returns the document to print and sets `status` to 1 when
// the document itself reports an undecided outcome.

json cmd_witness(const Options& o) {
  NumberSpec x = spec_arg(o.xi, "--xi");
  require_positive(o.n, "--n");
  const auto* l = std::get_if<LacunaryNumber>(&x);
  if (l == nullptr) throw UsageError("witness needs a liouville: or lacunary: spec");
  LiouvilleWitness w = find_witness(*l, o.n, o.common.prec);
  return {{"xi", to_string(w.xi)},         {"n", w.n},
          {"p", w.p.get_str()},            {"q", w.q.get_str()},
          {"certified", w.certified},      {"distance", w.distance.to_string()},
          {"prec", o.common.prec}};
}

json cmd_verify_witness(const Options& o, int& status) {
  NumberSpec x = spec_arg(o.xi, "--xi");
  require_positive(o.n, "--n");
  Integer p = integer_arg(o.p, "--p"), q = integer_arg(o.q, "--q");
  if (q <= 1) throw UsageError("--q must be at least 2");
  WitnessCheck c = verify_witness(x, o.n, p, q, o.common.prec);
  if (c.status == WitnessStatus::kUndecided) status = kExitComputation;
  json j = {{"xi", to_string(x)},
            {"n", o.n},
            {"p", p.get_str()},
            {"q", q.get_str()},
            {"status", std::string(to_string(c.status))},
            {"distance", c.distance.to_string()},
            {"margin", c.margin.to_string()},
            {"prec", o.common.prec}};
  j["failed"] = c.failed == Inequality::kNone ? json(nullptr) : json(std::string(to_string(c.failed)));
  return j;
}

json cmd_exponent(const Options& o) {
  NumberSpec x = spec_arg(o.xi, "--xi");
  Integer p = integer_arg(o.p, "--p"), q = integer_arg(o.q, "--q");
  if (q <= 1) throw UsageError("--q must be at least 2");
  ExponentMeasurement m = approximation_exponent(x, p, q, o.common.prec);
  return {{"xi", to_string(x)},
          {"p", m.p.get_str()},
          {"q", m.q.get_str()},
          {"exponent", m.exponent.to_string()},
          {"prec", o.common.prec}};
}

json cmd_wn(const Options& o) {
  NumberSpec x = spec_arg(o.xi, "--xi");
  require_positive(o.n, "--n");
  Integer H = integer_arg(o.H, "--H");
  if (H < 1) throw UsageError("--H must be positive");
  SearchOptions s = search_options(o.common);
  WnRecord r = o.naive ? wn_naive(x, o.n, H, o.common.prec, s) : wn_search(x, o.n, H, o.common.prec, s);
  return record_json(r);
}

json cmd_wn_sweep(const Options& o, std::ostream& err) {
  NumberSpec x = spec_arg(o.xi, "--xi");
  require_positive(o.n, "--n");
  std::vector<Integer> grid = grid_arg(o);
  ResultStore store(store_path(o.store), &err);
  SweepStats stats;
  std::vector<WnRecord> records =
      wn_sweep(x, o.n, grid, o.common.prec, &store, &stats, search_options(o.common));
  json doc = json::array();
  for (const WnRecord& r : records) doc.push_back(record_json(r));
  if (o.stats) {
    doc = {{"records", doc}, {"stats", {{"loaded", stats.loaded}, {"computed", stats.computed}}}};
  }
  return doc;
}

json cmd_classify(const Options& o, std::ostream& err) {
  NumberSpec x = spec_arg(o.xi, "--xi");
  require_positive(o.n_max, "--n-max");
  std::vector<Integer> grid = grid_arg(o);
  ResultStore store(store_path(o.store), &err);
  ClassReport rep = class_signature(x, o.n_max, grid, o.common.prec, &store, {}, search_options(o.common));
  json est = json::array();
  for (const SlopeEstimate& e : rep.estimates) {
    json pts = json::array();
    for (const auto& [lh, lw] : e.points) pts.push_back({lh, lw});
    est.push_back({{"n", e.n},
                   {"regression_slope", e.regression_slope},
                   {"max_ratio", e.max_ratio},
                   {"confidence", e.confidence},
                   {"points", pts}});
  }
  json j = {{"xi", rep.xi},
            {"signature", std::string(to_string(rep.signature))},
            {"estimates", est},
            {"grid", json::array()},
            {"thresholds",
             {{"u_slope", rep.thresholds.u_slope},
              {"u_offset", rep.thresholds.u_offset},
              {"algebraic_slack", rep.thresholds.algebraic_slack},
              {"s_lower_slack", rep.thresholds.s_lower_slack},
              {"s_min_points", rep.thresholds.s_min_points}}},
            {"disclaimer", rep.disclaimer}};
  for (const Integer& h : grid) j["grid"].push_back(h.get_str());
  j["certifiable_exponent"] = rep.certifiable_exponent ? json(*rep.certifiable_exponent) : json(nullptr);
  return j;
}

json cmd_identities_list() {
  json doc = json::array();
  for (const IdentityCase& c : list_identity_cases()) {
    doc.push_back({{"id", c.id},
                   {"description", c.description},
                   {"domain", std::string(domain_name(c.domain))},
                   {"multivalued", c.multivalued},
                   {"expected", std::string(to_string(c.expected))},
                   {"polynomial", c.polynomial ? json(c.polynomial->to_string()) : json(nullptr)}});
  }
  return doc;
}

json cmd_identities_verify(const Options& o, int& status) {
  if (o.case_id.empty()) throw UsageError("missing --case");
  std::vector<std::string> ids;
  if (o.case_id == "all") {
    for (const IdentityCase& c : list_identity_cases()) ids.push_back(c.id);
  } else {
    try {
      find_identity_case(o.case_id);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    ids.push_back(o.case_id);
  }
  std::vector<NumberSpec> alphas;
  for (const std::string& a : o.alphas) alphas.push_back(spec_arg(a, "--alpha"));
  if (alphas.empty()) alphas = default_identity_samples();
  if (o.branches < 0) throw UsageError("--branches must be non-negative");
  json doc = json::array();
  for (const std::string& id : ids) {
    for (const NumberSpec& a : alphas) {
      for (const IdentityVerdict& v : verify_identity(id, a, o.common.prec, o.branches)) {
        if (v.verdict == Verdict::kUndecided) status = kExitComputation;
        doc.push_back({{"case", v.case_id},
                       {"alpha", v.alpha},
                       {"branch", v.branch ? json(*v.branch) : json(nullptr)},
                       {"verdict", std::string(to_string(v.verdict))},
                       {"residual", v.residual.to_string()},
                       {"prec", v.prec}});
      }
    }
  }
  return doc;
}

json cmd_maillet(const Options& o) {
  NumberSpec x = spec_arg(o.xi, "--xi");
  const auto* l = std::get_if<LacunaryNumber>(&x);
  if (l == nullptr) throw UsageError("maillet needs a liouville: or lacunary: spec");
  RationalFunction r = [&] {
    try {
      return parse_rational_function(o.rfun);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--R: ") + e.what());
    }
  }();
  std::vector<unsigned> depths;
  for (const std::string& d : split(o.depths, ',')) {
    Integer v = integer_arg(d, "--depths");
    if (v < 1 || v >= kMaxTruncationDepth) {
      throw UsageError("--depths entries must lie in [1, " + std::to_string(kMaxTruncationDepth - 1) + "]");
    }
    depths.push_back(static_cast<unsigned>(v.get_ui()));
  }
  if (depths.empty()) throw UsageError("--depths is empty");
  json doc = json::array();
  for (const MailletRow& row : image_exponent_experiment(r, *l, depths, o.common.prec)) {
    json j = {{"R", r.to_string()}, {"xi", to_string(x)}, {"depth", row.depth},
              {"valid_convergents", row.valid_convergents}, {"working_prec", row.working_prec}};
    j["p"] = row.best ? json(row.best->p.get_str()) : json(nullptr);
    j["q"] = row.best ? json(row.best->q.get_str()) : json(nullptr);
    j["exponent"] = row.best ? json(row.best->exponent.to_string()) : json(nullptr);
    j["image"] = row.image ? json{{"p", row.image->p.get_str()},
                                  {"q", row.image->q.get_str()},
                                  {"exponent", row.image->exponent.to_string()}}
                           : json(nullptr);
    doc.push_back(j);
  }
  return doc;
}

json cmd_eval(const Options& o, int& status) {
  if (o.fn.empty()) throw UsageError("missing --fn");
  std::optional<FunctionTag> tag = parse_function_tag(o.fn);
  if (!tag) throw UsageError("unknown function '" + o.fn + "'");
  NumberSpec x = spec_arg(o.xi, "--x");
  const Precision in_prec = o.common.prec + 64;
  ComplexBall z(to_ball(x, in_prec));
  std::optional<NumberSpec> y;
  if (!o.im.empty()) {
    y = spec_arg(o.im, "--im");
    z = ComplexBall(to_ball(x, in_prec), to_ball(*y, in_prec));
  }
  Evaluation e = eval_fn(*tag, z, o.common.prec);
  if (e.low_precision) status = kExitComputation;
  return {{"fn", std::string(to_string(*tag))},
          {"x", to_string(x)},
          {"im", y ? json(to_string(*y)) : json(nullptr)},
          {"re_value", e.value.re().to_string()},
          {"im_value", e.value.im().to_string()},
          {"working_prec", e.working_prec},
          {"low_precision", e.low_precision},
          {"prec", o.common.prec}};
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_table(const json& doc, std::ostream& out) {
  if (doc.is_object()) {
    std::size_t w = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) w = std::max(w, it.key().size());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      out << std::left << std::setw(static_cast<int>(w)) << it.key() << "  " << cell(it.value()) << '\n';
    }
    return;
  }
  if (doc.empty()) return;
  std::vector<std::string> cols;
  for (auto it = doc.front().begin(); it != doc.front().end(); ++it) cols.push_back(it.key());
  std::vector<std::size_t> width;
  for (const std::string& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> rows;
  for (const json& r : doc) {
    std::vector<std::string> cells;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      cells.push_back(r.contains(cols[i]) ? cell(r[cols[i]]) : "");
      width[i] = std::max(width[i], cells.back().size());
    }
    rows.push_back(std::move(cells));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(i + 1 < cells.size() ? width[i] : 0))
          << cells[i];
    }
    out << '\n';
  };
  line(cols);
  for (const auto& r : rows) line(r);
}

void emit(const json& doc, Format f, std::ostream& out) {
  switch (f) {
    case Format::kJson:
      out << doc.dump(2) << '\n';
      return;
    case Format::kJsonl:
      if (doc.is_array()) {
        for (const json& r : doc) out << r.dump() << '\n';
      } else if (doc.is_object() && doc.contains("records") && doc.contains("stats")) {
        for (const json& r : doc["records"]) out << r.dump() << '\n';
        out << json{{"stats", doc["stats"]}}.dump() << '\n';
      } else {
        out << doc.dump() << '\n';
      }
      return;
    case Format::kTable:
      if (doc.is_object() && doc.contains("records") && doc.contains("stats")) {
        print_table(doc["records"], out);
        out << "loaded " << doc["stats"]["loaded"].get<std::size_t>() << ", computed "
            << doc["stats"]["computed"].get<std::size_t>() << '\n';
      } else {
        print_table(doc, out);
      }
      return;
  }
}

void add_common(CLI::App* app, Common& c, bool threads = false) {
  app->add_option("--prec", c.prec, "Precision in bits")->capture_default_str();
  app->add_option("--format", c.format, "json | jsonl | table")->capture_default_str();
  if (threads) app->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Certified numerics for Liouville numbers, Mahler's w_n and transcendence identities",
               "mahlerlab"};
  app.require_subcommand(1);

  CLI::App* witness = app.add_subcommand("witness", "Truncation witness p/q with 0 < |x - p/q| < q^-n");
  witness->add_option("--xi", o.xi, "Lacunary number spec")->required();
  witness->add_option("--n", o.n, "Exponent n")->required();
  add_common(witness, o.common);

  CLI::App* verify = app.add_subcommand("verify-witness", "Check 0 < |x - p/q| < q^-n");
  verify->add_option("--xi", o.xi, "Number spec")->required();
  verify->add_option("--n", o.n, "Exponent n")->required();
  verify->add_option("--p", o.p)->required();
  verify->add_option("--q", o.q)->required();
  add_common(verify, o.common);

  CLI::App* exponent = app.add_subcommand("exponent", "Measure -log|x - p/q| / log q");
  exponent->add_option("--xi", o.xi, "Number spec")->required();
  exponent->add_option("--p", o.p)->required();
  exponent->add_option("--q", o.q)->required();
  add_common(exponent, o.common);

  CLI::App* wn = app.add_subcommand("wn", "Mahler's w_n(x, H)");
  wn->add_option("--xi", o.xi, "Number spec");
  wn->add_option("--n", o.n, "Degree bound");
  wn->add_option("--H", o.H, "Height bound (integer or b^e)");
  wn->add_flag("--naive", o.naive, "Full enumeration instead of the pruned search");
  add_common(wn, o.common, true);
  wn->require_subcommand(0, 1);

  CLI::App* sweep = wn->add_subcommand("sweep", "w_n over a height grid, resumable through the store");
  sweep->add_option("--xi", o.xi, "Number spec")->required();
  sweep->add_option("--n", o.n, "Degree bound")->required();
  sweep->add_option("--grid", o.grid, "Comma-separated heights");
  sweep->add_option("--h-min", o.h_min);
  sweep->add_option("--h-max", o.h_max);
  sweep->add_option("--ratio", o.ratio, "Geometric grid ratio")->capture_default_str();
  sweep->add_option("--store", o.store, "JSONL store path");
  sweep->add_flag("--stats", o.stats, "Report loaded/computed counts");
  add_common(sweep, o.common, true);

  CLI::App* classify = app.add_subcommand("classify", "Heuristic Mahler class signature");
  classify->add_option("--xi", o.xi, "Number spec")->required();
  classify->add_option("--n-max", o.n_max, "Largest degree")->required();
  classify->add_option("--grid", o.grid, "Comma-separated heights");
  classify->add_option("--h-min", o.h_min);
  classify->add_option("--h-max", o.h_max);
  classify->add_option("--ratio", o.ratio, "Geometric grid ratio")->capture_default_str();
  classify->add_option("--store", o.store, "JSONL store path");
  add_common(classify, o.common, true);

  CLI::App* identities = app.add_subcommand("identities", "Identity catalog");
  identities->require_subcommand(1);
  CLI::App* list = identities->add_subcommand("list", "List catalog entries");
  add_common(list, o.common);
  CLI::App* iverify = identities->add_subcommand("verify", "Certify residuals");
  iverify->add_option("--case", o.case_id, "Case id or 'all'")->required();
  iverify->add_option("--alpha", o.alphas, "Sample point spec (repeatable; default set if absent)");
  iverify->add_option("--branches", o.branches, "Branch range K for log-based cases")->capture_default_str();
  add_common(iverify, o.common);

  CLI::App* maillet = app.add_subcommand("maillet", "Approximation exponents of R(L)");
  maillet->add_option("--R", o.rfun, "identity | cosh | sinh | [n0,n1,..]/[d0,d1,..]")->capture_default_str();
  maillet->add_option("--xi", o.xi, "Lacunary number spec")->required();
  maillet->add_option("--depths", o.depths, "Comma-separated truncation depths")->capture_default_str();
  add_common(maillet, o.common);

  CLI::App* eval = app.add_subcommand("eval", "Certified elementary function value");
  eval->add_option("--fn", o.fn, "exp, log, sin, ..., sqrt")->required();
  eval->add_option("--x", o.xi, "Real part spec")->required();
  eval->add_option("--im", o.im, "Imaginary part spec");
  add_common(eval, o.common);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = parse_format(o.common.format);
    if (o.common.prec < 16 || o.common.prec > kPrecisionCap) {
      throw UsageError("--prec must lie in [16, " + std::to_string(kPrecisionCap) + "]");
    }
    int status = kExitOk;
    json doc;
    if (witness->parsed()) {
      doc = cmd_witness(o);
    } else if (verify->parsed()) {
      doc = cmd_verify_witness(o, status);
    } else if (exponent->parsed()) {
      doc = cmd_exponent(o);
    } else if (sweep->parsed()) {
      doc = cmd_wn_sweep(o, err);
    } else if (wn->parsed()) {
      doc = cmd_wn(o);
    } else if (classify->parsed()) {
      doc = cmd_classify(o, err);
    } else if (list->parsed()) {
      doc = cmd_identities_list();
    } else if (iverify->parsed()) {
      doc = cmd_identities_verify(o, status);
    } else if (maillet->parsed()) {
      doc = cmd_maillet(o);
    } else {
      doc = cmd_eval(o, status);
    }
    emit(doc, format, out);
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace mahlerlab::cli
