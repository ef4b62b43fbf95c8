#include "cli.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"

namespace biinterval::cli {

namespace {

constexpr std::int64_t kRationalizeMaxDen = 1'000'000;

/// Bad command-line input; the message names the offending argument.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Turns argument text into exact values and remembers decimal conversions
/// so they can be echoed back.
class ArgParser {
 public:
  explicit ArgParser(bool rationalize) : rationalize_(rationalize) {}

  Rational rational(const std::string& text, const std::string& name) {
    if (auto q = Rational::parse(text)) return *q;
    if (rationalize_) {
      if (auto x = decimal(text)) {
        const Rational q = Rational::approximate(*x, kRationalizeMaxDen);
        conversions_.push_back({{"argument", name}, {"input", text}, {"value", q.str()}});
        return q;
      }
    }
    throw UsageError("argument " + name + ": '" + text + "' is not a rational literal p/q" +
                     (rationalize_ ? " or decimal" : " (use --rationalize for decimals)"));
  }

  /// Real-valued parameter: rational literal or plain decimal.
  double real(const std::string& text, const std::string& name) const {
    if (auto q = Rational::parse(text)) return q->to_double();
    if (auto x = decimal(text)) return *x;
    throw UsageError("argument " + name + ": '" + text + "' is not a number");
  }

  const Json& conversions() const { return conversions_; }

 private:
  static std::optional<double> decimal(const std::string& text) {
    std::istringstream in(text);
    double x = 0.0;
    in >> x;
    if (in.fail() || !in.eof() || !std::isfinite(x)) return std::nullopt;
    return x;
  }

  bool rationalize_;
  Json conversions_ = Json::array();
};

struct RegionArgs {
  std::vector<std::string> endpoints;
  bool rationalize = false;
  bool json = false;
};

void add_region_args(CLI::App* cmd, RegionArgs& args) {
  cmd->add_option("endpoints", args.endpoints, "i1_lo i1_hi i2_lo i2_hi as rational literals")
      ->required()
      ->expected(4);
  cmd->add_flag("--rationalize", args.rationalize,
                "Accept decimals, converted by continued fractions (denominator <= 10^6)");
  cmd->add_flag("--json", args.json, "Emit JSON instead of text");
}

std::pair<BiIntervalRegion, AffineMap> parse_region(const RegionArgs& args, ArgParser& parser) {
  static const char* names[] = {"i1_lo", "i1_hi", "i2_lo", "i2_hi"};
  std::vector<Rational> v;
  for (std::size_t i = 0; i < 4; ++i) v.push_back(parser.rational(args.endpoints[i], names[i]));
  try {
    return canonicalize({{v[0], v[1]}, {v[2], v[3]}});
  } catch (const Error& e) {
    throw UsageError(std::string("arguments i1_lo..i2_hi: ") + e.what());
  }
}

std::int64_t positive(std::int64_t value, const std::string& name) {
  if (value < 1) throw UsageError("argument " + name + ": must be a positive integer");
  return value;
}

Json envelope(const std::string& command, const ArgParser& parser) {
  Json j = {{"schema", kSchema}, {"command", command}};
  if (!parser.conversions().empty()) j["rationalized"] = parser.conversions();
  return j;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string region_line(const BiIntervalRegion& region) {
  return "r = " + region.r().str() + ", a = " + region.a().str() + "  (0, " + region.r().str() + ") U (" +
         region.a().str() + ", " + region.right_end().str() + ")";
}

std::string map_line(const AffineMap& map) {
  return "x -> " + map.shift.str() + (map.reflected ? " - " : " + ") + map.scale.str() + " x";
}

/// Case to construct: explicit selector, or (ii) when p was given, else (i) when available.
CaseSelector pick_case(const std::string& selector, bool p_given, const Classification& c) {
  if (selector == "i") return CaseSelector::CaseI;
  if (selector == "ii") return CaseSelector::CaseII;
  if (selector != "auto") throw UsageError("argument --case: expected auto, i or ii");
  if (p_given && c.case_ii_n) return CaseSelector::CaseII;
  return c.case_i ? CaseSelector::CaseI : CaseSelector::CaseII;
}

SpectrumSpec spectrum_for(const BiIntervalRegion& region, CaseSelector which, std::int64_t p) {
  try {
    return build_spectrum(region, which, p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EvenP) throw UsageError(std::string("argument --p: ") + e.what());
    if (e.kind() == ErrorKind::CaseUnavailable) throw UsageError(std::string("argument --case: ") + e.what());
    throw;
  }
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  RegionArgs region;
  std::int64_t K = 1000;
  std::int64_t p = 1;
  std::string which = "auto";
  std::string window;
  std::string lambda = "1/3";
  std::string gram_bound = "20";
  CLI::Option* p_opt = nullptr;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  ArgParser parser(args.region.rationalize);
  const auto [region, map] = parse_region(args.region, parser);
  const std::int64_t K = positive(args.K, "--K");
  const Rational lambda = parser.rational(args.lambda, "--lambda");
  const Rational gram_bound = parser.rational(args.gram_bound, "--gram-bound");
  if (!(gram_bound > 0)) throw UsageError("argument --gram-bound: must be positive");
  std::optional<Rational> window_hi;
  if (!args.window.empty()) {
    window_hi = parser.rational(args.window, "--window");
    if (!(*window_hi > 0)) throw UsageError("argument --window: must be positive");
  }

  const Classification c = classify_region(region);
  const Classification t = classify_tiles(region);

  Json j = envelope("analyze", parser);
  j["region"] = to_json(region);
  j["map"] = to_json(map);
  j["classification"] = to_json(c);
  j["spectral"] = c.admits_any();
  j["tiles"] = t.admits_any();
  j["spectrum"] = nullptr;
  j["tiling"] = nullptr;
  j["verification"] = nullptr;

  if (c.admits_any()) {
    const CaseSelector which = pick_case(args.which, args.p_opt && args.p_opt->count() > 0, c);
    const SpectrumSpec spec = spectrum_for(region, which, args.p);
    const TilingSpec tiling = build_tiling(region, which);
    const RationalInterval window{Rational(0), window_hi.value_or(tiling.period * 10)};

    const auto freqs = enumerate_frequencies(spec, gram_bound);
    const OrthogonalityReport ortho = difference_set_in_zeros(region, freqs);
    const GramMatrix gram = gram_matrix(region, freqs);
    const ParsevalReport parseval = parseval_sum(region, spec, lambda, K);
    const CoverageReport coverage = verify_tiling(region, tiling, window);

    Json verification = {
        {"gram",
         {{"bound", to_json(gram_bound)},
          {"size", freqs.size()},
          {"max_off_diagonal", gram.max_off_diagonal()},
          {"orthogonality", to_json(ortho)}}},
        {"parseval", to_json(parseval)},
        {"parseval_lambda", to_json(lambda)},
        {"coverage", to_json(coverage)},
        {"alternation", nullptr}};
    if (coverage.exact_cover && region.r() < Rational(1, 2)) {
      verification["alternation"] = to_json(alternation_check(region, tiling, window));
    }
    j["case"] = which == CaseSelector::CaseI ? "i" : "ii";
    j["spectrum"] = to_json(spec);
    j["tiling"] = to_json(tiling);
    j["verification"] = verification;
  }

  if (args.region.json) {
    out << serialize(j);
    return kExitOk;
  }

  std::ostringstream os;
  os << "region       " << region_line(region) << "\n"
     << "map          " << map_line(map) << "\n"
     << "case (i)     " << (c.case_i ? "yes (a - r integral)" : "no") << "\n"
     << "case (ii)    " << (c.case_ii_n ? "yes, n = " + std::to_string(*c.case_ii_n) : std::string("no")) << "\n";
  if (!j["spectrum"].is_null()) {
    const Json& v = j["verification"];
    os << "spectral     yes, tiles: " << (t.admits_any() ? "yes" : "no") << "\n"
       << "constructed  case (" << j["case"].get<std::string>() << ")\n"
       << "spectrum     " << j["spectrum"]["description"].get<std::string>() << "\n"
       << "tiling       period " << j["tiling"]["period"].get<std::string>() << ", residues";
    for (const auto& res : j["tiling"]["residues"]) os << " " << res.get<std::string>();
    os << "\n"
       << "gram         " << v["gram"]["size"].get<std::size_t>() << " frequencies in [-"
       << v["gram"]["bound"].get<std::string>() << ", " << v["gram"]["bound"].get<std::string>()
       << "], max |off-diagonal| = " << fmt(v["gram"]["max_off_diagonal"].get<double>())
       << ", exact orthogonality " << (v["gram"]["orthogonality"]["pass"].get<bool>() ? "ok" : "FAILED") << "\n"
       << "parseval     lambda = " << lambda.str() << ", K = " << K
       << ": partial = " << fmt(v["parseval"]["partial_sum"].get<double>())
       << ", defect = " << fmt(v["parseval"]["defect"].get<double>()) << ", tail bound = "
       << (v["parseval"]["tail_bound"].is_null() ? std::string("inf")
                                                  : fmt(v["parseval"]["tail_bound"].get<double>()))
       << "\n"
       << "coverage     " << (v["coverage"]["exact_cover"].get<bool>() ? "exact" : "NOT exact") << " on ["
       << v["coverage"]["window"][0].get<std::string>() << ", " << v["coverage"]["window"][1].get<std::string>()
       << ")\n";
    if (!v["alternation"].is_null()) {
      os << "alternation  " << (v["alternation"]["alternates"].get<bool>() ? "yes" : "NO") << "\n";
    }
  } else {
    os << "spectral     no, tiles: " << (t.admits_any() ? "yes" : "no") << "\n"
       << "             not spectral / does not tile; nothing to construct\n";
  }
  for (const auto& conv : parser.conversions()) {
    os << "note         " << conv["argument"].get<std::string>() << ": " << conv["input"].get<std::string>()
       << " -> " << conv["value"].get<std::string>() << "\n";
  }
  out << os.str();
  return kExitOk;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  RegionArgs region;
  std::string lambda;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& out) {
  ArgParser parser(args.region.rationalize);
  const auto [region, map] = parse_region(args.region, parser);
  const Rational lambda = parser.rational(args.lambda, "--lambda");
  const ZeroClass z = classify_frequency(region, lambda);
  const double modulus = std::abs(ft_indicator(region, lambda));

  Json j = envelope("classify", parser);
  j["region"] = to_json(region);
  j["lambda"] = to_json(lambda);
  j["zero_class"] = to_json(z);
  j["ft_modulus"] = modulus;
  if (args.region.json) {
    out << serialize(j);
    return kExitOk;
  }
  out << "region       " << region_line(region) << "\n"
      << "lambda       " << lambda.str() << "\n"
      << "zero         " << (z.is_zero ? "yes" : "no") << "  (Z1 " << z.in_z1 << ", Z2 " << z.in_z2 << ", Z3 "
      << z.in_z3 << ")\n"
      << "|FT|         " << fmt(modulus) << "\n";
  for (const auto& conv : parser.conversions()) {
    out << "note         " << conv["argument"].get<std::string>() << ": " << conv["input"].get<std::string>()
        << " -> " << conv["value"].get<std::string>() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct ZerosArgs {
  RegionArgs region;
  std::vector<std::string> window{"0", "10"};
  std::string step = "1/1000";
  double threshold = 1e-6;
  std::int64_t denominator_bound = 1000;
};

int cmd_verify_zeros(const ZerosArgs& args, std::ostream& out) {
  ArgParser parser(args.region.rationalize);
  const auto [region, map] = parse_region(args.region, parser);
  const Rational lo = parser.rational(args.window.at(0), "--window");
  const Rational hi = parser.rational(args.window.at(1), "--window");
  const double step = parser.real(args.step, "--step");
  if (!(step > 0.0)) throw UsageError("argument --step: must be positive");
  if (!(args.threshold > 0.0)) throw UsageError("argument --threshold: must be positive");
  positive(args.denominator_bound, "--denominator-bound");

  const ZeroScanReport rep = reconcile(region, lo, hi, step, args.threshold, args.denominator_bound);
  Json j = envelope("verify zeros", parser);
  j["region"] = to_json(region);
  j["report"] = to_json(rep);
  if (args.region.json) {
    out << serialize(j);
  } else {
    out << "region       " << region_line(region) << "\n"
        << "window       (" << lo.str() << ", " << hi.str() << "], step " << fmt(step) << "\n"
        << "matched      " << rep.matched.size() << " zeros\n";
    for (const auto& m : rep.matched) {
      out << "  " << std::setw(10) << m.zero.str() << "  at " << std::setprecision(12) << m.candidate.location
          << "  |FT| = " << fmt(m.candidate.min_modulus) << "\n";
    }
    for (const auto& c : rep.unmatched_candidates) out << "stray        " << std::setprecision(12) << c.location << "\n";
    for (const auto& z : rep.unmatched_predictions) out << "missed       " << z.str() << "\n";
    out << (rep.pass() ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass() ? kExitOk : kExitCheckFailed;
}

struct TilingArgs {
  RegionArgs region;
  std::string period;
  std::vector<std::string> residues;
  std::vector<std::string> window;
};

int cmd_verify_tiling(const TilingArgs& args, std::ostream& out) {
  ArgParser parser(args.region.rationalize);
  const auto [region, map] = parse_region(args.region, parser);
  std::vector<Rational> residues;
  for (const auto& s : args.residues) residues.push_back(parser.rational(s, "--residues"));
  const Rational period = parser.rational(args.period, "--period");
  TilingSpec tiling;
  try {
    tiling = TilingSpec::make(period, residues);
  } catch (const Error& e) {
    throw UsageError(std::string("arguments --period/--residues: ") + e.what());
  }
  RationalInterval window{Rational(0), tiling.period * 10};
  if (!args.window.empty()) {
    window = {parser.rational(args.window.at(0), "--window"), parser.rational(args.window.at(1), "--window")};
  }

  const CoverageReport cov = verify_tiling(region, tiling, window);
  Json j = envelope("verify tiling", parser);
  j["region"] = to_json(region);
  j["tiling"] = to_json(tiling);
  j["density"] = to_json(tiling.density());
  j["coverage"] = to_json(cov);
  j["alternation"] = nullptr;
  if (cov.exact_cover && region.r() < Rational(1, 2)) j["alternation"] = to_json(alternation_check(region, tiling, window));

  if (args.region.json) {
    out << serialize(j);
  } else {
    out << "region       " << region_line(region) << "\n"
        << "tiling       period " << tiling.period << ", " << tiling.residues.size() << " residues, density "
        << tiling.density() << "\n"
        << "window       [" << window.lo << ", " << window.hi << ")\n";
    for (const auto& g : cov.gaps) out << "gap          [" << g.lo << ", " << g.hi << ")\n";
    for (const auto& o : cov.overlaps) out << "overlap      [" << o.lo << ", " << o.hi << ")\n";
    if (!j["alternation"].is_null()) {
      out << "alternation  " << (j["alternation"]["alternates"].get<bool>() ? "yes" : "NO") << "\n";
    }
    out << (cov.exact_cover ? "PASS" : "FAIL") << "\n";
  }
  return cov.exact_cover ? kExitOk : kExitCheckFailed;
}

struct ParsevalArgs {
  RegionArgs region;
  std::string lambda = "1/3";
  std::int64_t K = 1000;
  std::int64_t p = 1;
  std::string which = "auto";
  CLI::Option* p_opt = nullptr;
};

int cmd_verify_parseval(const ParsevalArgs& args, std::ostream& out) {
  ArgParser parser(args.region.rationalize);
  const auto [region, map] = parse_region(args.region, parser);
  const Rational lambda = parser.rational(args.lambda, "--lambda");
  const std::int64_t K = positive(args.K, "--K");
  const Classification c = classify_region(region);
  if (!c.admits_any()) {
    throw UsageError("arguments i1_lo..i2_hi: region is not spectral, there is no spectrum to test");
  }
  const CaseSelector which = pick_case(args.which, args.p_opt && args.p_opt->count() > 0, c);
  const SpectrumSpec spec = spectrum_for(region, which, args.p);
  const ParsevalReport rep = parseval_sum(region, spec, lambda, K);
  const bool pass = rep.defect <= rep.tail_bound;

  Json j = envelope("verify parseval", parser);
  j["region"] = to_json(region);
  j["spectrum"] = to_json(spec);
  j["lambda"] = to_json(lambda);
  j["report"] = to_json(rep);
  if (args.region.json) {
    out << serialize(j);
  } else {
    out << "region       " << region_line(region) << "\n"
        << "spectrum     " << j["spectrum"]["description"].get<std::string>() << "\n"
        << "partial sum  " << std::setprecision(15) << rep.partial_sum << " (target " << rep.target << ")\n"
        << "defect       " << fmt(rep.defect) << ", tail bound " << fmt(rep.tail_bound) << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

struct STildeArgs {
  std::string beta;
  std::int64_t K = 1000;
  bool json = false;
};

int cmd_verify_stilde(const STildeArgs& args, std::ostream& out) {
  ArgParser parser(false);
  const double beta = parser.real(args.beta, "--beta");
  if (!(beta > 0.0 && beta < 1.0)) throw UsageError("argument --beta: must lie strictly between 0 and 1");
  if (args.K < 0) throw UsageError("argument --K: must be non-negative");
  const STildeResult res = s_tilde_partial(beta, args.K);
  const bool pass = std::abs(res.partial - 1.0) <= res.tail_bound;

  Json j = envelope("verify stilde", parser);
  j["beta"] = beta;
  j["K"] = args.K;
  j["result"] = to_json(res);
  if (args.json) {
    out << serialize(j);
  } else {
    out << "beta         " << fmt(beta) << ", K = " << args.K << "\n"
        << "partial      " << std::setprecision(15) << res.partial << "\n"
        << "|partial-1|  " << fmt(std::abs(res.partial - 1.0)) << ", tail bound " << fmt(res.tail_bound) << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral-set and tiling analysis for unions of two intervals", "biinterval"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Classify a region and construct and check its spectrum and tiling");
  add_region_args(a, analyze.region);
  a->add_option("--K", analyze.K, "Parseval truncation")->capture_default_str();
  analyze.p_opt = a->add_option("--p", analyze.p, "Odd integer selecting the case (ii) spectrum");
  a->add_option("--case", analyze.which, "auto, i or ii")->capture_default_str();
  a->add_option("--window", analyze.window, "Coverage window [0, W); default 10 periods");
  a->add_option("--lambda", analyze.lambda, "Frequency of the Parseval test function")->capture_default_str();
  a->add_option("--gram-bound", analyze.gram_bound, "Gram matrix over frequencies in [-B, B]")->capture_default_str();

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Classify one frequency against the zero set");
  add_region_args(c, classify.region);
  c->add_option("--lambda", classify.lambda, "Frequency")->required();

  auto* v = app.add_subcommand("verify", "Run one verification; exit 1 if it fails");
  v->require_subcommand(1);

  ZerosArgs zeros;
  auto* vz = v->add_subcommand("zeros", "Reconcile a grid scan of |FT| with the exact zero set");
  add_region_args(vz, zeros.region);
  vz->add_option("--window", zeros.window, "lo hi")->expected(2)->capture_default_str();
  vz->add_option("--step", zeros.step, "Grid step")->capture_default_str();
  vz->add_option("--threshold", zeros.threshold, "Modulus threshold")->capture_default_str();
  vz->add_option("--denominator-bound", zeros.denominator_bound, "Largest predicted denominator")
      ->capture_default_str();

  TilingArgs tiling;
  auto* vt = v->add_subcommand("tiling", "Exact coverage check of a periodic translation set");
  add_region_args(vt, tiling.region);
  vt->add_option("--period", tiling.period, "Period P")->required();
  vt->add_option("--residues", tiling.residues, "Residues mod P")->required();
  vt->add_option("--window", tiling.window, "lo hi; default [0, 10P)")->expected(2);

  ParsevalArgs parseval;
  auto* vp = v->add_subcommand("parseval", "Parseval sum against the constructed spectrum");
  add_region_args(vp, parseval.region);
  vp->add_option("--lambda", parseval.lambda, "Test frequency")->capture_default_str();
  vp->add_option("--K", parseval.K, "Truncation")->capture_default_str();
  parseval.p_opt = vp->add_option("--p", parseval.p, "Odd integer for case (ii)");
  vp->add_option("--case", parseval.which, "auto, i or ii")->capture_default_str();

  STildeArgs stilde;
  auto* vs = v->add_subcommand("stilde", "Partial sums of the universal series, which equals 1 on (0, 1)");
  vs->add_option("--beta", stilde.beta, "beta in (0, 1)")->required();
  vs->add_option("--K", stilde.K, "Truncation")->capture_default_str();
  vs->add_flag("--json", stilde.json, "Emit JSON instead of text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, out);
    if (c->parsed()) return cmd_classify(classify, out);
    if (vz->parsed()) return cmd_verify_zeros(zeros, out);
    if (vt->parsed()) return cmd_verify_tiling(tiling, out);
    if (vp->parsed()) return cmd_verify_parseval(parseval, out);
    if (vs->parsed()) return cmd_verify_stilde(stilde, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace biinterval::cli
