// Command-line front end: dominance verdicts, unit-circle stability reports,
// root-location bounds, exhaustive census tables, batch processing and
// reproducible random-input generation.
//
// Exit codes: 0 success (verdicts, including "not dominant", are success),
//             2 unusable input (bad flags or unparsable polynomial),
//             3 resource refusal (census above the slot cap without
//               --allow-large, or oracle precision cap exhausted).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dompoly/bistritz.hpp"
#include "dompoly/bounds.hpp"
#include "dompoly/census.hpp"
#include "dompoly/dominance.hpp"
#include "dompoly/factor.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/randgen.hpp"
#include "oracle.hpp"

#ifndef DOMPOLY_VERSION
#define DOMPOLY_VERSION "dev"
#endif

namespace {

using njson = nlohmann::ordered_json;
using namespace dompoly;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

// Census runs above this many enumeration slots need --allow-large.
constexpr long kSlotCap = 1'000'000'000L;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

njson annulus_json(const std::optional<Annulus>& a) {
  if (!a) return nullptr;
  return njson{{"r", rat_str(a->r)}, {"R", rat_str(a->R)}, {"side", a->side}};
}

std::string annulus_text(const Annulus& a) {
  return rat_str(a.r) + " < |x| < " + rat_str(a.R) +
         (a.side > 0 ? "  (positive real axis)" : "  (negative real axis)");
}

// --- engine dispatch ---------------------------------------------------------

struct EngineChoice {
  std::string algorithm = "auto";  // auto | simple | efficient | irreducible
  bool use_filters = true;
};

DecideResult run_engine(const IntPoly& f, const EngineChoice& choice) {
  if (choice.algorithm == "auto") {
    DecideOptions opts;
    opts.use_filters = choice.use_filters;
    return decide_dominant(f, opts);
  }
  // The search algorithms need a nonzero constant term; zero roots never have
  // maximal modulus once any other root exists, so the verdict transfers.
  auto [g, zeros] = strip_zero_roots(f);
  (void)zeros;
  if (g.degree() < 2) {
    throw std::invalid_argument(
        "--algorithm " + choice.algorithm +
        ": input must keep degree >= 2 after zero roots are stripped"
        " (use the automatic dispatch for degenerate cases)");
  }
  if (choice.algorithm == "simple") return test_dominant_simple(g);
  if (choice.algorithm == "efficient") return test_dominant_efficient(g);
  if (!is_irreducible(g)) {
    throw std::invalid_argument(
        "--algorithm irreducible: input is reducible over the rationals");
  }
  return test_dominant_irreducible(g);
}

// --- test ---------------------------------------------------------------------

struct TestArgs {
  std::string poly;
  EngineChoice choice;
  bool with_oracle = false;
  bool as_json = false;
};

int run_test(const TestArgs& a) {
  const IntPoly f = parse_poly(a.poly);
  Timer timer;
  const DecideResult result = run_engine(f, a.choice);
  const double elapsed = timer.ms();

  std::optional<bool> oracle_verdict;
  std::string oracle_error;
  if (a.with_oracle) {
    try {
      oracle_verdict = oracle::oracle_dominant(f);
    } catch (const oracle::OracleFailure& e) {
      oracle_error = e.what();
    }
  }

  const std::string verdict = result.dominant ? "dominant" : "not_dominant";
  if (a.as_json) {
    njson rec{{"input", render_poly(f)},
              {"verdict", verdict},
              {"method", result.method},
              {"annulus", annulus_json(result.annulus)},
              {"elapsed_ms", round3(elapsed)}};
    if (a.with_oracle) {
      if (oracle_verdict) {
        rec["oracle_verdict"] = *oracle_verdict ? "dominant" : "not_dominant";
        rec["oracle_agrees"] = (*oracle_verdict == result.dominant);
      } else {
        rec["oracle_verdict"] = nullptr;
        rec["oracle_error"] = oracle_error;
      }
    }
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << "input:    " << render_poly(f) << '\n'
              << "verdict:  " << (result.dominant ? "dominant" : "not dominant")
              << '\n'
              << "method:   " << result.method << '\n';
    if (result.annulus)
      std::cout << "annulus:  " << annulus_text(*result.annulus) << '\n';
    if (a.with_oracle) {
      if (oracle_verdict) {
        std::cout << "oracle:   "
                  << (*oracle_verdict ? "dominant" : "not dominant")
                  << (*oracle_verdict == result.dominant ? "  (agrees)"
                                                         : "  (DISAGREES)")
                  << '\n';
      } else {
        std::cout << "oracle:   failed: " << oracle_error << '\n';
      }
    }
    std::cout << "elapsed:  " << std::fixed << std::setprecision(1) << elapsed
              << " ms\n";
  }
  if (a.with_oracle && !oracle_verdict) return kExitResource;
  return kExitOk;
}

// --- stability -----------------------------------------------------------------

int run_stability(const std::string& poly, bool as_json) {
  const IntPoly f = parse_poly(poly);
  const StabilityReport rep = analyze_stability(f);

  const char* kind = nullptr;
  const char* detail = "";
  switch (rep.kind) {
    case StabilityReport::Kind::Stable:
      kind = "stable";
      detail = "all roots strictly inside the unit circle";
      break;
    case StabilityReport::Kind::Unstable:
      kind = "unstable";
      detail = "some roots strictly outside the unit circle";
      break;
    case StabilityReport::Kind::FirstTypeSingular:
      kind = "first_type_singular";
      detail = "a root on the unit circle or a reciprocal root pair";
      break;
    case StabilityReport::Kind::OnePointFail:
      kind = "one_point_fail";
      detail = "1 is a root";
      break;
  }

  if (as_json) {
    njson rec{{"input", render_poly(f)},
              {"kind", kind},
              {"stable", rep.is_stable()},
              {"roots_outside",
               rep.roots_outside ? njson(*rep.roots_outside) : njson(nullptr)},
              {"normal", rep.normal},
              {"patches", rep.patches}};
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << "input:    " << render_poly(f) << '\n'
              << "kind:     " << kind << "  (" << detail << ")\n"
              << "stable:   " << (rep.is_stable() ? "yes" : "no") << '\n';
    if (rep.roots_outside)
      std::cout << "outside:  " << *rep.roots_outside << '\n';
    else
      std::cout << "outside:  not countable for this input\n";
    std::cout << "normal:   " << (rep.normal ? "yes" : "no") << '\n'
              << "patches:  " << rep.patches << '\n';
  }
  return kExitOk;
}

// --- bounds ---------------------------------------------------------------------

int run_bounds(const std::string& poly, bool as_json) {
  const IntPoly f = parse_poly(poly);
  if (f.degree() < 2)
    throw std::invalid_argument("bounds: degree must be >= 2");
  if (sign_of(f.constant()) == 0)
    throw std::invalid_argument(
        "bounds: constant term is zero (0 is a root, the inner radius is "
        "undefined); strip zero roots first");

  const int n = f.degree();
  const Int h = f.height();
  const BoundSet b = bounds_for(f);
  const Rat real_gap = real_modulus_gap(n, h);
  const std::optional<Rat> complex_gap =
      n >= 4 ? std::optional<Rat>(complex_modulus_gap(n, h)) : std::nullopt;
  const MahlerUpper mahler = mahler_upper(f);

  if (as_json) {
    njson rec{{"input", render_poly(f)},
              {"degree", n},
              {"height", h.get_str()},
              {"c1", rat_str(b.c1)},
              {"c2", rat_str(b.c2)},
              {"d1", rat_str(b.d1)},
              {"d1_irreducible", b.d1_irreducible
                                     ? njson(rat_str(*b.d1_irreducible))
                                     : njson(nullptr)},
              {"d2", rat_str(b.d2)},
              {"real_modulus_gap", rat_str(real_gap)},
              {"complex_modulus_gap",
               complex_gap ? njson(rat_str(*complex_gap)) : njson(nullptr)},
              {"mahler_ceiling", mahler.ceiling.get_str()}};
    std::cout << rec.dump() << '\n';
  } else {
    std::cout
        << "input:               " << render_poly(f) << '\n'
        << "degree, height:      " << n << ", " << h.get_str() << '\n'
        << "root annulus:        " << rat_str(b.c1) << " < |z| < "
        << rat_str(b.c2) << '\n'
        << "modulus gap d1:      " << rat_str(b.d1)
        << "   (real root vs. any root of other modulus, non-real side)\n";
    if (b.d1_irreducible)
      std::cout << "d1 if irreducible:   " << rat_str(*b.d1_irreducible)
                << '\n';
    std::cout << "real-real gap:       " << rat_str(real_gap)
              << "   (moduli of two real roots)\n";
    if (complex_gap)
      std::cout << "complex-complex gap: " << rat_str(*complex_gap)
                << "   (moduli of two non-real roots)\n";
    std::cout << "root distance d2:    " << rat_str(b.d2)
              << "   (distance between distinct roots)\n"
              << "mahler ceiling:      " << mahler.ceiling.get_str()
              << "   (integer upper bound on the Mahler measure)\n";
  }
  return kExitOk;
}

// --- census ----------------------------------------------------------------------

struct CensusRow {
  std::string measure;  // M, P or Q
  int degree;
  long height;
  Int count;
  Int denominator;
};

struct CensusArgs {
  int degree = 2;
  long height = 1;
  std::string family;  // monic | general | both
  int chunks = 1;
  std::string resume;
  std::string csv;
  bool allow_large = false;
};

int run_census(const CensusArgs& a) {
  std::vector<CensusKind> kinds;
  if (a.family == "monic" || a.family == "both")
    kinds.push_back(CensusKind::Monic);
  if (a.family == "general" || a.family == "both")
    kinds.push_back(CensusKind::General);

  Int slots = 0;
  std::vector<CensusJob> jobs;
  for (CensusKind kind : kinds) {
    CensusJob job;
    job.kind = kind;
    job.degree = a.degree;
    job.height = a.height;
    job.chunks = a.chunks;
    slots += census_index_space(job);
    jobs.push_back(job);
  }
  if (!a.allow_large && slots > kSlotCap) {
    std::cerr << "census: " << slots.get_str()
              << " enumeration slots exceed the cap of " << kSlotCap
              << "; rerun with --allow-large to proceed\n";
    return kExitResource;
  }

  std::vector<CensusRow> rows;
  for (const CensusJob& job : jobs) {
    const bool monic = job.kind == CensusKind::Monic;
    const std::string label = monic ? "monic" : "general";
    std::string checkpoint = a.resume;
    if (!checkpoint.empty() && a.family == "both") checkpoint += "." + label;

    auto progress = [&](int chunk, const CensusCounts&) {
      if (job.chunks > 1)
        std::cerr << "census [" << label << "]: chunk " << (chunk + 1) << "/"
                  << job.chunks << " done\n";
    };
    const CensusReport report = census_run(job, checkpoint, progress);

    if (monic) {
      rows.push_back({"M", job.degree, job.height, report.counts.dominant,
                      report.denominator});
    } else {
      rows.push_back({"P", job.degree, job.height, report.counts.dominant,
                      report.denominator});
      rows.push_back({"Q", job.degree, job.height,
                      report.counts.dominant_irreducible, report.denominator});
    }
  }

  std::ostringstream table;
  table << "measure  n  H       D                 denominator       exact"
           "                 rounded\n";
  for (const CensusRow& r : rows) {
    const Rat exact = make_rat(r.count, r.denominator);
    table << std::left << std::setw(9) << r.measure << std::setw(3) << r.degree
          << std::setw(8) << r.height << std::setw(18) << r.count.get_str()
          << std::setw(18) << r.denominator.get_str() << std::setw(22)
          << rat_str(exact) << round4(exact) << '\n';
  }
  std::cout << table.str();

  if (!a.csv.empty()) {
    std::ofstream out(a.csv, std::ios::trunc);
    if (!out) throw std::invalid_argument("census: cannot write " + a.csv);
    out << "measure,n,H,D,denominator,exact,rounded\n";
    for (const CensusRow& r : rows) {
      const Rat exact = make_rat(r.count, r.denominator);
      out << r.measure << ',' << r.degree << ',' << r.height << ','
          << r.count.get_str() << ',' << r.denominator.get_str() << ','
          << rat_str(exact) << ',' << round4(exact) << '\n';
    }
  }
  return kExitOk;
}

// --- batch ------------------------------------------------------------------------

int run_batch(const std::string& path, const EngineChoice& choice,
              const std::string& out_path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "batch: cannot read " << path << '\n';
      return kExitParse;
    }
    in = &file;
  }
  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path, std::ios::trunc);
    if (!out_file) {
      std::cerr << "batch: cannot write " << out_path << '\n';
      return kExitParse;
    }
    out = &out_file;
  }

  std::string line;
  long line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) continue;

    njson rec{{"line", line_no}, {"input", text}};
    try {
      const IntPoly f = parse_poly(text);
      Timer timer;
      const DecideResult result = run_engine(f, choice);
      rec["verdict"] = result.dominant ? "dominant" : "not_dominant";
      rec["method"] = result.method;
      rec["annulus"] = annulus_json(result.annulus);
      rec["elapsed_ms"] = round3(timer.ms());
    } catch (const std::exception& e) {
      rec["error"] = e.what();
      std::cerr << "batch: line " << line_no << ": " << e.what() << '\n';
    }
    *out << rec.dump() << '\n';
  }
  return kExitOk;
}

// --- gen --------------------------------------------------------------------------

int run_gen(std::uint64_t seed, long count, int degree, long height) {
  RandGen rng(seed);
  for (long i = 0; i < count; ++i)
    std::cout << render_poly(rng.poly(degree, height)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dompoly: exact dominance analysis for integer polynomials.\n"
      "Polynomials are written as comma-separated integer coefficients in\n"
      "descending powers: \"1,0,-2\" is X^2 - 2."};
  app.set_version_flag("--version", std::string("dompoly ") + DOMPOLY_VERSION);
  app.require_subcommand(1);

  TestArgs test_args;
  CLI::App* test = app.add_subcommand(
      "test", "Decide whether a polynomial is dominant");
  test->add_option("poly", test_args.poly, "Polynomial, e.g. \"1,-1,-1\"")
      ->required();
  test->add_option("--algorithm", test_args.choice.algorithm,
                   "Force one search path instead of the automatic dispatch")
      ->check(CLI::IsMember({"auto", "simple", "efficient", "irreducible"}))
      ->capture_default_str();
  test->add_flag("--no-filters",
                 [&test_args](std::int64_t) { test_args.choice.use_filters = false; },
                 "Skip the constant-time coefficient filters");
  test->add_flag("--oracle", test_args.with_oracle,
                 "Cross-check against the certified numeric root finder");
  test->add_flag("--json", test_args.as_json, "Machine-readable output");

  std::string stability_poly;
  bool stability_json = false;
  CLI::App* stability = app.add_subcommand(
      "stability", "Count roots relative to the unit circle");
  stability->add_option("poly", stability_poly, "Polynomial")->required();
  stability->add_flag("--json", stability_json, "Machine-readable output");

  std::string bounds_poly;
  bool bounds_json = false;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Print certified root-location and separation bounds");
  bounds->add_option("poly", bounds_poly, "Polynomial (degree >= 2, nonzero "
                                          "constant term)")
      ->required();
  bounds->add_flag("--json", bounds_json, "Machine-readable output");

  CensusArgs census_args;
  CLI::App* census = app.add_subcommand(
      "census",
      "Exhaustively count dominant polynomials over a coefficient box");
  census->add_option("--degree", census_args.degree, "Degree n of the box")
      ->required()
      ->check(CLI::Range(2, 64));
  census->add_option("--height", census_args.height, "Height H of the box")
      ->required()
      ->check(CLI::Range(1L, 1'000'000L));
  census->add_option("--family", census_args.family,
                     "monic (measure M), general (P and Q), or both")
      ->required()
      ->check(CLI::IsMember({"monic", "general", "both"}));
  census->add_option("--chunks", census_args.chunks,
                     "Split the run into this many deterministic chunks")
      ->check(CLI::Range(1, 1'000'000))
      ->capture_default_str();
  census->add_option("--resume", census_args.resume,
                     "Checkpoint file; finished chunks are reused on restart "
                     "(with --family both, .monic/.general suffixes apply)");
  census->add_option("--csv", census_args.csv, "Also write the table as CSV");
  census->add_flag("--allow-large", census_args.allow_large,
                   "Run even above the built-in enumeration-slot cap");

  std::string batch_path;
  std::string batch_out;
  EngineChoice batch_choice;
  CLI::App* batch = app.add_subcommand(
      "batch", "Decide one polynomial per input line, JSON record per line");
  batch->add_option("input", batch_path, "Input file, or - for stdin")
      ->required();
  batch->add_option("--output", batch_out, "Write records here instead of "
                                           "stdout");
  batch->add_option("--algorithm", batch_choice.algorithm,
                    "Force one search path instead of the automatic dispatch")
      ->check(CLI::IsMember({"auto", "simple", "efficient", "irreducible"}))
      ->capture_default_str();
  batch->add_flag("--no-filters",
                  [&batch_choice](std::int64_t) { batch_choice.use_filters = false; },
                  "Skip the constant-time coefficient filters");

  std::uint64_t gen_seed = 0;
  long gen_count = 10;
  int gen_degree = 3;
  long gen_height = 10;
  CLI::App* gen = app.add_subcommand(
      "gen", "Print reproducible random polynomials, one per line");
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--count", gen_count, "How many polynomials")
      ->check(CLI::Range(1L, 100'000'000L))
      ->capture_default_str();
  gen->add_option("--degree", gen_degree, "Exact degree")
      ->check(CLI::Range(1, 10'000))
      ->capture_default_str();
  gen->add_option("--height", gen_height, "Coefficient bound")
      ->check(CLI::Range(1L, 1'000'000'000L))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints the message or the help text
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*test) return run_test(test_args);
    if (*stability) return run_stability(stability_poly, stability_json);
    if (*bounds) return run_bounds(bounds_poly, bounds_json);
    if (*census) return run_census(census_args);
    if (*batch) return run_batch(batch_path, batch_choice, batch_out);
    if (*gen) return run_gen(gen_seed, gen_count, gen_degree, gen_height);
  } catch (const PolyParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const oracle::OracleFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::runtime_error& e) {
    // Input-condition failures from the library (for example a checkpoint
    // written by a different job) are usage errors, not crashes.
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
