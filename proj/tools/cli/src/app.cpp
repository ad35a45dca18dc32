#include "catspec_cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "catspec/errors.hpp"
#include "catspec/random_specs.hpp"
#include "catspec_cli/parse.hpp"
#include "catspec_cli/records.hpp"
#include "catspec_cli/verify.hpp"

namespace catspec::cli {

namespace {

struct Options {
  std::string format = "text";
  double tol = 1e-8;
  std::uint64_t seed = 7;
  std::string q;
  std::string of = "C";
  std::size_t random = 0;
  std::size_t kmax = 8;
  std::size_t qmax = 6;
  std::string input;
  std::string output;
};

template <class Record>
void emit(const Record& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Text: out << render_text(r); break;
    case Format::Json: out << json(r).dump(2) << '\n'; break;
    case Format::Csv: out << render_csv(r); break;
  }
}

int cmd_spectrum(const Options& o, Format f, std::ostream& out) {
  emit(make_spectrum_record(parse_q(o.q)), f, out);
  return kSuccess;
}

int cmd_charpoly(const Options& o, Format f, std::ostream& out) {
  if (o.of != "C" && o.of != "L") throw UsageError("--of must be C or L");
  emit(make_charpoly_record(parse_q(o.q), o.of == "C" ? PolyOf::C : PolyOf::L), f, out);
  return kSuccess;
}

CaterpillarSpec bounds_spec(const std::string& text) {
  auto spec = parse_q(text);
  if (spec.spine_length() < 2) throw UsageError("bounds need at least two spine vertices");
  return spec;
}

int cmd_bounds(const Options& o, Format f, std::ostream& out) {
  const BoundsRecord r = make_bounds_record(bounds_spec(o.q), o.tol);
  switch (f) {
    case Format::Text: out << render_text(r); break;
    case Format::Json: out << json(r).dump(2) << '\n'; break;
    case Format::Csv: out << kCsvHeader << '\n' << csv_row(r) << '\n'; break;
  }
  return r.has_violation() ? kVerificationFailed : kSuccess;
}

int cmd_verify(const Options& o, Format f, std::ostream& out) {
  std::vector<CaterpillarSpec> specs;
  if (!o.q.empty()) {
    if (o.random > 0) throw UsageError("--q and --random are exclusive");
    specs.push_back(parse_q(o.q));
  } else if (o.random > 0) {
    if (o.kmax < 1) throw UsageError("--kmax must be at least 1");
    RandomSpecOptions ro;
    ro.count = o.random;
    ro.k_max = o.kmax;
    ro.q_max = o.qmax;
    ro.seed = o.seed;
    specs = random_specs(ro);
  } else {
    throw UsageError("verify needs --q or --random");
  }
  const VerifyReport report = run_verify(specs, o.tol);
  emit(report, f, out);
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_table(const Options& o, Format f, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot open input '" + o.input + "'");
  std::vector<BoundsRecord> rows;
  for (const auto& entry : read_batch(in)) {
    if (!entry.spec) {
      err << o.input << ':' << entry.line << ": skipped: " << entry.error << '\n';
      continue;
    }
    if (entry.spec->spine_length() < 2) {
      err << o.input << ':' << entry.line << ": skipped: bounds need at least two spine vertices\n";
      continue;
    }
    rows.push_back(make_bounds_record(*entry.spec, o.tol));
  }

  std::ostringstream body;
  switch (f) {
    case Format::Text: body << text_table(rows); break;
    case Format::Json: body << json(rows).dump(2) << '\n'; break;
    case Format::Csv:
      body << kCsvHeader << '\n';
      for (const auto& r : rows) body << csv_row(r) << '\n';
      break;
  }
  if (o.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(o.output);
    if (!file || !(file << body.str())) throw UsageError("cannot write output '" + o.output + "'");
  }
  const bool violated = std::any_of(rows.begin(), rows.end(), [](const BoundsRecord& r) { return r.has_violation(); });
  return violated ? kVerificationFailed : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectra, characteristic polynomials and algebraic connectivity bounds of caterpillars", "catspec"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol", o.tol, "Absolute tolerance for oracle comparisons")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for random specs");

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian and line-graph spectra with multiplicities");
  spectrum->add_option("--q", o.q, "Leg counts, e.g. 4,9,0,1")->required();
  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial coefficients, ascending");
  charpoly->add_option("--q", o.q, "Leg counts")->required();
  charpoly->add_option("--of", o.of, "C: det(C - xI); L: monic det(xI - L)")->check(CLI::IsMember({"C", "L"}));
  auto* bounds = app.add_subcommand("bounds", "Algebraic connectivity and its bounds");
  bounds->add_option("--q", o.q, "Leg counts (at least two)")->required();
  auto* verify = app.add_subcommand("verify", "Check every identity and bound against the oracle");
  verify->add_option("--q", o.q, "A single spec");
  verify->add_option("--random", o.random, "Number of random specs");
  verify->add_option("--kmax", o.kmax, "Largest spine length for --random");
  verify->add_option("--qmax", o.qmax, "Largest leg count for --random");
  auto* table = app.add_subcommand("table", "Bounds table for a batch file, one spec per line");
  table->add_option("--input", o.input, "Input file")->required();
  table->add_option("--output", o.output, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'catspec --help' for usage\n";
    return kUsage;
  }

  try {
    const Format f = parse_format(o.format);
    if (spectrum->parsed()) return cmd_spectrum(o, f, out);
    if (charpoly->parsed()) return cmd_charpoly(o, f, out);
    if (bounds->parsed()) return cmd_bounds(o, f, out);
    if (verify->parsed()) return cmd_verify(o, f, out);
    return cmd_table(o, f, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::NonConvergence ? kNonConvergence : kVerificationFailed;
  }
}

}  // namespace catspec::cli
