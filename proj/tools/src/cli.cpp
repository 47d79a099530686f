#include "vsft_cli/cli.hpp"

#include <vsft/errors.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace vsft::cli {

RunOptions profile_options(const std::string& profile) {
  RunOptions o;
  if (profile.empty() || profile == "default") return o;
  if (profile == "small") {
    o.search.max_nodes = 200'000;
    o.check.products.max_products = 200'000;
    o.check.samples = 50;
    return o;
  }
  if (profile == "large") {
    o.search.max_nodes = 40'000'000;
    o.check.products.max_products = 20'000'000;
    o.check.samples = 1000;
    return o;
  }
  throw std::invalid_argument("unknown budget profile '" + profile + "' (small, default, large)");
}

namespace {

ReportLine run_one(const ClaimRecord& rec, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ReportLine line;
  line.expected = rec.claim.expect;
  try {
    const RingModel model = rec.model.resolve(opts.truncation).with_budget(opts.search, opts.degree_cap);
    line.report = run_claim(model, rec.claim, opts.check);
  } catch (const std::exception& e) {
    line.report.claim_id = rec.claim.id;
    line.report.check = rec.claim.kind;
    line.report.verdict = Verdict::PreconditionFailed;
    line.report.note = e.what();
  }
  line.as_expected = matches_expectation(rec.claim, line.report);
  line.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return line;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (!s.empty() && s[0] == '-') throw std::invalid_argument(s);
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw PreconditionViolated(std::string(what) + ": expected a non-negative integer, got '" + s + "'");
  return v;
}

BigRat to_bigrat(const Rational& r) { return BigRat(BigInt(r.num()), BigInt(r.den())); }

}  // namespace

std::vector<ReportLine> run_records(const std::vector<ClaimRecord>& records, const RunOptions& opts) {
  std::vector<ReportLine> lines(records.size());
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(records.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) lines[i] = run_one(records[i], opts);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return lines;
}

int exit_code_for(const std::vector<ReportLine>& lines) {
  bool unexpected = false;
  bool inconclusive = false;
  for (const auto& l : lines) {
    if (l.as_expected) continue;
    if (l.report.verdict == Verdict::InconclusiveAtTruncation)
      inconclusive = true;
    else
      unexpected = true;
  }
  if (unexpected) return kUnexpectedVerdict;
  if (inconclusive) return kInconclusive;
  return kAllExpected;
}

void print_lines(const std::vector<ReportLine>& lines, const RunOptions& opts, std::ostream& out) {
  for (const auto& l : lines) {
    if (opts.format == Format::Machine)
      out << to_machine_line(l, opts.timing) << "\n";
    else
      out << to_text(l);
  }
}

int cmd_verify(const std::filesystem::path& claim_file, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<ClaimRecord> records;
  try {
    records = parse_claim_file(read_text_file(claim_file), claim_file.parent_path());
  } catch (const std::exception& e) {
    err << "error: " << claim_file.string() << ": " << e.what() << "\n";
    return kInputError;
  }
  const auto lines = run_records(records, opts);
  print_lines(lines, opts, out);
  return exit_code_for(lines);
}

int cmd_example(const std::string& name, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names{name};
  if (name == "rational_valuation") names.push_back("valuation_overring");
  std::vector<ClaimRecord> records;
  try {
    for (const auto& n : names) {
      ModelSpec spec;
      spec.catalog = n;
      const RingModel m = spec.resolve(opts.truncation);
      spec.params = m.params;
      if (opts.format == Format::Text) {
        out << "# " << n << " (characteristic " << m.characteristic().value();
        for (const auto& [k, v] : m.params) out << ", " << k << "=" << v;
        out << ")\n";
      }
      for (auto& c : catalog_claims(m)) records.push_back({spec, std::move(c)});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const auto lines = run_records(records, opts);
  print_lines(lines, opts, out);
  return exit_code_for(lines);
}

int cmd_nt(const std::string& sub, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    auto need = [&](std::size_t n, const char* usage) {
      if (args.size() < n) throw PreconditionViolated(std::string("usage: nt ") + usage);
    };
    if (sub == "legendre") {
      need(2, "legendre <x> <p>");
      const Rational x = Rational::parse(args[0]);
      const auto p = parse_u64(args[1], "p");
      out << "f_" << p << "(" << x.to_string() << ") = " << legendre(to_bigrat(x), p) << "\n";
      return 0;
    }
    if (sub == "multinomial") {
      need(1, "multinomial <total> <k1> [k2 ...]");
      std::vector<std::uint64_t> ks;
      for (std::size_t i = 1; i < args.size(); ++i) ks.push_back(parse_u64(args[i], "part"));
      out << multinomial(parse_u64(args[0], "total"), ks).str() << "\n";
      return 0;
    }
    if (sub == "floor") {
      need(4, "floor <N> <M> <p> <a1> [a2 ...]");
      std::vector<BigRat> parts;
      for (std::size_t i = 3; i < args.size(); ++i) parts.push_back(to_bigrat(Rational::parse(args[i])));
      const auto r = check_floor_inequality(to_bigrat(Rational::parse(args[0])), to_bigrat(Rational::parse(args[1])),
                                            parts, parse_u64(args[2], "p"));
      out << (r.holds ? "holds" : "fails") << ": f_p(NM) = " << r.lhs << ", f_p(N) + sum f_p(a_i) = " << r.rhs << "\n";
      return r.holds ? 0 : 1;
    }
    if (sub == "ala") {
      need(3, "ala <N> <M> <k1> [k2 ...]");
      std::vector<std::uint64_t> ks;
      for (std::size_t i = 2; i < args.size(); ++i) ks.push_back(parse_u64(args[i], "k"));
      const auto r = check_ala(parse_u64(args[0], "N"), parse_u64(args[1], "M"), ks);
      out << "multinomial = " << r.multinomial_value.str() << ", N! = " << r.factorial_value.str() << "\n"
          << "divides (big integer): " << (r.divides_bigint ? "yes" : "no") << "\n"
          << "divides (valuations):  " << (r.divides_valuation ? "yes" : "no") << "\n";
      return r.holds() ? 0 : 1;
    }
    if (sub == "ala-search") {
      need(1, "ala-search <maxN>");
      const auto found = search_ala_counterexamples(parse_u64(args[0], "maxN"));
      for (const auto& c : found) {
        out << "N=" << c.n << " M=" << c.m << " ks=[";
        for (std::size_t i = 0; i < c.ks.size(); ++i) out << (i ? "," : "") << c.ks[i];
        out << "]\n";
      }
      out << found.size() << " cases where N! fails to divide once M >= max k is dropped\n";
      return 0;
    }
    err << "error: unknown nt subcommand '" << sub << "' (legendre, floor, ala, ala-search, multinomial)\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_export(const std::string& name, const RunOptions& opts, bool claims, std::ostream& out, std::ostream& err) {
  try {
    if (name == "all") {
      if (!claims) throw PreconditionViolated("'all' exports the claim suite; add --claims");
      out << export_claims(catalog_suite());
      return 0;
    }
    ModelSpec spec;
    spec.catalog = name;
    const RingModel m = spec.resolve(opts.truncation);
    if (!claims) {
      out << export_model(m);
      return 0;
    }
    spec.params = m.params;
    std::vector<ClaimRecord> records;
    for (auto& c : catalog_claims(m)) records.push_back({spec, std::move(c)});
    out << export_claims(records);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunOptions opts;
  try {
    const char* env = std::getenv("VSFT_BUDGET_PROFILE");
    opts = profile_options(env ? env : "");
  } catch (const std::exception& e) {
    err << "error: VSFT_BUDGET_PROFILE: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App app{"Check SFT and VSFT data on truncated ring models"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", opts.check.seed, "Base seed for sampled checks");
  app.add_option("--budget-nodes", opts.search.max_nodes, "Node cap per monoid membership search");
  app.add_option("--budget-products", opts.check.products.max_products, "Cap on enumerated generator products");
  app.add_option("--budget-samples", opts.check.samples, "Samples for sampled checks");
  std::string degree_cap;
  app.add_option("--budget-degree", degree_cap, "Degree cap for element arithmetic (0: none)");
  app.add_option("--jobs", opts.jobs, "Worker threads (0: all cores)");
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit wall times from machine output");
  std::map<std::string, std::int64_t> trunc_values;
  for (const char* key : {"p", "v", "M", "D", "nmax", "denBound"}) {
    app.add_option_function<std::int64_t>(
        std::string("--truncation-") + key + ",--" + key,
        [&trunc_values, key](std::int64_t v) { trunc_values[key] = v; },
        std::string("Override catalog parameter ") + key);
  }

  // Subcommands inherit this: global flags may follow the subcommand name.
  app.fallthrough();

  auto* verify = app.add_subcommand("verify", "Run every claim in a claim file");
  std::string claim_file;
  verify->add_option("file", claim_file, "Claim file")->required();

  auto* example = app.add_subcommand("example", "Replay a catalog example");
  std::string example_name;
  example->add_option("name", example_name, "Catalog name")->required();

  auto* nt = app.add_subcommand("nt", "Number-theory helpers");
  std::string nt_sub;
  std::vector<std::string> nt_args;
  nt->add_option("sub", nt_sub, "legendre | floor | ala | ala-search | multinomial")->required();
  nt->add_option("args", nt_args, "Arguments");

  auto* exp = app.add_subcommand("export", "Print a catalog model or its claims");
  std::string export_name;
  bool export_claims_flag = false;
  exp->add_option("model", export_name, "Catalog name, or 'all' with --claims")->required();
  exp->add_flag("--claims", export_claims_flag, "Export the claim file instead of the model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  opts.format = format == "machine" ? Format::Machine : Format::Text;
  opts.timing = !no_timing;
  opts.truncation = trunc_values;
  if (!degree_cap.empty()) {
    try {
      const Rational cap = Rational::parse(degree_cap);
      if (cap.sign() > 0) opts.degree_cap = cap;
    } catch (const std::exception& e) {
      err << "error: --budget-degree: " << e.what() << "\n";
      return kInputError;
    }
  }

  if (*verify) return cmd_verify(claim_file, opts, out, err);
  if (*example) return cmd_example(example_name, opts, out, err);
  if (*nt) return cmd_nt(nt_sub, nt_args, out, err);
  if (*exp) return cmd_export(export_name, opts, export_claims_flag, out, err);
  return kInputError;
}

}  // namespace vsft::cli
