#include "redwords/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "redwords/counting.hpp"
#include "redwords/errors.hpp"
#include "redwords/expectations.hpp"
#include "redwords/permutation.hpp"
#include "redwords/tableaux.hpp"
#include "redwords/verify.hpp"

namespace redwords::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw UsageError(std::string(what) + " = " + std::to_string(value) + " outside legal range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

int cmd_count(int n, std::ostream& out, std::ostream& err) {
  require_range("--n", n, 2, kCountMaxN);
  const BigInt dp = count_words(longest_element(n));
  const BigInt hooks = hook_length_count(staircase(n));
  out << dp.get_str() << '\n' << "hook-length formula: " << hooks.get_str() << '\n';
  if (dp != hooks) {
    err << "error: memoized count " << dp.get_str() << " disagrees with hook-length count " << hooks.get_str()
        << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

int cmd_expect(int n, const std::string& method_name, std::ostream& out) {
  const auto method = parse_method(method_name);
  if (!method) throw UsageError("--method must be closed, dp or enumerate");
  if (n < 2) throw UsageError("--n must be at least 2");
  switch (*method) {
    case Method::enumeration:
      if (n > kEnumerationMaxN) {
        throw ResourceCapExceeded("enumerate supports 2 <= n <= " + std::to_string(kEnumerationMaxN));
      }
      break;
    case Method::dp:
      if (n < 3) throw UsageError("dp needs n >= 3");
      if (n > kDpMaxN) throw ResourceCapExceeded("dp supports 3 <= n <= " + std::to_string(kDpMaxN));
      break;
    case Method::closed_form:
      break;
  }

  const ExpectationReport rep = expectation_report(n, *method);
  out << "n: " << n << '\n' << "method: " << to_string(rep.method) << '\n';
  if (rep.e_commutations) {
    out << "E(commutations): " << to_string(*rep.e_commutations) << '\n';
  } else {
    out << "E(commutations): (float only above n = " << kExactClosedFormMaxN << ")\n";
  }
  out << "E(commutations) float: " << fmt17(rep.float_value) << '\n';
  if (rep.e_noncommuting) out << "E(noncommuting pairs): " << to_string(*rep.e_noncommuting) << '\n';
  out << "E(noncommuting pairs) float: " << fmt17(rep.noncommuting_float) << '\n';
  out << "E(long braid moves): " << to_string(rep.e_braids_reference) << '\n';
  return kSuccess;
}

int cmd_sample(int n, std::uint64_t trials, std::uint64_t seed, unsigned jobs, std::ostream& out) {
  if (trials < 1) throw UsageError("--trials must be at least 1");
  if (n < 2) throw UsageError("--n must be at least 2");
  if (n > kCountMaxN) throw ResourceCapExceeded("sample supports 2 <= n <= " + std::to_string(kCountMaxN));
  out << sample_json(monte_carlo(n, trials, seed, jobs)) << '\n';
  return kSuccess;
}

int cmd_table(int from, int to, const std::string& format, const std::string& path, std::ostream& out,
              std::ostream& err) {
  if (from < 3 || to < from) throw UsageError("table needs 3 <= --from <= --to");
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  std::vector<TableRow> rows;
  for (int n = from; n <= to; ++n) rows.push_back(make_table_row(n));

  std::ofstream file;
  std::ostream* sink = &out;
  if (!path.empty()) {
    file.open(path);
    if (!file) {
      err << "error: cannot open " << path << " for writing\n";
      return kUsageError;
    }
    sink = &file;
  }
  if (format == "csv") {
    write_csv(rows, *sink);
  } else {
    write_json(rows, *sink);
  }
  sink->flush();
  if (!*sink) {
    err << "error: write failed" << (path.empty() ? "" : " for " + path) << '\n';
    return kUsageError;
  }
  return kSuccess;
}

int cmd_asymptotics(int from, int to, std::ostream& out) {
  if (from < 3 || to < from) throw UsageError("asymptotics needs 3 <= --from <= --to");
  out << "n,noncomm_float,noncomm_per_n,slope,asymp_noncomm,prop_commutations,prop_noncomm_expected,"
         "prop_noncomm_leading,prop_braids_expected,prop_braids_leading\n";
  for (int n = from; n <= to; ++n) {
    const double ell = 0.5 * n * (n - 1.0);
    const double noncomm = expected_noncommuting_float(n);
    const Proportions p = proportions(n);
    out << n << ',' << fmt17(noncomm) << ',' << fmt17(noncomm / n) << ',' << fmt17(kNoncommutingSlope) << ','
        << fmt17(asymptotic_noncommuting(n)) << ',' << fmt17(p.commutations) << ',' << fmt17(noncomm / ell)
        << ',' << fmt17(p.noncommuting) << ',' << (n >= 3 ? fmt17(1.0 / (ell - 2.0)) : "") << ','
        << fmt17(p.braids) << '\n';
  }
  return kSuccess;
}

int cmd_verify(int max_n, std::ostream& out) {
  require_range("--max-n", max_n, 3, 10);
  VerifyOptions options;
  options.max_n = max_n;
  const auto results = run_verification(options, out);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  out << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed ? kVerificationFailure : kSuccess;
}

}  // namespace

TableRow make_table_row(int n) {
  TableRow row;
  row.n = n;
  if (n <= kTableExactMaxN) {
    row.word_count = hook_length_count(staircase(n)).get_str();
    const Rational ec = expected_commutations(n);
    row.ec_num = ec.get_num().get_str();
    row.ec_den = ec.get_den().get_str();
  }
  row.ec_float = expected_commutations_float(n);
  row.noncomm_float = expected_noncommuting_float(n);
  row.asymp_noncomm_float = asymptotic_noncommuting(n);
  return row;
}

void write_csv(const std::vector<TableRow>& rows, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.word_count.value_or("") << ',' << r.ec_num.value_or("") << ','
       << r.ec_den.value_or("") << ',' << fmt17(r.ec_float) << ',' << fmt17(r.noncomm_float) << ','
       << fmt17(r.asymp_noncomm_float) << '\n';
  }
}

void write_json(const std::vector<TableRow>& rows, std::ostream& os) {
  auto opt = [](const std::optional<std::string>& s) -> ordered_json {
    if (s) return *s;
    return nullptr;
  };
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"word_count", opt(r.word_count)},
                   {"e_commutations_num", opt(r.ec_num)},
                   {"e_commutations_den", opt(r.ec_den)},
                   {"e_commutations_float", json_number(r.ec_float)},
                   {"e_noncommuting_float", json_number(r.noncomm_float)},
                   {"asymptotic_noncommuting_float", json_number(r.asymp_noncomm_float)},
                   {"braid_expectation", r.braid_expectation}});
  }
  os << arr.dump(2) << '\n';
}

std::string sample_json(const SampleSummary& s) {
  ordered_json j;
  j["n"] = s.n;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["mean_commutations"] = json_number(s.mean_commutations);
  j["se_commutations"] = json_number(s.se_commutations);
  j["mean_noncommuting"] = json_number(s.mean_noncommuting);
  j["se_noncommuting"] = json_number(s.se_noncommuting);
  j["mean_braids"] = json_number(s.mean_braids);
  j["se_braids"] = json_number(s.se_braids);
  j["word_length"] = s.word_length;
  return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistics of reduced words for the longest permutation"};
  app.require_subcommand(1);
  app.footer("Caps: enumerate n <= " + std::to_string(kEnumerationMaxN) + ", dp n <= " + std::to_string(kDpMaxN) +
             ", count/sample n <= " + std::to_string(kCountMaxN) + ", exact closed form n <= " +
             std::to_string(kExactClosedFormMaxN) + " (log-space floats above), exact table fields n <= " +
             std::to_string(kTableExactMaxN) +
             ".\nExit codes: 0 success, 1 verification failure, 2 usage error, 3 resource-cap refusal.");

  int n = 0;
  std::string method = "closed";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  int from = 3;
  int to = 10;
  std::string format = "csv";
  std::string out_path;
  int max_n = 6;

  auto* count = app.add_subcommand("count", "Number of reduced words of w0, by recursion and by hook lengths");
  count->add_option("--n", n, "Degree")->required();

  auto* expect = app.add_subcommand("expect", "Expected number of commutations in a reduced word of w0");
  expect->add_option("--n", n, "Degree")->required();
  expect->add_option("--method", method, "closed | dp | enumerate")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimates from uniformly sampled words (JSON)");
  sample->add_option("--n", n, "Degree")->required();
  sample->add_option("--trials", trials, "Number of sampled words")->capture_default_str();
  sample->add_option("--seed", seed, "Seed; the only source of randomness")->required();
  sample->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();

  auto* table = app.add_subcommand("table", "Exact and floating expectations for a range of n");
  table->add_option("--from", from, "First n")->required();
  table->add_option("--to", to, "Last n")->required();
  table->add_option("--format", format, "csv | json")->capture_default_str();
  table->add_option("--out", out_path, "Output file (default stdout)");

  auto* asymptotics = app.add_subcommand("asymptotics", "Leading-order estimates next to the exact sums");
  asymptotics->add_option("--n", n, "Single degree (overrides --from/--to)");
  asymptotics->add_option("--from", from, "First n")->capture_default_str();
  asymptotics->add_option("--to", to, "Last n")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("--max-n", max_n, "Largest degree to check (3..10)")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*count) return cmd_count(n, out, err);
    if (*expect) return cmd_expect(n, method, out);
    if (*sample) return cmd_sample(n, trials, seed, jobs, out);
    if (*table) return cmd_table(from, to, format, out_path, out, err);
    if (*asymptotics) {
      if (asymptotics->count("--n")) from = to = n;
      return cmd_asymptotics(from, to, out);
    }
    if (*verify) return cmd_verify(max_n, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceCapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace redwords::cli
