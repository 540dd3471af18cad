#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "redwords/sampler.hpp"

namespace redwords::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

/// Largest n whose table row carries exact fields; the word count there is
/// small enough to confirm by the memoized recursion.
inline constexpr int kTableExactMaxN = 10;

/// Largest n accepted by `count` and `sample`.
inline constexpr int kCountMaxN = 10;

struct TableRow {
  int n = 0;
  std::optional<std::string> word_count;  // exact decimal strings
  std::optional<std::string> ec_num;
  std::optional<std::string> ec_den;
  double ec_float = 0;
  double noncomm_float = 0;
  double asymp_noncomm_float = 0;
  std::string braid_expectation = "1";
};

TableRow make_table_row(int n);

inline constexpr const char* kCsvHeader = "n,word_count,ec_num,ec_den,ec_float,noncomm_float,asymp_noncomm_float";

void write_csv(const std::vector<TableRow>& rows, std::ostream& os);
void write_json(const std::vector<TableRow>& rows, std::ostream& os);

/// {"n", "trials", "seed", "mean_*", "se_*", "word_length"} in that order;
/// an undefined standard error is written as null.
std::string sample_json(const SampleSummary& s);

/// Full command line, args[0] being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redwords::cli
