#pragma once

#include "qmb/equivalence.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qmb {

struct SuiteOptions {
  AlgebraConfig config;
  Rational q{1, 2};
  int cutoff = 4;
  bool symbolic = false;
  /// Worker threads; 0 means one per job up to the hardware count.
  int threads = 0;
};

/// relations, fock, embedding, equivalence, uq, all
const std::vector<std::string>& suite_groups();

struct SuiteJob {
  std::string name;
  std::function<CheckReport()> run;
};

/// Checks of one group in report order.  Each job builds its own objects.
/// Throws ConfigError for an unknown group.
std::vector<SuiteJob> suite_jobs(const std::string& group, const SuiteOptions& options);

/// Runs jobs on up to `threads` workers; results keep the job order.
std::vector<CheckReport> run_jobs(const std::vector<SuiteJob>& jobs, int threads);

std::vector<CheckReport> run_suite(const std::string& group, const SuiteOptions& options);

/// QMB_THREADS if set to a positive integer, otherwise 0.
int threads_from_env();

}  // namespace qmb
