#pragma once

#include <string>
#include <vector>

#include "selt/json_io.hpp"
#include "selt/partition.hpp"

// Exhaustive verification sweeps shared by the CLI and the test suites.

namespace selt {

enum class CaseStatus {
  kPass,
  kFail,
  /// A disagreement on an open conjecture: recorded, never an error.
  kReported,
};

std::string status_name(CaseStatus s);

struct CaseResult {
  Json input;
  Json expected;
  Json actual;
  CaseStatus status = CaseStatus::kPass;
  std::string detail;
};

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  std::vector<CaseResult> results;
  double elapsed_seconds = 0;

  std::size_t count(CaseStatus s) const;
  bool has_failures() const { return count(CaseStatus::kFail) > 0; }
  /// Timing is the only nondeterministic field; leave it out to compare runs.
  Json to_json(bool include_timing = true) const;
};

struct SuiteOptions {
  int max_n = 4;
  int max_weight = 7;
  /// Vanishing sweep: how far |mu| may exceed |rho_{n,m}|.
  int excess = 2;
  int jobs = 1;
};

/// count_d(lambda, (p), lambda) against binom(l(lambda), p) 2^{p-1} for every
/// lambda in rho_{max_n} and 1 <= p <= l(lambda).
RunReport run_pieri(const SuiteOptions& o);

/// Brute-force count_d(rho_n, rho_{n,m}, rho_n), count_d_staircase(n, m) and
/// 2^{binom(n,2) - binom(n-m,2)} for 0 <= m <= n <= max_n.
RunReport run_staircase(const SuiteOptions& o);

/// count_d(rho_n, mu, rho_n) = frak_d(rho_n, mu, rho_n) = 0 for every mu in
/// vanishing_mus(n, m), n <= max_n.
RunReport run_vanishing(const SuiteOptions& o);

/// Over all of Tab(rho_n/rho_n, |rho_{n,m}|): good and slidable iff Rect is
/// S_{rho_{n,m}}, and no bad tableau rectifies to it.
RunReport run_equivalence(const SuiteOptions& o);

/// frak_d(lambda, mu, lambda) against the excited-diagram count for
/// |lambda| + |mu| <= max_weight.
RunReport run_lemma_localization(const SuiteOptions& o);

/// frak_d against count_d for every triple with |lambda| + |mu| <= max_weight
/// and |nu| <= |lambda| + |mu|. Mismatches are reported, except on
/// theorem-backed triples, where they fail.
RunReport run_conjecture(const SuiteOptions& o);

/// Dispatches on "pieri", "staircase", "vanishing", "equivalence",
/// "lemma-loc" or "conjecture". Throws InvalidArgument otherwise.
RunReport run_suite(const std::string& name, const SuiteOptions& o);

/// Strict mu with l(mu) = m, rho_{n,m} strictly inside mu and
/// |mu| <= |rho_{n,m}| + excess.
std::vector<StrictPartition> vanishing_mus(int n, int m, int excess);

/// Triples whose equality frak_d = d is a theorem (Pieri for lambda in
/// rho_4, the staircase formula and its vanishing case for n <= 4).
bool is_theorem_case(const StrictPartition& lambda, const StrictPartition& mu,
                     const StrictPartition& nu);

}  // namespace selt
