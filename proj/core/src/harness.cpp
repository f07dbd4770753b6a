#include "selt/harness.hpp"

#include <chrono>

#include "selt/error.hpp"
#include "selt/eyd.hpp"
#include "selt/jdt.hpp"
#include "selt/parallel.hpp"
#include "selt/ring.hpp"
#include "selt/slide_calc.hpp"

namespace selt {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

std::uint64_t staircase_formula(int n, int m) {
  return pow2(static_cast<int>(binomial(n, 2) - binomial(n - m, 2)));
}

CaseStatus verdict(bool ok) { return ok ? CaseStatus::kPass : CaseStatus::kFail; }

RunReport start(const std::string& command, const SuiteOptions& o, Json params) {
  RunReport r;
  r.command = command;
  r.parameters = std::move(params);
  r.parameters["jobs"] = o.jobs;
  return r;
}

void finish(RunReport& r, Clock::time_point t0) {
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

Json triple(const StrictPartition& l, const StrictPartition& m, const StrictPartition& n) {
  return {{"lambda", to_json(l)}, {"mu", to_json(m)}, {"nu", to_json(n)}};
}

bool is_staircase(const StrictPartition& p, int max_n) {
  return p.length() <= max_n && p == rho(p.length());
}

}  // namespace

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::kPass: return "pass";
    case CaseStatus::kFail: return "fail";
    case CaseStatus::kReported: return "reported";
  }
  return "?";
}

std::size_t RunReport::count(CaseStatus s) const {
  std::size_t c = 0;
  for (const CaseResult& r : results) c += r.status == s;
  return c;
}

Json RunReport::to_json(bool include_timing) const {
  Json rows = Json::array();
  for (const CaseResult& r : results) {
    Json row = {{"input", r.input},
                {"expected", r.expected},
                {"actual", r.actual},
                {"status", status_name(r.status)}};
    if (!r.detail.empty()) row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  Json out = {{"command", command},
              {"parameters", parameters},
              {"results", rows},
              {"summary",
               {{"pass", count(CaseStatus::kPass)},
                {"fail", count(CaseStatus::kFail)},
                {"reported", count(CaseStatus::kReported)}}}};
  if (include_timing) out["elapsed_seconds"] = elapsed_seconds;
  return out;
}

RunReport run_pieri(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  RunReport r = start("check pieri", o, {{"max_n", o.max_n}});
  for (const StrictPartition& lambda : strict_partitions_in_rho(o.max_n)) {
    for (int p = 1; p <= lambda.length(); ++p) {
      const std::uint64_t expected =
          static_cast<std::uint64_t>(binomial(lambda.length(), p)) * pow2(p - 1);
      const std::uint64_t actual = count_d(lambda, StrictPartition{p}, lambda, o.jobs);
      r.results.push_back({triple(lambda, StrictPartition{p}, lambda), expected, actual,
                           verdict(actual == expected), ""});
    }
  }
  finish(r, t0);
  return r;
}

RunReport run_staircase(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  RunReport r = start("check staircase", o, {{"max_n", o.max_n}});
  for (int n = 0; n <= o.max_n; ++n) {
    for (int m = 0; m <= n; ++m) {
      const std::uint64_t formula = staircase_formula(n, m);
      const std::uint64_t brute = count_d(rho(n), rho_nm(n, m), rho(n), o.jobs);
      const std::uint64_t slidable = count_d_staircase(n, m);
      r.results.push_back({{{"n", n}, {"m", m}},
                           formula,
                           {{"count_d", brute}, {"count_d_staircase", slidable}},
                           verdict(brute == formula && slidable == formula),
                           ""});
    }
  }
  finish(r, t0);
  return r;
}

std::vector<StrictPartition> vanishing_mus(int n, int m, int excess) {
  const StrictPartition base = rho_nm(n, m);
  std::vector<StrictPartition> out;
  for (const StrictPartition& mu : strict_partitions_up_to(base.size() + excess)) {
    if (mu.length() == m && mu != base && contains(base, mu)) out.push_back(mu);
  }
  return out;
}

RunReport run_vanishing(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  RunReport r = start("check vanishing", o, {{"max_n", o.max_n}, {"excess", o.excess}});
  for (int n = 0; n <= o.max_n; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (const StrictPartition& mu : vanishing_mus(n, m, o.excess)) {
        CaseResult c{triple(rho(n), mu, rho(n)), {{"count_d", 0}, {"frak_d", 0}}, {}, {}, ""};
        const std::uint64_t d = count_d(rho(n), mu, rho(n), o.jobs);
        try {
          const Integer fd = frak_d(rho(n), mu, rho(n));
          c.actual = {{"count_d", d}, {"frak_d", to_json(fd)}};
          c.status = verdict(d == 0 && fd == 0);
        } catch (const Error& e) {
          c.actual = {{"count_d", d}, {"frak_d", nullptr}};
          c.status = CaseStatus::kFail;
          c.detail = e.what();
        }
        r.results.push_back(std::move(c));
      }
    }
  }
  finish(r, t0);
  return r;
}

namespace {

struct EquivalenceTally {
  std::uint64_t tableaux = 0;
  std::uint64_t rectifying = 0;
  std::uint64_t good_slidable = 0;
  std::uint64_t bad = 0;
  std::uint64_t bad_rectifying = 0;
  std::uint64_t mismatches = 0;

  EquivalenceTally operator+(const EquivalenceTally& o) const {
    return {tableaux + o.tableaux,           rectifying + o.rectifying,
            good_slidable + o.good_slidable, bad + o.bad,
            bad_rectifying + o.bad_rectifying, mismatches + o.mismatches};
  }
};

}  // namespace

RunReport run_equivalence(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  RunReport r = start("check equivalence", o, {{"max_n", o.max_n}});
  for (int n = 0; n <= o.max_n; ++n) {
    for (int m = 0; m <= n; ++m) {
      const StrictPartition mu = rho_nm(n, m);
      const SkewShape shape(rho(n), rho(n));
      const EquivalenceTally t = parallel_reduce<EquivalenceTally>(
          o.jobs,
          [&](int index, int count) {
            EquivalenceTally local;
            for_each_selt(
                shape, mu.size(),
                [&](const EdgeTableau& tab) {
                  ++local.tableaux;
                  const bool rectifies = is_superstandard(rect(tab), mu);
                  const bool bad = is_bad(tab);
                  const bool predicted = !bad && is_slidable(tab);
                  local.rectifying += rectifies;
                  local.good_slidable += predicted;
                  local.bad += bad;
                  local.bad_rectifying += bad && rectifies;
                  local.mismatches += predicted != rectifies;
                },
                Shard{index, count, 3});
            return local;
          },
          [](EquivalenceTally a, EquivalenceTally b) { return a + b; });
      const std::uint64_t formula = staircase_formula(n, m);
      r.results.push_back({{{"n", n}, {"m", m}},
                           {{"mismatches", 0}, {"bad_rectifying", 0}, {"rectifying", formula}},
                           {{"tableaux", t.tableaux},
                            {"rectifying", t.rectifying},
                            {"good_slidable", t.good_slidable},
                            {"bad", t.bad},
                            {"bad_rectifying", t.bad_rectifying},
                            {"mismatches", t.mismatches}},
                           verdict(t.mismatches == 0 && t.bad_rectifying == 0 &&
                                   t.rectifying == formula),
                           ""});
    }
  }
  finish(r, t0);
  return r;
}

RunReport run_lemma_localization(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  RunReport r = start("check lemma-loc", o, {{"max_weight", o.max_weight}});
  std::vector<std::pair<StrictPartition, StrictPartition>> pairs;
  for (const StrictPartition& lambda : strict_partitions_up_to(o.max_weight)) {
    for (const StrictPartition& mu : strict_partitions_up_to(o.max_weight - lambda.size())) {
      pairs.emplace_back(lambda, mu);
    }
  }
  r.results.resize(pairs.size());
  parallel_for(o.jobs, pairs.size(), [&](std::size_t i) {
    const auto& [lambda, mu] = pairs[i];
    CaseResult& c = r.results[i];
    c.input = {{"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
    const std::uint64_t expected = frakd_localization(lambda, mu);
    c.expected = expected;
    try {
      const Integer actual = frak_d(lambda, mu, lambda);
      c.actual = to_json(actual);
      c.status = verdict(actual == expected);
    } catch (const Error& e) {
      c.actual = nullptr;
      c.status = CaseStatus::kFail;
      c.detail = e.what();
    }
  });
  finish(r, t0);
  return r;
}

bool is_theorem_case(const StrictPartition& lambda, const StrictPartition& mu,
                     const StrictPartition& nu) {
  if (nu != lambda) return false;
  const int len = lambda.length();
  if (contains(lambda, rho(4)) && mu.length() == 1 && mu.part(1) <= len) return true;
  if (!is_staircase(lambda, 4)) return false;
  const int m = mu.length();
  return m <= len && contains(rho_nm(len, m), mu);
}

RunReport run_conjecture(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  RunReport r = start("check conjecture", o, {{"max_weight", o.max_weight}});
  struct Triple {
    StrictPartition lambda, mu, nu;
  };
  std::vector<Triple> triples;
  if (o.max_weight > 0) {
    for (const StrictPartition& lambda : strict_partitions_up_to(o.max_weight)) {
      for (const StrictPartition& mu : strict_partitions_up_to(o.max_weight - lambda.size())) {
        if (lambda.size() + mu.size() == 0) continue;
        for (const StrictPartition& nu : strict_partitions_up_to(lambda.size() + mu.size())) {
          triples.push_back({lambda, mu, nu});
        }
      }
    }
  }
  r.results.resize(triples.size());
  parallel_for(o.jobs, triples.size(), [&](std::size_t i) {
    const Triple& t = triples[i];
    CaseResult& c = r.results[i];
    c.input = triple(t.lambda, t.mu, t.nu);
    const bool hard = is_theorem_case(t.lambda, t.mu, t.nu);
    c.input["theorem"] = hard;
    const std::uint64_t d = count_d(t.lambda, t.mu, t.nu);
    c.expected = d;
    try {
      const Integer fd = frak_d(t.lambda, t.mu, t.nu);
      c.actual = to_json(fd);
      if (fd == d) {
        c.status = CaseStatus::kPass;
      } else {
        c.status = hard ? CaseStatus::kFail : CaseStatus::kReported;
      }
    } catch (const Error& e) {
      c.actual = nullptr;
      c.detail = e.what();
      c.status = hard ? CaseStatus::kFail : CaseStatus::kReported;
    }
  });
  finish(r, t0);
  return r;
}

RunReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "pieri") return run_pieri(o);
  if (name == "staircase") return run_staircase(o);
  if (name == "vanishing") return run_vanishing(o);
  if (name == "equivalence") return run_equivalence(o);
  if (name == "lemma-loc") return run_lemma_localization(o);
  if (name == "conjecture") return run_conjecture(o);
  throw InvalidArgument("unknown suite \"" + name + "\"");
}

}  // namespace selt
