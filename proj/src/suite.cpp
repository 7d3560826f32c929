#include "cw/suite.hpp"

#include <algorithm>

#include "cw/specdist.hpp"

namespace cw {

std::string ReferenceCase::name() const {
  return to_string(family) + "(p=" + std::to_string(p) + ",m=" + std::to_string(m) +
         ",k=" + std::to_string(k) + ")";
}

const std::vector<ReferenceCase>& reference_cases() {
  static const std::vector<ReferenceCase> cases = {
      {Family::C1, 3, 6, 1, 432,
       {{0, 1}, {432, 6006}, {477, 275184}, {486, 118664}, {504, 122850}, {513, 8736}}},
      {Family::C1, 5, 4, 1, 475,
       {{0, 1}, {475, 2496}, {480, 75400}, {500, 63024}, {505, 249600}, {600, 104}}},
      {Family::C2, 3, 6, 2, 468,
       {{0, 1}, {468, 364}, {476, 728}, {494, 728}, {504, 364}, {728, 2}}},
      {Family::C2, 3, 8, 1, 4292,
       {{0, 1}, {4292, 3280}, {4320, 4920}, {4400, 9840}, {4536, 1640}, {6560, 2}}},
      {Family::C2, 3, 6, 3, 476, {{0, 1}, {476, 52}, {504, 26}, {728, 2}}},
  };
  return cases;
}

bool SuiteReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass(); });
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass(); }));
}

SuiteReport run_reference_suite(const SuiteOptions& opts) {
  SuiteReport report;
  for (const auto& rc : reference_cases()) {
    SuiteRow row;
    row.name = rc.name();
    const FieldCtx ctx = make_field(rc.p, rc.m);
    const TheoreticalWD theory = opts.theory(rc.family, rc.p, rc.m, rc.k);
    const WeightDistribution empirical =
        rc.family == Family::C1 ? empirical_wd_c1(ctx, rc.k, opts.strategy, opts.sweep)
                                : empirical_wd_c2(ctx, rc.k, opts.sweep);

    auto diff = diff_counts(theory.wd.counts, empirical.counts);
    row.theory_matches_empirical = diff.empty() && theory.wd.spec == empirical.spec;
    if (!diff.empty()) row.first_mismatch = diff.front();
    row.matches_reference = empirical.counts == rc.counts &&
                            empirical.min_distance() == rc.min_distance;
    row.rsets_match = empirical_rsets(ctx, rc.k, opts.sweep) ==
                      lemma3_expected(rc.p, rc.m, rc.k);
    row.moments_ok = moment_checks(theory.wd).all() && moment_checks(empirical).all();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cw
