#include "cw/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cw/errors.hpp"
#include "cw/json_io.hpp"
#include "cw/quadform.hpp"
#include "cw/specdist.hpp"
#include "cw/theory.hpp"

namespace cw {

namespace {

// classify brute-forces every point for every a, so its work measure is
// p^{2m} with a tighter default than the code sweeps.
constexpr std::uint64_t kDefaultClassifyLimit = std::uint64_t{1} << 26;

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidInput(std::string("invalid ") + what + " '" + text + "'");
  }
  return v;
}

Source parse_source(const std::string& s) {
  if (s == "theory") return Source::Theory;
  if (s == "empirical") return Source::Empirical;
  if (s == "both") return Source::Both;
  throw InvalidInput("unknown source '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw InvalidInput("unknown format '" + s + "'");
}

void require_no_csv(const RunConfig& cfg) {
  if (cfg.format == Format::Csv) {
    throw InvalidInput("csv output is only available for the wd command");
  }
}

SweepOptions sweep_options(const RunConfig& cfg) {
  return SweepOptions{cfg.workers, cfg.work_limit};
}

FieldCtx build_field(const RunConfig& cfg) {
  if (cfg.modulus) return make_field(cfg.p, cfg.m, *cfg.modulus);
  return make_field(cfg.p, cfg.m);
}

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void print_poly(std::ostream& os, const std::vector<Digit>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
}

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  require_no_csv(cfg);
  const FieldDescription d = describe(build_field(cfg));
  if (cfg.format == Format::Json) {
    print_json(out, to_json(d));
  } else {
    out << "p " << d.p << "\nm " << d.m << "\nmodulus ";
    print_poly(out, d.modulus);
    out << "\nalpha ";
    print_poly(out, d.alpha);
    out << '\n';
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_no_csv(cfg);
  case_of(cfg.p, cfg.m, cfg.k);
  const FieldCtx ctx = build_field(cfg);
  const std::uint64_t n = ctx.mult_order();

  std::vector<QuadFormProfile> profiles;
  if (cfg.a_log) {
    if (*cfg.a_log >= n) throw InvalidInput("a-log must be below p^m - 1");
    profiles.push_back(classify(ctx, cfg.k, ctx.exp(*cfg.a_log)));
  } else {
    const std::uint64_t limit = cfg.work_limit.value_or(kDefaultClassifyLimit);
    if (ctx.size() > limit / ctx.size()) {
      throw WorkLimitExceeded("classifying every a needs p^{2m} = " +
                              std::to_string(ctx.size()) + "^2 evaluations, above limit " +
                              std::to_string(limit));
    }
    profiles.resize(n);
    parallel_blocks(n, cfg.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i) {
        profiles[i] = classify(ctx, cfg.k, ctx.exp(i));
      }
    });
  }

  if (cfg.format == Format::Json) {
    if (cfg.a_log) {
      print_json(out, to_json(ctx, profiles.front()));
    } else {
      Json arr = Json::array();
      for (const auto& prof : profiles) arr.push_back(to_json(ctx, prof));
      print_json(out, arr);
    }
  } else {
    out << "a_log rank eps\n";
    for (const auto& prof : profiles) {
      out << ctx.log(prof.a) << ' ' << prof.rank << ' ' << prof.eps << '\n';
    }
  }
  return kExitOk;
}

int cmd_lemma3(const RunConfig& cfg, std::ostream& out) {
  require_no_csv(cfg);
  const CaseInfo info = case_of(cfg.p, cfg.m, cfg.k);
  const RSetSizes expected = lemma3_expected(cfg.p, cfg.m, cfg.k);
  const FieldCtx ctx = build_field(cfg);
  const RSetSizes empirical = empirical_rsets(ctx, cfg.k, sweep_options(cfg));
  const bool match = expected == empirical;

  if (cfg.format == Format::Json) {
    print_json(out, Json{{"case", to_string(info.label)},
                         {"expected", to_json(expected)},
                         {"empirical", to_json(empirical)},
                         {"match", match}});
  } else {
    out << "case " << to_string(info.label) << '\n';
    out << "set expected empirical\n";
    auto row = [&](const char* name, std::uint64_t e, std::uint64_t a) {
      out << name << ' ' << e << ' ' << a << '\n';
    };
    row("r0", expected.r0, empirical.r0);
    row("r1", expected.r1, empirical.r1);
    row("r0_plus", expected.r0_plus, empirical.r0_plus);
    row("r0_minus", expected.r0_minus, empirical.r0_minus);
    row("r1_plus", expected.r1_plus, empirical.r1_plus);
    row("r1_minus", expected.r1_minus, empirical.r1_minus);
    out << "match " << (match ? "true" : "false") << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

WeightDistribution empirical_for(const RunConfig& cfg, std::ostream& err) {
  const FieldCtx ctx = build_field(cfg);
  const SweepOptions opts = sweep_options(cfg);
  if (cfg.family == Family::C2) return empirical_wd_c2(ctx, cfg.k, opts);
  try {
    return empirical_wd_c1(ctx, cfg.k, cfg.strategy, opts);
  } catch (const PrecisionExhausted& e) {
    err << "note: " << e.what() << "; falling back to direct enumeration\n";
    return empirical_wd_c1(ctx, cfg.k, Strategy::Direct, opts);
  }
}

void write_distribution(std::ostream& out, Format format, const WeightDistribution& wd) {
  if (format == Format::Csv) {
    out << to_csv(wd);
    return;
  }
  const auto& s = wd.spec;
  out << "# " << to_string(s.family) << " p=" << s.p << " m=" << s.m << " k=" << s.k
      << " n=" << s.n << " dimension=" << s.dimension << '\n';
  out << "w count\n";
  for (const auto& [w, c] : wd.counts) out << w << ' ' << c << '\n';
}

int cmd_wd(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  case_of(cfg.p, cfg.m, cfg.k);
  if (cfg.source == Source::Theory) {
    // A supplied modulus does not affect the closed form but is still validated.
    if (cfg.modulus) build_field(cfg);
    const TheoreticalWD t = theoretical_wd(cfg.family, cfg.p, cfg.m, cfg.k);
    if (cfg.format == Format::Json) {
      print_json(out, to_json(t));
    } else {
      if (cfg.format == Format::Table) out << "# case " << to_string(t.label) << " formula " << t.formula << '\n';
      write_distribution(out, cfg.format, t.wd);
    }
    return kExitOk;
  }
  if (cfg.source == Source::Empirical) {
    const WeightDistribution wd = empirical_for(cfg, err);
    if (cfg.format == Format::Json) {
      print_json(out, to_json(wd));
    } else {
      write_distribution(out, cfg.format, wd);
    }
    return kExitOk;
  }

  // Closed form first: an unsupported case fails before any enumeration.
  const TheoreticalWD t = theoretical_wd(cfg.family, cfg.p, cfg.m, cfg.k);
  const WeightDistribution wd = empirical_for(cfg, err);
  const auto diff = diff_counts(t.wd.counts, wd.counts);
  const bool equal = diff.empty() && t.wd.spec == wd.spec;

  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> rows;
  for (const auto& [w, c] : t.wd.counts) rows[w].first = c;
  for (const auto& [w, c] : wd.counts) rows[w].second = c;

  switch (cfg.format) {
    case Format::Json: {
      Json jd = Json::array();
      for (const auto& d : diff) {
        jd.push_back(Json{{"w", d.weight}, {"theory", d.left}, {"empirical", d.right}});
      }
      print_json(out, Json{{"theory", to_json(t)},
                           {"empirical", to_json(wd)},
                           {"diff", std::move(jd)},
                           {"equal", equal}});
      break;
    }
    case Format::Csv:
      out << "w,theory,empirical\n";
      for (const auto& [w, tc] : rows) out << w << ',' << tc.first << ',' << tc.second << '\n';
      break;
    case Format::Table: {
      const auto& s = t.wd.spec;
      out << "# " << to_string(s.family) << " p=" << s.p << " m=" << s.m << " k=" << s.k
          << " n=" << s.n << " dimension=" << s.dimension << " case "
          << to_string(t.label) << " formula " << t.formula << '\n';
      out << "w theory empirical\n";
      for (const auto& [w, tc] : rows) out << w << ' ' << tc.first << ' ' << tc.second << '\n';
      out << "equal " << (equal ? "true" : "false") << '\n';
      break;
    }
  }
  if (!equal) {
    if (!diff.empty()) {
      err << "mismatch at weight " << diff.front().weight << ": theory "
          << diff.front().left << ", empirical " << diff.front().right << '\n';
    } else {
      err << "mismatch in code parameters between theory and enumeration\n";
    }
  }
  return equal ? kExitOk : kExitMismatch;
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

Poly parse_modulus(const std::string& text) {
  Poly out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    const std::uint64_t v = parse_u64(item, "modulus coefficient");
    if (v > std::numeric_limits<Digit>::max()) throw InvalidInput("modulus coefficient too large");
    out.push_back(static_cast<Digit>(v));
  }
  if (out.empty() || text.back() == ',') throw InvalidInput("empty modulus coefficient list");
  return out;
}

int cmd_paper_suite(const SuiteOptions& opts, Format format, std::ostream& out,
                    std::ostream& err) {
  if (format == Format::Csv) {
    throw InvalidInput("csv output is only available for the wd command");
  }
  const SuiteReport report = run_reference_suite(opts);

  const SuiteRow* failed = nullptr;
  for (const auto& row : report.rows) {
    if (!row.pass()) {
      failed = &row;
      break;
    }
  }

  if (format == Format::Json) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
      rows.push_back(Json{{"name", row.name},
                          {"theory_vs_empirical", row.theory_matches_empirical},
                          {"reference", row.matches_reference},
                          {"lemma3", row.rsets_match},
                          {"moments", row.moments_ok},
                          {"pass", row.pass()}});
    }
    Json mismatch = nullptr;
    if (failed && failed->first_mismatch) {
      const auto& mm = *failed->first_mismatch;
      mismatch = Json{{"example", failed->name},
                      {"w", mm.weight},
                      {"theory", mm.left},
                      {"empirical", mm.right}};
    }
    print_json(out, Json{{"examples", std::move(rows)},
                         {"passed", report.passed()},
                         {"total", report.rows.size()},
                         {"first_mismatch", std::move(mismatch)}});
  } else {
    out << "example theory=empirical reference lemma3 moments result\n";
    for (const auto& row : report.rows) {
      out << row.name << ' ' << pass_fail(row.theory_matches_empirical) << ' '
          << pass_fail(row.matches_reference) << ' ' << pass_fail(row.rsets_match) << ' '
          << pass_fail(row.moments_ok) << ' ' << pass_fail(row.pass()) << '\n';
    }
    out << report.passed() << '/' << report.rows.size() << " examples pass\n";
  }

  if (!failed) return kExitOk;
  if (failed->first_mismatch) {
    const auto& mm = *failed->first_mismatch;
    err << failed->name << ": weight " << mm.weight << ", theory " << mm.left
        << ", empirical " << mm.right << '\n';
  } else {
    err << failed->name << ": "
        << (!failed->theory_matches_empirical ? "code parameters differ"
            : !failed->matches_reference      ? "distribution differs from the reference table"
            : !failed->rsets_match            ? "class sizes differ from the closed form"
                                              : "moment identities fail")
        << '\n';
  }
  return kExitMismatch;
}

int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "field") return cmd_field(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out);
  if (cfg.command == "lemma3") return cmd_lemma3(cfg, out);
  if (cfg.command == "wd") return cmd_wd(cfg, out, err);
  if (cfg.command == "paper-suite") {
    SuiteOptions opts;
    opts.strategy = cfg.strategy;
    opts.sweep = sweep_options(cfg);
    return cmd_paper_suite(opts, cfg.format, out, err);
  }
  throw InvalidInput("unknown command '" + cfg.command + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace-code weight distributions: closed forms vs exact enumeration"};
  app.require_subcommand(1);

  struct Raw {
    std::uint64_t p = 0, m = 0, k = 0;
    std::string code = "c1", source = "theory", strategy = "transform", format = "json";
    std::string modulus, work_limit, out;
    unsigned workers = 0;
    std::optional<std::uint64_t> a_log;
  } raw;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "json, csv or table")->capture_default_str();
    sub->add_option("--work-limit", raw.work_limit, "override the enumeration bound");
    sub->add_option("--workers", raw.workers, "worker threads (0: all available)");
    sub->add_option("--out", raw.out, "write output to this file");
  };
  auto add_pmk = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--p", raw.p, "odd prime")->required();
    sub->add_option("--m", raw.m, "extension degree")->required();
    if (with_k) sub->add_option("--k", raw.k, "Frobenius exponent, 1 <= k < m")->required();
    sub->add_option("--modulus", raw.modulus, "defining polynomial c0,c1,...,1");
  };

  auto* field = app.add_subcommand("field", "construct F_{p^m} and print its description");
  add_pmk(field, false);
  add_common(field);

  auto* cls = app.add_subcommand("classify", "rank and sign class of Tr(a x^{p^k+1})");
  add_pmk(cls, true);
  cls->add_option("--a-log", raw.a_log, "classify only a = alpha^a_log");
  add_common(cls);

  auto* lemma = app.add_subcommand("lemma3", "class sizes: closed form vs sweep");
  add_pmk(lemma, true);
  add_common(lemma);

  auto* wd = app.add_subcommand("wd", "weight distribution of C1 or C2");
  add_pmk(wd, true);
  wd->add_option("--code", raw.code, "c1 or c2")->capture_default_str();
  wd->add_option("--source", raw.source, "theory, empirical or both")->capture_default_str();
  wd->add_option("--strategy", raw.strategy, "direct or transform (C1 enumeration)")
      ->capture_default_str();
  add_common(wd);

  auto* suite = app.add_subcommand("paper-suite", "reproduce the five reference distributions");
  suite->add_option("--strategy", raw.strategy, "direct or transform")->capture_default_str();
  add_common(suite);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    if (raw.p > std::numeric_limits<Digit>::max()) throw InvalidInput("p is too large");
    if (raw.m > 64 || raw.k > 64) throw InvalidInput("m and k must be at most 64");
    cfg.p = static_cast<Digit>(raw.p);
    cfg.m = static_cast<unsigned>(raw.m);
    cfg.k = static_cast<unsigned>(raw.k);
    cfg.family = parse_family(raw.code);
    cfg.source = parse_source(raw.source);
    cfg.strategy = parse_strategy(raw.strategy);
    cfg.format = parse_format(raw.format);
    cfg.workers = raw.workers;
    cfg.a_log = raw.a_log;
    cfg.out_path = raw.out;
    if (!raw.modulus.empty()) cfg.modulus = parse_modulus(raw.modulus);
    if (!raw.work_limit.empty()) {
      cfg.work_limit = parse_u64(raw.work_limit, "work limit");
    } else if (const char* env = std::getenv("CW_WORK_LIMIT"); env && *env) {
      cfg.work_limit = parse_u64(env, "CW_WORK_LIMIT");
    }

    if (cfg.out_path.empty()) return run_config(cfg, out, err);
    std::ostringstream buffer;
    const int code = run_config(cfg, buffer, err);
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw InvalidInput("cannot open output file '" + cfg.out_path + "'");
    file << buffer.str();
    return code;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const WorkLimitExceeded& e) {
    err << "work limit exceeded: " << e.what() << " (raise --work-limit or CW_WORK_LIMIT)\n";
    return kExitWorkLimit;
  } catch (const UnsupportedCase& e) {
    err << "unsupported case: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const ConsistencyFault& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace cw
