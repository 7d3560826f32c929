#include "cw/json_io.hpp"

#include <sstream>

#include "cw/errors.hpp"

namespace cw {

FieldDescription describe(const FieldCtx& ctx) {
  return FieldDescription{ctx.p(), ctx.m(), ctx.modulus(), ctx.coeffs(ctx.alpha())};
}

Json to_json(const FieldDescription& d) {
  return Json{{"p", d.p}, {"m", d.m}, {"modulus", d.modulus}, {"alpha", d.alpha}};
}

FieldDescription field_description_from_json(const Json& j) {
  try {
    return FieldDescription{j.at("p").get<Digit>(), j.at("m").get<unsigned>(),
                            j.at("modulus").get<Poly>(),
                            j.at("alpha").get<std::vector<Digit>>()};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed field description: ") + e.what());
  }
}

FieldCtx make_field(const FieldDescription& d) {
  FieldCtx ctx = make_field(d.p, d.m, d.modulus);
  FieldElement alpha = ctx.from_coeffs(d.alpha);
  if (alpha.code == 0 || element_order(ctx, alpha) != ctx.mult_order()) {
    throw InvalidInput("recorded alpha is not primitive");
  }
  if (alpha != ctx.alpha()) {
    throw InvalidInput("recorded alpha differs from the canonical primitive element");
  }
  return ctx;
}

Json to_json(const FieldCtx& ctx, const QuadFormProfile& prof) {
  return Json{{"a_log", ctx.log(prof.a)}, {"rank", prof.rank}, {"eps", prof.eps}};
}

Json to_json(const RSetSizes& r) {
  return Json{{"r0", r.r0},           {"r1", r.r1},           {"r0_plus", r.r0_plus},
              {"r0_minus", r.r0_minus}, {"r1_plus", r.r1_plus}, {"r1_minus", r.r1_minus}};
}

RSetSizes rsets_from_json(const Json& j) {
  RSetSizes r;
  r.r0 = j.at("r0").get<std::uint64_t>();
  r.r1 = j.at("r1").get<std::uint64_t>();
  r.r0_plus = j.at("r0_plus").get<std::uint64_t>();
  r.r0_minus = j.at("r0_minus").get<std::uint64_t>();
  r.r1_plus = j.at("r1_plus").get<std::uint64_t>();
  r.r1_minus = j.at("r1_minus").get<std::uint64_t>();
  return r;
}

Family parse_family(const std::string& s) {
  if (s == "C1" || s == "c1") return Family::C1;
  if (s == "C2" || s == "c2") return Family::C2;
  throw InvalidInput("unknown code family '" + s + "'");
}

Strategy parse_strategy(const std::string& s) {
  if (s == "direct") return Strategy::Direct;
  if (s == "transform") return Strategy::Transform;
  throw InvalidInput("unknown strategy '" + s + "'");
}

Json to_json(const WeightDistribution& wd) {
  Json weights = Json::array();
  for (const auto& [w, c] : wd.counts) weights.push_back(Json{{"w", w}, {"count", c}});
  const auto& s = wd.spec;
  return Json{{"family", to_string(s.family)},
              {"p", s.p},
              {"m", s.m},
              {"k", s.k},
              {"n", s.n},
              {"dimension", s.dimension},
              {"weights", std::move(weights)}};
}

WeightDistribution weight_distribution_from_json(const Json& j) {
  try {
    WeightDistribution wd;
    wd.spec.family = parse_family(j.at("family").get<std::string>());
    wd.spec.p = j.at("p").get<Digit>();
    wd.spec.m = j.at("m").get<unsigned>();
    wd.spec.k = j.at("k").get<unsigned>();
    wd.spec.n = j.at("n").get<std::uint64_t>();
    wd.spec.dimension = j.at("dimension").get<unsigned>();
    for (const auto& e : j.at("weights")) {
      wd.counts[e.at("w").get<std::uint64_t>()] = e.at("count").get<std::uint64_t>();
    }
    return wd;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed weight distribution: ") + e.what());
  }
}

Json to_json(const TheoreticalWD& t) {
  Json j = to_json(t.wd);
  j["case"] = to_string(t.label);
  j["formula"] = t.formula;
  return j;
}

TheoreticalWD theoretical_wd_from_json(const Json& j) {
  TheoreticalWD t;
  t.wd = weight_distribution_from_json(j);
  const auto label = j.at("case").get<std::string>();
  bool found = false;
  for (auto c : {CaseLabel::OddSOddM, CaseLabel::OddSEvenM, CaseLabel::Boundary,
                 CaseLabel::Deep}) {
    if (to_string(c) == label) {
      t.label = c;
      found = true;
    }
  }
  if (!found) throw InvalidInput("unknown case label '" + label + "'");
  t.formula = j.at("formula").get<std::string>();
  return t;
}

std::string to_csv(const WeightDistribution& wd) {
  std::ostringstream os;
  os << "w,count\n";
  for (const auto& [w, c] : wd.counts) os << w << ',' << c << '\n';
  return os.str();
}

}  // namespace cw
