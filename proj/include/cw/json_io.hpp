#pragma once

// JSON and CSV encodings used by the CLI.

#include <string>

#include <json.hpp>

#include "cw/codes.hpp"
#include "cw/gf.hpp"
#include "cw/quadform.hpp"
#include "cw/specdist.hpp"
#include "cw/theory.hpp"

namespace cw {

using Json = nlohmann::ordered_json;

/// {"p", "m", "modulus", "alpha"}; coefficient lists constant term first.
struct FieldDescription {
  Digit p = 0;
  unsigned m = 0;
  Poly modulus;
  std::vector<Digit> alpha;

  friend bool operator==(const FieldDescription&, const FieldDescription&) = default;
};

FieldDescription describe(const FieldCtx& ctx);
Json to_json(const FieldDescription& d);
FieldDescription field_description_from_json(const Json& j);
/// Rebuilds the field and checks that the recorded alpha is primitive.
FieldCtx make_field(const FieldDescription& d);

/// {"a_log", "rank", "eps"}
Json to_json(const FieldCtx& ctx, const QuadFormProfile& prof);

Json to_json(const RSetSizes& r);
RSetSizes rsets_from_json(const Json& j);

Family parse_family(const std::string& s);
Strategy parse_strategy(const std::string& s);

/// {"family","p","m","k","n","dimension","weights":[{"w","count"},...]}
Json to_json(const WeightDistribution& wd);
WeightDistribution weight_distribution_from_json(const Json& j);

/// Weight distribution schema plus "case" and "formula".
Json to_json(const TheoreticalWD& t);
TheoreticalWD theoretical_wd_from_json(const Json& j);

/// Header `w,count`, ascending weights.
std::string to_csv(const WeightDistribution& wd);

}  // namespace cw
