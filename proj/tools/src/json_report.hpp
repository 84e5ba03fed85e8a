#pragma once

#include <json.hpp>

#include "hypervar/analysis.hpp"
#include "hypervar/verify.hpp"

namespace hypervar::cli {

  using Json = nlohmann::ordered_json;

  Json to_json(FiniteAlgebra const& a);
  Json to_json(Decision const& d, Signature const& sig);
  Json to_json(Verdict const& v, Signature const& sig);
  Json to_json(ClaimReport const& report);

}  // namespace hypervar::cli
