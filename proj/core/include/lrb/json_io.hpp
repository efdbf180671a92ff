#pragma once

#include <json.hpp>

#include "lrb/poly.hpp"
#include "lrb/separation.hpp"
#include "lrb/spinor.hpp"
#include "lrb/tableau.hpp"

namespace lrb {

using nlohmann::json;

json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

json to_json(const SpinorElement& e);
SpinorElement element_from_json(const json& j);  // throws std::invalid_argument

json to_json(const SeparationResult& r);
json to_json(const SlideTrace& s);
json to_json(const Poly& p);  // {"coeffs":{"1":1,"3":1}}

}  // namespace lrb
