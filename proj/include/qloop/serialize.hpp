#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qloop/laurent.hpp"

namespace qloop {

// Canonical text. Q exponents print in halves: q^{3/2}, q^2, q^-1.
std::string to_string(const Monomial& m);
std::string to_string(const LaurentPoly& p);
std::string to_string(const LinearBinomial& b);
std::string to_string(const RatFunc& f);

// Inverse of to_string(LaurentPoly). Accepts sums of products of a rational
// coefficient and powers of q, x, y, z<i>_<b>.
LaurentPoly parse_poly(std::string_view text);

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const RatFunc& f);
LaurentPoly poly_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace qloop
