#pragma once

#include <json.hpp>

#include "fqmzv/laurent.hpp"
#include "fqmzv/vadic.hpp"

namespace fqmzv {

// Shared JSON encodings.  A field is {p, ext_degree, modulus:[ints]}; a
// polynomial is an array of coefficient vectors, each a length-ext_degree
// array of ints in [0,p), lowest degree first; a v-adic value is
// {v, level, value}.

nlohmann::json field_to_json(const Fq& f);
const Fq& field_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly& a);
Poly poly_from_json(const Fq& f, const nlohmann::json& j);

nlohmann::json vadic_to_json(const VAdic& x);
VAdic vadic_from_json(const Fq& f, const nlohmann::json& j);

nlohmann::json laurent_to_json(const Laurent& s);

}  // namespace fqmzv
