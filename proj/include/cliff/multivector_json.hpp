#pragma once

#include <json.hpp>

#include "cliff/multivector.hpp"

namespace cliff {

using Json = nlohmann::json;

// Wire format:
//   {"signature":[p,q],
//    "terms":[{"blade":[indices...], "re":"num/den", "im":"num/den"}, ...]}
// Blade indices ascending, terms ordered by mask, "im" omitted when the
// element is real. Float-coefficient elements use JSON numbers for "re".

Json to_json(const Mq& m);
Json to_json(const Md& m);
Mq mq_from_json(const Json& j);
Md md_from_json(const Json& j);

}  // namespace cliff
