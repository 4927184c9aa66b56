#ifndef KOCHENLAB_JSONIO_HPP
#define KOCHENLAB_JSONIO_HPP

#include <json.hpp>

#include "kochenlab/mpoly.hpp"

namespace kochenlab {

using json = nlohmann::ordered_json;

// Wire format: {"arity": n, "terms": [{"exps": [..], "coef": "a/b"}, ...]}.
json mpoly_to_json(const MPoly& f);
MPoly mpoly_from_json(const json& j);

} // namespace kochenlab

#endif
