#pragma once

#include <span>

#include "vtm/model.hpp"

namespace vtm {

// Union of validated models. Duplicate cells that agree on severity and
// notes deduplicate with a warning; cells with the same key but different
// severity or notes are conflicts (errors), as are notes re-declared with
// different content. Associative and commutative on conflict-free inputs.
ParseResult merge_models(std::span<const TrustModel> models);

}  // namespace vtm
