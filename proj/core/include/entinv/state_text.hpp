#pragma once

#include <string>
#include <string_view>

#include "entinv/tensor_state.hpp"

namespace entinv {

/// Parses the term grammar, e.g. "[1,1,1]+[2,2,2]" or "1/2*[1,2]-3*[2,1]".
/// A leading sign is accepted and the single token "0" denotes the zero state.
State parse_state(std::string_view text, const Shape& shape);

/// Canonical text: terms in ascending multi-index order, "0" for the zero state.
std::string render_state(const State& v);

}  // namespace entinv
