#pragma once

#include <string>

namespace hg2 {

/// Cost units. Integer-valued weights up to 2^53 add exactly; other values
/// follow IEEE double rounding.
using Weight = double;

/// Shortest decimal text that reads back to the same value ("1", "0.25").
std::string format_weight(Weight w);

}  // namespace hg2
