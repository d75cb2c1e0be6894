#include "hg2/weight.hpp"

#include <array>
#include <charconv>

namespace hg2 {

std::string format_weight(Weight w) {
  if (w == 0) return "0";
  std::array<char, 400> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w, std::chars_format::fixed);
  if (ec != std::errc{}) {
    end = std::to_chars(buf.data(), buf.data() + buf.size(), w).ptr;
  }
  return std::string(buf.data(), end);
}

}  // namespace hg2
