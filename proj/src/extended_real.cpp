#include "maxplus/extended_real.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <ostream>
#include <system_error>

namespace maxplus {

ExtendedReal parse_scalar(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "-inf") {
    return kNegInf;
  }
  if (lower == "+inf") {
    return kPosInf;
  }

  std::string_view digits = token;
  if (digits.size() > 1 && digits.front() == '+') {
    digits.remove_prefix(1);
  }
  double v = 0.0;
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  // from_chars also accepts "inf" and "nan"; only decimal literals are valid.
  if (ec != std::errc() || ptr != last || digits.empty() || !std::isfinite(v)) {
    throw std::invalid_argument("invalid scalar token '" + std::string(token) +
                                "'");
  }
  return ExtendedReal(v);
}

std::string format_scalar(ExtendedReal a) {
  if (a.is_neg_inf()) {
    return "-inf";
  }
  if (a.is_pos_inf()) {
    return "+inf";
  }
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       a.value());
  return std::string(buf.data(), ptr);
}

std::ostream& operator<<(std::ostream& os, ExtendedReal a) {
  return os << format_scalar(a);
}

}  // namespace maxplus
