#include "clonesim/amplitude_parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <system_error>

#include "clonesim/error.hpp"

namespace clonesim {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of a decimal literal starting at text[pos] (excluding sign), or 0.
std::size_t scan_decimal(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  std::size_t digits = 0;
  while (i < text.size() && is_digit(text[i])) ++i, ++digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) ++i, ++digits;
  }
  if (digits == 0) return 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
    const std::size_t exp_start = j;
    while (j < text.size() && is_digit(text[j])) ++j;
    if (j == exp_start) return 0;
    i = j;
  }
  return i - pos;
}

double to_double(std::string_view literal) {
  double value = 0.0;
  const auto* begin = literal.data();
  const auto* end = begin + literal.size();
  if (!literal.empty() && literal.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParameterError("invalid number '" + std::string(literal) + "' in complex amplitude");
  }
  return value;
}

}  // namespace

Amplitude parse_amplitude(std::string_view text) {
  const auto fail = [&]() -> ParameterError {
    return ParameterError("complex amplitude must have the form a+bi or a-bi, got '" +
                          std::string(text) + "'");
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  const std::size_t re_len = scan_decimal(text, pos);
  if (re_len == 0) throw fail();
  const std::string_view re_text = text.substr(0, pos + re_len);
  pos += re_len;
  if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) throw fail();
  const std::size_t im_start = pos++;
  const std::size_t im_len = scan_decimal(text, pos);
  if (im_len == 0) throw fail();
  pos += im_len;
  if (pos + 1 != text.size() || text[pos] != 'i') throw fail();
  return {to_double(re_text), to_double(text.substr(im_start, pos - im_start))};
}

std::string format_number(double value, int digits) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_amplitude(Amplitude value, int digits) {
  const double im = value.imag() == 0.0 ? 0.0 : value.imag();
  std::string out = format_number(value.real(), digits);
  const std::string im_text = format_number(im, digits);
  if (im_text.front() != '-') out += '+';
  out += im_text;
  out += 'i';
  return out;
}

}  // namespace clonesim
