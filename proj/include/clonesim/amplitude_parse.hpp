#pragma once

#include <string>
#include <string_view>

#include "clonesim/phase_space.hpp"

namespace clonesim {

/// Parses the literal form `a+bi` / `a-bi` (decimal components, optional
/// exponent, no spaces). Throws ParameterError on anything else.
Amplitude parse_amplitude(std::string_view text);

/// Formats with `digits` significant digits in the C locale, e.g. "0.666666666667".
std::string format_number(double value, int digits);

/// Inverse of parse_amplitude at `digits` significant digits, e.g. "1+0i".
std::string format_amplitude(Amplitude value, int digits);

}  // namespace clonesim
