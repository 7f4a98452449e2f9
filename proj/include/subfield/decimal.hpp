#pragma once

#include <string>

#include "subfield/field_element.hpp"

namespace subfield {

/// Decimal expansion of x rounded toward zero to exactly `places` fractional
/// digits, computed by exact integer comparisons only. places >= 1.
std::string to_decimal(const FieldElement& x, int places);

inline std::string to_decimal(const Rational& x, int places) {
    return to_decimal(FieldElement(x), places);
}

}  // namespace subfield
