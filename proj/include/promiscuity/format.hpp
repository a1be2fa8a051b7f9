// format.hpp
// Deterministic text rendering of reports: 12 significant digits,
// locale-independent, '\n' line endings.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "promiscuity/four_mode_family.hpp"
#include "promiscuity/qudit.hpp"

namespace promiscuity::format {

using Json = nlohmann::ordered_json;

inline constexpr int kSignificantDigits = 12;

/// Shortest rendering with at most 12 significant digits.
std::string number(double x);
/// x rounded to 12 significant digits.
double rounded(double x);
std::string rational(const qudit::Rational& r);  // "4/9", "1", "0"

Json to_json(const fourmode::EntanglementReport& report);
Json to_json(const qudit::QuditTangleReport& report,
             const qudit::SquashedBounds& bounds);

/// "field,value" lines in the same order as the JSON fields.
std::string to_csv(const fourmode::EntanglementReport& report);
std::string to_csv(const qudit::QuditTangleReport& report,
                   const qudit::SquashedBounds& bounds);

std::string_view sweep_header();
std::string sweep_row(const fourmode::EntanglementReport& report);

}  // namespace promiscuity::format
