#pragma once

#include "chordal/bivar_poly.hpp"
#include "chordal/chords.hpp"
#include "chordal/families.hpp"
#include "chordal/radicals.hpp"

#include <string>

namespace chordal {

/// Doubles rendered with 17 significant digits: round-trip safe and
/// byte-deterministic on one platform.
std::string double_str(double v);

/// JSON string escaping for the few places free text appears.
std::string json_escape(std::string_view s);

/// {"n":..,"a":..,"b":..,"chord_lengths":[..],"numeric_product":..,
///  "formula_value":..,"relative_discrepancy":..,"log_product":..}
/// With integer_hint_tol > 0, adds "as_integer" when formula_value is
/// within that relative tolerance of an integer.
std::string to_json(const ChordReport& report, double integer_hint_tol = 0.0);

/// {"n":..,"p":"..","q":"..","a":[re,im],"b":[re,im],"twist":..,
///  "roots":[[re,im],..],"max_residual":..}
/// p and q are decimal strings since they are exact rationals.
std::string to_json(const RadicalSolution& sol);

/// {"kind":"L","n":3,"terms":[{"i":3,"j":0,"coeff":"1"},..]} with
/// coefficients as decimal strings (they are unbounded integers).
std::string poly_json(Family kind, int n, const BivarPoly& p);

}  // namespace chordal
