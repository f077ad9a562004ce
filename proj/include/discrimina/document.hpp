#pragma once

// JSON kernel documents and coefficient lists. Rationals travel as strings
// ("p" or "p/q"); coefficient arrays are in ASCENDING degree order.
//
// Kernel document (schema version 1, see schemas/kernel_document.schema.json):
//   { "n": 2, "mode": "exact" | "numeric", "tol": "1e-12",
//     "phi1": <factor>, "phi2": <factor>, "psi1": <factor>, "psi2": <factor> }
// factor := { "pieces": [ { "on": ["0", "1/2"], "coeffs": ["1", "-2"] }, ... ] }
//         | { "maxAffine": [ ["c0", "c1"], ["d0", "d1"] ] }   // max(c0 + c1 x, d0 + d1 x)

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "discrimina/analyzer.hpp"
#include "discrimina/moments.hpp"

namespace discrimina {

struct KernelDocument {
    int n = 1;
    PiecewisePoly phi1 = PiecewisePoly::constant(1);
    PiecewisePoly phi2 = PiecewisePoly::constant(1);
    PiecewisePoly psi1 = PiecewisePoly::constant(1);
    PiecewisePoly psi2 = PiecewisePoly::constant(1);
    Mode mode = Mode::Exact;
    std::optional<double> tol;  // numeric mode quadrature tolerance
};

KernelDocument parse_kernel_document(const nlohmann::json& doc);
KernelDocument load_kernel_document(const std::filesystem::path& path);

/// Canonical serialization (every factor in "pieces" form).
nlohmann::json to_json(const KernelDocument& doc);

KernelSpec to_kernel_spec(const KernelDocument& doc);
NumericKernel to_numeric_kernel(const KernelDocument& doc);

PiecewisePoly parse_factor(const nlohmann::json& factor);
Rational parse_rational_json(const nlohmann::json& value);

/// Ascending coefficient array of rational strings (or JSON integers).
Polynomial parse_coefficients(const nlohmann::json& array);
/// Either inline JSON ("[...]") or a path to a file holding the array.
Polynomial parse_coefficients_argument(std::string_view argument);

/// Decimal tolerance such as "1e-12" or "0.001"; must be positive.
double parse_tolerance(std::string_view text);

}  // namespace discrimina
