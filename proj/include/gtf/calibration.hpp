#pragma once

// Global sign conventions linking the geometric and algebraic sides.
// They were fixed once by requiring the bracket and cobracket identities on
// the calibration curves (see tests/test_calibration.cpp) and are frozen here.

namespace gtf::calibration {

/// Intersection sign ε = kIntersectionSign · sign det(first tangent, second tangent).
inline constexpr int kIntersectionSign = +1;
/// Framing term of the cobracket: rot(γ) · kRotationSign · (|1| ⊗ |γ| - |γ| ⊗ |1|).
inline constexpr int kRotationSign = +1;
/// Overall sign σ of the necklace cobracket relative to Tr¹²((∂_i∂_iψ){a_i,a_i}).
inline constexpr int kNecklaceSign = +1;

}  // namespace gtf::calibration
