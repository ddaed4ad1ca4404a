#pragma once

// Shared numeric tolerances. Everything is IEEE double.
namespace mmo::tol {

inline constexpr double identity = 1e-9;       // algebraic identities on traces
inline constexpr double orthogonality = 1e-12;  // relative to ||theta||
inline constexpr double unit_norm = 1e-12;
inline constexpr double conjugate = 1e-8;       // numeric Fenchel conjugates
inline constexpr double closed_form = 1e-8;     // closed-form one-round values
inline constexpr double bound_slack = 1e-6;     // regret vs. bound, relative to 1+|bound|
inline constexpr double feasibility = 1e-12;    // ||g|| <= G, ||w|| <= W

}  // namespace mmo::tol
