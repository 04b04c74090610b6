#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vvilab {

/// Vector of extended reals; +/-infinity allowed, NaN rejected by the
/// classifiers.
using VecM = std::vector<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Position of a vector relative to the nonnegative orthant R^m_+.
enum class ConeStatus {
  strictly_negative,   // -int R^m_+
  negative_dominated,  // -R^m_+ \ {0}, not interior
  zero,
  positive_dominated,
  strictly_positive,
  incomparable,
};

enum class ConeSet {
  neg_cone_minus_zero,  // -R^m_+ \ {0}
  pos_cone_minus_zero,  //  R^m_+ \ {0}
  neg_interior,         // -int R^m_+
  pos_interior,         //  int R^m_+
};

/// Entries with |v_i| <= tol count as zero. Throws DomainError on NaN, empty
/// input or negative tol.
ConeStatus classify(std::span<const double> v, double tol = kDefaultTol);

bool in_set(std::span<const double> v, ConeSet set, double tol = kDefaultTol);

/// Sign-mirrored status (strictly_negative <-> strictly_positive, ...).
ConeStatus mirror(ConeStatus s);

/// Lowercase report tokens, e.g. "negative_dominated".
std::string to_string(ConeStatus s);
std::string to_string(ConeSet s);
ConeStatus parse_cone_status(std::string_view token);

VecM operator+(const VecM& a, const VecM& b);
VecM operator-(const VecM& a, const VecM& b);
VecM operator*(double alpha, const VecM& a);

}  // namespace vvilab
