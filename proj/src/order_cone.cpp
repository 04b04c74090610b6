#include "vvilab/order_cone.hpp"

#include <cmath>

#include "vvilab/errors.hpp"

namespace vvilab {

ConeStatus classify(std::span<const double> v, double tol) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be >= 0");
  if (v.empty()) throw DomainError("cannot classify an empty vector");
  std::size_t neg = 0;
  std::size_t pos = 0;
  for (double x : v) {
    if (std::isnan(x)) throw DomainError("NaN entry in cone classification");
    if (x < -tol) {
      ++neg;
    } else if (x > tol) {
      ++pos;
    }
  }
  const std::size_t m = v.size();
  if (neg == 0 && pos == 0) return ConeStatus::zero;
  if (pos == 0) {
    return neg == m ? ConeStatus::strictly_negative
                    : ConeStatus::negative_dominated;
  }
  if (neg == 0) {
    return pos == m ? ConeStatus::strictly_positive
                    : ConeStatus::positive_dominated;
  }
  return ConeStatus::incomparable;
}

bool in_set(std::span<const double> v, ConeSet set, double tol) {
  const ConeStatus s = classify(v, tol);
  switch (set) {
    case ConeSet::neg_cone_minus_zero:
      return s == ConeStatus::strictly_negative ||
             s == ConeStatus::negative_dominated;
    case ConeSet::pos_cone_minus_zero:
      return s == ConeStatus::strictly_positive ||
             s == ConeStatus::positive_dominated;
    case ConeSet::neg_interior:
      return s == ConeStatus::strictly_negative;
    case ConeSet::pos_interior:
      return s == ConeStatus::strictly_positive;
  }
  return false;
}

ConeStatus mirror(ConeStatus s) {
  switch (s) {
    case ConeStatus::strictly_negative:
      return ConeStatus::strictly_positive;
    case ConeStatus::negative_dominated:
      return ConeStatus::positive_dominated;
    case ConeStatus::positive_dominated:
      return ConeStatus::negative_dominated;
    case ConeStatus::strictly_positive:
      return ConeStatus::strictly_negative;
    case ConeStatus::zero:
    case ConeStatus::incomparable:
      return s;
  }
  return s;
}

std::string to_string(ConeStatus s) {
  switch (s) {
    case ConeStatus::strictly_negative:
      return "strictly_negative";
    case ConeStatus::negative_dominated:
      return "negative_dominated";
    case ConeStatus::zero:
      return "zero";
    case ConeStatus::positive_dominated:
      return "positive_dominated";
    case ConeStatus::strictly_positive:
      return "strictly_positive";
    case ConeStatus::incomparable:
      return "incomparable";
  }
  return "?";
}

std::string to_string(ConeSet s) {
  switch (s) {
    case ConeSet::neg_cone_minus_zero:
      return "neg_cone_minus_zero";
    case ConeSet::pos_cone_minus_zero:
      return "pos_cone_minus_zero";
    case ConeSet::neg_interior:
      return "neg_interior";
    case ConeSet::pos_interior:
      return "pos_interior";
  }
  return "?";
}

ConeStatus parse_cone_status(std::string_view token) {
  for (ConeStatus s :
       {ConeStatus::strictly_negative, ConeStatus::negative_dominated,
        ConeStatus::zero, ConeStatus::positive_dominated,
        ConeStatus::strictly_positive, ConeStatus::incomparable}) {
    if (token == to_string(s)) return s;
  }
  throw UnknownIdError("unknown cone status: " + std::string(token));
}

VecM operator+(const VecM& a, const VecM& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  VecM out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VecM operator-(const VecM& a, const VecM& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  VecM out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

VecM operator*(double alpha, const VecM& a) {
  VecM out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i];
  return out;
}

}  // namespace vvilab
