#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "support.hpp"
#include "vvilab/errors.hpp"
#include "vvilab/order_cone.hpp"

namespace vvilab {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

TEST(Classify, Examples) {
  EXPECT_EQ(classify(VecM{-1, -2}, 0), ConeStatus::strictly_negative);
  EXPECT_EQ(classify(VecM{0, 0}, 0), ConeStatus::zero);
  EXPECT_EQ(classify(VecM{1, -1}, 0), ConeStatus::incomparable);
  EXPECT_EQ(classify(VecM{-1, 0}, 0), ConeStatus::negative_dominated);
  EXPECT_EQ(classify(VecM{0, 3}, 0), ConeStatus::positive_dominated);
  EXPECT_EQ(classify(VecM{2, 3}, 0), ConeStatus::strictly_positive);
}

TEST(Classify, ToleranceBandCountsAsZero) {
  EXPECT_EQ(classify(VecM{1e-10, -1e-10}), ConeStatus::zero);
  EXPECT_EQ(classify(VecM{-1e-10, -1}), ConeStatus::negative_dominated);
  EXPECT_EQ(classify(VecM{-1e-10, -1}, 0), ConeStatus::strictly_negative);
}

TEST(Classify, ExtendedReals) {
  EXPECT_EQ(classify(VecM{-inf, -1}), ConeStatus::strictly_negative);
  EXPECT_EQ(classify(VecM{inf, -inf}), ConeStatus::incomparable);
  EXPECT_EQ(classify(VecM{inf, 0}), ConeStatus::positive_dominated);
}

TEST(Classify, RejectsInvalidInput) {
  EXPECT_THROW(classify(VecM{std::nan(""), 1}), DomainError);
  EXPECT_THROW(classify(VecM{}), DomainError);
  EXPECT_THROW(classify(VecM{1}, -1e-3), DomainError);
  EXPECT_THROW(in_set(VecM{std::nan("")}, ConeSet::neg_interior), DomainError);
}

TEST(InSet, Examples) {
  EXPECT_TRUE(in_set(VecM{-1, 0}, ConeSet::neg_cone_minus_zero, 0));
  EXPECT_FALSE(in_set(VecM{-1, 0}, ConeSet::neg_interior, 0));
  const double e = std::numbers::e;
  // The monotonicity sum at p = 1, q = e.
  EXPECT_FALSE(in_set(VecM{-1 - e, -1}, ConeSet::pos_cone_minus_zero, 0));
  EXPECT_FALSE(in_set(VecM{0, 0}, ConeSet::neg_cone_minus_zero, 0));
  EXPECT_TRUE(in_set(VecM{1, 1}, ConeSet::pos_interior, 0));
}

TEST(ConeTokens, Roundtrip) {
  for (ConeStatus s :
       {ConeStatus::strictly_negative, ConeStatus::negative_dominated,
        ConeStatus::zero, ConeStatus::positive_dominated,
        ConeStatus::strictly_positive, ConeStatus::incomparable}) {
    EXPECT_EQ(parse_cone_status(to_string(s)), s);
  }
  EXPECT_THROW(parse_cone_status("neither"), UnknownIdError);
}

// Random vectors biased toward the tolerance band edges.
VecM edge_vector(testing::Gen& g, double tol) {
  VecM v(static_cast<std::size_t>(g.integer(1, 4)));
  for (double& x : v) {
    switch (g.integer(0, 5)) {
      case 0: x = 0.0; break;
      case 1: x = tol; break;
      case 2: x = -tol; break;
      case 3: x = g.uniform(-2 * tol, 2 * tol); break;
      case 4: x = g.integer(0, 1) ? inf : -inf; break;
      default: x = g.uniform(-3, 3); break;
    }
  }
  return v;
}

TEST(ClassifyProperty, MirrorSymmetry) {
  testing::Gen g(1);
  for (int k = 0; k < 5000; ++k) {
    const double tol = g.integer(0, 2) == 0 ? 0.0 : g.uniform(0, 0.5);
    VecM v = edge_vector(g, tol);
    VecM neg = v;
    for (double& x : neg) x = -x;
    EXPECT_EQ(classify(neg, tol), mirror(classify(v, tol)));
  }
}

TEST(ClassifyProperty, SetsPartitionTheStatuses) {
  testing::Gen g(2);
  for (int k = 0; k < 5000; ++k) {
    const double tol = g.uniform(0, 0.5);
    const VecM v = edge_vector(g, tol);
    const ConeStatus s = classify(v, tol);
    const bool ni = in_set(v, ConeSet::neg_interior, tol);
    const bool nc = in_set(v, ConeSet::neg_cone_minus_zero, tol);
    const bool pi = in_set(v, ConeSet::pos_interior, tol);
    const bool pc = in_set(v, ConeSet::pos_cone_minus_zero, tol);
    EXPECT_TRUE(!ni || nc);
    EXPECT_TRUE(!pi || pc);
    EXPECT_FALSE(nc && pc);
    EXPECT_EQ(!nc && !pc,
              s == ConeStatus::zero || s == ConeStatus::incomparable);
    // Independent recount of the definition.
    std::size_t neg = 0, pos = 0;
    for (double x : v) {
      neg += x < -tol;
      pos += x > tol;
    }
    EXPECT_EQ(ni, neg == v.size());
    EXPECT_EQ(pc, pos > 0 && neg == 0);
  }
}

TEST(ClassifyProperty, InteriorMembershipShrinksWithTolerance) {
  testing::Gen g(3);
  for (int k = 0; k < 5000; ++k) {
    const double t1 = g.uniform(0, 1);
    const double t2 = g.uniform(0, t1);
    const VecM v = edge_vector(g, t1);
    if (in_set(v, ConeSet::neg_interior, t1)) {
      EXPECT_TRUE(in_set(v, ConeSet::neg_interior, t2));
    }
  }
}

TEST(VecMArithmetic, LengthMismatchThrows) {
  EXPECT_THROW((void)(VecM{1, 2} + VecM{1}), DimensionError);
  EXPECT_EQ((VecM{1, 2} - VecM{1, 1}), (VecM{0, 1}));
  EXPECT_EQ((2.0 * VecM{1, -1}), (VecM{2, -2}));
}

}  // namespace
}  // namespace vvilab
