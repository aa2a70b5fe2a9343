#include <gtest/gtest.h>

#include <cmath>

#include "fundreg/conformal.hpp"

using namespace fundreg;

namespace {

constexpr int kK = 6;
constexpr long kM = 64;

// Direct recomputation: f_i(t) = b(t - i s) / sum_j b(t - j s) with the sum over all j.
double oracle_fi(const BumpProfile& b, double s, int i, double t) {
  double total = 0;
  for (int j = -200; j <= 200; ++j) total += b(t - j * s);
  return b(t - i * s) / total;
}

class ConformalScale : public ::testing::TestWithParam<double> {};

}  // namespace

TEST(Bump, PlateauSupportAndRange) {
  for (double s : {0.3, 0.7, 1.5, -0.7}) {
    const BumpProfile b(s);
    const double lo = std::min(0.0, s), hi = std::max(0.0, s), r = std::abs(s) / 2;
    for (int n = 0; n <= 200; ++n) {
      const double t = lo - 2 * r + (hi - lo + 4 * r) * n / 200.0;
      const double v = b(t);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      if (t >= lo && t <= hi) EXPECT_DOUBLE_EQ(v, 1.0) << t;
      if (t <= lo - r || t >= hi + r) EXPECT_EQ(v, 0.0) << t;
      if (t > lo - r && t < hi + r) EXPECT_GT(v, 0.0) << t;
    }
  }
}

TEST_P(ConformalScale, PartitionOfUnityAndShift) {
  const double s = GetParam();
  const HomothetyModel model(2, s);
  const BumpProfile bump(s);
  const Partition p = build_partition(model, bump, kK, s / kM);
  const PartitionStats st = partition_stats(p);
  EXPECT_LT(st.max_sum_error, 1e-12);
  EXPECT_GE(st.min_value, 0.0);
  EXPECT_LE(st.max_overlap, 2);
  EXPECT_LT(st.max_shift_error, 1e-14);

  for (int i = -2; i <= 2; ++i)
    for (Eigen::Index n = p.window_begin(); n < p.window_end(); n += 7) {
      const double t = p.f(i).t(n);
      EXPECT_NEAR(p.f(i).values[n], oracle_fi(bump, s, i, t), 1e-13) << i << " " << t;
    }
}

TEST_P(ConformalScale, RescalingEquivariantAndIsometric) {
  const double s = GetParam();
  const HomothetyModel model(2, s);
  const Partition p = build_partition(model, BumpProfile(s), kK, s / kM);
  const ScalarField f = build_rescaling(p, s);
  EXPECT_LT(equivariance_error(p, f), 1e-10);
  EXPECT_LT(periodicity_error(p, f), 1e-10);
  const auto rep = verify_isometry(model, p, f);
  EXPECT_EQ(rep.verdict, Verdict::Verified) << to_json(rep).dump();

  // Pointwise: f(t + s) = f(t) - s, checked independently of the helpers.
  for (Eigen::Index n = p.window_begin(); n + kM < p.window_end(); n += 5)
    EXPECT_NEAR(f.values[n + kM], f.values[n] - s, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Scales, ConformalScale, ::testing::Values(0.3, 0.7, 1.5));

TEST(Partition, FirstFieldIsOneOnlyAtHalfStep) {
  const double s = 0.7;
  const Partition p = build_partition(HomothetyModel(2, s), BumpProfile(s), kK, s / kM);
  const Eigen::Index half = p.f(0).offset + kM / 2;
  EXPECT_NEAR(p.f(0).values[half], 1.0, 1e-15);
  for (int i = -kK - 1; i <= kK + 1; ++i)
    if (i != 0) EXPECT_NEAR(p.f(i).values[half], 0.0, 1e-15) << i;
  // At the plateau edges two neighbours share the point.
  EXPECT_LT(p.f(0).values[p.f(0).offset], 1.0);
}

TEST(Partition, RejectsBadParameters) {
  EXPECT_THROW(HomothetyModel(2, 0.0), std::invalid_argument);
  EXPECT_THROW(HomothetyModel(0, 0.5), std::invalid_argument);
  EXPECT_THROW(BumpProfile(0.0), std::invalid_argument);
  const HomothetyModel m(2, 0.7);
  EXPECT_THROW(build_partition(m, BumpProfile(0.7), kK, 0.7 / 64.5), std::invalid_argument);
  EXPECT_THROW(build_partition(m, BumpProfile(0.7), 2, 0.7 / 64), std::invalid_argument);
}

TEST(Partition, NegativeScale) {
  const double s = -0.7;
  const HomothetyModel model(3, s);
  const Partition p = build_partition(model, BumpProfile(s), kK, std::abs(s) / kM);
  EXPECT_LT(partition_stats(p).max_sum_error, 1e-12);
  const ScalarField f = build_rescaling(p, s);
  EXPECT_EQ(verify_isometry(model, p, f).verdict, Verdict::Verified);
}

TEST(Isometry, NullRescalingIsRefuted) {
  const double s = 0.3;
  const HomothetyModel model(2, s);
  const Partition p = build_partition(model, BumpProfile(s), kK, s / kM);
  ScalarField zero = build_rescaling(p, s);
  zero.values.setZero();
  const auto rep = verify_isometry(model, p, zero);
  EXPECT_EQ(rep.verdict, Verdict::Refuted);
  const double err = std::stod(rep.counts[0]["max_relative_error"].get<std::string>());
  EXPECT_GE(err, std::exp(2 * s) - 1 - 1e-9);
}

TEST(Model, HomothetyAndJacobian) {
  const HomothetyModel m(3, 0.5);
  Eigen::VectorXd x(3);
  x << 1.0, -2.0, 0.5;
  EXPECT_NEAR((m.apply(x) - std::exp(0.5) * x).norm(), 0.0, 1e-15);
  EXPECT_NEAR((m.jacobian() - std::exp(0.5) * Eigen::MatrixXd::Identity(3, 3)).norm(), 0.0, 1e-15);
  EXPECT_NEAR(m.log_radius(m.apply(x)) - m.log_radius(x), 0.5, 1e-14);
}

TEST(Output, CsvAndJsonAreDeterministic) {
  const double s = 0.7;
  const Partition p = build_partition(HomothetyModel(2, s), BumpProfile(s), kK, s / 16);
  const ScalarField f = build_rescaling(p, s);
  const std::string csv = conformal_csv(p, f);
  EXPECT_EQ(csv, conformal_csv(p, f));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,f,shift_difference");
  EXPECT_EQ(conformal_json(p, f).dump(), conformal_json(p, f).dump());
}
