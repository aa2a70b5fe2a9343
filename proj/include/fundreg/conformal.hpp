#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "fundreg/report.hpp"

namespace fundreg {

/// phi(x) = e^s x on punctured R^d. In the log-radius coordinate t = log|x|
/// phi is the translation t -> t + s.
class HomothetyModel {
 public:
  HomothetyModel(int dimension, double s);

  int dimension() const noexcept { return dimension_; }
  double s() const noexcept { return s_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return std::exp(s_) * x; }
  /// Jacobian of phi, e^s times the identity.
  Eigen::MatrixXd jacobian() const;
  double log_radius(const Eigen::VectorXd& x) const { return std::log(x.norm()); }

 private:
  int dimension_;
  double s_;
};

/// Smooth plateau: 1 on the band between 0 and s, support in (-|s|/2, |s|+|s|/2).
class BumpProfile {
 public:
  explicit BumpProfile(double s);
  double operator()(double t) const;

 private:
  double lo_;
  double hi_;
  double ramp_;
};

/// Values on the grid t_n = (n - offset) h.
struct ScalarField {
  double h = 0;
  long offset = 0;
  Eigen::VectorXd values;

  double t(Eigen::Index n) const { return static_cast<double>(n - offset) * h; }
  Eigen::Index size() const { return values.size(); }
};

/// f_i for |i| <= K+1 on the grid over [-Ks, (K+1)s] with h = s/M.
struct Partition {
  double s = 0;
  int K = 0;
  long M = 0;
  std::vector<ScalarField> fields;  ///< fields[i + K + 1] is f_i

  const ScalarField& f(int i) const { return fields.at(static_cast<std::size_t>(i + K + 1)); }
  /// Grid indices of the interior window [-(K-1)s, Ks], where the truncated
  /// sum agrees with the infinite one.
  Eigen::Index window_begin() const { return M; }
  Eigen::Index window_end() const { return (2 * K + 1) * M + 1; }
};

/// Throws std::invalid_argument unless s/h is an integer and K >= 3.
Partition build_partition(const HomothetyModel& model, const BumpProfile& profile, int K, double h);
/// f = -s sum_i i f_i.
ScalarField build_rescaling(const Partition& p, double s);

struct PartitionStats {
  double max_sum_error = 0;   ///< |sum_i f_i - 1| on the window
  double min_value = 0;
  int max_overlap = 0;        ///< nonzero f_i at one grid point
  double max_shift_error = 0; ///< |f_{i+1}(t+s) - f_i(t)|
};
PartitionStats partition_stats(const Partition& p);

/// max |f(t+s) - (f(t) - s)| over t, t+s in the window.
double equivariance_error(const Partition& p, const ScalarField& f);
/// max |(f+t)(t+s) - (f+t)(t)| over the same range.
double periodicity_error(const Partition& p, const ScalarField& f);

/// Compares e^{2f(phi x)} e^{2s} with e^{2f(x)} at radial grid points along
/// fixed directions; verified when the max relative error is below tol.
VerificationReport verify_isometry(const HomothetyModel& model, const Partition& p, const ScalarField& f,
                                   double tol = 1e-9);

/// Rows (t, f(t), f(t+s) - f(t)) on the window.
std::string conformal_csv(const Partition& p, const ScalarField& f);
nlohmann::json conformal_json(const Partition& p, const ScalarField& f);

}  // namespace fundreg
