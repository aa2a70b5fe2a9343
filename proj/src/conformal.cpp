#include "fundreg/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fundreg/parallel.hpp"

namespace fundreg {

HomothetyModel::HomothetyModel(int dimension, double s) : dimension_(dimension), s_(s) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  if (s == 0.0 || !std::isfinite(s)) throw std::invalid_argument("scale exponent s must be a non-zero real");
}

Eigen::MatrixXd HomothetyModel::jacobian() const {
  return std::exp(s_) * Eigen::MatrixXd::Identity(dimension_, dimension_);
}

namespace {

double psi(double x) { return x > 0 ? std::exp(-1.0 / x) : 0.0; }

/// 0 for x <= 0, 1 for x >= 1, smooth in between.
double smooth_step(double x) {
  const double a = psi(x);
  const double b = psi(1.0 - x);
  return a / (a + b);
}

}  // namespace

BumpProfile::BumpProfile(double s) {
  if (s == 0.0) throw std::invalid_argument("scale exponent s must be a non-zero real");
  lo_ = std::min(0.0, s);
  hi_ = std::max(0.0, s);
  ramp_ = std::abs(s) / 2;
}

double BumpProfile::operator()(double t) const {
  return smooth_step((t - lo_ + ramp_) / ramp_) * smooth_step((hi_ + ramp_ - t) / ramp_);
}

Partition build_partition(const HomothetyModel& model, const BumpProfile& profile, int K, double h) {
  if (K < 3) throw std::invalid_argument("K must be at least 3");
  const double s = model.s();
  if (!(h > 0)) throw std::invalid_argument("grid step must be positive");
  const double ratio = std::abs(s) / h;
  const long M = std::lround(ratio);
  if (M < 1 || std::abs(ratio - static_cast<double>(M)) > 1e-9 * ratio)
    throw std::invalid_argument("grid step does not divide s");

  Partition p;
  p.s = s;
  p.K = K;
  p.M = M;
  const double step = s / static_cast<double>(M);  // signed, so t_n - i s stays on the grid
  const long points = (2 * K + 1) * M + 1;
  const long offset = static_cast<long>(K) * M;

  // hat(k) = bump(k * step): every shifted copy reads the same samples.
  const long lo = -offset - (K + 1) * M;
  const long hi = points - offset + (K + 1) * M;
  std::vector<double> hat(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(hat.size(), [&](std::size_t k) { hat[k] = profile(static_cast<double>(static_cast<long>(k) + lo) * step); });
  auto hat_at = [&](long k) { return hat[static_cast<std::size_t>(k - lo)]; };

  std::vector<Eigen::VectorXd> raw;
  for (int i = -(K + 1); i <= K + 1; ++i) {
    Eigen::VectorXd v(points);
    for (long n = 0; n < points; ++n) v(n) = hat_at(n - offset - i * M);
    raw.push_back(std::move(v));
  }
  Eigen::VectorXd total = Eigen::VectorXd::Zero(points);
  for (const auto& v : raw) total += v;
  for (auto& v : raw) {
    ScalarField f{step, offset, Eigen::VectorXd::Zero(points)};
    for (long n = 0; n < points; ++n)
      if (total(n) > 0) f.values(n) = v(n) / total(n);
    p.fields.push_back(std::move(f));
  }
  return p;
}

ScalarField build_rescaling(const Partition& p, double s) {
  ScalarField f = p.fields.front();
  f.values.setZero();
  for (int i = -(p.K + 1); i <= p.K + 1; ++i) f.values += static_cast<double>(i) * p.f(i).values;
  f.values *= -s;
  return f;
}

PartitionStats partition_stats(const Partition& p) {
  PartitionStats st;
  st.min_value = p.fields.front().values.minCoeff();
  for (const auto& f : p.fields) st.min_value = std::min(st.min_value, f.values.minCoeff());
  for (Eigen::Index n = p.window_begin(); n < p.window_end(); ++n) {
    double sum = 0;
    int nonzero = 0;
    for (const auto& f : p.fields) {
      sum += f.values(n);
      if (f.values(n) != 0.0) ++nonzero;
    }
    st.max_sum_error = std::max(st.max_sum_error, std::abs(sum - 1.0));
    st.max_overlap = std::max(st.max_overlap, nonzero);
  }
  for (int i = -(p.K + 1); i < p.K + 1; ++i)
    for (Eigen::Index n = 0; n + p.M < p.fields.front().size(); ++n) {
      if (n < p.window_begin() || n + p.M >= p.window_end()) continue;
      st.max_shift_error = std::max(st.max_shift_error, std::abs(p.f(i + 1).values(n + p.M) - p.f(i).values(n)));
    }
  return st;
}

double equivariance_error(const Partition& p, const ScalarField& f) {
  double worst = 0;
  for (Eigen::Index n = p.window_begin(); n + p.M < p.window_end(); ++n)
    worst = std::max(worst, std::abs(f.values(n + p.M) - (f.values(n) - p.s)));
  return worst;
}

double periodicity_error(const Partition& p, const ScalarField& f) {
  double worst = 0;
  for (Eigen::Index n = p.window_begin(); n + p.M < p.window_end(); ++n) {
    const double here = f.values(n) + f.t(n);
    const double there = f.values(n + p.M) + f.t(n + p.M);
    worst = std::max(worst, std::abs(there - here));
  }
  return worst;
}

VerificationReport verify_isometry(const HomothetyModel& model, const Partition& p, const ScalarField& f,
                                   double tol) {
  VerificationReport rep{"conformal-isometry", Verdict::Verified, static_cast<unsigned>(p.K),
                         static_cast<unsigned>(p.M)};
  const int d = model.dimension();
  std::vector<Eigen::VectorXd> dirs;
  for (int k = 0; k < d; ++k) dirs.push_back(Eigen::VectorXd::Unit(d, k));
  dirs.push_back(Eigen::VectorXd::Ones(d).normalized());
  if (d >= 2) {
    Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(d, 1.0, static_cast<double>(d));
    v(1) = -v(1);
    dirs.push_back(v.normalized());
  }
  const double scale = std::exp(2 * model.s());
  double worst = 0;
  Eigen::Index worst_n = -1;
  std::size_t samples = 0;
  std::size_t off_grid = 0;
  for (Eigen::Index n = p.window_begin(); n + p.M < p.window_end(); ++n) {
    for (const auto& u : dirs) {
      const Eigen::VectorXd x = std::exp(f.t(n)) * u;
      const Eigen::VectorXd y = model.apply(x);
      const double ty = model.log_radius(y);
      const auto m = static_cast<Eigen::Index>(std::llround(ty / f.h)) + f.offset;
      if (m < 0 || m >= f.size() || std::abs(f.t(m) - ty) > 1e-9 * std::max(1.0, std::abs(ty))) {
        ++off_grid;
        continue;
      }
      const double pulled = std::exp(2 * f.values(m)) * scale;
      const double here = std::exp(2 * f.values(n));
      const double err = std::abs(pulled - here) / here;
      ++samples;
      if (err > worst) {
        worst = err;
        worst_n = n;
      }
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", worst);
  rep.counts.push_back({{"samples", samples}, {"off_grid", off_grid}, {"max_relative_error", buf}});
  if (off_grid > 0 || samples == 0) {
    rep.verdict = Verdict::Inconclusive;
  } else if (worst >= tol) {
    rep.verdict = Verdict::Refuted;
    std::snprintf(buf, sizeof buf, "%.6f", f.t(worst_n));
    rep.witnesses.push_back({{"t", buf}, {"relative_error", rep.counts[0]["max_relative_error"]}});
  }
  return rep;
}

std::string conformal_csv(const Partition& p, const ScalarField& f) {
  std::string out = "t,f,shift_difference\n";
  char line[96];
  for (Eigen::Index n = p.window_begin(); n + p.M < p.window_end(); ++n) {
    std::snprintf(line, sizeof line, "%.12f,%.12f,%.12f\n", f.t(n), f.values(n), f.values(n + p.M) - f.values(n));
    out += line;
  }
  return out;
}

nlohmann::json conformal_json(const Partition& p, const ScalarField& f) {
  nlohmann::json rows = nlohmann::json::array();
  char a[32], b[32], c[32];
  for (Eigen::Index n = p.window_begin(); n + p.M < p.window_end(); ++n) {
    std::snprintf(a, sizeof a, "%.12f", f.t(n));
    std::snprintf(b, sizeof b, "%.12f", f.values(n));
    std::snprintf(c, sizeof c, "%.12f", f.values(n + p.M) - f.values(n));
    rows.push_back({{"t", a}, {"f", b}, {"shift_difference", c}});
  }
  return {{"s", p.s}, {"K", p.K}, {"grid", p.M}, {"rows", rows}};
}

}  // namespace fundreg
