#pragma once

#include <Eigen/Dense>
#include <cstddef>

namespace cwoful {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Weighted ridge-regression state
///
///   cov      = lambda I + sum_i w_i x_i x_i^T
///   response = sum_i w_i r_i x_i
///   theta    = cov^{-1} response
///
/// The inverse and log-determinant are maintained by rank-one updates
/// (O(d^2) per update). Every `refresh_interval` updates the inverse and
/// log-determinant are recomputed from a dense Cholesky factorization of
/// `cov`, which resets accumulated floating-point drift.
///
/// Not thread-safe; one state belongs to one episode.
class WeightedDesignState {
 public:
  static constexpr std::size_t kDefaultRefreshInterval = 512;

  /// Throws ConfigurationError unless dim >= 1 and lambda > 0.
  WeightedDesignState(int dim, double lambda,
                      std::size_t refresh_interval = kDefaultRefreshInterval);

  /// Folds (x, r) with weight w in (0, 1] into the state. Throws
  /// ContractError on a bad weight, a dimension mismatch or non-finite input.
  void update(const Vector& x, double reward, double weight);

  /// ||x||_{cov^{-1}} = sqrt(x^T cov^{-1} x).
  double bonus(const Vector& x) const;

  /// ||theta_hat - theta_star||_{cov}.
  double estimation_error(const Vector& theta_star) const;

  /// max-abs(cov * cov_inv - I) for the current state.
  double inverse_residual() const;

  /// Recomputes cov_inv and logdet from scratch.
  void refresh();

  int dim() const { return dim_; }
  double lambda() const { return lambda_; }
  const Matrix& cov() const { return cov_; }
  const Matrix& cov_inv() const { return cov_inv_; }
  const Vector& response() const { return response_; }
  const Vector& theta_hat() const { return theta_hat_; }
  std::size_t num_updates() const { return num_updates_; }
  double logdet() const { return logdet_; }
  std::size_t refresh_interval() const { return refresh_interval_; }
  /// inverse_residual() measured just before the most recent refresh
  /// (0 before any refresh).
  double last_refresh_drift() const { return last_refresh_drift_; }

 private:
  void check_vector(const Vector& x, const char* what) const;

  int dim_;
  double lambda_;
  std::size_t refresh_interval_;
  Matrix cov_;
  Matrix cov_inv_;
  Vector response_;
  Vector theta_hat_;
  std::size_t num_updates_ = 0;
  double logdet_;
  double last_refresh_drift_ = 0.0;
  Vector scratch_;
};

}  // namespace cwoful
