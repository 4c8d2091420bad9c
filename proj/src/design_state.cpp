#include "cwoful/design_state.hpp"

#include <cmath>
#include <string>

#include "cwoful/errors.hpp"

namespace cwoful {

WeightedDesignState::WeightedDesignState(int dim, double lambda,
                                         std::size_t refresh_interval)
    : dim_(dim), lambda_(lambda), refresh_interval_(refresh_interval) {
  if (dim < 1) {
    throw ConfigurationError("design state: dim must be >= 1, got " +
                             std::to_string(dim));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigurationError("design state: lambda must be finite and > 0, got " +
                             std::to_string(lambda));
  }
  cov_ = lambda * Matrix::Identity(dim, dim);
  cov_inv_ = (1.0 / lambda) * Matrix::Identity(dim, dim);
  response_ = Vector::Zero(dim);
  theta_hat_ = Vector::Zero(dim);
  logdet_ = dim * std::log(lambda);
  scratch_ = Vector::Zero(dim);
}

void WeightedDesignState::check_vector(const Vector& x, const char* what) const {
  if (x.size() != dim_) {
    throw ContractError(std::string(what) + ": expected dimension " +
                        std::to_string(dim_) + ", got " +
                        std::to_string(x.size()));
  }
  if (!x.allFinite()) {
    throw ContractError(std::string(what) + ": non-finite entry");
  }
}

void WeightedDesignState::update(const Vector& x, double reward, double weight) {
  check_vector(x, "update");
  if (!std::isfinite(reward)) throw ContractError("update: non-finite reward");
  if (!(weight > 0.0 && weight <= 1.0)) {
    throw ContractError("update: weight must lie in (0, 1], got " +
                        std::to_string(weight));
  }

  scratch_.noalias() = cov_inv_ * x;
  const double q = x.dot(scratch_);
  const double scale = weight / (1.0 + weight * q);
  cov_inv_.noalias() -= scale * scratch_ * scratch_.transpose();
  cov_inv_ = 0.5 * (cov_inv_ + cov_inv_.transpose()).eval();
  logdet_ += std::log1p(weight * q);

  cov_.noalias() += weight * x * x.transpose();
  cov_ = 0.5 * (cov_ + cov_.transpose()).eval();
  response_ += (weight * reward) * x;
  ++num_updates_;

  if (refresh_interval_ > 0 && num_updates_ % refresh_interval_ == 0) {
    last_refresh_drift_ = inverse_residual();
    refresh();
  }
  theta_hat_.noalias() = cov_inv_ * response_;
}

void WeightedDesignState::refresh() {
  Eigen::LLT<Matrix> llt(cov_);
  cov_inv_ = llt.solve(Matrix::Identity(dim_, dim_));
  cov_inv_ = 0.5 * (cov_inv_ + cov_inv_.transpose()).eval();
  logdet_ = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
  theta_hat_.noalias() = cov_inv_ * response_;
}

double WeightedDesignState::bonus(const Vector& x) const {
  check_vector(x, "bonus");
  const double q = x.dot(cov_inv_ * x);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

double WeightedDesignState::estimation_error(const Vector& theta_star) const {
  if (theta_star.size() != dim_) {
    throw ContractError("estimation_error: dimension mismatch");
  }
  const Vector diff = theta_hat_ - theta_star;
  const double q = diff.dot(cov_ * diff);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

double WeightedDesignState::inverse_residual() const {
  return (cov_ * cov_inv_ - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

}  // namespace cwoful
