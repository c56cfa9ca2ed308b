#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

namespace itrval {

enum class GlmFamily { gaussian, binomial };

// Elastic-net penalized GLM fit. Coefficients are reported on the original
// covariate scale; the intercept is never penalized. The objective minimized
// is sum_i w~_i * loss(y_i, eta_i) + lambda * (alpha*|beta|_1 +
// (1-alpha)/2*|beta|_2^2), with weights normalized to sum 1, loss =
// (y-eta)^2/2 for gaussian and the negative Bernoulli log-likelihood for
// binomial, and the penalty applied on internally standardized columns.
struct PenalizedFit {
  double intercept = 0.0;
  Eigen::VectorXd coefficients;
  double alpha = 1.0;
  double lambda = 0.0;
  GlmFamily family = GlmFamily::gaussian;
  int n_iterations = 0;  // coordinate-descent sweeps
  bool converged = false;
  std::vector<double> objective_trace;  // filled when options.track_objective

  Eigen::VectorXd linear_predictor(const Eigen::MatrixXd& x) const;
  Eigen::VectorXd predict_mean(const Eigen::MatrixXd& x) const;
};

struct ElasticNetOptions {
  int max_sweeps = 10000;
  double tol = 1e-9;  // max absolute coefficient change, standardized scale
  bool track_objective = false;
};

PenalizedFit fit_elastic_net(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                             const std::optional<Eigen::VectorXd>& weights,
                             GlmFamily family, double alpha, double lambda,
                             const ElasticNetOptions& options = {});

// Smallest lambda for which every slope coefficient is zero.
double lambda_max(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                  const std::optional<Eigen::VectorXd>& weights, GlmFamily family,
                  double alpha);

struct CvSelection {
  double lambda_star = 0.0;
  PenalizedFit fit;  // refit on all data at lambda_star
  std::vector<double> lambda_path;
  std::vector<double> mean_deviance;  // out-of-fold, aligned with lambda_path
};

// K-fold cross-validated penalty selection over a 100-point log-spaced path
// from lambda_max down to 1e-3*lambda_max (unless a path is supplied).
// lambda_star minimizes mean out-of-fold deviance; ties go to the larger
// lambda. Deterministic for a fixed seed.
CvSelection cv_select(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      const std::optional<Eigen::VectorXd>& weights, GlmFamily family,
                      double alpha, int n_folds,
                      const std::optional<std::vector<double>>& lambda_path,
                      std::uint64_t seed, const ElasticNetOptions& options = {});

// Maximum-likelihood logistic regression via Newton-Raphson. theta is
// intercept-first over (1, X); covariance is the inverse observed Fisher
// information (X^T W X)^{-1} with W = diag(pi_hat * (1 - pi_hat)).
struct MleFit {
  Eigen::VectorXd theta;
  Eigen::MatrixXd covariance;
  double log_likelihood = 0.0;
  bool converged = false;
};

MleFit fit_mle_logistic(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

inline double expit(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace itrval
