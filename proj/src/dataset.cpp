#include "itrval/dataset.hpp"

#include <cmath>
#include <unordered_set>

#include "itrval/errors.hpp"
#include "itrval/rng.hpp"

namespace itrval {

Arm arm_from_code(int code) {
  if (code == 0) return Arm::a0;
  if (code == 1) return Arm::a1;
  throw SchemaError("arm code must be 0 or 1, got " + std::to_string(code));
}

Arm arm_from_pm1(int pm1) {
  if (pm1 == -1) return Arm::a0;
  if (pm1 == 1) return Arm::a1;
  throw SchemaError("arm +-1 code must be -1 or +1, got " + std::to_string(pm1));
}

Dataset::Dataset(std::vector<Subject> subjects, std::vector<std::string> covariate_names)
    : subjects_(std::move(subjects)), covariate_names_(std::move(covariate_names)) {
  std::unordered_set<std::string> seen;
  seen.reserve(subjects_.size());
  for (const Subject& s : subjects_) {
    if (s.covariates.size() != covariate_names_.size()) {
      throw SchemaError("subject '" + s.id + "' has " +
                        std::to_string(s.covariates.size()) + " covariates, expected " +
                        std::to_string(covariate_names_.size()));
    }
    if (!std::isfinite(s.outcome)) {
      throw SchemaError("subject '" + s.id + "' has non-finite outcome");
    }
    if (!seen.insert(s.id).second) {
      throw SchemaError("duplicate subject id '" + s.id + "'");
    }
  }
}

bool Dataset::is_complete() const { return missing_cell_count() == 0; }

std::size_t Dataset::missing_cell_count() const {
  std::size_t count = 0;
  for (const Subject& s : subjects_) {
    for (const auto& cell : s.covariates) {
      if (!cell.has_value()) ++count;
    }
  }
  return count;
}

Eigen::MatrixXd Dataset::covariate_matrix() const {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n()), static_cast<Eigen::Index>(p()));
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < p(); ++j) {
      const auto& cell = subjects_[i].covariates[j];
      if (!cell.has_value()) {
        throw MissingCovariate("subject '" + subjects_[i].id + "' is missing covariate " +
                               covariate_names_[j]);
      }
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *cell;
    }
  }
  return x;
}

Eigen::VectorXd Dataset::outcomes() const {
  Eigen::VectorXd y(static_cast<Eigen::Index>(n()));
  for (std::size_t i = 0; i < n(); ++i) y(static_cast<Eigen::Index>(i)) = subjects_[i].outcome;
  return y;
}

Eigen::VectorXd Dataset::arms01() const {
  Eigen::VectorXd a(static_cast<Eigen::Index>(n()));
  for (std::size_t i = 0; i < n(); ++i) {
    a(static_cast<Eigen::Index>(i)) = static_cast<double>(arm_code(subjects_[i].arm));
  }
  return a;
}

Split split(const Dataset& data, double train_fraction, std::uint64_t seed) {
  if (data.n() < 2) {
    throw EmptyDataset("split requires at least 2 rows, got " + std::to_string(data.n()));
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw BadFraction("train_fraction must lie in (0,1), got " + std::to_string(train_fraction));
  }
  const std::size_t n = data.n();
  std::size_t n_train =
      static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
  // Both halves must be non-empty.
  if (n_train == 0) n_train = 1;
  if (n_train == n) n_train = n - 1;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);

  std::vector<Subject> train_rows;
  std::vector<Subject> test_rows;
  train_rows.reserve(n_train);
  test_rows.reserve(n - n_train);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < n_train) {
      train_rows.push_back(data.subject(order[i]));
    } else {
      test_rows.push_back(data.subject(order[i]));
    }
  }
  return Split{Dataset(std::move(train_rows), data.covariate_names()),
               Dataset(std::move(test_rows), data.covariate_names())};
}

std::vector<std::string> default_covariate_names(std::size_t p) {
  std::vector<std::string> names;
  names.reserve(p);
  for (std::size_t j = 1; j <= p; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

}  // namespace itrval
