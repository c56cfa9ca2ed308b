#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itrval {

// Binary treatment label. Canonical coding is {0,1}; D-learning recodes to
// {-1,+1} through arm_pm1/arm_from_pm1 (a pure bijection, 0 <-> -1, 1 <-> +1).
enum class Arm : int { a0 = 0, a1 = 1 };

inline int arm_code(Arm a) { return static_cast<int>(a); }
inline int arm_pm1(Arm a) { return a == Arm::a1 ? 1 : -1; }
Arm arm_from_code(int code);
Arm arm_from_pm1(int pm1);

// One cohort row. Only covariates may be missing; arm and outcome are
// mandatory and enforced at ingestion.
struct Subject {
  std::string id;
  std::vector<std::optional<double>> covariates;
  Arm arm = Arm::a0;
  double outcome = 0.0;
};

class Dataset {
public:
  Dataset() = default;
  // Validates: unique ids, uniform covariate length p = covariate_names.size().
  Dataset(std::vector<Subject> subjects, std::vector<std::string> covariate_names);

  std::size_t n() const { return subjects_.size(); }
  std::size_t p() const { return covariate_names_.size(); }
  const std::vector<Subject>& subjects() const { return subjects_; }
  const Subject& subject(std::size_t i) const { return subjects_[i]; }
  const std::vector<std::string>& covariate_names() const { return covariate_names_; }

  bool is_complete() const;
  std::size_t missing_cell_count() const;

  // Dense n x p covariate matrix; throws MissingCovariate if any cell is absent.
  Eigen::MatrixXd covariate_matrix() const;
  Eigen::VectorXd outcomes() const;
  Eigen::VectorXd arms01() const;

private:
  std::vector<Subject> subjects_;
  std::vector<std::string> covariate_names_;
};

struct Split {
  Dataset train;
  Dataset test;
};

// Seeded uniform permutation split; |train| = round(train_fraction * N).
// Deterministic for a fixed (data, fraction, seed).
Split split(const Dataset& data, double train_fraction, std::uint64_t seed);

// Default covariate names x1..xp.
std::vector<std::string> default_covariate_names(std::size_t p);

}  // namespace itrval
