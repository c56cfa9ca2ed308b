#pragma once

#include <stdexcept>
#include <string>

namespace itrval {

// Base error carrying a stable machine-readable kind tag. The CLI prints
// "<kind>: <message>" on stderr and maps kinds to exit codes.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define ITRVAL_DEFINE_ERROR(Name)                          \
  class Name : public Error {                              \
  public:                                                  \
    explicit Name(const std::string& message)              \
        : Error(#Name, message) {}                         \
  }

// data_core
ITRVAL_DEFINE_ERROR(EmptyDataset);
ITRVAL_DEFINE_ERROR(BadFraction);
ITRVAL_DEFINE_ERROR(ParseError);
ITRVAL_DEFINE_ERROR(SchemaError);

// glm_solver
ITRVAL_DEFINE_ERROR(NonFiniteInput);
ITRVAL_DEFINE_ERROR(Separation);
ITRVAL_DEFINE_ERROR(SingularInformation);
ITRVAL_DEFINE_ERROR(BadArgument);

// propensity
ITRVAL_DEFINE_ERROR(KnownModelHasNoPhi);

// regimes
ITRVAL_DEFINE_ERROR(MissingCovariate);

// value_inference
ITRVAL_DEFINE_ERROR(NoConcordantSubjects);
ITRVAL_DEFINE_ERROR(DegenerateComparison);

// mi_pooling
ITRVAL_DEFINE_ERROR(AllMissingColumn);
ITRVAL_DEFINE_ERROR(InsufficientRows);
ITRVAL_DEFINE_ERROR(DimensionMismatch);
ITRVAL_DEFINE_ERROR(LengthMismatch);

// simulation / cli
ITRVAL_DEFINE_ERROR(ConfigError);

#undef ITRVAL_DEFINE_ERROR

}  // namespace itrval
