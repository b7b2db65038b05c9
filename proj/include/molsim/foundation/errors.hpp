#pragma once

#include <stdexcept>
#include <string>

namespace molsim {

/// Base class for every error raised by the library. `kind()` returns the
/// stable error name used in CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MOLSIM_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

MOLSIM_DEFINE_ERROR(IncompatibleUnits);
MOLSIM_DEFINE_ERROR(DomainError);
MOLSIM_DEFINE_ERROR(InvalidArgument);
MOLSIM_DEFINE_ERROR(PreconditionViolated);
MOLSIM_DEFINE_ERROR(DimensionOverflow);
MOLSIM_DEFINE_ERROR(NotHermitian);
MOLSIM_DEFINE_ERROR(IntegrationFailure);
MOLSIM_DEFINE_ERROR(GridTooNarrow);
MOLSIM_DEFINE_ERROR(InvalidState);
MOLSIM_DEFINE_ERROR(StepSizeUnderflow);
MOLSIM_DEFINE_ERROR(DegenerateSteadyState);
MOLSIM_DEFINE_ERROR(SingularNetwork);
MOLSIM_DEFINE_ERROR(EmptyPopulation);
MOLSIM_DEFINE_ERROR(EmptyDataset);
MOLSIM_DEFINE_ERROR(DegenerateFit);
MOLSIM_DEFINE_ERROR(KetSyntaxError);

#undef MOLSIM_DEFINE_ERROR

/// Malformed tabular input. Rows and columns are 1-based; row 1 is the header.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& reason)
      : Error("ParseError", "row " + std::to_string(row) + ", column " +
                                std::to_string(column) + ": " + reason),
        row_(row),
        column_(column),
        reason_(reason) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t row_;
  std::size_t column_;
  std::string reason_;
};

}  // namespace molsim
