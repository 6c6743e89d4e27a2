#pragma once

#include <stdexcept>
#include <string>

namespace sparsebody {

/// Broad failure class, mapped onto CLI exit codes.
enum class ErrorKind { kUsage, kData, kNumeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define SPARSEBODY_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, #Name ": " + what) {} \
  };

SPARSEBODY_DEFINE_ERROR(OutOfRangeHeight, kData)
SPARSEBODY_DEFINE_ERROR(NotStanding, kData)
SPARSEBODY_DEFINE_ERROR(InvalidSkeleton, kData)
SPARSEBODY_DEFINE_ERROR(UnsupportedChannelOrder, kData)
SPARSEBODY_DEFINE_ERROR(MissingJointMapping, kData)
SPARSEBODY_DEFINE_ERROR(NoAPoseStart, kData)
SPARSEBODY_DEFINE_ERROR(FormatError, kData)
SPARSEBODY_DEFINE_ERROR(DegenerateHeading, kNumeric)
SPARSEBODY_DEFINE_ERROR(InsufficientFuture, kData)
SPARSEBODY_DEFINE_ERROR(DimensionMismatch, kData)
SPARSEBODY_DEFINE_ERROR(NegativeForce, kData)
SPARSEBODY_DEFINE_ERROR(ShapeMismatch, kData)
SPARSEBODY_DEFINE_ERROR(LengthMismatch, kData)
SPARSEBODY_DEFINE_ERROR(TooShort, kData)
SPARSEBODY_DEFINE_ERROR(LayoutVersionMismatch, kData)
SPARSEBODY_DEFINE_ERROR(ConfigError, kData)
SPARSEBODY_DEFINE_ERROR(NumericalDivergence, kNumeric)
SPARSEBODY_DEFINE_ERROR(NonFiniteLoss, kNumeric)

#undef SPARSEBODY_DEFINE_ERROR

/// BVH grammar violation; carries the 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::kData, "ParseError at " + std::to_string(line) + ":" +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace sparsebody
