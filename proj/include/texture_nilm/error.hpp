#pragma once

#include <stdexcept>
#include <string>

namespace tnilm {

enum class ErrorCode {
  InvalidConfig,
  AllZeroSignal,
  WindowTooShort,
  OutOfInterior,
  MatrixTooSmall,
  EmptyHistogram,
  DegenerateProduct,
  DimensionMismatch,
  EmptyTrainingSet,
  TooFewSamplesPerClass,
  MalformedCsv,
  NonMonotoneTimestamps,
  EmptyDataset,
  Io,
  NoEvents,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures surface as this type; the code drives the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace tnilm
