#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tnilm {

/// 8-bit quantized matrix stored row-major.
class Matrix2D {
 public:
  Matrix2D() = default;
  Matrix2D(std::size_t rows, std::size_t cols, std::uint8_t fill = 0);
  Matrix2D(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> cells);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept { return cells_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) noexcept { return cells_[r * cols_ + c]; }

  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

  bool operator==(const Matrix2D&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

inline constexpr std::size_t kMinWindowLen = 9;

/// Smallest n with n * n >= len.
std::size_t ceil_sqrt(std::size_t len) noexcept;

/// Min-max quantization of a window to [0, 255], rounding half up. A window
/// with zero range maps to all zeros.
std::vector<std::uint8_t> quantize(std::span<const double> window);

/// Quantizes and lays the window out row-major on a ceil(sqrt(L)) square grid.
/// Cells past the end of the window repeat the last quantized sample.
Matrix2D reshape(std::span<const double> window);

}  // namespace tnilm
