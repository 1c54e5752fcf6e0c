#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "texture_nilm/transform2d.hpp"

namespace tnilm {

inline constexpr std::size_t kHistogramBins = 256;

struct DescriptorConfig {
  std::size_t patch_size = 3;         // only 3x3 patches are supported
  std::size_t orientation_bins = 8;   // T
  std::size_t excitation_bins = 32;   // Mx, with T * Mx == 256
  double epsilon = 1.0;               // floor for the center value in the excitation ratio

  void validate() const;
};

enum class DescriptorKind { Lbp, Wld };

struct DescriptorHistogram {
  std::array<std::uint32_t, kHistogramBins> bins{};
  DescriptorKind kind = DescriptorKind::Lbp;

  std::uint64_t total() const noexcept;
  bool operator==(const DescriptorHistogram&) const = default;
};

struct WldResponse {
  double excitation = 0.0;   // radians in [-pi/2, pi/2]
  double orientation = 0.0;  // radians in [0, 2pi)
};

/// The eight neighbors of an interior cell, enumerated clockwise from the
/// top-left: top-left, top, top-right, right, bottom-right, bottom,
/// bottom-left, left.
std::array<std::uint8_t, 8> neighborhood(const Matrix2D& m, std::size_t r, std::size_t c);

/// Bit n-1 is set when the n-th neighbor is >= the center.
std::uint8_t lbp_code(const Matrix2D& m, std::size_t r, std::size_t c);
DescriptorHistogram lbp_histogram(const Matrix2D& m);

WldResponse wld_response(const Matrix2D& m, std::size_t r, std::size_t c, const DescriptorConfig& cfg);

/// Joint (orientation, excitation) histogram flattened to t * Mx + m.
std::size_t wld_bin(const WldResponse& response, const DescriptorConfig& cfg);
DescriptorHistogram wld_histogram(const Matrix2D& m, const DescriptorConfig& cfg);

}  // namespace tnilm
