#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "texture_nilm/descriptors.hpp"

namespace tnilm {

// Sum, Concat and Mult fuse both descriptors. LbpOnly and WldOnly keep a
// single normalized histogram and exist as baselines for the fused variants.
enum class FusionStrategy { Sum, Concat, Mult, LbpOnly, WldOnly };

std::string_view to_string(FusionStrategy s) noexcept;
std::optional<FusionStrategy> parse_fusion_strategy(std::string_view name) noexcept;

struct FeatureVector {
  std::vector<double> values;
  FusionStrategy strategy = FusionStrategy::Sum;

  double l1() const noexcept;
};

std::size_t feature_length(FusionStrategy s) noexcept;

/// Both inputs are L1-normalized first, combined, then the result is
/// renormalized to unit L1 norm.
/// Throws EmptyHistogram for an all-zero input and DegenerateProduct when a
/// Mult result has no mass.
FeatureVector fuse(const DescriptorHistogram& lbp, const DescriptorHistogram& wld, FusionStrategy strategy);

}  // namespace tnilm
