#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tnilm {

enum class Metric { Euclidean, Cosine };
enum class Weighting { Uniform, InverseDistance };

std::string_view to_string(Metric m) noexcept;
std::string_view to_string(Weighting w) noexcept;
std::optional<Metric> parse_metric(std::string_view name) noexcept;
std::optional<Weighting> parse_weighting(std::string_view name) noexcept;

struct KnnConfig {
  std::size_t k = 1;
  Metric metric = Metric::Euclidean;
  Weighting weighting = Weighting::Uniform;

  void validate() const;
  // With k == 1 there is a single voter, so weighting collapses to Uniform.
  KnnConfig normalized() const;
};

/// Row-major set of equally sized feature vectors with string labels.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  explicit LabeledDataset(std::size_t dims) : dims_(dims) {}

  void add(std::span<const double> values, std::string label);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t dims() const noexcept { return dims_; }

  std::span<const double> row(std::size_t i) const { return {values_.data() + i * dims_, dims_}; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Distinct labels, sorted.
  std::vector<std::string> class_set() const;

  LabeledDataset subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t dims_ = 0;
  std::vector<double> values_;
  std::vector<std::string> labels_;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);
double cosine_distance(std::span<const double> a, std::span<const double> b);
double distance(Metric metric, std::span<const double> a, std::span<const double> b);

/// Brute-force k-nearest-neighbor vote.
///
/// Neighbors are ordered by (distance, training index); the class with the
/// largest vote wins and vote ties go to the lexicographically smallest label.
std::string predict(const LabeledDataset& train, std::span<const double> query, const KnnConfig& cfg);

std::vector<std::string> predict_batch(const LabeledDataset& train, const LabeledDataset& queries,
                                       const KnnConfig& cfg, std::size_t threads = 1);

}  // namespace tnilm
