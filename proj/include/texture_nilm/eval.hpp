#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "texture_nilm/classify.hpp"

namespace tnilm {

struct EvalConfig {
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  bool stratified = true;

  void validate() const;
};

struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Partitions dataset indices into cfg.folds train/test splits.
///
/// Stratified: each class is shuffled with the seeded generator, then dealt
/// round-robin into folds. The dealing position carries over from one class
/// to the next (classes taken in sorted label order) so total fold sizes stay
/// balanced too. Indices inside each split are sorted ascending.
std::vector<Fold> stratified_folds(const LabeledDataset& ds, const EvalConfig& cfg);

using Confusion = std::vector<std::vector<std::uint64_t>>;  // [true][predicted]

/// Unweighted mean of per-class F1 over classes that occur as truth or as a
/// prediction. Returns 0 for an empty matrix.
double macro_f1(const Confusion& confusion);
double accuracy(const Confusion& confusion);

struct FoldResult {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::size_t test_count = 0;
};

struct EvalReport {
  std::vector<FoldResult> per_fold;
  double mean_accuracy = 0.0;  // pooled over folds: trace / sum of `confusion`
  double mean_macro_f1 = 0.0;  // macro-F1 of the pooled confusion
  std::vector<std::string> classes;
  Confusion confusion;
  std::string config_fingerprint;
  std::uint64_t seed = 0;
};

/// Cross-validated k-NN evaluation. `threads` bounds fold-level parallelism;
/// the result does not depend on it.
EvalReport run_eval(const LabeledDataset& ds, const KnnConfig& knn, const EvalConfig& cfg, std::size_t threads = 1);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fingerprint(std::string_view canonical);

}  // namespace tnilm
