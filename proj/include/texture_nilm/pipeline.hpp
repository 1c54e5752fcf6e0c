#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "texture_nilm/classify.hpp"
#include "texture_nilm/data.hpp"
#include "texture_nilm/descriptors.hpp"
#include "texture_nilm/eval.hpp"
#include "texture_nilm/fusion.hpp"
#include "texture_nilm/signal.hpp"

namespace tnilm {

inline constexpr const char* kToolName = "texture-nilm";
inline constexpr const char* kToolVersion = "0.3.0";

struct PipelineConfig {
  EventDetectorConfig detector;
  DescriptorConfig descriptor;
  FusionStrategy fusion_strategy = FusionStrategy::Sum;
  bool all_strategies = false;
  KnnConfig knn;
  EvalConfig eval;

  // Exactly one of input_root / synth is set.
  std::optional<std::filesystem::path> input_root;
  std::optional<SynthConfig> synth;
  std::filesystem::path output = "out";
  std::optional<double> sampling_rate_hz;
  bool write_csv = false;

  void validate() const;

  std::filesystem::path corpus_dir() const { return output / "corpus"; }
  std::filesystem::path features_path() const { return output / "features.jsonl"; }
  std::filesystem::path report_path() const { return output / "report.json"; }
  std::filesystem::path report_csv_path() const { return output / "report.csv"; }
  // Where extraction reads signals from: input_root, or the synth corpus.
  std::filesystem::path dataset_root() const { return input_root ? *input_root : corpus_dir(); }
};

PipelineConfig parse_config(const nlohmann::json& doc);
PipelineConfig load_config(const std::filesystem::path& file);

/// Applies a CLI override. Keys: strategy, k, metric, weighting, folds, seed,
/// out. `strategy` also accepts "all".
void apply_override(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Method-relevant settings only (no filesystem paths), with sorted keys.
nlohmann::json canonical_json(const PipelineConfig& cfg);
std::string config_fingerprint(const PipelineConfig& cfg);

struct FeatureRecord {
  std::string label;
  std::string source_id;
  std::size_t onset_index = 0;
  DescriptorHistogram lbp;
  DescriptorHistogram wld;
};

/// impute -> detect -> reshape -> LBP/WLD for every signal, in signal then
/// onset order. Signals that are entirely zero are skipped.
std::vector<FeatureRecord> extract_features(const std::vector<PowerSignal>& signals, const EventDetectorConfig& detector,
                                            const DescriptorConfig& descriptor, std::size_t threads = 1);

std::string feature_record_line(const FeatureRecord& rec);
void write_feature_dump(const std::filesystem::path& file, const std::vector<FeatureRecord>& records);
std::vector<FeatureRecord> read_feature_dump(const std::filesystem::path& file);

LabeledDataset build_dataset(const std::vector<FeatureRecord>& records, FusionStrategy strategy);

nlohmann::json report_to_json(const EvalReport& report);
std::string report_to_csv(const EvalReport& report);

/// Pretty-prints a single or multi-strategy report document as text tables.
std::string render_report(const nlohmann::json& doc);

struct CommandSummary {
  std::map<std::string, std::size_t> per_class;  // signals (synth) or windows (extract)
  std::vector<std::string> messages;             // extra lines for the user
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

CommandSummary run_synth(const PipelineConfig& cfg);
CommandSummary run_extract(const PipelineConfig& cfg);
CommandSummary run_eval_command(const PipelineConfig& cfg);

}  // namespace tnilm
