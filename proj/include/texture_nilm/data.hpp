#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "texture_nilm/signal.hpp"

namespace tnilm {

enum class Archetype {
  SquareWave,         // resistive heater: two-level on/off cycling
  Staircase,          // washing machine: sequence of distinct power states
  SpikeDecay,         // fridge / motor: inrush spike decaying to a running level
  SinusoidModulated,  // variable-speed load oscillating around a mean
  ConstantDrift,      // electronics: low constant level with slow drift
  DutyCycled,         // short bursts with a long off period
};

std::string_view to_string(Archetype a) noexcept;
std::optional<Archetype> parse_archetype(std::string_view name) noexcept;
const std::vector<Archetype>& all_archetypes();

struct SynthConfig {
  std::vector<Archetype> classes = all_archetypes();
  std::size_t signals_per_class = 50;
  std::size_t signal_len = 4096;
  double noise_sigma = 3.0;
  std::uint64_t seed = 7;

  void validate(std::size_t window_len) const;
};

/// Deterministic synthetic corpus, ordered by class then signal index.
/// Labels are the archetype names; sampling rate is 1 Hz.
std::vector<PowerSignal> generate(const SynthConfig& cfg, std::size_t window_len = 1024);

struct LoadOptions {
  std::optional<double> sampling_rate_hz;  // overrides timestamp inference
};

/// Parses one `timestamp,power_w` CSV file. Timestamps are integer or decimal
/// epoch seconds or ISO-8601 date-times and must be strictly increasing.
PowerSignal load_csv(const std::filesystem::path& file, std::string label, const LoadOptions& opts = {});

/// Loads `<root>/<label>/*.csv`, sorted by (label, file name).
std::vector<PowerSignal> load_dataset(const std::filesystem::path& root, const LoadOptions& opts = {});

/// Writes `<root>/<label>/<source_id>.csv` with integer epoch timestamps.
void write_dataset(const std::filesystem::path& root, const std::vector<PowerSignal>& signals);

/// Seconds since the Unix epoch for an ISO-8601 date-time such as
/// 2014-03-01T12:00:00.250Z or 2014-03-01 12:00:00+01:00.
std::optional<double> parse_iso8601(std::string_view text);

}  // namespace tnilm
