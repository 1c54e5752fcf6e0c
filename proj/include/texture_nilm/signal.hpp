#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tnilm {

/// A labeled 1D active-power recording.
struct PowerSignal {
  std::vector<double> samples;  // watts
  double sampling_rate_hz = 1.0;
  std::string label;
  std::string source_id;
};

/// Fixed-length slice of a signal starting at a detected event.
///
/// When the parent signal ends before `window_len` samples are available the
/// tail is padded by repeating the last observed sample; `pad_count` records
/// how many samples were synthesized that way.
struct EventWindow {
  std::vector<double> samples;
  std::size_t onset_index = 0;
  std::size_t pad_count = 0;
  std::string label;
  std::string source_id;
};

struct EventDetectorConfig {
  double delta_watts = 15.0;
  std::size_t steady_len = 5;
  std::size_t window_len = 1024;

  void validate() const;
};

/// Replaces every zero sample by the mean of the nearest non-zero samples on
/// either side. At a boundary the one available side is used.
/// Throws AllZeroSignal when nothing is left to interpolate from.
PowerSignal impute_zeros(const PowerSignal& signal);
std::vector<double> impute_zeros(std::span<const double> samples);

/// Absolute difference of the two-sided moving means around `index`:
/// |mean(s[i, i+steady)) - mean(s[i-steady, i))|. Requires
/// steady <= index <= size - steady.
double step_magnitude(std::span<const double> samples, std::size_t index, std::size_t steady);

/// Onset indices in ascending order.
///
/// Each maximal run of consecutive indices whose step magnitude exceeds
/// delta_watts contributes one candidate, the index of the largest magnitude
/// in the run (earliest on ties). A candidate is kept only if no kept onset
/// lies within the preceding window_len samples.
std::vector<std::size_t> detect_onsets(std::span<const double> samples, const EventDetectorConfig& cfg);

std::vector<EventWindow> detect_events(const PowerSignal& signal, const EventDetectorConfig& cfg);

/// Cuts a window of exactly cfg.window_len samples starting at `onset`.
EventWindow make_window(const PowerSignal& signal, std::size_t onset, std::size_t window_len);

}  // namespace tnilm
