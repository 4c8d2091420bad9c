#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cwoful/aggregate.hpp"
#include "cwoful/harness.hpp"

namespace cwoful {

/// Comma-separated, LF line endings, header row, doubles with 17
/// significant digits.
std::string format_double(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row(const std::vector<std::string>& cells);
  const std::string& text() const { return text_; }

  /// Writes to `path` and flushes. Throws std::runtime_error on I/O failure.
  void save(const std::filesystem::path& path) const;

 private:
  std::size_t columns_;
  std::string text_;
};

/// k, action_index, weight, bonus, clean_reward, c_k, observed_reward,
/// instant_regret, cum_regret, est_error, confidence_ok
CsvWriter round_log_csv(const EpisodeResult& episode);

/// k, mean, std, min, max
CsvWriter curve_csv(const CurveStats& stats);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace cwoful
