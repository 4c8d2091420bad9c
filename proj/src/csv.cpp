#include "cwoful/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cwoful {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) {
    throw std::logic_error("csv row has " + std::to_string(cells.size()) +
                           " cells, expected " + std::to_string(columns_));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

void CsvWriter::save(const std::filesystem::path& path) const {
  write_text(path, text_);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

CsvWriter round_log_csv(const EpisodeResult& episode) {
  CsvWriter csv({"k", "action_index", "weight", "bonus", "clean_reward", "c_k",
                 "observed_reward", "instant_regret", "cum_regret", "est_error",
                 "confidence_ok"});
  for (const RoundRecord& r : episode.records) {
    csv.row({std::to_string(r.k), std::to_string(r.action_index),
             format_double(r.weight), format_double(r.bonus),
             format_double(r.clean_reward), format_double(r.corruption),
             format_double(r.observed_reward), format_double(r.instant_regret),
             format_double(r.cum_regret), format_double(r.est_error),
             r.confidence_ok ? "1" : "0"});
  }
  return csv;
}

CsvWriter curve_csv(const CurveStats& stats) {
  CsvWriter csv({"k", "mean", "std", "min", "max"});
  for (std::size_t k = 0; k < stats.mean.size(); ++k) {
    csv.row({std::to_string(k + 1), format_double(stats.mean[k]),
             format_double(stats.std[k]), format_double(stats.min[k]),
             format_double(stats.max[k])});
  }
  return csv;
}

}  // namespace cwoful
