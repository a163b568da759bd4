#ifndef CENSPRED_TOOLS_INGEST_HPP
#define CENSPRED_TOOLS_INGEST_HPP

#include <string>

#include "censpred/model.hpp"

namespace censpred::cli {

struct IngestResult {
  CensoredSample sample;
  int total_values = 0;   // values found in the file (may exceed m)
  bool was_sorted = true;
  std::string notice;     // non-empty when the input needed sorting
};

/// Reads one positive real per line or comma-separated values, sorts them
/// ascending, and keeps the first m as the observed order statistics.
/// Parse failures carry the offending line number.
IngestResult ingest(const std::string& path, int n, int m);

}  // namespace censpred::cli

#endif  // CENSPRED_TOOLS_INGEST_HPP
