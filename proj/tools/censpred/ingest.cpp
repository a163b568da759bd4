#include "ingest.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace censpred::cli {

namespace {

double parse_value(const std::string& token, int line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": non-numeric token '" + token + "'");
  if (!(v > 0.0))
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": nonpositive value " + token);
  return v;
}

}  // namespace

IngestResult ingest(const std::string& path, int n, int m) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("data file not readable: " + path);

  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string token;
    std::istringstream fields(line);
    while (std::getline(fields, token, ',')) {
      // tolerate surrounding whitespace
      std::istringstream ws(token);
      std::string piece;
      while (ws >> piece) values.push_back(parse_value(piece, line_no));
    }
  }
  if (values.empty())
    throw std::invalid_argument("data file is empty: " + path);
  if (static_cast<int>(values.size()) < m)
    throw std::invalid_argument(
        "data file holds " + std::to_string(values.size()) +
        " values but m = " + std::to_string(m));
  if (static_cast<int>(values.size()) > n)
    throw std::invalid_argument(
        "data file holds " + std::to_string(values.size()) +
        " values but n = " + std::to_string(n));

  const int total = static_cast<int>(values.size());
  const bool sorted = std::is_sorted(values.begin(), values.end());
  std::sort(values.begin(), values.end());
  values.resize(static_cast<std::size_t>(m));

  IngestResult result{CensoredSample(n, m, std::move(values)), total, sorted,
                      ""};
  if (!sorted)
    result.notice = "input values were not sorted; sorted ascending";
  return result;
}

}  // namespace censpred::cli
