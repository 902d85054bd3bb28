#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feyncount/counting.hpp"
#include "feyncount/report.hpp"
#include "feyncount/wick_oracle.hpp"

namespace feyncount {

enum class Format { Table, Csv, Json, Bfile };

Format parse_format(const std::string& name);

/// Count table. Table/CSV/JSON include every row; the b-file starts at
/// m = 1 and lists the distinct-connected column as "m value".
std::string render_counts(const std::vector<CountRow>& rows, Format format,
                          Method method = Method::Recurrence);

/// Table, CSV or JSON; b-file is rejected with std::invalid_argument.
std::string render_report(const VerificationReport& report, Format format);

struct OracleResult {
  Order m = 0;
  oracle::MatchingCensus matchings;
  Count vacuum;
  std::optional<oracle::OrbitCensus> orbits;
};

/// Table or JSON; other formats are rejected with std::invalid_argument.
std::string render_oracle(const OracleResult& result, Format format);

}  // namespace feyncount
