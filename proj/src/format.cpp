#include "feyncount/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace feyncount {

namespace {

using ordered_json = nlohmann::ordered_json;

// Right-aligned text columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "bfile") return Format::Bfile;
  throw std::invalid_argument("unknown format '" + name + "' (expected table, csv, json or bfile)");
}

std::string render_counts(const std::vector<CountRow>& rows, Format format, Method method) {
  switch (format) {
    case Format::Table: {
      std::vector<std::vector<std::string>> cells{{"m", "N_m", "N_dm", "N_cm", "distinct"}};
      for (const auto& r : rows)
        cells.push_back({std::to_string(r.m), r.total.str(), r.bubbles.str(), r.connected.str(),
                         r.distinct.str()});
      return aligned(cells);
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "m,total,bubbles,connected,distinct\n";
      for (const auto& r : rows)
        out << r.m << ',' << r.total << ',' << r.bubbles << ',' << r.connected << ','
            << r.distinct << '\n';
      return out.str();
    }
    case Format::Json: {
      ordered_json doc;
      doc["method"] = method_name(method);
      doc["rows"] = ordered_json::array();
      for (const auto& r : rows) {
        doc["rows"].push_back({{"m", r.m},
                               {"total", r.total.str()},
                               {"bubbles", r.bubbles.str()},
                               {"connected", r.connected.str()},
                               {"distinct", r.distinct.str()}});
      }
      return doc.dump(2) + '\n';
    }
    case Format::Bfile: {
      std::ostringstream out;
      for (const auto& r : rows)
        if (r.m >= 1) out << r.m << ' ' << r.distinct << '\n';
      return out.str();
    }
  }
  throw std::invalid_argument("unsupported format");
}

std::string render_report(const VerificationReport& report, Format format) {
  const std::string overall = report.overall() ? "PASS" : "FAIL";
  switch (format) {
    case Format::Table: {
      std::vector<std::vector<std::string>> cells{
          {"status", "check", "parameters", "expected", "actual"}};
      for (const auto& c : report.checks)
        cells.push_back({c.pass ? "pass" : "FAIL", c.name, c.parameters, c.expected, c.actual});
      std::ostringstream out;
      out << aligned(cells);
      out << "overall: " << overall << " (" << report.checks.size() << " checks, "
          << report.failures() << " failed)\n";
      return out.str();
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "name,parameters,expected,actual,pass\n";
      for (const auto& c : report.checks)
        out << csv_field(c.name) << ',' << csv_field(c.parameters) << ','
            << csv_field(c.expected) << ',' << csv_field(c.actual) << ','
            << (c.pass ? "true" : "false") << '\n';
      return out.str();
    }
    case Format::Json: {
      ordered_json doc;
      doc["overall"] = report.overall();
      doc["checks"] = ordered_json::array();
      for (const auto& c : report.checks) {
        doc["checks"].push_back({{"name", c.name},
                                 {"parameters", c.parameters},
                                 {"expected", c.expected},
                                 {"actual", c.actual},
                                 {"pass", c.pass}});
      }
      return doc.dump(2) + '\n';
    }
    case Format::Bfile:
      break;
  }
  throw std::invalid_argument("verification reports support table, csv and json formats");
}

std::string render_oracle(const OracleResult& result, Format format) {
  switch (format) {
    case Format::Table: {
      std::vector<std::vector<std::string>> cells{
          {"order", std::to_string(result.m)},
          {"total", result.matchings.total.str()},
          {"connected", result.matchings.connected.str()},
          {"vacuum", result.vacuum.str()},
      };
      if (result.orbits) {
        cells.push_back({"orbits", result.orbits->orbit_count.str()});
        for (const auto& [size, freq] : result.orbits->orbit_sizes)
          cells.push_back({"orbit size " + std::to_string(size), std::to_string(freq)});
      }
      std::ostringstream out;
      for (const auto& row : cells) out << row[0] << ": " << row[1] << '\n';
      return out.str();
    }
    case Format::Json: {
      ordered_json doc;
      doc["total"] = result.matchings.total.str();
      doc["connected"] = result.matchings.connected.str();
      if (result.orbits) {
        doc["orbits"] = result.orbits->orbit_count.str();
        ordered_json sizes = ordered_json::object();
        for (const auto& [size, freq] : result.orbits->orbit_sizes)
          sizes[std::to_string(size)] = std::to_string(freq);
        doc["orbit_sizes"] = sizes;
      }
      doc["vacuum"] = result.vacuum.str();
      doc["order"] = result.m;
      return doc.dump() + '\n';
    }
    case Format::Csv:
    case Format::Bfile:
      break;
  }
  throw std::invalid_argument("oracle output supports table and json formats");
}

}  // namespace feyncount
