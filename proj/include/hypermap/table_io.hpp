#ifndef HYPERMAP_TABLE_IO_HPP_
#define HYPERMAP_TABLE_IO_HPP_

#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hypermap/tables.hpp"

namespace hypermap {

// CSV:  header "r,e,v,count", one row per term, counts in decimal.
// JSON: [{"r": 3, "terms": [{"e": 3, "v": 1, "c": "1"}, ...]}, ...]
//       with coefficients as decimal strings.

inline std::string render_csv(const CoeffTable& table) {
  std::string out = "r,e,v,count\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.r) + ',' + std::to_string(row.e) + ',' + std::to_string(row.v) + ',' +
           row.count.str() + '\n';
  }
  return out;
}

inline CoeffTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "r,e,v,count") {
    throw std::invalid_argument("csv: missing header 'r,e,v,count'");
  }
  CoeffTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string fields[4];
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
      std::size_t comma = line.find(',', start);
      if ((i < 3) == (comma == std::string::npos)) {
        throw std::invalid_argument("csv: line " + std::to_string(line_no) + " needs 4 fields");
      }
      fields[i] = line.substr(start, i < 3 ? comma - start : std::string::npos);
      start = comma + 1;
    }
    auto as_unsigned = [&](const std::string& s) {
      const BigInt v = parse_bigint(s);
      if (v < 0 || v > 1'000'000) throw std::invalid_argument("csv: bad index '" + s + "'");
      return static_cast<unsigned>(v);
    };
    table.rows.push_back({as_unsigned(fields[0]), as_unsigned(fields[1]), as_unsigned(fields[2]),
                          parse_bigint(fields[3])});
  }
  return table;
}

inline std::string render_json(const CoeffTable& table) {
  using Json = nlohmann::ordered_json;
  Json out = Json::array();
  for (const auto& row : table.rows) {
    if (out.empty() || out.back()["r"].get<unsigned>() != row.r) {
      out.push_back(Json{{"r", row.r}, {"terms", Json::array()}});
    }
    out.back()["terms"].push_back(Json{{"e", row.e}, {"v", row.v}, {"c", row.count.str()}});
  }
  return out.dump(2) + "\n";
}

inline CoeffTable parse_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("json: expected an array of tables");
  CoeffTable table;
  for (const auto& block : doc) {
    const unsigned r = block.at("r").get<unsigned>();
    for (const auto& term : block.at("terms")) {
      table.rows.push_back({r, term.at("e").get<unsigned>(), term.at("v").get<unsigned>(),
                            parse_bigint(term.at("c").get<std::string>())});
    }
  }
  return table;
}

/// Tab-separated rendering for terminals.
inline std::string render_text(const CoeffTable& table) {
  std::ostringstream os;
  os << "r\te\tv\tcount\n";
  for (const auto& row : table.rows) {
    os << row.r << '\t' << row.e << '\t' << row.v << '\t' << row.count << '\n';
  }
  return os.str();
}

}  // namespace hypermap

#endif  // HYPERMAP_TABLE_IO_HPP_
