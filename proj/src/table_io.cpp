#include "wythoff/table_io.hpp"

#include <charconv>
#include <limits>
#include <vector>

#include "json.hpp"

namespace wythoff {

namespace {

void append_layer_csv(std::string& out, const GrundyGrid& layer) {
  for (std::size_t y = 0; y < layer.size(); ++y) {
    const auto row = layer.row(y);
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (x != 0) out += ',';
      out += std::to_string(row[x]);
    }
    out += '\n';
  }
}

std::vector<Grundy> parse_csv_row(std::string_view line, std::size_t line_no) {
  std::vector<Grundy> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    Grundy v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw TableFormatError("csv line " + std::to_string(line_no) + ": bad value '" + std::string(field) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

GrundyGrid grid_from_rows(const std::vector<std::vector<Grundy>>& rows, std::string_view what) {
  const std::size_t n = rows.size();
  GrundyGrid grid(n);
  for (std::size_t y = 0; y < n; ++y) {
    if (rows[y].size() != n) {
      throw TableFormatError(std::string(what) + " row " + std::to_string(y) + " has " +
                             std::to_string(rows[y].size()) + " values, expected " + std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x) grid.at(x, y) = rows[y][x];
  }
  return grid;
}

}  // namespace

std::string table_to_csv(const GrundyTable& table) {
  std::string out;
  append_layer_csv(out, table.classical());
  out += '\n';
  append_layer_csv(out, table.with_pass());
  return out;
}

GrundyTable table_from_csv(std::string_view text) {
  std::vector<std::vector<Grundy>> layers[2];
  int current = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) throw TableFormatError("csv must end with a newline");
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.empty()) {
      if (current == 1) throw TableFormatError("csv has more than two layers");
      current = 1;
      continue;
    }
    layers[current].push_back(parse_csv_row(line, line_no));
  }
  if (current != 1) throw TableFormatError("csv is missing the with-pass layer");
  if (layers[0].empty()) throw TableFormatError("csv table is empty");
  if (layers[0].size() != layers[1].size()) throw TableFormatError("csv layers differ in size");
  return GrundyTable(grid_from_rows(layers[0], "classical"), grid_from_rows(layers[1], "with_pass"));
}

std::string table_to_json(const GrundyTable& table) {
  nlohmann::ordered_json doc;
  doc["n"] = table.window_size();
  auto layer_json = [](const GrundyGrid& layer) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t y = 0; y < layer.size(); ++y) {
      const auto row = layer.row(y);
      rows.push_back(std::vector<Grundy>(row.begin(), row.end()));
    }
    return rows;
  };
  doc["classical"] = layer_json(table.classical());
  doc["with_pass"] = layer_json(table.with_pass());
  return doc.dump() + '\n';
}

GrundyTable table_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const auto n = doc.at("n").get<std::size_t>();
    auto rows = [&](const char* key) {
      auto r = doc.at(key).get<std::vector<std::vector<Grundy>>>();
      if (r.size() != n) throw TableFormatError(std::string(key) + " has wrong number of rows");
      return r;
    };
    if (n == 0) throw TableFormatError("json table is empty");
    return GrundyTable(grid_from_rows(rows("classical"), "classical"),
                       grid_from_rows(rows("with_pass"), "with_pass"));
  } catch (const nlohmann::json::exception& e) {
    throw TableFormatError(std::string("invalid table json: ") + e.what());
  }
}

}  // namespace wythoff
