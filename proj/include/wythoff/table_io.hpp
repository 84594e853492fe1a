#pragma once

// Text exports of a GrundyTable. Both formats round-trip byte-exactly.
//
// CSV: one line per row y of the classical layer (comma-separated values for
// x = 0..N-1), an empty line, then the with-pass layer in the same shape.
// JSON: {"n": N, "classical": [[...], ...], "with_pass": [[...], ...]} with
// rows indexed by y.

#include <stdexcept>
#include <string>
#include <string_view>

#include "wythoff/engine.hpp"

namespace wythoff {

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string table_to_csv(const GrundyTable& table);
GrundyTable table_from_csv(std::string_view text);

std::string table_to_json(const GrundyTable& table);
GrundyTable table_from_json(std::string_view text);

}  // namespace wythoff
