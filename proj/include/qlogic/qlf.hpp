#pragma once

#include "qlogic/setlogic.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

// Malformed QLF/QSF text; the message carries the 1-based line number.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A family together with member names, aligned with canonical member order.
struct LogicDocument {
  Family family;
  std::vector<std::string> names;
};

// QLF: "universe <n>" followed by "set <name> <i1> <i2> ..." lines with
// strictly increasing indices. Lines starting with '#' are comments.
LogicDocument parse_qlf(std::string_view text);

// Emits members in canonical order, named S0, S1, ... when `names` is empty.
std::string write_qlf(const Family& family, const std::vector<std::string>& names = {});
std::string write_qlf(const LogicDocument& doc);

// "{i1,i2,...}", "{}" for the empty set.
std::string format_set(SubsetMask s);
// Inverse of format_set; whitespace around indices is tolerated.
SubsetMask parse_set(std::string_view text, const Universe& universe);

// Shared line splitting for the text formats: yields (line number, content)
// for every non-blank, non-comment line.
struct TextLine {
  std::size_t number;
  std::string_view content;
};
std::vector<TextLine> significant_lines(std::string_view text);
std::vector<std::string_view> split_words(std::string_view line);

}  // namespace qlogic
