#pragma once

#include "qlogic/qlf.hpp"
#include "qlogic/states.hpp"

#include <string>
#include <string_view>

namespace qlogic {

// QSF: "state over <logic-file-path>" then "value {i1,i2,...} p/q" lines.
struct StateDocument {
  std::string logic_path;
  PartialState assignments;
};

// Parses the text against `family`; masks that are not members, repeated
// masks and malformed values raise FormatError.
StateDocument parse_qsf(std::string_view text, const Family& family);

// Reads only the header, so the caller can locate the logic file first.
std::string qsf_logic_path(std::string_view text);

// One value line per member in canonical order.
std::string write_qsf(const StateTable& state, const std::string& logic_path);

}  // namespace qlogic
