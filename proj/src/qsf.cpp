#include "qlogic/qsf.hpp"

#include <set>
#include <sstream>

namespace qlogic {

namespace {

constexpr std::string_view kHeader = "state over ";

std::string header_path(const TextLine& line) {
  if (!line.content.starts_with(kHeader)) throw FormatError(line.number, "expected 'state over <logic-file-path>'");
  std::string_view path = line.content.substr(kHeader.size());
  while (!path.empty() && path.front() == ' ') path.remove_prefix(1);
  if (path.empty()) throw FormatError(line.number, "missing logic file path");
  return std::string(path);
}

}  // namespace

std::string qsf_logic_path(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw FormatError(1, "missing 'state over <logic-file-path>' line");
  return header_path(lines.front());
}

StateDocument parse_qsf(std::string_view text, const Family& family) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw FormatError(1, "missing 'state over <logic-file-path>' line");
  StateDocument doc{header_path(lines.front()), {}};

  std::set<SubsetMask> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const std::string_view body = line.content;
    const auto open = body.find('{');
    const auto close = body.find('}');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
        split_words(body.substr(0, open)) != std::vector<std::string_view>{"value"})
      throw FormatError(line.number, "expected 'value {i1,i2,...} p/q'");
    const auto words_after = split_words(body.substr(close + 1));
    if (words_after.size() != 1) throw FormatError(line.number, "expected exactly one value after the set");

    SubsetMask mask = 0;
    Rational value;
    try {
      mask = parse_set(body.substr(open, close - open + 1), family.universe());
      value = parse_rational(words_after.front());
    } catch (const std::invalid_argument& e) {
      throw FormatError(line.number, e.what());
    }
    if (!family.contains(mask)) throw FormatError(line.number, format_set(mask) + " is not a member of the logic");
    if (!seen.insert(mask).second) throw FormatError(line.number, format_set(mask) + " assigned twice");
    doc.assignments.assignments.emplace_back(mask, std::move(value));
  }
  return doc;
}

std::string write_qsf(const StateTable& state, const std::string& logic_path) {
  std::ostringstream out;
  out << kHeader << logic_path << '\n';
  const Family& family = state.family();
  for (std::size_t i = 0; i < family.size(); ++i)
    out << "value " << format_set(family[i]) << ' ' << to_string(state[i]) << '\n';
  return out.str();
}

}  // namespace qlogic
