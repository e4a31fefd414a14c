#include "qlogic/qlf.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace qlogic {

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> parse_index(std::string_view word) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end || word.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<TextLine> significant_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

LogicDocument parse_qlf(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw FormatError(1, "missing 'universe <n>' line");

  const auto head = split_words(lines.front().content);
  if (head.size() != 2 || head[0] != "universe") throw FormatError(lines.front().number, "expected 'universe <n>'");
  const auto n = parse_index(head[1]);
  if (!n || *n == 0 || *n > kMaxUniverse) throw FormatError(lines.front().number, "universe size must be in [1, 64]");
  const Universe universe(*n);

  std::vector<std::pair<SubsetMask, std::string>> named;
  std::set<SubsetMask> masks;
  std::set<std::string, std::less<>> names;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto words = split_words(line.content);
    if (words.size() < 2 || words[0] != "set") throw FormatError(line.number, "expected 'set <name> <indices...>'");
    SubsetMask mask = 0;
    std::optional<std::size_t> previous;
    for (std::size_t w = 2; w < words.size(); ++w) {
      const auto idx = parse_index(words[w]);
      if (!idx || *idx >= *n) throw FormatError(line.number, "index '" + std::string(words[w]) + "' out of range");
      if (previous && *idx <= *previous) throw FormatError(line.number, "indices must be strictly increasing");
      previous = idx;
      mask |= SubsetMask{1} << *idx;
    }
    if (!masks.insert(mask).second) throw FormatError(line.number, "duplicate set");
    if (!names.insert(std::string(words[1])).second) throw FormatError(line.number, "duplicate set name");
    named.emplace_back(mask, std::string(words[1]));
  }

  std::vector<SubsetMask> members;
  for (const auto& [m, _] : named) members.push_back(m);
  LogicDocument doc{Family(universe, std::move(members)), {}};
  doc.names.resize(doc.family.size());
  for (auto& [m, name] : named) doc.names[*doc.family.index_of(m)] = std::move(name);
  return doc;
}

std::string write_qlf(const Family& family, const std::vector<std::string>& names) {
  if (!names.empty() && names.size() != family.size())
    throw std::invalid_argument("write_qlf: names not aligned with members");
  std::ostringstream out;
  out << "universe " << family.universe().size() << '\n';
  for (std::size_t i = 0; i < family.size(); ++i) {
    out << "set " << (names.empty() ? "S" + std::to_string(i) : names[i]);
    for (std::size_t p : points_of(family[i])) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

std::string write_qlf(const LogicDocument& doc) { return write_qlf(doc.family, doc.names); }

std::string format_set(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : points_of(s)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

SubsetMask parse_set(std::string_view text, const Universe& universe) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("set literal must be enclosed in braces");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  SubsetMask mask = 0;
  std::optional<std::size_t> previous;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto word = trim(body.substr(0, comma));
    const auto idx = parse_index(word);
    if (!idx || *idx >= universe.size())
      throw std::invalid_argument("set index '" + std::string(word) + "' out of range");
    if (previous && *idx <= *previous) throw std::invalid_argument("set indices must be strictly increasing");
    previous = idx;
    mask |= SubsetMask{1} << *idx;
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw std::invalid_argument("trailing comma in set literal");
  }
  return mask;
}

}  // namespace qlogic
