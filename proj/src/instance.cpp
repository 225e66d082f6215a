#include "expmap/instance.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include "expmap/error.hpp"
#include "expmap/parse.hpp"

namespace expmap {
namespace {

struct ListValue {
  std::vector<std::string> strings;
  std::vector<bool> bools;
};

using Value = std::variant<std::string, std::int64_t, ListValue>;

struct Entry {
  std::size_t line;
  Value value;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::InstanceFormat, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

// Parses "..." at the front of s, advancing past it.
std::string take_string(std::string_view& s, std::size_t line) {
  if (s.empty() || s.front() != '"') fail(line, "expected a quoted string");
  const std::size_t close = s.find('"', 1);
  if (close == std::string_view::npos) fail(line, "unterminated string");
  std::string out(s.substr(1, close - 1));
  s.remove_prefix(close + 1);
  return out;
}

ListValue parse_list(std::string_view s, std::size_t line) {
  ListValue out;
  s = trim(s.substr(1));
  if (s.empty() || s.back() != ']') fail(line, "list must end with ']'");
  s = trim(s.substr(0, s.size() - 1));
  bool expect_item = !s.empty();
  while (expect_item) {
    s = trim(s);
    if (!s.empty() && s.front() == '"') {
      if (!out.bools.empty()) fail(line, "mixed list element types");
      out.strings.push_back(take_string(s, line));
    } else {
      const std::size_t end = s.find(',');
      const std::string_view word = trim(s.substr(0, end));
      if (word != "true" && word != "false") fail(line, "list items must be strings or booleans");
      if (!out.strings.empty()) fail(line, "mixed list element types");
      out.bools.push_back(word == "true");
      s.remove_prefix(end == std::string_view::npos ? s.size() : end);
    }
    s = trim(s);
    if (s.empty()) {
      expect_item = false;
    } else if (s.front() == ',') {
      s.remove_prefix(1);
    } else {
      fail(line, "expected ',' between list items");
    }
  }
  return out;
}

Value parse_value(std::string_view s, std::size_t line) {
  if (s.empty()) fail(line, "missing value");
  if (s.front() == '"') {
    std::string out = take_string(s, line);
    if (!trim(s).empty()) fail(line, "trailing characters after string");
    return out;
  }
  if (s.front() == '[') return parse_list(s, line);
  std::int64_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected a string, list or integer");
  return n;
}

const std::string& expect_string(const Entry& e, const std::string& key) {
  if (auto* s = std::get_if<std::string>(&e.value)) return *s;
  fail(e.line, "'" + key + "' must be a quoted string");
}

const ListValue& expect_list(const Entry& e, const std::string& key) {
  if (auto* l = std::get_if<ListValue>(&e.value)) return *l;
  fail(e.line, "'" + key + "' must be a list");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) fail(line_no, "empty key");
    Entry entry{line_no, parse_value(trim(line.substr(eq + 1)), line_no)};
    if (!entries.emplace(key, std::move(entry)).second) fail(line_no, "duplicate key '" + key + "'");
  }

  auto find = [&](const std::string& key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  const Entry* field_entry = find("field");
  const Entry* vars_entry = find("vars");
  if (field_entry == nullptr) fail(line_no, "missing 'field'");
  if (vars_entry == nullptr) fail(line_no, "missing 'vars'");

  const FieldSpec field = FieldSpec::parse(expect_string(*field_entry, "field"));
  const ListValue& vars = expect_list(*vars_entry, "vars");
  if (!vars.bools.empty()) fail(vars_entry->line, "'vars' must list quoted names");
  RingPtr ring = make_ring(field, vars.strings);

  for (const auto& [key, entry] : entries) {
    const bool known = key == "field" || key == "vars" || key == "slice" || key == "factors" ||
                       key == "window" || key == "domain_assert" || key.rfind("sigma.", 0) == 0;
    if (!known) fail(entry.line, "unknown key '" + key + "'");
    if (key.rfind("sigma.", 0) == 0 && !ring->index_of(key.substr(6))) {
      fail(entry.line, "sigma given for undeclared variable '" + key.substr(6) + "'");
    }
  }

  std::vector<SigmaImage> images;
  for (const std::string& v : ring->vars()) {
    const Entry* e = find("sigma." + v);
    if (e == nullptr) fail(line_no, "missing 'sigma." + v + "'");
    images.push_back(parse_sigma_image(expect_string(*e, "sigma." + v), ring));
  }

  Instance inst{ring, ExpMap(ring, std::move(images)), std::nullopt, {}, Instance::kDefaultWindow, {}};
  if (const Entry* e = find("slice")) inst.slice = parse_poly(expect_string(*e, "slice"), ring);
  if (const Entry* e = find("factors")) {
    const ListValue& l = expect_list(*e, "factors");
    if (!l.bools.empty()) fail(e->line, "'factors' must list quoted expressions");
    for (const std::string& s : l.strings) inst.factors.push_back(parse_poly(s, ring));
  }
  if (const Entry* e = find("window")) {
    const auto* n = std::get_if<std::int64_t>(&e->value);
    if (n == nullptr || *n < 1 || *n > 1000) fail(e->line, "'window' must be an integer in [1, 1000]");
    inst.window = static_cast<std::uint32_t>(*n);
  }
  if (const Entry* e = find("domain_assert")) {
    const ListValue& l = expect_list(*e, "domain_assert");
    if (!l.strings.empty()) fail(e->line, "'domain_assert' must list booleans");
    inst.domain_assertions = l.bools;
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InstanceFormat, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace expmap
