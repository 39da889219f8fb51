#include "surfpen/keyvalue.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "surfpen/error.hpp"
#include "surfpen/expr.hpp"

namespace surfpen {

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  return v;
}

}  // namespace

KeyValueFile KeyValueFile::parse(std::string_view text) {
  KeyValueFile file;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("missing key", line_no);
    if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
    if (file.entries_.contains(key)) throw ConfigError("duplicate key '" + key + "'", line_no);
    file.entries_.emplace(key, Entry{value, line_no});
  }
  return file;
}

KeyValueFile KeyValueFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool KeyValueFile::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

const KeyValueFile::Entry* KeyValueFile::find(std::string_view key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const KeyValueFile::Entry& KeyValueFile::at(std::string_view key) const {
  if (const Entry* e = find(key)) return *e;
  throw ConfigError("missing key '" + std::string(key) + "'");
}

// Numeric values go through the expression parser so `pi/2` or `2*pi` are accepted.
std::optional<double> KeyValueFile::number(std::string_view key) const {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  try {
    const auto v = surfpen::parse(e->value).constant_value();
    if (!v || !std::isfinite(*v)) throw ConfigError("'" + std::string(key) + "' is not a constant", e->line);
    return v;
  } catch (const ParseError& err) {
    throw ConfigError(std::string(key) + ": " + err.what(), e->line);
  }
}

double KeyValueFile::required_number(std::string_view key) const {
  if (const auto v = number(key)) return *v;
  throw ConfigError("missing key '" + std::string(key) + "'");
}

std::optional<int> KeyValueFile::integer(std::string_view key) const {
  const auto v = number(key);
  if (!v) return std::nullopt;
  if (*v != std::floor(*v) || std::abs(*v) > 1e9) {
    throw ConfigError("'" + std::string(key) + "' must be an integer", find(key)->line);
  }
  return static_cast<int>(*v);
}

}  // namespace surfpen
