#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace surfpen {

/// `key = value` text as used by curve and patch definition files.
/// One entry per line, `#` starts a comment, blank lines are ignored.
class KeyValueFile {
 public:
  struct Entry {
    std::string value;
    int line = 0;
  };

  static KeyValueFile parse(std::string_view text);
  static KeyValueFile load(const std::string& path);

  bool contains(std::string_view key) const;
  const Entry* find(std::string_view key) const;
  /// Throws ConfigError naming the key when absent.
  const Entry& at(std::string_view key) const;

  std::optional<double> number(std::string_view key) const;
  std::optional<int> integer(std::string_view key) const;
  double required_number(std::string_view key) const;

  const std::map<std::string, Entry, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

}  // namespace surfpen
