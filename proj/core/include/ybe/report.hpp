#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ybe {

/// An ordered key-value result document.  The text and JSON renderings carry
/// exactly the same entries, in insertion order, so reports are reproducible
/// byte for byte given identical inputs.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);
  void add(const std::string& key, long long value);
  void add(const std::string& key, int value);
  void add(const std::string& key, bool value);

  const std::vector<std::pair<std::string, std::string>>& items() const {
    return items_;
  }

  /// One "key = value" line per entry.
  std::string render_text() const;
  /// A single JSON object preserving entry order (values as strings).
  std::string render_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

std::string format_int_vector(const std::vector<int>& v, int offset = 0);
std::string format_int_vector(const std::vector<long long>& v);

}  // namespace ybe
