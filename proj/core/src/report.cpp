#include "ybe/report.hpp"

#include <json.hpp>
#include <sstream>

namespace ybe {

void Report::add(const std::string& key, const std::string& value) {
  items_.emplace_back(key, value);
}

void Report::add(const std::string& key, const char* value) {
  items_.emplace_back(key, std::string(value));
}

void Report::add(const std::string& key, long long value) {
  items_.emplace_back(key, std::to_string(value));
}

void Report::add(const std::string& key, int value) {
  items_.emplace_back(key, std::to_string(value));
}

void Report::add(const std::string& key, bool value) {
  items_.emplace_back(key, value ? "true" : "false");
}

std::string Report::render_text() const {
  std::ostringstream os;
  for (const auto& [k, v] : items_) os << k << " = " << v << '\n';
  return os.str();
}

std::string Report::render_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [k, v] : items_) doc[k] = v;
  return doc.dump(2) + "\n";
}

std::string format_int_vector(const std::vector<int>& v, int offset) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i] + offset;
  }
  os << ')';
  return os.str();
}

std::string format_int_vector(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace ybe
