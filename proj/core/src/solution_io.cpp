#include "ybe/solution_io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace ybe {

namespace {

using nlohmann::json;

// Rejects duplicate keys while parsing (the DOM parser would silently keep
// the last occurrence).
json parse_strict(const std::string& text) {
  std::vector<std::set<std::string>> object_keys;
  json::parser_callback_t cb = [&object_keys](int, json::parse_event_t event,
                                              json& parsed) {
    if (event == json::parse_event_t::object_start) {
      object_keys.emplace_back();
    } else if (event == json::parse_event_t::object_end) {
      object_keys.pop_back();
    } else if (event == json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (!object_keys.back().insert(key).second)
        throw ParseError("duplicate key \"" + key + "\"");
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

SolutionFile parse_solution_file(const std::string& text) {
  json doc = parse_strict(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "left" && key != "name" && key != "comment")
      throw ParseError("unknown key \"" + key + "\"");

  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("missing integer key \"n\"");
  const long long n = doc["n"].get<long long>();
  if (n < 1 || n > 64) throw ParseError("n out of bounds (expected 1..64)");

  if (!doc.contains("left") || !doc["left"].is_array() ||
      doc["left"].size() != static_cast<std::size_t>(n))
    throw ParseError("\"left\" must be an array of n rows");

  std::vector<Perm> rows(n);
  for (long long x = 0; x < n; ++x) {
    const json& row = doc["left"][x];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError("row " + std::to_string(x + 1) + " must have n entries");
    rows[x].resize(n);
    for (long long y = 0; y < n; ++y) {
      if (!row[y].is_number_integer())
        throw ParseError("row " + std::to_string(x + 1) +
                         " has a non-integer entry");
      long long v = row[y].get<long long>();
      if (v < 1 || v > n)
        throw ParseError("row " + std::to_string(x + 1) +
                         " has an entry outside 1..n");
      rows[x][y] = static_cast<int>(v - 1);
    }
    if (!is_permutation(rows[x]))
      throw ParseError("row " + std::to_string(x + 1) + " not a permutation");
  }

  SolutionFile out{Solution::from_left_action(static_cast<int>(n), rows), ""};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  return out;
}

SolutionFile load_solution_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_solution_file(buf.str());
}

std::string solution_to_json(const Solution& s, const std::string& name) {
  nlohmann::ordered_json doc;
  doc["n"] = s.order();
  auto rows = nlohmann::ordered_json::array();
  for (int x = 0; x < s.order(); ++x) {
    auto row = nlohmann::ordered_json::array();
    for (int y = 0; y < s.order(); ++y) row.push_back(s.left(x, y) + 1);
    rows.push_back(row);
  }
  doc["left"] = rows;
  if (!name.empty()) doc["name"] = name;
  return doc.dump();
}

SignedWord parse_word(const std::string& text, int n) {
  SignedWord out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 'x')
      throw ParseError("bad word token \"" + token + "\" (expected x<i> or "
                       "x<i>^<k>)");
    std::size_t caret = token.find('^');
    std::string letter_part = token.substr(1, caret == std::string::npos
                                                  ? std::string::npos
                                                  : caret - 1);
    long long letter = 0, exp = 1;
    try {
      std::size_t used = 0;
      letter = std::stoll(letter_part, &used);
      if (used != letter_part.size()) throw std::invalid_argument("trailing");
      if (caret != std::string::npos) {
        std::string exp_part = token.substr(caret + 1);
        exp = std::stoll(exp_part, &used);
        if (used != exp_part.size()) throw std::invalid_argument("trailing");
      }
    } catch (const std::exception&) {
      throw ParseError("bad word token \"" + token + "\"");
    }
    if (letter < 1 || letter > n)
      throw ParseError("letter index " + std::to_string(letter) +
                       " outside 1.." + std::to_string(n));
    if (exp == 0) throw ParseError("zero exponent in \"" + token + "\"");
    out.push_back({static_cast<int>(letter - 1), exp});
  }
  return out;
}

}  // namespace ybe
