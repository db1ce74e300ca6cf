#pragma once

#include <stdexcept>
#include <string>

#include "ybe/solution.hpp"

namespace ybe {

/// Input problems (syntax errors, non-permutation rows, out-of-range n,
/// duplicate keys) with a position-bearing message where available.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolutionFile {
  Solution solution;
  std::string name;  // empty when the document has none
};

/// Parses the JSON document {"n": int, "left": [[...]], "name": opt}.
/// Letters are 1-indexed in the file; the right action is derived from the
/// left rows.  Duplicate keys are rejected.
SolutionFile parse_solution_file(const std::string& text);

/// Reads and parses a file from disk; file-system problems raise ParseError.
SolutionFile load_solution_file(const std::string& path);

std::string solution_to_json(const Solution& s, const std::string& name = "");

/// Parses whitespace-separated word tokens "x<i>" or "x<i>^<k>" with
/// 1-indexed letters; returns 0-based letters.  Throws ParseError on bad
/// syntax, zero exponents, or letters outside 1..n.
SignedWord parse_word(const std::string& text, int n);

}  // namespace ybe
