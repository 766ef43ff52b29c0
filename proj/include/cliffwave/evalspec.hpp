#pragma once

// Line-oriented function-spec evaluation: each spec line names a kernel or
// state and fixes its parameters, a points file supplies evaluation points,
// and the result is a JSON table of blade-coefficient values.

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffwave/multivector.hpp"

namespace cliffwave {

struct EvalError : std::runtime_error {
  int line;
  EvalError(int line_, const std::string& what_)
      : std::runtime_error(what_), line(line_) {}
};

struct FunctionSpec {
  int line = 0;
  std::string name;
  std::string raw;  // normalized spec text, echoed into the report
  std::map<std::string, std::string> args;
};

// '#' starts a comment, blank lines are skipped. Spec lines are
// "name key=value ..."; list values are parenthesized comma lists.
std::vector<FunctionSpec> parse_spec_text(const std::string& text);

// Point lines are whitespace- or comma-separated reals.
std::vector<std::vector<double>> parse_points_text(const std::string& text);

Multivector eval_function(const FunctionSpec& spec,
                          std::span<const double> point);

// Evaluates every spec at every point; throws EvalError on any parse or
// arity problem. Returns the JSON document.
std::string eval_report(const std::string& spec_text,
                        const std::string& points_text);

}  // namespace cliffwave
