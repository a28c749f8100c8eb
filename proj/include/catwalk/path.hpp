#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catwalk {

enum class StepKind : std::uint8_t { up, down, flat, catastrophe };

/// One lattice step. Unit steps rise +1 (up), -1 (down) or 0 (flat);
/// a catastrophe drops by `drop` >= 2 and is only legal when it lands
/// exactly on the x-axis.
struct Step {
  StepKind kind = StepKind::up;
  std::int32_t drop = 0;  // >= 2, set iff kind == catastrophe

  static Step up() { return {StepKind::up, 0}; }
  static Step down() { return {StepKind::down, 0}; }
  static Step flat() { return {StepKind::flat, 0}; }
  static Step catastrophe(std::int32_t drop);

  int rise() const;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

/// A finite step sequence starting at the origin. Geometry that families
/// require (staying above the axis, catastrophes landing on it) is *not*
/// enforced here; predicates in family.hpp check it, so tests and the
/// enumerator can build arbitrary raw paths.
struct Path {
  std::vector<Step> steps;

  Path() = default;
  explicit Path(std::vector<Step> s) : steps(std::move(s)) {}

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }

  /// Ordinate after each step; heights()[k] is the level reached by steps[k].
  std::vector<int> heights() const;
  int final_height() const;
  int max_height() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// A located pattern match. min_ordinate is the smallest ordinate among all
/// lattice points the occurrence spans, endpoints included; "pattern at
/// height h" constraints are evaluated against it.
struct Occurrence {
  std::vector<Step> pattern;
  int start = 0;
  int min_ordinate = 0;
};

/// Parses the token grammar: path := ws (step ws)*; step := 'U' | 'F' |
/// 'D' integer?. A bare 'D' is a unit down-step, 'D<i>' with i >= 2 a
/// catastrophe. Throws std::invalid_argument on malformed input ('D0' and
/// 'D1' included: unit drops are spelled 'D').
Path parse_path(std::string_view text);

/// Inverse of parse_path; emits no whitespace.
std::string format_path(const Path& p);

/// All start indices (overlaps allowed) where `pattern` matches exactly,
/// in increasing order, each with its min_ordinate.
std::vector<Occurrence> find_occurrences(const Path& p,
                                         const std::vector<Step>& pattern);

/// Shorthand: builds a pattern from tokens, e.g. pattern("UUD").
std::vector<Step> pattern(std::string_view tokens);

}  // namespace catwalk
