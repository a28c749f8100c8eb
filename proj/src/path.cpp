#include "catwalk/path.hpp"

#include <cctype>
#include <stdexcept>

namespace catwalk {

Step Step::catastrophe(std::int32_t drop) {
  if (drop < 2) {
    throw std::invalid_argument("catastrophe drop must be >= 2, got " +
                                std::to_string(drop));
  }
  return {StepKind::catastrophe, drop};
}

int Step::rise() const {
  switch (kind) {
    case StepKind::up:
      return 1;
    case StepKind::down:
      return -1;
    case StepKind::flat:
      return 0;
    case StepKind::catastrophe:
      return -drop;
  }
  return 0;
}

std::vector<int> Path::heights() const {
  std::vector<int> h;
  h.reserve(steps.size());
  int level = 0;
  for (const Step& s : steps) {
    level += s.rise();
    h.push_back(level);
  }
  return h;
}

int Path::final_height() const {
  int level = 0;
  for (const Step& s : steps) level += s.rise();
  return level;
}

int Path::max_height() const {
  int level = 0;
  int best = 0;
  for (const Step& s : steps) {
    level += s.rise();
    if (level > best) best = level;
  }
  return best;
}

Path parse_path(std::string_view text) {
  std::vector<Step> steps;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'U') {
      steps.push_back(Step::up());
      ++i;
    } else if (c == 'F') {
      steps.push_back(Step::flat());
      ++i;
    } else if (c == 'D') {
      ++i;
      if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        long value = 0;
        const std::size_t digits_at = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          if (value > 1'000'000) {
            throw std::invalid_argument("catastrophe drop out of range near '" +
                                        std::string(text.substr(digits_at)) +
                                        "'");
          }
          ++i;
        }
        if (value < 2) {
          throw std::invalid_argument(
              "'D" + std::to_string(value) +
              "' is not a step: catastrophes need a drop >= 2 (a unit "
              "down-step is spelled 'D')");
        }
        steps.push_back(Step::catastrophe(static_cast<std::int32_t>(value)));
      } else {
        steps.push_back(Step::down());
      }
    } else {
      throw std::invalid_argument("unexpected character '" +
                                  std::string(1, c) + "' at position " +
                                  std::to_string(i));
    }
  }
  return Path(std::move(steps));
}

std::string format_path(const Path& p) {
  std::string out;
  out.reserve(p.size());
  for (const Step& s : p.steps) {
    switch (s.kind) {
      case StepKind::up:
        out += 'U';
        break;
      case StepKind::down:
        out += 'D';
        break;
      case StepKind::flat:
        out += 'F';
        break;
      case StepKind::catastrophe:
        out += 'D';
        out += std::to_string(s.drop);
        break;
    }
  }
  return out;
}

std::vector<Occurrence> find_occurrences(const Path& p,
                                         const std::vector<Step>& pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
  std::vector<Occurrence> out;
  if (p.size() < pattern.size()) return out;
  const std::vector<int> h = p.heights();
  const std::size_t last = p.size() - pattern.size();
  for (std::size_t start = 0; start <= last; ++start) {
    bool match = true;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      if (p.steps[start + k] != pattern[k]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    // Ordinates spanned: the point before the occurrence plus one per step.
    int min_ord = start == 0 ? 0 : h[start - 1];
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      min_ord = std::min(min_ord, h[start + k]);
    }
    out.push_back(Occurrence{pattern, static_cast<int>(start), min_ord});
  }
  return out;
}

std::vector<Step> pattern(std::string_view tokens) {
  return parse_path(tokens).steps;
}

}  // namespace catwalk
