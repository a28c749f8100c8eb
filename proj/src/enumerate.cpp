#include "catwalk/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace catwalk {

namespace {

struct Generator {
  Family family;
  int target = 0;  // number of steps
  bool flats = false;
  bool cats = false;
  bool end_zero = true;
  const std::function<void(const Path&)>* visit = nullptr;

  std::vector<Step> cur;
  int level = 0;

  bool pattern_prefix_ok() const {
    // Checks only the occurrence ending at the step just placed; earlier
    // windows were vetted when their last step was placed.
    const std::size_t k = cur.size();
    switch (family) {
      case Family::a:
      case Family::a_prime: {
        if (k < 3) return true;
        const Step a = cur[k - 3], b = cur[k - 2], c = cur[k - 1];
        const int before = level - a.rise() - b.rise() - c.rise();
        if (a.kind == StepKind::up && b.kind == StepKind::up &&
            c.kind == StepKind::up && before > 0) {
          return false;
        }
        if (a.kind == StepKind::down && b.kind == StepKind::up &&
            c.kind == StepKind::down && before - 1 > 0) {
          return false;
        }
        return true;
      }
      case Family::a_star: {
        if (k == 1) return cur[0].kind == StepKind::up;
        if (k == 2) return cur[1].kind == StepKind::up;
        if (k == 3 && cur[2].kind != StepKind::down) return false;
        if (k < 3) return true;
        const Step a = cur[k - 3], b = cur[k - 2], c = cur[k - 1];
        if (a.kind == StepKind::up && b.kind == StepKind::up &&
            c.kind == StepKind::up) {
          return false;
        }
        if (a.kind == StepKind::down && b.kind == StepKind::up &&
            c.kind == StepKind::down) {
          return false;
        }
        return true;
      }
      case Family::b:
      case Family::b_prime: {
        if (k >= 3) {
          const Step a = cur[k - 3], b = cur[k - 2], c = cur[k - 1];
          const int before = level - a.rise() - b.rise() - c.rise();
          if (a.kind == StepKind::up && b.kind == StepKind::up &&
              c.kind == StepKind::up && before >= 2) {
            return false;
          }
        }
        if (family == Family::b_prime && k >= 2) {
          const Step b = cur[k - 2], c = cur[k - 1];
          const int before = level - b.rise() - c.rise();
          if (b.kind == StepKind::down && c.kind == StepKind::up &&
              before - 1 == 1) {
            return false;
          }
        }
        return true;
      }
      default:
        return true;
    }
  }

  bool final_ok(const Path& p) const {
    switch (family) {
      case Family::a_prime:
      case Family::b_prime:
        return is_member(p, family);
      default:
        return true;
    }
  }

  void emit() {
    Path p(cur);
    if (final_ok(p)) (*visit)(p);
  }

  void rec(int remaining) {
    if (remaining == 0) {
      if (!end_zero || level == 0) emit();
      return;
    }
    // Feasibility: an excursion at level h needs h more unit downs, or a
    // single catastrophe once h >= 2.
    if (end_zero) {
      if (cats) {
        if (level >= 1 && remaining < 1) return;
      } else {
        if (level > remaining) return;
        if (!flats && ((remaining - level) & 1)) return;
      }
    }

    push(Step::up(), remaining);
    if (level >= 1) push(Step::down(), remaining);
    if (flats) push(Step::flat(), remaining);
    if (cats && level >= 2) push(Step::catastrophe(level), remaining);
  }

  void push(Step s, int remaining) {
    cur.push_back(s);
    level += s.rise();
    if (pattern_prefix_ok()) rec(remaining - 1);
    level -= s.rise();
    cur.pop_back();
  }
};

}  // namespace

void for_each_member(Family f, int n,
                     const std::function<void(const Path&)>& visit) {
  if (n < 0) throw std::invalid_argument("size must be >= 0");
  Generator g;
  g.family = f;
  g.target = steps_for_index(f, n);
  g.flats = family_allows_flat(f);
  g.cats = family_allows_catastrophe(f);
  g.end_zero = family_requires_zero_end(f);
  g.visit = &visit;
  g.cur.reserve(g.target);
  g.rec(g.target);
}

std::vector<Path> enumerate_family(Family f, int n) {
  std::vector<Path> out;
  for_each_member(f, n, [&](const Path& p) { out.push_back(p); });
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    return format_path(a) < format_path(b);
  });
  return out;
}

BigInt enumeration_count(Family f, int n) {
  BigInt count = 0;
  for_each_member(f, n, [&](const Path&) { ++count; });
  return count;
}

BigInt count_dp(Family f, int n) {
  switch (f) {
    case Family::a:
    case Family::a_prime:
    case Family::a_star:
    case Family::b:
    case Family::b_prime:
      throw std::invalid_argument(
          "count_dp supports only the step-defined families, not '" +
          std::string(family_name(f)) + "'");
    default:
      break;
  }
  if (n < 0) throw std::invalid_argument("size must be >= 0");
  const int len = steps_for_index(f, n);
  const bool flats = family_allows_flat(f);
  const bool cats = family_allows_catastrophe(f);

  std::vector<BigInt> at_level(static_cast<std::size_t>(len) + 1);
  at_level[0] = 1;
  for (int step = 0; step < len; ++step) {
    std::vector<BigInt> next(at_level.size());
    BigInt resettable = 0;  // sum over ordinates >= 2
    for (std::size_t h = 0; h < at_level.size(); ++h) {
      if (at_level[h] == 0) continue;
      if (h + 1 < at_level.size()) next[h + 1] += at_level[h];
      if (h >= 1) next[h - 1] += at_level[h];
      if (flats) next[h] += at_level[h];
      if (h >= 2) resettable += at_level[h];
    }
    if (cats) next[0] += resettable;
    at_level = std::move(next);
  }

  if (family_requires_zero_end(f)) return at_level[0];
  BigInt total = 0;
  for (const BigInt& c : at_level) total += c;
  return total;
}

CountTable count_table(Family f, int max_n) {
  CountTable t;
  t.family = f;
  t.max_n = max_n;
  t.counts.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) t.counts.push_back(count_dp(f, n));
  return t;
}

std::vector<int> duu_positions(const Path& p) {
  if (!is_member(p, Family::dyck)) {
    throw std::invalid_argument("duu_positions requires a plain Dyck path");
  }
  std::vector<int> out;
  for (std::size_t k = 0; k + 2 < p.size(); ++k) {
    if (p.steps[k].kind == StepKind::down &&
        p.steps[k + 1].kind == StepKind::up &&
        p.steps[k + 2].kind == StepKind::up) {
      out.push_back(static_cast<int>(k));
    }
  }
  return out;
}

bool duu_class_check(int n) {
  // classes[positions] -> number of members of family A in the class.
  std::map<std::vector<int>, int> a_members;
  for_each_member(Family::dyck, n, [&](const Path& p) {
    int& slot = a_members[duu_positions(p)];
    if (is_member(p, Family::a)) ++slot;
  });
  for (const auto& [positions, count] : a_members) {
    if (count != 1) return false;
  }
  return true;
}

BigInt count_duu_classes(int n) {
  std::map<std::vector<int>, bool> seen;
  for_each_member(Family::dyck, n,
                  [&](const Path& p) { seen[duu_positions(p)] = true; });
  return BigInt(seen.size());
}

}  // namespace catwalk
