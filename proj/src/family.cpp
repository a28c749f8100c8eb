#include "catwalk/family.hpp"

#include <stdexcept>
#include <vector>

namespace catwalk {

namespace {

const std::vector<std::pair<Family, std::string_view>>& name_table() {
  static const std::vector<std::pair<Family, std::string_view>> table = {
      {Family::dyck, "dyck"},
      {Family::motzkin, "motzkin"},
      {Family::dyck_meander_cat, "dyck-meander-cat"},
      {Family::dyck_excursion_cat, "dyck-excursion-cat"},
      {Family::motzkin_meander_cat, "motzkin-meander-cat"},
      {Family::motzkin_excursion_cat, "motzkin-excursion-cat"},
      {Family::a, "A"},
      {Family::a_prime, "A-prime"},
      {Family::a_star, "A-star"},
      {Family::b, "B"},
      {Family::b_prime, "B-prime"},
  };
  return table;
}

bool is_pattern_family(Family f) {
  switch (f) {
    case Family::a:
    case Family::a_prime:
    case Family::a_star:
    case Family::b:
    case Family::b_prime:
      return true;
    default:
      return false;
  }
}

}  // namespace

IndexKind index_kind(Family f) {
  switch (f) {
    case Family::dyck:
    case Family::a:
    case Family::a_prime:
    case Family::a_star:
    case Family::b:
    case Family::b_prime:
      return IndexKind::semilength;
    default:
      return IndexKind::steps;
  }
}

int steps_for_index(Family f, int n) {
  return index_kind(f) == IndexKind::semilength ? 2 * n : n;
}

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : name_table()) {
    if (fam == f) return name;
  }
  throw std::logic_error("unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [fam, fname] : name_table()) {
    if (fname == name) return fam;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& [fam, name] : name_table()) v.push_back(fam);
    return v;
  }();
  return fams;
}

bool family_allows_flat(Family f) {
  switch (f) {
    case Family::motzkin:
    case Family::motzkin_meander_cat:
    case Family::motzkin_excursion_cat:
      return true;
    default:
      return false;
  }
}

bool family_allows_catastrophe(Family f) {
  switch (f) {
    case Family::dyck_meander_cat:
    case Family::dyck_excursion_cat:
    case Family::motzkin_meander_cat:
    case Family::motzkin_excursion_cat:
      return true;
    default:
      return false;
  }
}

bool family_requires_zero_end(Family f) {
  switch (f) {
    case Family::dyck_meander_cat:
    case Family::motzkin_meander_cat:
      return false;
    default:
      return true;
  }
}

namespace {

// Forbidden-occurrence scans. All pattern families are over U/D only, so
// these run after the step-kind and geometry checks have passed.

bool has_uuu_with_min_at_least(const Path& p, int bound) {
  // A UUU occurrence's min ordinate is its start ordinate.
  int level = 0;
  int run = 0;
  for (const Step& s : p.steps) {
    if (s.kind == StepKind::up) {
      ++run;
      if (run >= 3 && level - 2 >= bound) return true;
    } else {
      run = 0;
    }
    level += s.rise();
  }
  return false;
}

bool has_dud_with_min_above_zero(const Path& p) {
  // A DUD occurrence starting at ordinate y has min ordinate y - 1.
  int level = 0;
  for (std::size_t k = 0; k + 2 < p.size(); ++k) {
    if (p.steps[k].kind == StepKind::down &&
        p.steps[k + 1].kind == StepKind::up &&
        p.steps[k + 2].kind == StepKind::down && level - 1 > 0) {
      return true;
    }
    level += p.steps[k].rise();
  }
  return false;
}

bool has_dud_anywhere(const Path& p) {
  for (std::size_t k = 0; k + 2 < p.size(); ++k) {
    if (p.steps[k].kind == StepKind::down &&
        p.steps[k + 1].kind == StepKind::up &&
        p.steps[k + 2].kind == StepKind::down) {
      return true;
    }
  }
  return false;
}

bool has_uuu_anywhere(const Path& p) {
  int run = 0;
  for (const Step& s : p.steps) {
    run = s.kind == StepKind::up ? run + 1 : 0;
    if (run >= 3) return true;
  }
  return false;
}

bool has_du_at_min_one(const Path& p) {
  // A DU occurrence starting at ordinate y has min ordinate y - 1.
  int level = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (p.steps[k].kind == StepKind::down &&
        p.steps[k + 1].kind == StepKind::up && level - 1 == 1) {
      return true;
    }
    level += p.steps[k].rise();
  }
  return false;
}

// Every UD occurrence on the axis must be followed by a UUU occurrence
// starting at least two steps later.
bool axis_ud_followed_by_uuu(const Path& p) {
  int last_axis_ud = -1;
  int level = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (level == 0 && p.steps[k].kind == StepKind::up &&
        p.steps[k + 1].kind == StepKind::down) {
      last_axis_ud = static_cast<int>(k);
    }
    level += p.steps[k].rise();
  }
  if (last_axis_ud < 0) return true;
  int run = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    run = p.steps[k].kind == StepKind::up ? run + 1 : 0;
    if (run >= 3 && static_cast<int>(k) - 2 >= last_axis_ud + 2) return true;
  }
  return false;
}

}  // namespace

bool is_member(const Path& p, Family f) {
  const bool flats_ok = family_allows_flat(f);
  const bool cats_ok = family_allows_catastrophe(f);

  int level = 0;
  for (const Step& s : p.steps) {
    switch (s.kind) {
      case StepKind::up:
        ++level;
        break;
      case StepKind::down:
        if (level == 0) return false;
        --level;
        break;
      case StepKind::flat:
        if (!flats_ok) return false;
        break;
      case StepKind::catastrophe:
        if (!cats_ok) return false;
        if (level < 2 || s.drop != level) return false;
        level = 0;
        break;
    }
  }
  if (family_requires_zero_end(f) && level != 0) return false;

  if (!is_pattern_family(f)) return true;

  switch (f) {
    case Family::a:
      return !has_uuu_with_min_at_least(p, 1) && !has_dud_with_min_above_zero(p);
    case Family::a_star:
      if (p.empty()) return true;
      if (p.size() < 3 || p.steps[0].kind != StepKind::up ||
          p.steps[1].kind != StepKind::up ||
          p.steps[2].kind != StepKind::down) {
        return false;
      }
      return !has_uuu_anywhere(p) && !has_dud_anywhere(p);
    case Family::a_prime:
      return is_member(p, Family::a) && axis_ud_followed_by_uuu(p);
    case Family::b:
      return !has_uuu_with_min_at_least(p, 2);
    case Family::b_prime: {
      if (!is_member(p, Family::b) || has_du_at_min_one(p)) return false;
      if (p.empty()) return true;
      const std::size_t n = p.size();
      return n >= 2 && p.steps[n - 2].kind == StepKind::up &&
             p.steps[n - 1].kind == StepKind::down;
    }
    default:
      return true;
  }
}

}  // namespace catwalk
