#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "catwalk/path.hpp"

namespace catwalk {

/// The path families the library speaks about.
///
/// Step-indexed families (size = number of steps):
///   motzkin              Motzkin paths (U/D/F excursions)
///   dyck_meander_cat     nonnegative U/D paths with catastrophes, any end
///   dyck_excursion_cat   same, ending on the axis
///   motzkin_meander_cat  U/D/F meanders with catastrophes
///   motzkin_excursion_cat
///
/// Semilength-indexed Dyck families (size n = 2n steps):
///   dyck     plain Dyck paths
///   a        no UUU or DUD occurrence of min ordinate > 0
///   a_prime  members of `a` whose every UD on the axis is followed by a
///            later UUU occurrence
///   a_star   avoid UUU and DUD everywhere and start UUD (plus the empty path)
///   b        no UUU occurrence of min ordinate >= 2
///   b_prime  members of `b` with no DU occurrence of min ordinate 1,
///            ending with UD (empty path included)
enum class Family {
  dyck,
  motzkin,
  dyck_meander_cat,
  dyck_excursion_cat,
  motzkin_meander_cat,
  motzkin_excursion_cat,
  a,
  a_prime,
  a_star,
  b,
  b_prime,
};

enum class IndexKind { steps, semilength };

/// What the size parameter "n" counts for this family.
IndexKind index_kind(Family f);

/// Number of steps in a size-n member of f.
int steps_for_index(Family f, int n);

/// Canonical id string, e.g. "dyck-excursion-cat", "A-prime".
std::string_view family_name(Family f);

/// Inverse of family_name; nullopt for unknown ids.
std::optional<Family> family_from_name(std::string_view name);

/// List of all family ids, in declaration order.
const std::vector<Family>& all_families();

bool family_allows_flat(Family f);
bool family_allows_catastrophe(Family f);
bool family_requires_zero_end(Family f);

/// Total membership predicate. Every family requires the path to stay on or
/// above the axis and every catastrophe to start at ordinate >= 2 and land
/// exactly on the axis; the per-family step and pattern restrictions are
/// documented on Family.
bool is_member(const Path& p, Family f);

}  // namespace catwalk
