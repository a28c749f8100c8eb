#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <vector>

#include "catwalk/family.hpp"
#include "catwalk/path.hpp"

namespace catwalk {

using BigInt = boost::multiprecision::cpp_int;

/// Depth-first visit of every size-n member of f, pruned by feasibility and,
/// for the pattern-restricted families, by forbidden-occurrence checks on the
/// growing prefix. Visit order is an implementation detail; enumerate_family
/// sorts.
void for_each_member(Family f, int n,
                     const std::function<void(const Path&)>& visit);

/// All size-n members, duplicate-free, sorted lexicographically by token
/// string.
std::vector<Path> enumerate_family(Family f, int n);

/// |enumerate_family(f, n)| without materializing paths.
BigInt enumeration_count(Family f, int n);

/// Layered (position, ordinate) count for the step-defined families; the
/// catastrophe transition funnels every ordinate >= 2 into 0. Throws
/// std::invalid_argument for the pattern-restricted families.
BigInt count_dp(Family f, int n);

struct CountTable {
  Family family = Family::dyck;
  int max_n = 0;
  std::vector<BigInt> counts;  // counts[n] for n = 0..max_n
};

/// count_dp tabulated for n = 0..max_n.
CountTable count_table(Family f, int max_n);

/// Start indices of DUU occurrences, ascending. Requires a plain Dyck path.
std::vector<int> duu_positions(const Path& p);

/// Partitions the semilength-n Dyck paths by duu_positions and reports
/// whether every class contains exactly one member of family A at the same
/// semilength. See verify.hpp: this representativity fails for n >= 2; the
/// class count instead tracks the Dyck meanders one semilength down.
bool duu_class_check(int n);

/// Number of duu_positions classes among semilength-n Dyck paths.
BigInt count_duu_classes(int n);

}  // namespace catwalk
