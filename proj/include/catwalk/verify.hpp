#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catwalk/enumerate.hpp"

namespace catwalk {

/// The exhaustively checkable statements, keyed the way the CLI spells them:
///   thm1       encode_dyck_meander maps meanders of length n onto A_n
///   thm1-star  plain Dyck paths of semilength n map onto A-star at 2n
///   thm2       excursions of length n map onto A-prime_n
///   thm3       encode_motzkin_meander maps meanders of length n onto B_{n+1};
///              Motzkin paths land exactly on B-prime_{n+1}
///   cor1       excursion images are the B_{n+1} members ending UD, and
///              dropping that UD is a bijection onto B_n
///   remark1    the DUU-position classes of semilength-n Dyck paths each
///              hold exactly one member of A_n (reported faithfully; this
///              fails for n >= 2 -- the class count instead equals
///              |A_{n-1}|, which is verified alongside)
enum class Theorem { thm1, thm1_star, thm2, thm3, cor1, remark1 };

std::string_view theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name);

/// Largest --max-n the CLI accepts, per theorem.
int theorem_ceiling(Theorem t);

/// --max-n used when none is given.
int theorem_default_max_n(Theorem t);

struct PerSizeResult {
  int n = 0;
  BigInt lhs_count;
  BigInt rhs_count;
  bool sets_equal = false;
  bool round_trips_ok = false;
};

struct VerificationReport {
  Theorem theorem = Theorem::thm1;
  int max_n = 0;
  std::vector<PerSizeResult> per_n;
  bool pass = false;
  std::vector<std::string> notes;  // informational, not part of the verdict
};

/// Runs the exhaustive set-equality and round-trip suite for every size up
/// to max_n.
VerificationReport run_theorem(Theorem t, int max_n);

/// The documented JSON rendering (counts as decimal strings).
std::string report_to_json(const VerificationReport& r);

}  // namespace catwalk
