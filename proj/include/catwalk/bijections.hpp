#pragma once

#include <vector>

#include "catwalk/family.hpp"
#include "catwalk/path.hpp"

namespace catwalk {

/// How a nonempty Dyck meander with catastrophes splits at its first return
/// to the axis. Exactly one case applies:
///   empty_path   the input is the empty path
///   no_return    U . alpha, never back on the axis; alpha is a pure U/D
///                meander read one level up
///   return_down  U . alpha . D . beta, alpha a Dyck path at level 1, the
///                marked D the first return
///   return_cat2  U . alpha . D2 . beta, the catastrophe the first return;
///                alpha . D is a Dyck path
///   return_cat   U . alpha . Di . beta with i >= 3; alpha . D(i-1) is an
///                excursion ending in a catastrophe
enum class FirstReturnCase {
  empty_path,
  no_return,
  return_down,
  return_cat2,
  return_cat,
};

struct FirstReturnDecomposition {
  FirstReturnCase case_tag = FirstReturnCase::empty_path;
  Path alpha;
  int drop = 0;  // the catastrophe's drop, for return_cat2 / return_cat
  Path beta;
};

FirstReturnDecomposition decompose_first_return(const Path& p);

/// How a Motzkin meander with catastrophes starting with U splits at the
/// last departure from each level below its cut point. The cut is the first
/// return to the axis (a plain D only from level 1, else a catastrophe), or
/// absent when the path never returns. Reassembly:
///   U alphas[0] U alphas[1] ... U alphas[k-1] [tail] [beta]
/// where alphas[i], read at level i+1, is a Motzkin path.
enum class LastPassageTail { none, down, catastrophe };

struct LastPassageDecomposition {
  int k = 0;
  std::vector<Path> alphas;  // k entries
  LastPassageTail tail = LastPassageTail::none;
  Path beta;
};

LastPassageDecomposition decompose_last_passage(const Path& p);

/// Motzkin path -> semilength-n Dyck path with no UUU, by per-step
/// substitution U -> UUD, F -> UD, D -> D.
Path motzkin_to_dyck(const Path& m);

/// Inverse: greedy tokenization UUD -> U, UD -> F, D -> D. Requires a
/// UUU-free Dyck path.
Path dyck_to_motzkin(const Path& d);

/// Length-n Dyck meander with catastrophes -> semilength-n member of
/// family A (Dyck excursions land in A-prime, plain Dyck paths in A-star).
Path encode_dyck_meander(const Path& p);

/// Inverse of encode_dyck_meander on family A. The first-return prefix
/// determines the case; a UD prefix is resolved by trying catastrophe
/// splits over balanced prefixes, shortest first, with full validation of
/// both halves, falling back to the no-return reading. Throws when no
/// preimage exists.
Path decode_dyck_meander(const Path& q);

/// Length-n Motzkin meander with catastrophes -> semilength-(n+1) member of
/// family B (Motzkin paths land in B-prime; excursions end with UD).
Path encode_motzkin_meander(const Path& p);

/// Inverse of encode_motzkin_meander; total on nonempty members of B.
Path decode_motzkin_meander(const Path& q);

/// Length-n Motzkin excursion with catastrophes -> semilength-n member of
/// family B: encode_motzkin_meander with the final UD removed.
Path encode_motzkin_excursion(const Path& p);

}  // namespace catwalk
