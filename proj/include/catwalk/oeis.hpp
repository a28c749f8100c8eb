#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catwalk/enumerate.hpp"

namespace catwalk {

struct BFileEntry {
  long long index = 0;
  BigInt value;
};

/// Parses the two-column "index value" b-file format; '#' comments and blank
/// lines are ignored. Throws std::invalid_argument on malformed lines.
std::vector<BFileEntry> parse_bfile(std::string_view text);

struct OeisComparison {
  bool pass = false;
  long long offset = 0;      // b-file index = library n + offset
  int compared = 0;          // entries in the aligned overlap
  long long first_mismatch_n = -1;  // library index of the first mismatch
  std::string message;
};

/// Aligns library counts c_0..c_max against the b-file by the shift with the
/// most agreeing overlap entries (ties broken toward the smallest shift),
/// then requires the whole overlap to match. Throws std::invalid_argument
/// when the b-file carries no entries.
OeisComparison compare_counts(const std::vector<BigInt>& counts,
                              const std::vector<BFileEntry>& bfile);

}  // namespace catwalk
