#include "catwalk/oeis.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace catwalk {

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string index_tok, value_tok, extra;
    if (!(fields >> index_tok)) continue;  // blank line
    if (!(fields >> value_tok) || (fields >> extra)) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                  ": expected 'index value'");
    }
    BFileEntry e;
    try {
      e.index = std::stoll(index_tok);
      e.value = BigInt(value_tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                  ": malformed number");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

OeisComparison compare_counts(const std::vector<BigInt>& counts,
                              const std::vector<BFileEntry>& bfile) {
  if (bfile.empty()) {
    throw std::invalid_argument("b-file has no entries to compare against");
  }
  if (counts.empty()) {
    throw std::invalid_argument("no library counts to compare");
  }
  std::map<long long, BigInt> table;
  for (const BFileEntry& e : bfile) table[e.index] = e.value;

  const long long max_n = static_cast<long long>(counts.size()) - 1;
  const long long lo = table.begin()->first - max_n;
  const long long hi = table.rbegin()->first;

  long long best_offset = lo;
  int best_matches = -1;
  for (long long s = lo; s <= hi; ++s) {
    int matches = 0;
    for (long long n = 0; n <= max_n; ++n) {
      auto it = table.find(n + s);
      if (it != table.end() && it->second == counts[static_cast<std::size_t>(n)]) {
        ++matches;
      }
    }
    if (matches > best_matches) {
      best_matches = matches;
      best_offset = s;
    }
  }

  OeisComparison result;
  result.offset = best_offset;
  result.pass = true;
  for (long long n = 0; n <= max_n; ++n) {
    auto it = table.find(n + best_offset);
    if (it == table.end()) continue;
    ++result.compared;
    if (it->second != counts[static_cast<std::size_t>(n)] && result.pass) {
      result.pass = false;
      result.first_mismatch_n = n;
    }
  }
  if (result.compared == 0) {
    throw std::invalid_argument("empty overlap between counts and b-file");
  }
  std::ostringstream msg;
  if (result.pass) {
    msg << "all " << result.compared << " overlapping values match at offset "
        << result.offset;
  } else {
    msg << "mismatch at n=" << result.first_mismatch_n << " (b-file index "
        << result.first_mismatch_n + result.offset << ", offset "
        << result.offset << ")";
  }
  result.message = msg.str();
  return result;
}

}  // namespace catwalk
