#include "catwalk/bijections.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace catwalk {

namespace {

using Steps = std::vector<Step>;

// Index of the first step that lands on the axis, or -1. Assumes the walk
// starts at level 0 with an up-step.
int first_return_index(const Steps& s) {
  int level = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    level += s[k].rise();
    if (level == 0) return static_cast<int>(k);
  }
  return -1;
}

Steps slice(const Steps& s, std::size_t lo, std::size_t hi) {
  return Steps(s.begin() + static_cast<std::ptrdiff_t>(lo),
               s.begin() + static_cast<std::ptrdiff_t>(hi));
}

void append(Steps& out, const Steps& tail) {
  out.insert(out.end(), tail.begin(), tail.end());
}

FirstReturnDecomposition first_return_impl(const Steps& s) {
  FirstReturnDecomposition d;
  if (s.empty()) {
    d.case_tag = FirstReturnCase::empty_path;
    return d;
  }
  const int t = first_return_index(s);
  if (t < 0) {
    d.case_tag = FirstReturnCase::no_return;
    d.alpha = Path(slice(s, 1, s.size()));
    return d;
  }
  d.alpha = Path(slice(s, 1, static_cast<std::size_t>(t)));
  d.beta = Path(slice(s, static_cast<std::size_t>(t) + 1, s.size()));
  const Step& ret = s[static_cast<std::size_t>(t)];
  if (ret.kind == StepKind::down) {
    d.case_tag = FirstReturnCase::return_down;
  } else if (ret.drop == 2) {
    d.case_tag = FirstReturnCase::return_cat2;
    d.drop = 2;
  } else {
    d.case_tag = FirstReturnCase::return_cat;
    d.drop = ret.drop;
  }
  return d;
}

Steps phi_impl(const Steps& s) {
  FirstReturnDecomposition d = first_return_impl(s);
  Steps out;
  out.reserve(2 * s.size());
  switch (d.case_tag) {
    case FirstReturnCase::empty_path:
      break;
    case FirstReturnCase::no_return:
      out.push_back(Step::up());
      out.push_back(Step::down());
      append(out, phi_impl(d.alpha.steps));
      break;
    case FirstReturnCase::return_down:
      out.push_back(Step::up());
      out.push_back(Step::up());
      out.push_back(Step::down());
      append(out, phi_impl(d.alpha.steps));
      out.push_back(Step::down());
      append(out, phi_impl(d.beta.steps));
      break;
    case FirstReturnCase::return_cat2: {
      Steps closed = d.alpha.steps;
      closed.push_back(Step::down());
      out.push_back(Step::up());
      append(out, phi_impl(closed));
      out.push_back(Step::down());
      append(out, phi_impl(d.beta.steps));
      break;
    }
    case FirstReturnCase::return_cat: {
      Steps closed = d.alpha.steps;
      closed.push_back(Step::catastrophe(d.drop - 1));
      out.push_back(Step::up());
      out.push_back(Step::down());
      append(out, phi_impl(closed));
      append(out, phi_impl(d.beta.steps));
      break;
    }
  }
  return out;
}

bool pure_up_down(const Steps& s) {
  for (const Step& st : s) {
    if (st.kind != StepKind::up && st.kind != StepKind::down) return false;
  }
  return true;
}

int net_rise(const Steps& s) {
  int level = 0;
  for (const Step& st : s) level += st.rise();
  return level;
}

// Inverts phi on subranges of a fixed Dyck word, memoized per invocation.
// invert(lo, hi) yields the unique meander whose image is q[lo, hi), or
// nullopt. Every range phi can produce is balanced, so unbalanced ranges
// fail fast.
struct MeanderDecoder {
  const Steps& q;
  std::vector<int> level_before;  // level ahead of step k
  std::unordered_map<long long, std::optional<Steps>> memo;

  explicit MeanderDecoder(const Steps& word) : q(word) {
    level_before.reserve(q.size() + 1);
    int level = 0;
    for (const Step& s : q) {
      level_before.push_back(level);
      level += s.rise();
    }
    level_before.push_back(level);
  }

  bool balanced(int lo, int hi) const {
    return level_before[static_cast<std::size_t>(lo)] ==
           level_before[static_cast<std::size_t>(hi)];
  }

  // First index t in [lo, hi) where the level returns to level_before[lo].
  int first_return(int lo, int hi) const {
    const int base = level_before[static_cast<std::size_t>(lo)];
    for (int k = lo; k < hi; ++k) {
      if (level_before[static_cast<std::size_t>(k) + 1] == base) return k;
    }
    return -1;
  }

  std::optional<Steps> invert(int lo, int hi) {
    const long long key =
        static_cast<long long>(lo) * (static_cast<long long>(q.size()) + 1) +
        hi;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::optional<Steps> result = invert_uncached(lo, hi);
    memo.emplace(key, result);
    return result;
  }

  std::optional<Steps> invert_uncached(int lo, int hi) {
    if (lo == hi) return Steps{};
    if (((hi - lo) & 1) || !balanced(lo, hi)) return std::nullopt;
    if (q[static_cast<std::size_t>(lo)].kind != StepKind::up)
      return std::nullopt;
    if (q[static_cast<std::size_t>(lo) + 1].kind == StepKind::up) {
      return q[static_cast<std::size_t>(lo) + 2].kind == StepKind::down
                 ? invert_arch(lo, hi)
                 : invert_tall_arch(lo, hi);
    }
    // Prefix UD: either a catastrophe image or a non-returning meander.
    if (auto p = invert_catastrophe(lo, hi)) return p;
    return invert_no_return(lo, hi);
  }

  // q = UUD A D B with the marked D the first return; preimage U a D b
  // with a the Dyck preimage of A.
  std::optional<Steps> invert_arch(int lo, int hi) {
    const int t = first_return(lo, hi);
    if (t < 0 || t < lo + 3) return std::nullopt;
    auto a = invert(lo + 3, t);
    if (!a || !pure_up_down(*a) || net_rise(*a) != 0) return std::nullopt;
    auto b = invert(t + 1, hi);
    if (!b) return std::nullopt;
    Steps out;
    out.push_back(Step::up());
    append(out, *a);
    out.push_back(Step::down());
    append(out, *b);
    return out;
  }

  // q = U A D B starting UUU; A is the image of a nonempty Dyck path w, and
  // the preimage is U w' D2 b where w' is w without its final down-step.
  std::optional<Steps> invert_tall_arch(int lo, int hi) {
    const int t = first_return(lo, hi);
    if (t < 0 || t == lo + 1) return std::nullopt;
    auto w = invert(lo + 1, t);
    if (!w || w->empty() || !pure_up_down(*w) || net_rise(*w) != 0)
      return std::nullopt;
    auto b = invert(t + 1, hi);
    if (!b) return std::nullopt;
    Steps out;
    out.push_back(Step::up());
    append(out, Steps(w->begin(), w->end() - 1));
    out.push_back(Step::catastrophe(2));
    append(out, *b);
    return out;
  }

  // q = UD X Y where X is the image of an excursion ending in a catastrophe
  // of drop d >= 2; the preimage raises the drop by one. Balanced prefixes
  // are tried shortest first; a candidate counts only if both halves invert.
  std::optional<Steps> invert_catastrophe(int lo, int hi) {
    for (int m = lo + 2; m <= hi; ++m) {
      if (!balanced(lo + 2, m) || m == lo + 2) continue;
      auto w = invert(lo + 2, m);
      if (!w || w->empty() ||
          w->back().kind != StepKind::catastrophe || net_rise(*w) != 0) {
        continue;
      }
      auto b = invert(m, hi);
      if (!b) continue;
      const int drop = w->back().drop;
      Steps out;
      out.push_back(Step::up());
      append(out, Steps(w->begin(), w->end() - 1));
      out.push_back(Step::catastrophe(drop + 1));
      append(out, *b);
      return out;
    }
    return std::nullopt;
  }

  // q = UD A with A the image of a catastrophe-free meander a; preimage U a.
  std::optional<Steps> invert_no_return(int lo, int hi) {
    auto a = invert(lo + 2, hi);
    if (!a || !pure_up_down(*a)) return std::nullopt;
    Steps out;
    out.push_back(Step::up());
    append(out, *a);
    return out;
  }
};

Steps chi_impl(const Steps& m) {
  Steps out;
  out.reserve(2 * m.size());
  for (const Step& s : m) {
    switch (s.kind) {
      case StepKind::up:
        out.push_back(Step::up());
        out.push_back(Step::up());
        out.push_back(Step::down());
        break;
      case StepKind::flat:
        out.push_back(Step::up());
        out.push_back(Step::down());
        break;
      default:
        out.push_back(Step::down());
        break;
    }
  }
  return out;
}

Steps chi_inverse_impl(const Steps& d) {
  Steps out;
  std::size_t k = 0;
  while (k < d.size()) {
    if (d[k].kind == StepKind::down) {
      out.push_back(Step::down());
      ++k;
    } else if (k + 1 < d.size() && d[k + 1].kind == StepKind::up) {
      // No UUU means a double rise is always UUD.
      if (k + 2 >= d.size() || d[k + 2].kind != StepKind::down) {
        throw std::invalid_argument(
            "path is outside the UUU-free tokenization domain");
      }
      out.push_back(Step::up());
      k += 3;
    } else {
      if (k + 1 >= d.size() || d[k + 1].kind != StepKind::down) {
        throw std::invalid_argument(
            "path is outside the UUU-free tokenization domain");
      }
      out.push_back(Step::flat());
      k += 2;
    }
  }
  return out;
}

LastPassageDecomposition last_passage_impl(const Steps& s) {
  LastPassageDecomposition d;
  const int t = first_return_index(s);
  std::size_t seg_len;
  if (t < 0) {
    seg_len = s.size();
    d.tail = LastPassageTail::none;
  } else {
    seg_len = static_cast<std::size_t>(t);
    const Step& cut = s[seg_len];
    d.tail = cut.kind == StepKind::down ? LastPassageTail::down
                                        : LastPassageTail::catastrophe;
    d.beta = Path(slice(s, seg_len + 1, s.size()));
  }

  std::vector<int> point_level(seg_len + 1, 0);
  for (std::size_t j = 0; j < seg_len; ++j) {
    point_level[j + 1] = point_level[j] + s[j].rise();
  }
  d.k = point_level[seg_len];

  // Marked up-step for level i: the step following the last visit to i - 1.
  std::vector<std::size_t> marked(static_cast<std::size_t>(d.k));
  for (int i = 1; i <= d.k; ++i) {
    std::size_t last = 0;
    for (std::size_t j = 0; j <= seg_len; ++j) {
      if (point_level[j] == i - 1) last = j;
    }
    marked[static_cast<std::size_t>(i) - 1] = last;
  }
  for (int i = 1; i <= d.k; ++i) {
    const std::size_t from = marked[static_cast<std::size_t>(i) - 1] + 1;
    const std::size_t to =
        i < d.k ? marked[static_cast<std::size_t>(i)] : seg_len;
    d.alphas.push_back(Path(slice(s, from, to)));
  }
  return d;
}

Steps psi_impl(const Steps& s) {
  Steps out;
  out.reserve(2 * s.size() + 2);
  if (s.empty()) {
    out.push_back(Step::up());
    out.push_back(Step::down());
    return out;
  }
  if (s[0].kind == StepKind::flat) {
    out.push_back(Step::up());
    out.push_back(Step::down());
    append(out, psi_impl(slice(s, 1, s.size())));
    return out;
  }
  LastPassageDecomposition d = last_passage_impl(s);
  out.push_back(Step::up());
  for (const Path& alpha : d.alphas) {
    out.push_back(Step::up());
    append(out, chi_impl(alpha.steps));
    out.push_back(Step::down());
  }
  out.push_back(Step::down());
  if (d.tail != LastPassageTail::none) {
    append(out, psi_impl(d.beta.steps));
  }
  return out;
}

Steps psi_inverse_impl(const Steps& q) {
  if (q.size() < 2 || q[0].kind != StepKind::up) {
    throw std::invalid_argument("not a Dyck word in the image of the map");
  }
  if (q[1].kind == StepKind::down) {
    if (q.size() == 2) return Steps{};
    Steps out;
    out.push_back(Step::flat());
    append(out, psi_inverse_impl(slice(q, 2, q.size())));
    return out;
  }

  // Leading form U (U <segment> D)^k D: each segment sits at level >= 2 and
  // tokenizes back to a Motzkin path.
  Steps out;
  std::size_t pos = 1;
  int k = 0;
  while (pos < q.size() && q[pos].kind == StepKind::up) {
    std::size_t end = pos + 1;
    int level = 2;
    while (end < q.size() && level != 1) {
      level += q[end].rise();
      ++end;
    }
    if (level != 1) {
      throw std::invalid_argument("unterminated block in the image word");
    }
    out.push_back(Step::up());
    append(out, chi_inverse_impl(slice(q, pos + 1, end - 1)));
    ++k;
    pos = end;
  }
  if (pos >= q.size() || q[pos].kind != StepKind::down) {
    throw std::invalid_argument("missing closing down-step in the image word");
  }
  ++pos;
  if (pos == q.size()) return out;  // meander ending at level k
  if (k == 1) {
    out.push_back(Step::down());
  } else {
    out.push_back(Step::catastrophe(k));
  }
  append(out, psi_inverse_impl(slice(q, pos, q.size())));
  return out;
}

void require_member(const Path& p, Family f, const char* op) {
  if (!is_member(p, f)) {
    throw std::invalid_argument(std::string(op) + ": '" + format_path(p) +
                                "' is not a member of family " +
                                std::string(family_name(f)));
  }
}

}  // namespace

FirstReturnDecomposition decompose_first_return(const Path& p) {
  require_member(p, Family::dyck_meander_cat, "decompose_first_return");
  return first_return_impl(p.steps);
}

LastPassageDecomposition decompose_last_passage(const Path& p) {
  require_member(p, Family::motzkin_meander_cat, "decompose_last_passage");
  if (p.empty() || p.steps[0].kind != StepKind::up) {
    throw std::invalid_argument(
        "decompose_last_passage: path must start with an up-step");
  }
  return last_passage_impl(p.steps);
}

Path motzkin_to_dyck(const Path& m) {
  require_member(m, Family::motzkin, "motzkin_to_dyck");
  return Path(chi_impl(m.steps));
}

Path dyck_to_motzkin(const Path& d) {
  require_member(d, Family::dyck, "dyck_to_motzkin");
  for (const Occurrence& o : find_occurrences(d, pattern("UUU"))) {
    (void)o;
    throw std::invalid_argument(
        "dyck_to_motzkin: '" + format_path(d) + "' contains UUU");
  }
  return Path(chi_inverse_impl(d.steps));
}

Path encode_dyck_meander(const Path& p) {
  require_member(p, Family::dyck_meander_cat, "encode_dyck_meander");
  return Path(phi_impl(p.steps));
}

Path decode_dyck_meander(const Path& q) {
  require_member(q, Family::a, "decode_dyck_meander");
  MeanderDecoder decoder(q.steps);
  auto preimage = decoder.invert(0, static_cast<int>(q.size()));
  if (!preimage) {
    throw std::invalid_argument("decode_dyck_meander: '" + format_path(q) +
                                "' has no preimage");
  }
  Path result(*preimage);
  if (phi_impl(result.steps) != q.steps) {
    throw std::logic_error("decode_dyck_meander: round trip failed for '" +
                           format_path(q) + "'");
  }
  return result;
}

Path encode_motzkin_meander(const Path& p) {
  require_member(p, Family::motzkin_meander_cat, "encode_motzkin_meander");
  return Path(psi_impl(p.steps));
}

Path decode_motzkin_meander(const Path& q) {
  if (q.empty()) {
    throw std::invalid_argument(
        "decode_motzkin_meander: the empty path has no preimage");
  }
  require_member(q, Family::b, "decode_motzkin_meander");
  return Path(psi_inverse_impl(q.steps));
}

Path encode_motzkin_excursion(const Path& p) {
  require_member(p, Family::motzkin_excursion_cat, "encode_motzkin_excursion");
  Steps image = psi_impl(p.steps);
  if (image.size() < 2 || image[image.size() - 2].kind != StepKind::up ||
      image.back().kind != StepKind::down) {
    throw std::logic_error(
        "encode_motzkin_excursion: image does not end with UD");
  }
  image.resize(image.size() - 2);
  return Path(std::move(image));
}

}  // namespace catwalk
