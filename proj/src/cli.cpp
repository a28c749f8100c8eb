#include "catwalk/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "catwalk/bijections.hpp"
#include "catwalk/enumerate.hpp"
#include "catwalk/oeis.hpp"
#include "catwalk/render.hpp"
#include "catwalk/series.hpp"
#include "catwalk/verify.hpp"

namespace catwalk {

namespace {

constexpr int kOk = 0;
constexpr int kVerifiedFalse = 1;
constexpr int kUsage = 2;

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
  return *f;
}

/// Series carrying the counting sequence of a family, or "" when the gf
/// route is not wired for it.
std::string gf_name_for(Family f) {
  switch (f) {
    case Family::dyck:
      return "catalan";
    case Family::motzkin:
      return "motzkin";
    case Family::dyck_meander_cat:
    case Family::a:
      return "M";
    case Family::dyck_excursion_cat:
    case Family::a_prime:
      return "Aprime";
    case Family::a_star:
      return "Astar";
    case Family::motzkin_meander_cat:
      return "Mprime";
    case Family::motzkin_excursion_cat:
    case Family::b:
      return "eprime";  // 1 + x * Mprime
    case Family::b_prime:
      return "motzkin-shifted";  // 1 + x * motzkin
  }
  return "";
}

BigInt count_via_gf(Family f, int n) {
  const std::string name = gf_name_for(f);
  auto integral = [](const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1) {
      throw std::logic_error("non-integer coefficient in a counting series");
    }
    return BigInt(boost::multiprecision::numerator(r));
  };
  if (name == "eprime") {
    if (n == 0) return 1;
    return integral(gf("Mprime", n)[n - 1]);
  }
  if (name == "motzkin-shifted") {
    if (n == 0) return 1;
    return integral(gf("motzkin", n)[n - 1]);
  }
  return integral(gf(name, n + 1)[n]);
}

bool dp_supported(Family f) {
  switch (f) {
    case Family::a:
    case Family::a_prime:
    case Family::a_star:
    case Family::b:
    case Family::b_prime:
      return false;
    default:
      return true;
  }
}

int cmd_count(const std::string& family_name, int n, std::string method,
              bool all_methods, std::ostream& out, std::ostream& err) {
  const Family f = parse_family(family_name);
  if (all_methods) {
    std::vector<std::pair<std::string, BigInt>> results;
    results.emplace_back("enum", enumeration_count(f, n));
    if (dp_supported(f)) results.emplace_back("dp", count_dp(f, n));
    results.emplace_back("gf", count_via_gf(f, n));
    bool agree = true;
    for (const auto& [name, value] : results) {
      out << name << " " << value.str() << "\n";
      agree = agree && value == results.front().second;
    }
    if (!agree) {
      err << "error: counting methods disagree for " << family_name
          << " at n=" << n << "\n";
      return kVerifiedFalse;
    }
    return kOk;
  }
  if (method == "auto") method = dp_supported(f) ? "dp" : "enum";
  BigInt value;
  if (method == "enum") {
    value = enumeration_count(f, n);
  } else if (method == "dp") {
    if (!dp_supported(f)) {
      err << "error: method 'dp' is not supported for family " << family_name
          << "\n";
      return kUsage;
    }
    value = count_dp(f, n);
  } else if (method == "gf") {
    value = count_via_gf(f, n);
  } else {
    err << "error: unknown method '" << method << "'\n";
    return kUsage;
  }
  out << value.str() << "\n";
  return kOk;
}

int cmd_list(const std::string& family_name, int n, std::ostream& out) {
  const Family f = parse_family(family_name);
  for (const Path& p : enumerate_family(f, n)) {
    out << format_path(p) << "\n";
  }
  return kOk;
}

int cmd_map(const std::string& via, const std::string& path_text,
            std::ostream& out, std::ostream& err) {
  using MapFn = std::function<Path(const Path&)>;
  static const std::vector<std::pair<std::string, MapFn>> maps = {
      {"phi", encode_dyck_meander},
      {"phi-inv", decode_dyck_meander},
      {"psi", encode_motzkin_meander},
      {"psi-inv", decode_motzkin_meander},
      {"chi", motzkin_to_dyck},
      {"chi-inv", dyck_to_motzkin},
      {"exc-to-b", encode_motzkin_excursion},
  };
  const MapFn* fn = nullptr;
  for (const auto& [name, candidate] : maps) {
    if (name == via) fn = &candidate;
  }
  if (!fn) {
    err << "error: unknown map '" << via << "'\n";
    return kUsage;
  }
  Path input;
  try {
    input = parse_path(path_text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    out << format_path((*fn)(input)) << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_verify(const std::string& theorem, int max_n,
               const std::string& json_out, std::ostream& out,
               std::ostream& err) {
  auto t = theorem_from_name(theorem);
  if (!t) {
    err << "error: unknown theorem '" << theorem << "'\n";
    return kUsage;
  }
  if (max_n < 0) max_n = theorem_default_max_n(*t);
  VerificationReport report;
  try {
    report = run_theorem(*t, max_n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (const PerSizeResult& r : report.per_n) {
    out << "n=" << r.n << " lhs=" << r.lhs_count.str()
        << " rhs=" << r.rhs_count.str()
        << " sets=" << (r.sets_equal ? "ok" : "FAIL")
        << " roundtrips=" << (r.round_trips_ok ? "ok" : "FAIL") << "\n";
  }
  for (const std::string& note : report.notes) out << "note: " << note << "\n";
  out << (report.pass ? "PASS" : "FAIL") << " " << theorem << "\n";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) {
      err << "error: cannot write '" << json_out << "'\n";
      return kUsage;
    }
    f << report_to_json(report);
  }
  return report.pass ? kOk : kVerifiedFalse;
}

int cmd_series(const std::string& name, int order, std::ostream& out,
               std::ostream& err) {
  Series s(1);
  try {
    s = gf(name, order);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (int n = 0; n < s.order(); ++n) {
    const Rational& c = s[n];
    if (boost::multiprecision::denominator(c) != 1) {
      err << "error: coefficient " << n << " is not an integer\n";
      return kUsage;
    }
    out << n << " " << BigInt(boost::multiprecision::numerator(c)).str()
        << "\n";
  }
  return kOk;
}

int cmd_oeis(const std::string& seq, const std::string& bfile_path, int max_n,
             std::string family_name, std::ostream& out, std::ostream& err) {
  if (family_name.empty()) {
    if (seq == "A274115") {
      family_name = "dyck-meander-cat";
    } else if (seq == "A224747") {
      family_name = "dyck-excursion-cat";
    } else if (seq == "A054391") {
      family_name = "motzkin-excursion-cat";
    } else {
      err << "error: unknown sequence '" << seq << "'\n";
      return kUsage;
    }
  }
  const Family f = parse_family(family_name);
  std::ifstream in(bfile_path);
  if (!in) {
    err << "error: cannot read b-file '" << bfile_path << "'\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  OeisComparison cmp;
  try {
    cmp = compare_counts(count_table(f, max_n).counts,
                         parse_bfile(buffer.str()));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << seq << " vs " << family_name << ": " << cmp.message << "\n";
  out << (cmp.pass ? "PASS" : "FAIL") << "\n";
  return cmp.pass ? kOk : kVerifiedFalse;
}

int cmd_render(const std::string& path_text, const std::string& format,
               const std::string& out_file, std::ostream& out,
               std::ostream& err) {
  Path p;
  try {
    p = parse_path(path_text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::string rendered =
      format == "svg" ? render_svg(p) : render_ascii(p);
  if (out_file.empty()) {
    out << rendered;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << out_file << "'\n";
      return kUsage;
    }
    f << rendered;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "catwalk: lattice paths with catastrophes, their pattern-restricted "
      "Dyck encodings, counting, exact series, and exhaustive verification"};
  app.require_subcommand(1);

  std::string family;
  int n = 0;
  std::string method = "auto";
  bool all_methods = false;
  auto* count = app.add_subcommand(
      "count", "Count size-n members of a family (for step-indexed families "
               "--n is the number of steps; for Dyck-type families it is the "
               "semilength)");
  count->add_option("--family", family, "family id")->required();
  count->add_option("--n", n, "size")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--method", method, "enum|dp|gf (default: dp where "
                                        "supported, else enum)");
  count->add_flag("--all-methods", all_methods,
                  "run every applicable method and fail on disagreement");

  auto* list = app.add_subcommand("list", "List size-n members, one token "
                                          "string per line");
  list->add_option("--family", family, "family id")->required();
  list->add_option("--n", n, "size")->required()->check(CLI::NonNegativeNumber);

  std::string via, path_text;
  auto* map = app.add_subcommand("map", "Apply one of the bijections");
  map->add_option("--via", via,
                  "phi|phi-inv|psi|psi-inv|chi|chi-inv|exc-to-b")
      ->required();
  map->add_option("--path", path_text, "path token string")->required();

  std::string theorem, json_out;
  int max_n = -1;
  auto* verify = app.add_subcommand(
      "verify", "Exhaustively check one of the theorems up to --max-n");
  verify->add_option("--theorem", theorem,
                     "thm1|thm1-star|thm2|thm3|cor1|remark1")
      ->required();
  verify->add_option("--max-n", max_n, "largest size to check");
  verify->add_option("--json-out", json_out, "write the JSON report here");

  std::string series_name;
  int order = 0;
  auto* series = app.add_subcommand("series",
                                    "Print series coefficients as 'n c_n'");
  series->add_option("--name", series_name,
                     "M|Mprime|Astar|Aprime|catalan|motzkin")
      ->required();
  series->add_option("--order", order, "number of coefficients (<= 512)")
      ->required()
      ->check(CLI::Range(1, 512));

  std::string seq, bfile;
  int oeis_max_n = 30;
  std::string oeis_family;
  auto* oeis = app.add_subcommand(
      "oeis", "Cross-check counts against a local OEIS b-file");
  oeis->add_option("--seq", seq, "A274115|A224747|A054391")->required();
  oeis->add_option("--bfile", bfile, "b-file path")->required();
  oeis->add_option("--max-n", oeis_max_n, "largest library size to compare");
  oeis->add_option("--family", oeis_family,
                   "override the family compared against");

  std::string render_format = "ascii", render_out;
  auto* render = app.add_subcommand("render", "Draw a path");
  render->add_option("--path", path_text, "path token string")->required();
  render->add_option("--format", render_format, "ascii|svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", render_out, "output file (default stdout)");

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (count->parsed()) {
      return cmd_count(family, n, method, all_methods, out, err);
    }
    if (list->parsed()) return cmd_list(family, n, out);
    if (map->parsed()) return cmd_map(via, path_text, out, err);
    if (verify->parsed()) {
      return cmd_verify(theorem, max_n, json_out, out, err);
    }
    if (series->parsed()) return cmd_series(series_name, order, out, err);
    if (oeis->parsed()) {
      return cmd_oeis(seq, bfile, oeis_max_n, oeis_family, out, err);
    }
    if (render->parsed()) {
      return cmd_render(path_text, render_format, render_out, out, err);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand given\n";
  return kUsage;
}

}  // namespace catwalk
