// cohom: command-line front end for the cohomogeneity-one toolkit.

#include "cohom/catalog.hpp"
#include "cohom/enumerator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cohom;
using json = nlohmann::ordered_json;

namespace {

enum class Format { Table, Json, Csv };

struct InputError : std::runtime_error {
  std::optional<std::size_t> offset;
  InputError(const std::string& m, std::optional<std::size_t> off = std::nullopt) : std::runtime_error(m), offset(off) {}
};

struct Rows {
  std::vector<std::string> head;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

void print_rows(const Rows& t, Format f, std::ostream& os) {
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < t.head.size(); ++i) os << (i ? "," : "") << csv_cell(t.head[i]);
    os << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> w(t.head.size());
  for (std::size_t i = 0; i < t.head.size(); ++i) w[i] = t.head[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
    }
    os << s << "\n";
  };
  line(t.head);
  for (const auto& r : t.rows) line(r);
}

GroupExpr parse_arg(const std::string& s) {
  try {
    return parse_group(s);
  } catch (const ParseError& e) {
    throw InputError(std::string(e.what()) + " in '" + s + "'", e.offset);
  }
}

Diagram parse_diagram_arg(const std::string& s) {
  try {
    return parse_diagram(s);
  } catch (const ParseError& e) {
    throw InputError(std::string(e.what()) + " in '" + s + "'", e.offset);
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    // '#' also introduces named embeddings; only a leading or space-preceded '#' starts a comment
    for (; h != std::string::npos; h = line.find('#', h + 1))
      if (h == 0 || line[h - 1] == ' ' || line[h - 1] == '\t') break;
    if (h != std::string::npos) line.erase(h);
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    auto b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

json report_json(const Report& r) {
  json a = json::array();
  for (const auto& c : r) a.push_back({{"check", c.check}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

std::string center_text(const CenterOrder& c) { return c ? std::to_string(*c) : "infinite"; }

struct Ctx {
  Format format = Format::Table;
  bool strict = false;
  std::ostringstream out;
  int status = 0;
};

// ---------------------------------------------------------------- commands

void cmd_euler(Ctx& c, const std::string& g, const std::string& k) {
  GroupExpr G = parse_arg(g), K = parse_arg(k);
  long long e;
  try {
    e = euler_char(G, K);
  } catch (const std::exception& ex) {
    throw InputError(ex.what());
  }
  if (c.format == Format::Json) c.out << json{{"G", format_group(G)}, {"K", format_group(K)}, {"euler", e}}.dump() << "\n";
  else if (c.format == Format::Csv) print_rows({{"G", "K", "euler"}, {{format_group(G), format_group(K), std::to_string(e)}}}, c.format, c.out);
  else c.out << e << "\n";
}

void cmd_invariants(Ctx& c, const std::vector<std::string>& exprs) {
  Rows t{{"group", "rank", "dim", "weyl", "factors", "center"}, {}};
  json arr = json::array();
  for (const auto& s : exprs) {
    GroupExpr g = parse_arg(s);
    std::string f = format_group(g);
    t.rows.push_back({f, std::to_string(rank(g)), std::to_string(dim(g)), std::to_string(weyl_order(g)),
                      std::to_string(factor_count(g)), center_text(center_order(g))});
    json j{{"group", f}, {"rank", rank(g)}, {"dim", dim(g)}, {"weyl", weyl_order(g)}, {"factors", factor_count(g)}};
    auto z = center_order(g);
    j["center"] = z ? json(*z) : json("infinite");
    arr.push_back(j);
  }
  if (c.format == Format::Json) c.out << (exprs.size() == 1 ? arr[0] : arr).dump() << "\n";
  else print_rows(t, c.format, c.out);
}

void cmd_sphere(Ctx& c, const std::string& k, const std::string& h) {
  GroupExpr K = parse_arg(k), H = parse_arg(h);
  QuotientId q = classify_quotient(K, H);
  const char* kind = q.kind == QKind::Sphere ? "Sphere" : q.kind == QKind::Projective ? "Projective" : q.kind == QKind::Lens ? "Lens" : "NotRecognized";
  if (c.format == Format::Json) {
    c.out << json{{"K", format_group(K)}, {"H", format_group(H)}, {"kind", kind}, {"m", q.m}, {"index", q.index},
                  {"witness", q.witness}, {"kernel_factor_count", q.kernel_factor_count}, {"detail", q.detail}}
                 .dump()
          << "\n";
  } else if (c.format == Format::Csv) {
    print_rows({{"K", "H", "kind", "m", "index", "witness"}, {{format_group(K), format_group(H), kind, std::to_string(q.m), std::to_string(q.index), q.witness}}}, c.format, c.out);
  } else {
    c.out << to_string(q);
    if (!q.witness.empty()) c.out << "  via " << q.witness;
    if (!q.detail.empty()) c.out << "  (" << q.detail << ")";
    c.out << "\n";
  }
}

void cmd_index(Ctx& c, long long l, long long k, int n) {
  long long v;
  try {
    v = pi1_index_circle(l, k, n);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  std::string kind = v == 1 ? "sphere" : v == 2 ? "projective" : "lens";
  if (c.format == Format::Json) c.out << json{{"l", l}, {"k", k}, {"n", n}, {"index", v}, {"kind", kind}}.dump() << "\n";
  else if (c.format == Format::Csv) print_rows({{"l", "k", "n", "index", "kind"}, {{std::to_string(l), std::to_string(k), std::to_string(n), std::to_string(v), kind}}}, c.format, c.out);
  else c.out << v << " (" << kind << ")\n";
}

void cmd_maxrank(Ctx& c, const std::string& g, int max_factors) {
  GroupExpr G = parse_arg(g);
  std::vector<GroupExpr> list;
  try {
    list = maximal_rank_subgroups(G, max_factors, false);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  json arr = json::array();
  Rows t{{"subgroup"}, {}};
  for (const auto& k : list) {
    arr.push_back(format_group(k));
    t.rows.push_back({format_group(k)});
  }
  if (c.format == Format::Json) c.out << arr.dump() << "\n";
  else if (c.format == Format::Csv) print_rows(t, c.format, c.out);
  else
    for (const auto& r : t.rows) c.out << r[0] << "\n";
}

void cmd_diagram_check(Ctx& c, const std::vector<std::string>& texts) {
  json arr = json::array();
  Rows t{{"diagram", "check", "pass", "detail"}, {}};
  for (const auto& s : texts) {
    Diagram d = parse_diagram_arg(s);
    Report v = validate_diagram(d), f = necessary_filters(d);
    bool ok = all_pass(v) && all_pass(f);
    std::optional<long long> chi;
    try {
      chi = euler_char_M(d);
    } catch (const std::exception&) {
    }
    if (!ok) c.status = 1;
    const std::string text = format_diagram(d);
    json j{{"diagram", text}, {"pass", ok}, {"chi", chi ? json(*chi) : json(nullptr)}, {"dim", dim_M(d)},
           {"l_minus", d.wminus.l}, {"l_plus", d.wplus.l}, {"validation", report_json(v)}, {"filters", report_json(f)}};
    if (auto w = nonprimitive_witness(d)) j["nonprimitive"] = *w;
    arr.push_back(j);
    for (const auto* r : {&v, &f})
      for (const auto& ch : *r) t.rows.push_back({text, ch.check, ch.pass ? "pass" : "FAIL", ch.detail});
    t.rows.push_back({text, "chi", chi ? "pass" : "FAIL", chi ? std::to_string(*chi) : "undefined"});
    t.rows.push_back({text, "dim", "pass", std::to_string(dim_M(d))});
  }
  if (c.format == Format::Json) c.out << (texts.size() == 1 ? arr[0] : arr).dump() << "\n";
  else print_rows(t, c.format, c.out);
}

std::vector<long long> parse_ns(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InputError("bad --n value '" + part + "'");
    }
  }
  return out;
}

void cmd_verify(Ctx& c, const std::string& family, const std::string& ns_text) {
  if (!family.empty()) {
    const auto& fams = catalog_families();
    if (std::find(fams.begin(), fams.end(), family) == fams.end()) throw InputError("unknown family '" + family + "'");
  }
  const std::vector<long long> ns = ns_text.empty() ? std::vector<long long>{} : parse_ns(ns_text);
  std::vector<VerifyReport> reps;
  for (const auto& e : catalog()) {
    if (!family.empty() && e.family != family) continue;
    std::vector<long long> use;
    if (ns.empty()) use = default_samples(e);
    else
      for (long long n : ns)
        if (n >= e.n_min && n <= e.n_max) use.push_back(n);
    for (long long n : use) reps.push_back(verify_entry(e, n));
  }
  long long match = 0, disc = 0, none = 0, fail = 0;
  json arr = json::array();
  Rows t{{"id", "family", "n", "verdict", "chi", "printed", "predicates", "diagram"}, {}};
  for (const auto& r : reps) {
    bool pred = r.predicates_pass();
    if (!pred) ++fail;
    if (r.verdict == Verdict::Match) ++match;
    else if (r.verdict == Verdict::Discrepancy) ++disc;
    else ++none;
    json j{{"id", r.id}, {"family", r.family}, {"n", r.n}, {"verdict", verdict_name(r.verdict)}, {"chi", r.chi},
           {"chi_uncorrected", r.chi_uncorrected}, {"printed", r.printed ? json(*r.printed) : json(nullptr)},
           {"printed_value", r.printed_value ? json(*r.printed_value) : json(nullptr)}, {"dim", r.dim},
           {"predicates", pred ? "pass" : "fail"}, {"diagram", r.diagram}};
    if (!r.error.empty()) j["error"] = r.error;
    if (!pred) {
      json failed = json::array();
      for (const auto* rep : {&r.validation, &r.filters})
        for (const auto& ch : *rep)
          if (!ch.pass) failed.push_back({{"check", ch.check}, {"detail", ch.detail}});
      j["failed"] = failed;
    }
    arr.push_back(j);
    std::string printed = r.printed ? *r.printed + (r.printed_value ? " = " + std::to_string(*r.printed_value) : "") : "-";
    t.rows.push_back({r.id, r.family, std::to_string(r.n), verdict_name(r.verdict), std::to_string(r.chi), printed, pred ? "pass" : "fail", r.diagram});
  }
  if (fail > 0 || (c.strict && disc > 0)) c.status = 1;
  json summary{{"reports", static_cast<long long>(reps.size())}, {"match", match}, {"discrepancy", disc}, {"no_printed_value", none}, {"predicate_failures", fail}};
  if (c.format == Format::Json) {
    c.out << json{{"reports", arr}, {"summary", summary}}.dump(2) << "\n";
  } else {
    print_rows(t, c.format, c.out);
    if (c.format == Format::Table)
      c.out << "\n" << match << " MATCH, " << disc << " DISCREPANCY, " << none << " NO_PRINTED_VALUE, " << fail << " predicate failures\n";
  }
}

EnumConfig enum_config(const std::optional<int>& kmax, bool spin) {
  EnumConfig cfg;
  if (const char* env = std::getenv("C1_KMAX")) {
    try {
      cfg.kmax = std::stoi(env);
    } catch (const std::exception&) {
      throw InputError(std::string("C1_KMAX is not an integer: ") + env);
    }
  }
  if (kmax) cfg.kmax = *kmax;
  if (cfg.kmax < 1) throw InputError("kmax must be positive");
  cfg.include_projective = spin;
  return cfg;
}

void cmd_enumerate(Ctx& c, const std::string& g, const std::optional<int>& kmax, bool spin) {
  GroupExpr G = parse_arg(g);
  EnumConfig cfg = enum_config(kmax, spin);
  std::vector<Candidate> cands;
  try {
    cands = enumerate_candidates(G, cfg);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (c.format == Format::Json) {
    for (const auto& x : cands) {
      json j{{"diagram", x.text}, {"chi", x.chi}, {"dim", x.dim}, {"l_minus", x.diagram.wminus.l}, {"l_plus", x.diagram.wplus.l}};
      if (auto w = nonprimitive_witness(x.diagram)) j["nonprimitive"] = *w;
      c.out << j.dump() << "\n";
    }
    return;
  }
  Rows t{{"diagram", "chi", "dim", "l-", "l+"}, {}};
  for (const auto& x : cands)
    t.rows.push_back({x.text, std::to_string(x.chi), std::to_string(x.dim), std::to_string(x.diagram.wminus.l), std::to_string(x.diagram.wplus.l)});
  print_rows(t, c.format, c.out);
  if (c.format == Format::Table) c.out << "\n" << cands.size() << " candidates (kmax " << cfg.kmax << ")\n";
}

void cmd_cross_check(Ctx& c, const std::string& family, long long n, const std::optional<int>& kmax) {
  const auto& fams = catalog_families();
  if (std::find(fams.begin(), fams.end(), family) == fams.end()) throw InputError("unknown family '" + family + "'");
  CrossCheckReport r;
  try {
    r = cross_check_catalog(family, n, enum_config(kmax, false));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (!r.complete()) c.status = 1;
  if (c.format == Format::Json) {
    json arr = json::array();
    for (const auto& e : r.entries) arr.push_back({{"id", e.id}, {"found", e.found}, {"match", e.match}});
    c.out << json{{"family", r.family}, {"n", r.n}, {"candidates", static_cast<long long>(r.candidates)},
                  {"found", static_cast<long long>(r.found())}, {"total", static_cast<long long>(r.entries.size())}, {"entries", arr}}
                 .dump(2)
          << "\n";
    return;
  }
  Rows t{{"id", "found", "candidate"}, {}};
  for (const auto& e : r.entries) t.rows.push_back({e.id, e.found ? "found" : "MISSING", e.match});
  print_rows(t, c.format, c.out);
  if (c.format == Format::Table) c.out << "\n" << r.found() << "/" << r.entries.size() << " found among " << r.candidates << " candidates\n";
}

bool wants_json(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--format=json") return true;
    if (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json") return true;
  }
  return false;
}

void print_error(bool json_out, const std::string& msg, std::optional<std::size_t> offset) {
  if (json_out) {
    std::cout << json{{"error", {{"message", msg}, {"offset", offset ? json(*offset) : json(nullptr)}}}}.dump() << "\n";
  } else {
    std::cerr << "error: " << msg;
    if (offset) std::cerr << " (at byte " << *offset << ")";
    std::cerr << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, catalog verification and candidate enumeration for cohomogeneity-one diagrams"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "table";
  bool strict = false;
  app.add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--strict", strict, "DISCREPANCY rows make the exit status 1");

  std::string a1, a2, file, family, ns;
  long long l = 0, k = 0, n = 0;
  int nn = 0, max_factors = 4;
  std::optional<int> kmax;
  bool spin = false;

  auto* euler = app.add_subcommand("euler", "Euler characteristic of G/K");
  euler->add_option("G", a1)->required();
  euler->add_option("K", a2)->required();

  auto* inv = app.add_subcommand("invariants", "rank, dim, Weyl order, factor count, center");
  inv->add_option("G", a1);
  inv->add_option("--file", file, "one expression per line, # comments");

  auto* sphere = app.add_subcommand("sphere", "recognize K/H as a sphere or projective space");
  sphere->add_option("K", a1)->required();
  sphere->add_option("H", a2)->required();

  auto* index = app.add_subcommand("index", "index of pi_1 for the circle family (l, k) in U(n)");
  index->add_option("l", l)->required();
  index->add_option("k", k)->required();
  index->add_option("n", nn)->required();

  auto* maxrank = app.add_subcommand("maxrank", "maximal-rank subgroups in block form");
  maxrank->add_option("G", a1)->required();
  maxrank->add_option("--max-factors", max_factors);

  auto* dcheck = app.add_subcommand("diagram-check", "validate a diagram 'H < K- , K+ < G'");
  dcheck->add_option("diagram", a1);
  dcheck->add_option("--file", file, "one diagram per line, # comments");

  auto* verify = app.add_subcommand("verify-catalog", "recompute chi for the classification tables");
  verify->add_option("--family", family);
  verify->add_option("--n", ns, "comma-separated list");

  auto* enumerate = app.add_subcommand("enumerate", "candidate diagrams for G");
  enumerate->add_option("G", a1)->required();
  enumerate->add_option("--kmax", kmax);
  enumerate->add_flag("--spin", spin, "admit projective quotients (Spin-level)");

  auto* cross = app.add_subcommand("cross-check", "catalog coverage of the enumerator");
  cross->add_option("family", a1)->required();
  cross->add_option("n", n)->required();
  cross->add_option("--kmax", kmax);

  const bool json_err = wants_json(argc, argv);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(json_err, e.what(), std::nullopt);
    return 2;
  }

  Ctx c;
  c.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  c.strict = strict;
  auto inputs = [&](const std::string& positional) {
    std::vector<std::string> v;
    if (!positional.empty()) v.push_back(positional);
    if (!file.empty())
      for (auto& s : read_lines(file)) v.push_back(s);
    if (v.empty()) throw InputError("no input expression given");
    return v;
  };
  try {
    if (*euler) cmd_euler(c, a1, a2);
    else if (*inv) cmd_invariants(c, inputs(a1));
    else if (*sphere) cmd_sphere(c, a1, a2);
    else if (*index) cmd_index(c, l, k, nn);
    else if (*maxrank) cmd_maxrank(c, a1, max_factors);
    else if (*dcheck) cmd_diagram_check(c, inputs(a1));
    else if (*verify) cmd_verify(c, family, ns);
    else if (*enumerate) cmd_enumerate(c, a1, kmax, spin);
    else if (*cross) cmd_cross_check(c, a1, n, kmax);
  } catch (const InputError& e) {
    print_error(c.format == Format::Json, e.what(), e.offset);
    return 2;
  } catch (const std::exception& e) {
    print_error(c.format == Format::Json, e.what(), std::nullopt);
    return 2;
  }
  std::cout << c.out.str();
  return c.status;
}
