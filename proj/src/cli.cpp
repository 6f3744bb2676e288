#include "fuscat/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <variant>

#include "fuscat/io.hpp"
#include "fuscat/modular_data.hpp"
#include "fuscat/pointed.hpp"
#include "fuscat/tube.hpp"

namespace fuscat {

namespace {

enum class Format { Table, Csv, Json };

struct Cell {
  std::variant<std::string, std::int64_t, Cyclotomic> v;
  Cell(std::string s) : v(std::move(s)) {}                         // NOLINT
  Cell(const char* s) : v(std::string(s)) {}                       // NOLINT
  Cell(std::int64_t x) : v(x) {}                                   // NOLINT
  Cell(std::uint64_t x) : v(static_cast<std::int64_t>(x)) {}       // NOLINT
  Cell(int x) : v(static_cast<std::int64_t>(x)) {}                 // NOLINT
  Cell(unsigned x) : v(static_cast<std::int64_t>(x)) {}            // NOLINT
  Cell(bool b) : v(std::string(b ? "true" : "false")) {}           // NOLINT
  Cell(Cyclotomic c) : v(std::move(c)) {}                          // NOLINT
  Cell(std::size_t x, int) : v(static_cast<std::int64_t>(x)) {}
};

struct Sheet {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct Report {
  std::vector<Sheet> sheets;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<Check> checks;
};

std::string approx(const Cyclotomic& x) {
  auto z = x.to_complex();
  auto clean = [](double v) { return std::abs(v) < 1e-13 ? 0.0 : v; };
  char buf[96];
  const double re = clean(z.real()), im = clean(z.imag());
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%.12g", re);
  else
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  return buf;
}

std::string plain(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c.v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c.v)) return std::to_string(*i);
  return std::get<Cyclotomic>(c.v).to_string();
}

Json cell_json(const Cell& c, bool with_approx) {
  if (const auto* s = std::get_if<std::string>(&c.v)) {
    if (*s == "true") return true;
    if (*s == "false") return false;
    return *s;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c.v)) return *i;
  const auto& x = std::get<Cyclotomic>(c.v);
  Json j = {{"exact", x.to_string()}, {"value", to_json(x.minimize())}};
  if (with_approx) j["approx"] = approx(x);
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render(const Report& r, Format f, bool with_approx, std::ostream& os) {
  if (f == Format::Json) {
    Json j = Json::object();
    for (const auto& sh : r.sheets) {
      Json rows = Json::array();
      for (const auto& row : sh.rows) {
        Json o = Json::object();
        for (std::size_t k = 0; k < row.size(); ++k) o[sh.columns[k]] = cell_json(row[k], with_approx);
        rows.push_back(std::move(o));
      }
      j[sh.name] = std::move(rows);
    }
    if (!r.summary.empty()) {
      Json s = Json::object();
      for (const auto& [k, v] : r.summary) s[k] = cell_json(v, with_approx);
      j["summary"] = std::move(s);
    }
    if (!r.checks.empty()) {
      Json cs = Json::array();
      for (const auto& c : r.checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["checks"] = std::move(cs);
    }
    os << j.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    for (const auto& sh : r.sheets) {
      os << "# " << sh.name << '\n';
      std::vector<std::string> head = sh.columns;
      std::vector<std::size_t> cyc_cols;
      if (with_approx && !sh.rows.empty())
        for (std::size_t k = 0; k < sh.columns.size(); ++k)
          if (std::holds_alternative<Cyclotomic>(sh.rows.front()[k].v)) cyc_cols.push_back(k);
      for (auto k : cyc_cols) head.push_back(sh.columns[k] + "_approx");
      for (std::size_t k = 0; k < head.size(); ++k) os << (k ? "," : "") << csv_escape(head[k]);
      os << '\n';
      for (const auto& row : sh.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_escape(plain(row[k]));
        for (auto k : cyc_cols) os << ',' << approx(std::get<Cyclotomic>(row[k].v));
        os << '\n';
      }
    }
    if (!r.summary.empty()) {
      os << "# summary\nkey,value\n";
      for (const auto& [k, v] : r.summary) os << csv_escape(k) << ',' << csv_escape(plain(v)) << '\n';
    }
    if (!r.checks.empty()) {
      os << "# checks\nname,passed,detail\n";
      for (const auto& c : r.checks)
        os << csv_escape(c.name) << ',' << (c.passed ? "true" : "false") << ',' << csv_escape(c.detail) << '\n';
    }
    return;
  }
  auto text = [&](const Cell& c) {
    std::string s = plain(c);
    if (with_approx)
      if (const auto* x = std::get_if<Cyclotomic>(&c.v); x && !x->as_rational()) s += " (~" + approx(*x) + ")";
    return s;
  };
  for (const auto& sh : r.sheets) {
    std::vector<std::size_t> width(sh.columns.size());
    for (std::size_t k = 0; k < sh.columns.size(); ++k) width[k] = sh.columns[k].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : sh.rows) {
      std::vector<std::string> line;
      for (std::size_t k = 0; k < row.size(); ++k) {
        line.push_back(text(row[k]));
        width[k] = std::max(width[k], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t k = 0; k < line.size(); ++k) {
        os << (k ? "  " : "") << line[k];
        if (k + 1 < line.size()) os << std::string(width[k] - line[k].size(), ' ');
      }
      os << '\n';
    };
    emit(sh.columns);
    for (const auto& line : cells) emit(line);
    os << '\n';
  }
  for (const auto& [k, v] : r.summary) os << k << ": " << text(v) << '\n';
  for (const auto& c : r.checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
}

std::uint64_t max_group_order() {
  if (const char* env = std::getenv("FUSCAT_MAX_GROUP_ORDER")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw FormatError(std::string("FUSCAT_MAX_GROUP_ORDER is not a number: ") + env);
    }
  }
  return 64;
}

FiniteGroup load_group(const std::string& spec) {
  if (spec.empty()) throw FormatError("--group is required");
  FiniteGroup g = resolve_group(spec);
  const std::uint64_t limit = max_group_order();
  if (g.order() > limit)
    throw ResourceLimitError("group order " + std::to_string(g.order()) + " exceeds FUSCAT_MAX_GROUP_ORDER = " +
                             std::to_string(limit));
  return g;
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

struct Options {
  std::string format = "table";
  bool approx = false;
  std::uint64_t seed = 0x5eed;
  std::uint64_t max_n = 0;  // 0: use the Frobenius-Schur exponent
  std::string out;

  std::string group;
  std::string cocycle = "trivial";
  std::string level = "full";
  std::uint64_t modulus = 0;
  std::size_t samples = 100;
  std::string mtc_file;
  std::string mtc_fixture;
};

Sheet indicator_sheet(const std::vector<std::string>& labels, const std::vector<std::uint64_t>& orders,
                      const std::vector<std::vector<Cyclotomic>>& values, const std::vector<std::uint64_t>& fs,
                      const char* first_column) {
  Sheet sh;
  sh.name = "indicators";
  sh.columns = {first_column};
  if (!orders.empty()) sh.columns.push_back("order");
  const std::size_t n_max = values.empty() ? 0 : values.front().size();
  for (std::size_t n = 1; n <= n_max; ++n) sh.columns.push_back("nu_" + std::to_string(n));
  sh.columns.push_back("fsexp");
  for (std::size_t g = 0; g < values.size(); ++g) {
    std::vector<Cell> row{labels[g]};
    if (!orders.empty()) row.emplace_back(orders[g]);
    for (const auto& v : values[g]) row.emplace_back(v);
    row.emplace_back(fs[g]);
    sh.rows.push_back(std::move(row));
  }
  return sh;
}

int cmd_indicators(const Options& o, Report& r) {
  const FiniteGroup g = load_group(o.group);
  const PointedCategory c(resolve_cocycle(o.cocycle, g));
  const std::uint64_t fs = fs_exponent_category(c);
  const std::uint64_t n_max = o.max_n ? o.max_n : fs;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> orders, per_object;
  for (Element x = 0; x < g.order(); ++x) {
    labels.push_back(std::to_string(x));
    orders.push_back(g.element_order(x));
    per_object.push_back(fs_exponent_object(c, x));
  }
  r.sheets.push_back(indicator_sheet(labels, orders, indicator_table(c, n_max), per_object, "g"));
  r.summary.emplace_back("group", o.group);
  r.summary.emplace_back("cocycle", o.cocycle);
  r.summary.emplace_back("fsexp", fs);
  return kOk;
}

int cmd_fsexp(const Options& o, Report& r) {
  const FiniteGroup g = load_group(o.group);
  const PointedCategory c(resolve_cocycle(o.cocycle, g));
  Sheet sh{"objects", {"g", "order", "fsexp"}, {}};
  std::uint64_t lcm_objects = 1;
  for (Element x = 0; x < g.order(); ++x) {
    const std::uint64_t e = fs_exponent_object(c, x);
    lcm_objects = std::lcm(lcm_objects, e);
    sh.rows.push_back({Cell(x), Cell(g.element_order(x)), Cell(e)});
  }
  r.sheets.push_back(std::move(sh));
  const std::uint64_t by_lcm = fs_exponent_category(c);
  r.summary.emplace_back("fsexp_lcm_formula", by_lcm);
  r.summary.emplace_back("fsexp_objects_lcm", lcm_objects);
  bool agree = by_lcm == lcm_objects;
  if (o.level != "fast") {
    const std::uint64_t by_tube = TubeAlgebra::build(c).fs_exponent();
    r.summary.emplace_back("fsexp_tube", by_tube);
    agree = agree && by_tube == by_lcm;
  }
  r.checks.push_back({"routes_agree", agree, ""});
  return agree ? kOk : kRouteDisagreement;
}

int cmd_tube_verify(const Options& o, Report& r) {
  const FiniteGroup g = load_group(o.group);
  const PointedCategory c(resolve_cocycle(o.cocycle, g));
  const TubeAlgebra tube = TubeAlgebra::build(c);
  r.checks.push_back({"algebra_axioms", true, "dimension " + std::to_string(tube.dimension())});
  const std::uint64_t fs = fs_exponent_category(c);
  const std::uint64_t n_max = o.max_n ? o.max_n : fs;
  bool agree = true;
  std::string first_bad;
  for (Element x = 0; x < g.order() && agree; ++x)
    for (std::uint64_t n = 1; n <= n_max; ++n)
      if (tube.indicator(x, n) != indicator(c, x, n)) {
        agree = false;
        first_bad = "g = " + std::to_string(x) + ", n = " + std::to_string(n);
        break;
      }
  r.checks.push_back({"indicators_match_pointed", agree, agree ? "n <= " + std::to_string(n_max) : first_bad});
  const std::uint64_t tube_fs = tube.fs_exponent();
  const bool fs_ok = tube_fs == fs;
  r.checks.push_back({"fsexp_matches_lcm_formula", fs_ok, std::to_string(tube_fs) + " vs " + std::to_string(fs)});
  const bool unit_trace = tube.phi(tube.one()) == Cyclotomic(static_cast<long>(g.order()) * g.order());
  r.checks.push_back({"phi_of_unit", unit_trace, "phi(1) = |G|^2"});
  r.summary.emplace_back("fsexp", tube_fs);
  if (!agree || !fs_ok) return kRouteDisagreement;
  return all_passed(r.checks) ? kOk : kVerificationFailed;
}

int cmd_class_order(const Options& o, Report& r) {
  const FiniteGroup g = load_group(o.group);
  const Cocycle3 w = resolve_cocycle(o.cocycle, g);
  r.summary.emplace_back("class_order", class_order(w));
  return kOk;
}

int cmd_cocycle_check(const Options& o, Report& r) {
  const FiniteGroup g = load_group(o.group);
  const Cocycle3 w = resolve_cocycle(o.cocycle, g);
  const PointedCategory c(w);
  bool zigzag = true;
  for (Element x = 0; x < g.order(); ++x) zigzag = zigzag && c.simple(x).zigzag_consistent(c);
  r.checks.push_back({"cocycle_identity", true, "modulus " + std::to_string(w.modulus())});
  r.checks.push_back({"zigzag_consistent", zigzag, ""});
  const auto beta = is_coboundary(w);
  r.summary.emplace_back("coboundary", beta.has_value());
  r.summary.emplace_back("class_order", class_order(w));
  return all_passed(r.checks) ? kOk : kVerificationFailed;
}

int cmd_cocycle_basis(const Options& o, Report& r, Json& extra) {
  const FiniteGroup g = load_group(o.group);
  const std::uint64_t m = o.modulus ? o.modulus : g.order();
  const CohomologyBasis b = cohomology_basis(g, m);
  Sheet sh{"basis", {"index", "factor", "class_order"}, {}};
  Json reps = Json::array();
  for (std::size_t i = 0; i < b.representatives.size(); ++i) {
    sh.rows.push_back({Cell(i, 0), Cell(b.invariant_factors[i]), Cell(class_order(b.representatives[i]))});
    reps.push_back(to_json(b.representatives[i], o.group));
  }
  r.sheets.push_back(std::move(sh));
  r.summary.emplace_back("modulus", m);
  extra["representatives"] = std::move(reps);
  return kOk;
}

int cmd_cocycle_gauge(const Options& o, Report& r) {
  const FiniteGroup g = load_group(o.group);
  const Cocycle3 w = resolve_cocycle(o.cocycle, g);
  const PointedCategory c(w);
  const std::uint64_t fs = fs_exponent_category(c);
  const auto table = indicator_table(c, fs);
  std::mt19937_64 rng(o.seed);
  const std::uint64_t m = w.modulus();
  std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
  const std::size_t n = g.order();
  std::size_t bad = 0;
  for (std::size_t s = 0; s < o.samples; ++s) {
    std::vector<std::uint64_t> e(n * n, 0);
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b) e[a * n + b] = pick(rng);
    const PointedCategory twisted(multiply(w, coboundary(Cochain2(g, m, std::move(e)))));
    if (indicator_table(twisted, fs) != table || fs_exponent_category(twisted) != fs) ++bad;
  }
  r.checks.push_back({"gauge_invariance", bad == 0,
                      std::to_string(o.samples - bad) + "/" + std::to_string(o.samples) + " samples, seed " +
                          std::to_string(o.seed)});
  return bad == 0 ? kOk : kVerificationFailed;
}

ModularData load_modular(const Options& o) {
  if (o.mtc_file.empty() == o.mtc_fixture.empty()) throw FormatError("mtc needs exactly one of --file, --fixture");
  if (!o.mtc_fixture.empty()) return modular_fixture(o.mtc_fixture);
  return ModularData(modular_data_from_json(read_json_file(o.mtc_file)));
}

int cmd_mtc_indicators(const Options& o, Report& r) {
  const ModularData m = load_modular(o);
  const std::uint64_t fs = fs_exponent(m);
  const std::uint64_t n_max = o.max_n ? o.max_n : fs;
  std::vector<std::vector<Cyclotomic>> values(m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j)
    for (std::uint64_t n = 1; n <= n_max; ++n) values[j].push_back(bantay_indicator(m, j, n));
  r.sheets.push_back(indicator_sheet(m.labels(), {}, values, std::vector<std::uint64_t>(m.rank(), fs), "label"));
  r.summary.emplace_back("fsexp", fs);
  return kOk;
}

int cmd_mtc_diagnostics(const Options& o, Report& r) {
  const ModularData m = load_modular(o);
  const Diagnostics d = diagnostics(m);
  r.summary.emplace_back("fsexp", d.fs_exponent);
  r.summary.emplace_back("exp", d.etingof_exponent);
  r.summary.emplace_back("ratio", d.fs_exponent / d.etingof_exponent);
  for (const auto& c : d.checks) r.checks.push_back({c.name, c.passed, c.detail});
  return d.all_passed() ? kOk : kVerificationFailed;
}

int cmd_mtc_fusion(const Options& o, Report& r) {
  const ModularData m = load_modular(o);
  Sheet sh{"fusion", {"i", "k", "j", "N"}, {}};
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t k = 0; k < m.rank(); ++k)
      for (std::size_t j = 0; j < m.rank(); ++j)
        if (const auto n = m.fusion(i, k, j); n != 0)
          sh.rows.push_back({Cell(m.labels()[i]), Cell(m.labels()[k]), Cell(m.labels()[j]), Cell(n)});
  r.sheets.push_back(std::move(sh));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius-Schur indicators and exponents of fusion categories", "fuscat"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--approx", o.approx, "Add 12-digit decimal approximations");
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--max-n", o.max_n, "Largest n to tabulate (default: the FS exponent)");
  app.add_option("--out", o.out, "Write the report to this file");

  auto group_opts = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Builtin group name or group file")->required();
    sub->add_option("--cocycle", o.cocycle, "trivial | cyclic:N:t | basis:i | file:path");
  };

  std::function<int(Report&)> action;
  Json extra = Json::object();

  auto* ind = app.add_subcommand("indicators", "Table of nu_n(V_g) in C(G, omega)");
  group_opts(ind);
  ind->callback([&] { action = [&](Report& r) { return cmd_indicators(o, r); }; });

  auto* fse = app.add_subcommand("fsexp", "FS exponent by the lcm formula and the tube algebra");
  group_opts(fse);
  fse->add_option("--level", o.level, "fast skips the tube route")->check(CLI::IsMember({"fast", "full"}));
  fse->callback([&] { action = [&](Report& r) { return cmd_fsexp(o, r); }; });

  auto* tube = app.add_subcommand("tube", "Tube algebra checks");
  tube->require_subcommand(1);
  auto* verify = tube->add_subcommand("verify", "Compare the tube route with the pointed route");
  group_opts(verify);
  verify->callback([&] { action = [&](Report& r) { return cmd_tube_verify(o, r); }; });

  auto* coc = app.add_subcommand("cocycle", "Cocycle utilities");
  coc->require_subcommand(1);
  auto* co = coc->add_subcommand("class-order", "Order of [omega] in H^3(G, C^x)");
  group_opts(co);
  co->callback([&] { action = [&](Report& r) { return cmd_class_order(o, r); }; });
  auto* check = coc->add_subcommand("check", "Validate a cocycle");
  group_opts(check);
  check->callback([&] { action = [&](Report& r) { return cmd_cocycle_check(o, r); }; });
  auto* basis = coc->add_subcommand("basis", "Generators of H^3(G; Z/m)");
  basis->add_option("--group", o.group, "Builtin group name or group file")->required();
  basis->add_option("--modulus", o.modulus, "Coefficient modulus m (default |G|)");
  basis->callback([&] { action = [&](Report& r) { return cmd_cocycle_basis(o, r, extra); }; });
  auto* gauge = coc->add_subcommand("gauge", "Indicators are unchanged by random coboundaries");
  group_opts(gauge);
  gauge->add_option("--samples", o.samples, "Number of random 2-cochains");
  gauge->callback([&] { action = [&](Report& r) { return cmd_cocycle_gauge(o, r); }; });

  auto* mtc = app.add_subcommand("mtc", "Modular data: Bantay indicators and diagnostics");
  mtc->require_subcommand(1);
  mtc->add_option("--file", o.mtc_file, "Modular data JSON file");
  mtc->add_option("--fixture", o.mtc_fixture, "Bundled fixture")->check(CLI::IsMember(modular_fixture_names()));
  mtc->add_subcommand("indicators", "Bantay indicators")->callback([&] {
    action = [&](Report& r) { return cmd_mtc_indicators(o, r); };
  });
  mtc->add_subcommand("diagnostics", "Consistency checks")->callback([&] {
    action = [&](Report& r) { return cmd_mtc_diagnostics(o, r); };
  });
  mtc->add_subcommand("fusion", "Fusion rules")->callback([&] {
    action = [&](Report& r) { return cmd_mtc_fusion(o, r); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }

  Report report;
  int code = kOk;
  try {
    code = action(report);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const TubeAxiomError& e) {
    err << "error: " << e.what() << '\n';
    return kRouteDisagreement;
  } catch (const std::invalid_argument& e) {
    // CochainError, GroupAxiomError, ModularDataError
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }

  const Format f = o.format == "json" ? Format::Json : o.format == "csv" ? Format::Csv : Format::Table;
  std::ostringstream text;
  if (f == Format::Json && !extra.empty()) {
    std::ostringstream tmp;
    render(report, f, o.approx, tmp);
    Json j = Json::parse(tmp.str());
    j.update(extra);
    text << j.dump(2) << '\n';
  } else {
    render(report, f, o.approx, text);
  }
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << '\n';
      return kMalformedInput;
    }
    file << text.str();
  }
  return code;
}

}  // namespace fuscat
