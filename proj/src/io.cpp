#include "fuscat/io.hpp"

#include <fstream>
#include <regex>

namespace fuscat {

namespace {

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      Rational q(j.get<std::string>(), 10);
      q.canonicalize();
      return q;
    }
    if (j.is_array() && j.size() == 2) {
      const auto part = [](const Json& x) {
        return x.is_string() ? mpz_class(x.get<std::string>(), 10) : mpz_class(x.get<long>());
      };
      const mpz_class den = part(j[1]);
      if (den == 0) throw FormatError("zero denominator");
      Rational q(part(j[0]), den);
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    // fall through: gmpxx rejects malformed digit strings this way
  } catch (const Json::exception&) {
  }
  throw FormatError("not a rational: " + j.dump());
}

std::uint64_t uint_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw FormatError(std::string("missing or invalid nonnegative integer field '") + key + "'");
  return j[key].get<std::uint64_t>();
}

FiniteGroup group_from_spec(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_object()) return group_from_json(j);
  if (!j.is_string()) throw FormatError("cocycle 'group' must be a name, a path or a group object");
  const auto name = j.get<std::string>();
  if (auto g = builtin_group(name)) return *g;
  std::filesystem::path p(name);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return group_from_json(read_json_file(p));
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
  if (!j.is_object()) throw FormatError("cyclotomic must be an object: " + j.dump());
  const std::uint64_t n = uint_field(j, "conductor");
  if (n == 0) throw FormatError("cyclotomic conductor must be positive");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw FormatError("cyclotomic needs a 'coeffs' array");
  std::vector<Rational> c;
  for (const auto& x : j["coeffs"]) c.push_back(rational_from_json(x));
  return Cyclotomic::from_coeffs(n, std::move(c));
}

Json to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const Json& j) {
  const std::uint64_t n = uint_field(j, "order");
  if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != n)
    throw FormatError("group table must have 'order' rows");
  std::vector<std::vector<Element>> table;
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != n) throw FormatError("group table must be square");
    std::vector<Element> r;
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<std::uint64_t>() >= n)
        throw FormatError("group table entry out of range: " + x.dump());
      r.push_back(x.get<Element>());
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup::from_table(std::move(table));
}

FiniteGroup resolve_group(const std::string& spec) {
  if (auto g = builtin_group(spec)) return *g;
  if (std::filesystem::exists(spec)) return group_from_json(read_json_file(spec));
  throw FormatError("unknown group '" + spec + "': not a builtin name or a readable file");
}

Json to_json(const Cocycle3& w, const std::string& group_name) {
  Json g = group_name.empty() ? to_json(w.group()) : Json(group_name);
  return {{"group", g}, {"modulus", w.modulus()}, {"exponents", w.exponents()}};
}

Cocycle3 cocycle_from_json(const Json& j, const std::optional<FiniteGroup>& group,
                           const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw CochainError("cocycle file must be a JSON object");
  std::optional<FiniteGroup> g = group;
  if (j.contains("group")) {
    FiniteGroup named = group_from_spec(j["group"], base_dir);
    if (g && !(named == *g)) throw CochainError("cocycle file names a different group than --group");
    g = named;
  }
  if (!g) throw CochainError("cocycle file has no group and none was given");
  std::uint64_t m = 0;
  try {
    m = uint_field(j, "modulus");
  } catch (const FormatError& e) {
    throw CochainError(e.what());
  }
  if (m == 0) throw CochainError("modulus must be positive");
  if (!j.contains("exponents") || !j["exponents"].is_array()) throw CochainError("cocycle needs an 'exponents' array");
  std::vector<std::uint64_t> e;
  for (const auto& x : j["exponents"]) {
    if (!x.is_number_integer()) throw CochainError("exponent is not an integer: " + x.dump());
    const long long v = x.get<long long>();
    const long long mm = static_cast<long long>(m);
    e.push_back(static_cast<std::uint64_t>(((v % mm) + mm) % mm));
  }
  return Cocycle3(*g, m, std::move(e));
}

Cocycle3 resolve_cocycle(const std::string& spec, const FiniteGroup& group) {
  static const std::regex cyclic_re(R"(cyclic:(\d+):(-?\d+))");
  static const std::regex basis_re(R"(basis:(\d+))");
  std::smatch mt;
  std::optional<Cocycle3> w;
  if (spec == "trivial") {
    w = Cocycle3::trivial(group);
  } else if (std::regex_match(spec, mt, cyclic_re)) {
    const auto n = static_cast<std::uint32_t>(std::stoul(mt[1]));
    if (n == 0 || !(FiniteGroup::cyclic(n) == group))
      throw CochainError("cocycle " + spec + " needs the group Z" + mt[1].str());
    w = omega_t(n, std::stoll(mt[2]));
  } else if (std::regex_match(spec, mt, basis_re)) {
    const auto basis = cohomology_basis(group, group.order());
    const std::size_t i = std::stoul(mt[1]);
    if (i >= basis.representatives.size())
      throw CochainError("cocycle " + spec + ": H^3 has only " + std::to_string(basis.representatives.size()) +
                         " generators");
    w = basis.representatives[i];
  } else if (spec.rfind("file:", 0) == 0) {
    const std::filesystem::path p = spec.substr(5);
    Json j;
    try {
      j = read_json_file(p);
    } catch (const FormatError& e) {
      throw CochainError(e.what());
    }
    w = cocycle_from_json(j, group, p.parent_path());
  } else {
    throw CochainError("unrecognized cocycle spec '" + spec + "'");
  }
  if (!check_cocycle(*w)) throw CochainError("cocycle " + spec + " fails the 3-cocycle identity");
  return *w;
}

ModularDataInput modular_data_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("modular data must be a JSON object");
  ModularDataInput in;
  in.rank = uint_field(j, "rank");
  try {
    if (j.contains("labels")) in.labels = j["labels"].get<std::vector<std::string>>();
    in.dual = j.at("dual").get<std::vector<std::size_t>>();
    for (const auto& t : j.at("twists")) {
      if (t.is_object()) {
        in.twists.push_back({t.at("num").get<std::int64_t>(), t.at("den").get<std::int64_t>()});
      } else {
        const Rational q = rational_from_json(t);
        in.twists.push_back({q.get_num().get_si(), q.get_den().get_si()});
      }
    }
    for (const auto& d : j.at("dims")) in.dims.push_back(cyclotomic_from_json(d));
    in.global_dim = cyclotomic_from_json(j.at("global_dim"));
    if (j.contains("s_matrix") && !j["s_matrix"].is_null()) {
      std::vector<std::vector<Cyclotomic>> s;
      for (const auto& row : j["s_matrix"]) {
        std::vector<Cyclotomic> r;
        for (const auto& x : row) r.push_back(cyclotomic_from_json(x));
        s.push_back(std::move(r));
      }
      in.s_matrix = std::move(s);
    }
    if (j.contains("fusion") && !j["fusion"].is_null()) in.fusion = j["fusion"].get<std::vector<std::int64_t>>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed modular data: ") + e.what());
  }
  return in;
}

Json to_json(const ModularData& m) {
  Json twists = Json::array(), dims = Json::array();
  std::vector<std::size_t> dual;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    twists.push_back({{"num", m.twist(i).num}, {"den", m.twist(i).den}});
    dims.push_back(to_json(m.dim(i)));
    dual.push_back(m.dual(i));
  }
  Json out = {{"rank", m.rank()}, {"labels", m.labels()}, {"dual", dual}, {"twists", twists},
              {"dims", dims},     {"global_dim", to_json(m.global_dim())}, {"fusion", m.fusion_tensor()}};
  if (m.has_s_matrix()) {
    Json s = Json::array();
    for (const auto& row : m.s_matrix()) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(to_json(x));
      s.push_back(r);
    }
    out["s_matrix"] = s;
  }
  return out;
}

}  // namespace fuscat
