#include "fuscat/group.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace fuscat {

namespace {

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << '(' << a << ", " << b << ", " << c << ')';
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupAxiomError("group table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw GroupAxiomError("group table row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw GroupAxiomError("product " + std::to_string(a) + "*" + std::to_string(b) + " out of range");
  }
  for (Element a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw GroupAxiomError("element 0 is not the identity (fails at " + std::to_string(a) + ")");

  auto data = std::make_shared<Data>();
  data->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) data->table[a * n + b] = table[a][b];

  data->inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    auto it = std::find(table[a].begin(), table[a].end(), Element{0});
    if (it == table[a].end()) throw GroupAxiomError("element " + std::to_string(a) + " has no right inverse");
    const auto b = static_cast<Element>(it - table[a].begin());
    if (table[b][a] != 0) throw GroupAxiomError("element " + std::to_string(a) + " has no two-sided inverse");
    data->inverse[a] = b;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw GroupAxiomError("associativity fails at " + triple(a, b, c));

  data->element_order.assign(n, 0);
  for (Element g = 0; g < n; ++g) {
    std::uint32_t k = 1;
    for (Element x = g; x != 0; x = data->table[x * n + g]) ++k;
    data->element_order[g] = k;
  }
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::uint32_t m = h.order();
  const std::uint32_t n = g.order() * m;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("dihedral: n must be positive");
  // r^i s^j * r^k s^l = r^(i + (-1)^j k) s^(j + l)
  const std::uint32_t size = 2 * n;
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      const std::uint32_t i = x % n, j = x / n, k = y % n, l = y / n;
      const std::uint32_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      t[x][y] = rot + n * ((j + l) % 2);
    }
  }
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(std::uint32_t n) {
  if (n == 0 || n > 4) throw std::invalid_argument("symmetric: supported for 1 <= n <= 4");
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t size = perms.size();
  auto index_of = [&](const std::vector<std::uint32_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  // (a*b)(x) = a(b(x))
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
  std::vector<std::uint32_t> q(n);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::uint32_t x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(q);
    }
  }
  return from_table(std::move(t));
}

Element FiniteGroup::power(Element g, std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(element_order(g));
  k = ((k % ord) + ord) % ord;
  Element x = identity();
  for (std::int64_t i = 0; i < k; ++i) x = mul(x, g);
  return x;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  const std::uint32_t n = order();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : data_->element_order) e = std::lcm(e, std::uint64_t{o});
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::size_t FiniteGroup::conjugacy_class_count() const {
  std::vector<bool> seen(order(), false);
  std::size_t classes = 0;
  for (Element g = 0; g < order(); ++g) {
    if (seen[g]) continue;
    ++classes;
    for (Element x = 0; x < order(); ++x) seen[mul(mul(x, g), inverse(x))] = true;
  }
  return classes;
}

Subgroup FiniteGroup::centralizer(Element g) const {
  std::vector<Element> elems;
  for (Element h = 0; h < order(); ++h)
    if (commute(g, h)) elems.push_back(h);
  return Subgroup(*this, std::move(elems));
}

Subgroup FiniteGroup::cyclic_subgroup(Element g) const {
  std::vector<Element> elems;
  Element x = identity();
  do {
    elems.push_back(x);
    x = mul(x, g);
  } while (x != identity());
  std::sort(elems.begin(), elems.end());
  return Subgroup(*this, std::move(elems));
}

std::vector<Subgroup> FiniteGroup::cyclic_subgroups() const {
  std::vector<Subgroup> out;
  std::set<std::vector<Element>> seen;
  for (Element g = 0; g < order(); ++g) {
    Subgroup c = cyclic_subgroup(g);
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Subgroup> FiniteGroup::maximal_cyclic_subgroups() const {
  const auto all = cyclic_subgroups();
  std::vector<Subgroup> out;
  for (const auto& c : all) {
    const bool properly_contained = std::any_of(all.begin(), all.end(), [&](const Subgroup& d) {
      return d.order() > c.order() &&
             std::includes(d.elements().begin(), d.elements().end(), c.elements().begin(), c.elements().end());
    });
    if (!properly_contained) out.push_back(c);
  }
  return out;
}

Subgroup FiniteGroup::whole() const {
  std::vector<Element> elems(order());
  std::iota(elems.begin(), elems.end(), Element{0});
  return Subgroup(*this, std::move(elems));
}

std::vector<std::pair<Element, Element>> FiniteGroup::commuting_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element g = 0; g < order(); ++g)
    for (Element h = 0; h < order(); ++h)
      if (commute(g, h)) out.emplace_back(g, h);
  return out;
}

bool FiniteGroup::is_isomorphism(const FiniteGroup& target, std::span<const Element> f) const {
  if (f.size() != order() || target.order() != order()) return false;
  std::vector<bool> hit(order(), false);
  for (auto y : f) {
    if (y >= order() || hit[y]) return false;
    hit[y] = true;
  }
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < order(); ++b)
      if (f[mul(a, b)] != target.mul(f[a], f[b])) return false;
  return true;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ || a.data_->table == b.data_->table;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != FiniteGroup::identity())
    throw GroupAxiomError("subgroup must contain the identity");
  for (auto a : elements_) {
    if (a >= parent_.order()) throw GroupAxiomError("subgroup element out of range");
    if (!contains(parent_.inverse(a))) throw GroupAxiomError("subgroup not closed under inverse at " + std::to_string(a));
    for (auto b : elements_)
      if (!contains(parent_.mul(a, b)))
        throw GroupAxiomError("subgroup not closed under product at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

bool Subgroup::contains(Element g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

FiniteGroup Subgroup::as_group() const {
  const std::size_t n = elements_.size();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element p = parent_.mul(elements_[i], elements_[j]);
      t[i][j] = static_cast<Element>(std::lower_bound(elements_.begin(), elements_.end(), p) - elements_.begin());
    }
  }
  return FiniteGroup::from_table(std::move(t));
}

std::optional<FiniteGroup> builtin_group(const std::string& name) {
  static const std::regex cyclic_re(R"(Z(\d+))");
  static const std::regex product_re(R"(Z(\d+)xZ(\d+))");
  static const std::regex dihedral_re(R"(D(\d+))");
  static const std::regex symmetric_re(R"(S([1-4]))");
  std::smatch m;
  auto num = [](const std::string& s) { return static_cast<std::uint32_t>(std::stoul(s)); };
  if (std::regex_match(name, m, cyclic_re)) {
    if (num(m[1]) == 0) return std::nullopt;
    return FiniteGroup::cyclic(num(m[1]));
  }
  if (std::regex_match(name, m, product_re)) {
    if (num(m[1]) == 0 || num(m[2]) == 0) return std::nullopt;
    return FiniteGroup::direct_product(FiniteGroup::cyclic(num(m[1])), FiniteGroup::cyclic(num(m[2])));
  }
  if (std::regex_match(name, m, dihedral_re)) {
    if (num(m[1]) == 0) return std::nullopt;
    return FiniteGroup::dihedral(num(m[1]));
  }
  if (std::regex_match(name, m, symmetric_re)) return FiniteGroup::symmetric(num(m[1]));
  return std::nullopt;
}

}  // namespace fuscat
