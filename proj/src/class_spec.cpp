#include "jicert/class_spec.hpp"

#include <charconv>
#include <mutex>
#include <sstream>

#include "jicert/group_ops.hpp"
#include "jicert/library.hpp"

namespace jicert {

namespace detail {
extern char const *const kSchurTableText;
}

SimpleClass SimpleClass::from_names(std::vector<std::string> const &names)
{
  SimpleClass c;
  for (auto const &n : names)
    c.add(simple_type_by_name(n));
  return c;
}

void SimpleClass::add(SimpleTypeId const &t)
{
  SimpleTypeId key = t;
  key.fingerprint.clear();
  members_.insert(key);
  if (t.abelian)
    primes_.insert(t.order);
}

bool SimpleClass::contains(SimpleTypeId const &t) const
{
  SimpleTypeId key = t;
  key.fingerprint.clear();
  return members_.count(key) > 0;
}

std::string SimpleClass::to_string() const
{
  std::string out;
  for (auto const &m : members_)
    out += (out.empty() ? "" : ",") + m.name;
  return out;
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::size_t line)
{
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw PreconditionError("schur table line " + std::to_string(line) + ": bad number '" +
                            std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

} // namespace

SchurTable SchurTable::parse(std::string_view text)
{
  SchurTable t;
  std::size_t line_no = 0;
  std::uint64_t max_order = 0;
  bool bound_given = false;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty())
      continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.starts_with("version:"))
        t.version_ = static_cast<int>(parse_u64(trim(body.substr(8)), line_no));
      else if (body.starts_with("order_bound:")) {
        t.order_bound_ = parse_u64(trim(body.substr(12)), line_no);
        bound_given = true;
      }
      continue;
    }
    std::vector<std::string_view> cols;
    std::size_t pos = 0;
    while (true) {
      std::size_t tab = line.find('\t', pos);
      cols.push_back(trim(line.substr(pos, tab == std::string_view::npos ? tab : tab - pos)));
      if (tab == std::string_view::npos)
        break;
      pos = tab + 1;
    }
    if (cols.size() != 3)
      throw PreconditionError("schur table line " + std::to_string(line_no) +
                              ": expected 3 tab-separated columns");
    SchurEntry e;
    e.type.name = std::string(cols[0]);
    e.type.order = parse_u64(cols[1], line_no);
    e.type.abelian = false;
    e.multiplier = parse_u64(cols[2], line_no);
    if (e.multiplier == 0)
      throw PreconditionError("schur table line " + std::to_string(line_no) +
                              ": multiplier order must be positive");
    max_order = std::max(max_order, e.type.order);
    t.entries_.push_back(std::move(e));
  }
  if (!bound_given)
    t.order_bound_ = max_order;
  return t;
}

SchurTable const &SchurTable::builtin()
{
  static SchurTable const table = [] {
    SchurTable t = parse(detail::kSchurTableText);
    t.validate();
    if (!spot_check_order60_extension(t))
      throw Error("shipped schur table fails the order-60 spot check");
    return t;
  }();
  return table;
}

std::optional<std::uint64_t> SchurTable::multiplier(SimpleTypeId const &t) const
{
  for (auto const &e : entries_) {
    if (e.type.name == t.name && e.type.order == t.order)
      return e.multiplier;
  }
  return std::nullopt;
}

void SchurTable::validate() const
{
  for (auto const &info : nonabelian_simple_catalogue()) {
    if (info.order > order_bound_)
      continue;
    bool found = false;
    for (auto const &e : entries_) {
      if (e.type.name == info.name) {
        if (e.type.order != info.order)
          throw PreconditionError("schur table lists " + e.type.name + " with order " +
                                  std::to_string(e.type.order) + ", expected " +
                                  std::to_string(info.order));
        found = true;
      }
    }
    if (!found)
      throw PreconditionError("schur table is missing " + std::string(info.name));
  }
  for (auto const &e : entries_) {
    if (e.multiplier == 0)
      throw PreconditionError("schur table entry " + e.type.name + " has multiplier 0");
  }
}

bool spot_check_order60_extension(SchurTable const &table)
{
  PermGroup g = library::special_linear2(5);
  PermGroup z = center(g);
  bool perfect = commutator_subgroup(g, g, g).order() == g.order();
  if (!perfect || z.order() != 2)
    return false;
  auto [q, proj] = quotient(g, z);
  if (identify_simple_type(q).name != "A5")
    return false;
  auto m = table.multiplier(simple_type_by_name("A5"));
  return m && *m % z.order() == 0;
}

SchurVerdict schur_closure_check(SimpleClass const &c, SchurTable const &t)
{
  SchurVerdict v;
  v.order_bound = t.order_bound();
  for (auto p : c.primes()) {
    for (auto const &e : t.entries()) {
      if (e.multiplier % p == 0 && !c.contains(e.type))
        v.missing.emplace_back(e.type, p);
    }
  }
  v.pass = v.missing.empty();
  std::ostringstream os;
  if (v.pass) {
    os << "pass up to order " << v.order_bound;
  } else {
    os << "fail: ";
    for (std::size_t i = 0; i < v.missing.size(); ++i)
      os << (i ? ", " : "") << v.missing[i].first.name << " (multiplier divisible by "
         << v.missing[i].second << ")";
    os << "; table covers orders up to " << v.order_bound;
  }
  v.detail = os.str();
  return v;
}

std::size_t count_class_factors(PermGroup const &g, SimpleClass const &c)
{
  std::size_t n = 0;
  for (auto const &[t, k] : composition_factors(g)) {
    if (c.contains(t))
      n += k;
  }
  return n;
}

ClassCountSequence class_count_sequence(std::vector<PermGroup> const &stages, SimpleClass const &c)
{
  ClassCountSequence s;
  for (auto const &g : stages) {
    s.counts.push_back(count_class_factors(g, c));
    if (s.counts.size() > 1 && s.counts.back() <= s.counts[s.counts.size() - 2])
      s.strictly_increasing = false;
  }
  return s;
}

} // namespace jicert
