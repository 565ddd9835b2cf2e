#include "jicert/systems_io.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "jicert/group_ops.hpp"
#include "jicert/library.hpp"

namespace jicert {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (json::parse_error const &e) {
    // nlohmann reports the byte just past the offending character.
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col),
                     line, col);
  }
}

[[noreturn]] void schema_error(std::string const &path, std::string const &msg)
{
  throw ParseError(path + ": " + msg, 0, 0);
}

void allow_keys(json const &obj, std::string const &path, std::set<std::string> const &keys)
{
  if (!obj.is_object())
    schema_error(path, "expected an object");
  for (auto const &[k, v] : obj.items()) {
    if (!keys.contains(k))
      schema_error(path, "unknown key '" + k + "'");
  }
}

json const &field(json const &obj, std::string const &path, char const *key)
{
  auto it = obj.find(key);
  if (it == obj.end())
    schema_error(path, std::string("missing key '") + key + "'");
  return *it;
}

std::uint64_t as_uint(json const &v, std::string const &path)
{
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    schema_error(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

Permutation as_perm(json const &v, std::string const &path, std::size_t degree)
{
  if (!v.is_array())
    schema_error(path, "expected an image array");
  if (v.size() != degree)
    schema_error(path, "degree mismatch: " + std::to_string(v.size()) + " images for degree " +
                           std::to_string(degree));
  std::vector<Point> imgs;
  for (std::size_t i = 0; i < v.size(); ++i)
    imgs.push_back(static_cast<Point>(as_uint(v[i], path + "[" + std::to_string(i) + "]")));
  try {
    return Permutation(std::move(imgs));
  } catch (std::invalid_argument const &) {
    schema_error(path, "not a permutation of 0.." + std::to_string(degree - 1));
  }
}

std::vector<Permutation> as_perms(json const &v, std::string const &path, std::size_t degree)
{
  if (!v.is_array())
    schema_error(path, "expected a list of image arrays");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_perm(v[i], path + "[" + std::to_string(i) + "]", degree));
  return out;
}

json perm_json(Permutation const &p)
{
  return json(std::vector<Point>(p.images().begin(), p.images().end()));
}

json perms_json(std::span<const Permutation> ps)
{
  json a = json::array();
  for (auto const &p : ps)
    a.push_back(perm_json(p));
  return a;
}

PermGroup make_group(std::size_t degree, std::vector<Permutation> gens, std::optional<Mode> mode,
                     std::uint64_t dense_bound)
{
  if (gens.empty())
    return PermGroup::trivial(degree, mode.value_or(Mode::dense));
  Mode m = mode ? *mode : auto_mode(degree, gens, dense_bound);
  return group_from_generators(degree, std::move(gens), m, dense_bound);
}

} // namespace

SystemPrefix parse_system(std::string_view text, std::uint64_t dense_bound)
{
  json doc = parse_json(text);
  allow_keys(doc, "$", {"format", "stages", "comment"});
  auto const &fmt = field(doc, "$", "format");
  if (!fmt.is_string() || fmt.get<std::string>() != kSystemFormat)
    schema_error("$.format", std::string("expected \"") + kSystemFormat + "\"");
  auto const &stages = field(doc, "$", "stages");
  if (!stages.is_array() || stages.empty())
    schema_error("$.stages", "expected a non-empty array");

  SystemPrefix sp;
  for (std::size_t n = 0; n < stages.size(); ++n) {
    std::string path = "$.stages[" + std::to_string(n) + "]";
    auto const &st = stages[n];
    allow_keys(st, path, {"degree", "generators", "mode", "a_mark", "b0", "map"});
    std::size_t degree = as_uint(field(st, path, "degree"), path + ".degree");
    std::optional<Mode> mode;
    if (auto it = st.find("mode"); it != st.end()) {
      if (*it == "dense")
        mode = Mode::dense;
      else if (*it == "chain")
        mode = Mode::chain;
      else
        schema_error(path + ".mode", "expected \"dense\" or \"chain\"");
    }
    auto gens = as_perms(field(st, path, "generators"), path + ".generators", degree);
    StageRecord rec{make_group(degree, gens, mode, dense_bound), std::nullopt, std::nullopt,
                    std::nullopt, std::nullopt};
    if (auto it = st.find("a_mark"); it != st.end())
      rec.a_mark = subgroup_generated(rec.group, as_perms(*it, path + ".a_mark", degree));
    if (auto it = st.find("b0"); it != st.end()) {
      if (n != 0)
        schema_error(path + ".b0", "only stage 0 takes b0");
      rec.b0 = subgroup_generated(rec.group, as_perms(*it, path + ".b0", degree));
    }
    if (auto it = st.find("map"); it != st.end()) {
      if (n == 0)
        schema_error(path + ".map", "stage 0 has no map");
      auto const &prev = sp.stages.back().group;
      auto imgs = as_perms(*it, path + ".map", prev.degree());
      if (imgs.size() != gens.size())
        schema_error(path + ".map", "expected one image per generator");
      rec.map = GroupHom(rec.group, prev, gens, imgs);
    } else if (n != 0) {
      schema_error(path, "missing key 'map'");
    }
    sp.stages.push_back(std::move(rec));
  }
  validate_prefix(sp);
  return sp;
}

std::string emit_system(SystemPrefix const &prefix)
{
  json stages = json::array();
  for (auto const &st : prefix.stages) {
    json s;
    s["degree"] = st.group.degree();
    s["mode"] = to_string(st.group.mode());
    s["generators"] = perms_json(st.group.generators());
    if (st.a_mark)
      s["a_mark"] = perms_json(st.a_mark->generators());
    if (st.b0)
      s["b0"] = perms_json(st.b0->generators());
    if (st.map) {
      json imgs = json::array();
      for (auto const &g : st.group.generators())
        imgs.push_back(perm_json(st.map->apply(g)));
      s["map"] = imgs;
    }
    stages.push_back(std::move(s));
  }
  json doc{{"format", kSystemFormat}, {"stages", stages}};
  return doc.dump(1) + "\n";
}

std::vector<WreathLayer> parse_wreath_spec(std::string const &spec)
{
  static const std::regex item(R"(\s*([A-Za-z]+(?:\(\d+,\d+\)|\d+))(?::(\d+))?\s*(,|$))");
  std::vector<WreathLayer> out;
  auto pos = spec.cbegin();
  std::smatch m;
  while (pos != spec.cend()) {
    if (!std::regex_search(pos, spec.cend(), m, item, std::regex_constants::match_continuous))
      throw PreconditionError("cannot parse wreath spec '" + spec + "'");
    out.push_back({m[1].str(), m[2].matched ? std::stoul(m[2].str()) : 0});
    pos = m[0].second;
    if (m[3].length() == 0)
      break;
  }
  if (out.empty())
    throw PreconditionError("empty wreath spec");
  return out;
}

SystemPrefix build_wreath_tower(std::vector<WreathLayer> const &layers, std::size_t depth,
                                bool allow_chain, std::uint64_t dense_bound)
{
  if (layers.empty())
    throw PreconditionError("no wreath layers");
  if (depth == 0)
    throw PreconditionError("depth must be at least 1");
  std::vector<PermGroup> bases;
  for (auto const &l : layers) {
    PermGroup t = library::by_name(l.group, Mode::dense, dense_bound);
    if (l.degree != 0 && l.degree != t.degree())
      throw PreconditionError(l.group + " acts on " + std::to_string(t.degree()) +
                              " points, not " + std::to_string(l.degree));
    bases.push_back(t);
  }

  SystemPrefix sp;
  sp.stages.push_back({bases[0], std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  for (std::size_t n = 1; n < depth; ++n) {
    PermGroup const &prev = sp.stages.back().group;
    PermGroup const &base = bases[n % bases.size()];
    PermGroup w = wreath_product(base, prev);
    if (w.mode() == Mode::chain && !allow_chain)
      throw DenseBoundExceeded("stage " + std::to_string(n) + " exceeds the dense bound; " +
                               "chain mode was not allowed");
    std::size_t block = base.degree();
    std::vector<Permutation> imgs;
    for (auto const &x : w.generators()) {
      std::vector<Point> img(prev.degree());
      for (std::size_t b = 0; b < prev.degree(); ++b)
        img[b] = static_cast<Point>(x[static_cast<Point>(b * block)] / block);
      imgs.emplace_back(std::move(img));
    }
    sp.stages.push_back({w, std::nullopt, std::nullopt, GroupHom(w, prev, imgs), std::nullopt});
  }
  validate_prefix(sp);
  return sp;
}

namespace {

json witness_json(Witness const &w)
{
  return {{"role", w.role}, {"generators", perms_json(w.generators)}};
}

json stage_json(StageVerdict const &s)
{
  json checks = json::object();
  for (auto const &[name, r] : s.checks) {
    json ws = json::array();
    for (auto const &w : r.witnesses)
      ws.push_back(witness_json(w));
    checks[name] = {{"status", to_string(r.status)}, {"detail", r.detail}, {"witnesses", ws}};
  }
  json j{{"stage", s.stage}, {"order", s.order}, {"checks", checks}, {"notes", s.notes}};
  if (s.class_factor_count)
    j["class_factor_count"] = *s.class_factor_count;
  return j;
}

json summary_json(CriterionSummary const &c)
{
  return {{"criterion", c.criterion},
          {"checks", c.checks},
          {"checked_stages", c.checked_stages},
          {"failing_stages", c.failing_stages},
          {"inconclusive_stages", c.inconclusive_stages},
          {"satisfied_stages", c.satisfied_stages}};
}

template<typename T>
T get(json const &j, char const *key)
{
  auto it = j.find(key);
  if (it == j.end())
    schema_error("report", std::string("missing key '") + key + "'");
  try {
    return it->get<T>();
  } catch (json::exception const &) {
    schema_error("report", std::string("bad value for '") + key + "'");
  }
}

std::vector<Permutation> perms_from(json const &a)
{
  std::vector<Permutation> out;
  for (auto const &p : a)
    out.emplace_back(p.get<std::vector<Point>>());
  return out;
}

std::string stage_list(std::vector<std::size_t> const &v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return v.empty() ? "-" : s;
}

} // namespace

std::string emit_report(CertificateReport const &report, ReportFormat format)
{
  auto const &v = report.verdict;
  if (format == ReportFormat::text) {
    std::ostringstream out;
    out << "jicert " << report.tool_version << "\n";
    out << "input " << report.input_digest << "\n";
    for (auto const &s : v.stages) {
      out << "stage " << s.stage << " (order " << s.order << ")\n";
      for (auto const &[name, r] : s.checks) {
        out << "  " << std::left << std::setw(24) << name << std::setw(15) << to_string(r.status)
            << r.detail << "\n";
        for (auto const &w : r.witnesses) {
          out << "    " << w.role << ":";
          for (auto const &g : w.generators)
            out << " " << g.to_cycle_string();
          out << "\n";
        }
      }
      for (auto const &n : s.notes)
        out << "  note: " << n << "\n";
    }
    for (auto const &c : v.summary)
      out << c.criterion << ": failing " << stage_list(c.failing_stages) << "; inconclusive "
          << stage_list(c.inconclusive_stages) << "; satisfied " << stage_list(c.satisfied_stages)
          << "\n";
    if (v.class_report) {
      auto const &cr = *v.class_report;
      out << "class {" << cr.members << "}: " << cr.schur_detail << "; factor counts";
      for (auto c : cr.counts)
        out << " " << c;
      out << (cr.strictly_increasing ? " (strictly increasing)" : " (not strictly increasing)")
          << "\n";
    }
    for (auto const &c : v.limit_claims)
      out << "claim: " << c << "\n";
    return out.str();
  }

  json stages = json::array();
  for (auto const &s : v.stages)
    stages.push_back(stage_json(s));
  json summary = json::array();
  for (auto const &c : v.summary)
    summary.push_back(summary_json(c));
  auto const &o = report.options;
  json doc{{"format", kReportFormat},
           {"tool_version", report.tool_version},
           {"input_digest", report.input_digest},
           {"options",
            {{"wilson", o.wilson},
             {"star", o.star},
             {"thmb", o.thmb},
             {"subgroup_bound", o.subgroup_bound},
             {"dense_bound", o.dense_bound},
             {"seed", o.seed},
             {"class", o.simple_class}}},
           {"stages", stages},
           {"summary", summary},
           {"limit_claims", v.limit_claims}};
  if (v.class_report) {
    auto const &cr = *v.class_report;
    doc["class_report"] = {{"members", cr.members},
                           {"schur_closed", cr.schur_closed},
                           {"schur_detail", cr.schur_detail},
                           {"counts", cr.counts},
                           {"strictly_increasing", cr.strictly_increasing}};
  }
  return doc.dump(2) + "\n";
}

CertificateReport parse_report(std::string_view json_text)
{
  json doc = parse_json(json_text);
  if (!doc.is_object() || get<std::string>(doc, "format") != kReportFormat)
    schema_error("$.format", std::string("expected \"") + kReportFormat + "\"");
  CertificateReport r;
  r.tool_version = get<std::string>(doc, "tool_version");
  r.input_digest = get<std::string>(doc, "input_digest");
  json const &o = get<json>(doc, "options");
  r.options.wilson = get<bool>(o, "wilson");
  r.options.star = get<bool>(o, "star");
  r.options.thmb = get<bool>(o, "thmb");
  r.options.subgroup_bound = get<std::uint64_t>(o, "subgroup_bound");
  r.options.dense_bound = get<std::uint64_t>(o, "dense_bound");
  r.options.seed = get<std::uint64_t>(o, "seed");
  r.options.simple_class = get<std::string>(o, "class");

  auto &v = r.verdict;
  for (auto const &s : get<json>(doc, "stages")) {
    StageVerdict sv;
    sv.stage = get<std::size_t>(s, "stage");
    sv.order = get<std::uint64_t>(s, "order");
    sv.notes = get<std::vector<std::string>>(s, "notes");
    if (s.contains("class_factor_count"))
      sv.class_factor_count = get<std::size_t>(s, "class_factor_count");
    json const checks = get<json>(s, "checks");
    for (auto const &[name, c] : checks.items()) {
      CheckResult cr;
      cr.status = check_status_from_string(get<std::string>(c, "status"));
      cr.detail = get<std::string>(c, "detail");
      for (auto const &w : get<json>(c, "witnesses"))
        cr.witnesses.push_back({get<std::string>(w, "role"), perms_from(get<json>(w, "generators"))});
      sv.checks[name] = std::move(cr);
    }
    v.stages.push_back(std::move(sv));
  }
  for (auto const &c : get<json>(doc, "summary")) {
    CriterionSummary cs;
    cs.criterion = get<std::string>(c, "criterion");
    cs.checks = get<std::vector<std::string>>(c, "checks");
    cs.checked_stages = get<std::vector<std::size_t>>(c, "checked_stages");
    cs.failing_stages = get<std::vector<std::size_t>>(c, "failing_stages");
    cs.inconclusive_stages = get<std::vector<std::size_t>>(c, "inconclusive_stages");
    cs.satisfied_stages = get<std::vector<std::size_t>>(c, "satisfied_stages");
    v.summary.push_back(std::move(cs));
  }
  v.limit_claims = get<std::vector<std::string>>(doc, "limit_claims");
  if (doc.contains("class_report")) {
    json const &c = doc["class_report"];
    v.class_report = ClassReport{get<std::string>(c, "members"), get<bool>(c, "schur_closed"),
                                 get<std::string>(c, "schur_detail"),
                                 get<std::vector<std::size_t>>(c, "counts"),
                                 get<bool>(c, "strictly_increasing")};
  }
  return r;
}

std::string sha256_hex(std::string_view bytes)
{
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error("SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

} // namespace jicert
