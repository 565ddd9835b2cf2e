#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "jicert/certifier.hpp"
#include "jicert/normal_structure.hpp"
#include "jicert/systems_io.hpp"

using namespace jicert;

namespace {

enum Exit
{
  exit_pass = 0,
  exit_fail = 1,
  exit_input = 2,
  exit_inconclusive = 3
};

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const &path, std::string const &text)
{
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw PreconditionError("cannot write " + path);
  out << text;
}

std::vector<std::string> split_names(std::string const &s)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty())
      out.push_back(item);
  }
  return out;
}

std::string gens_string(PermGroup const &g)
{
  std::string s = "<";
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    s += (i ? ", " : "") + g.generators()[i].to_cycle_string();
  return s + ">";
}

struct CheckArgs
{
  std::string file;
  bool wilson = false, star = false, thmb = false;
  std::string json_out;
  std::uint64_t dense_bound = kDefaultDenseBound;
  std::uint64_t subgroup_bound = kDefaultSubgroupBound;
  std::uint64_t seed = 0;
  std::string simple_class;
};

int run_check(CheckArgs const &a)
{
  std::string text = read_file(a.file);
  SystemPrefix sp = parse_system(text, a.dense_bound);
  CertifyOptions opt;
  opt.wilson = a.wilson;
  opt.star = a.star;
  opt.thmb = a.thmb;
  opt.subgroup_bound = a.subgroup_bound;
  if (!a.simple_class.empty())
    opt.simple_class = SimpleClass::from_names(split_names(a.simple_class));

  CertificateReport report;
  report.input_digest = "sha256:" + sha256_hex(text);
  report.options = {a.wilson, a.star,       a.thmb, a.subgroup_bound, a.dense_bound,
                    a.seed,   opt.simple_class ? opt.simple_class->to_string() : ""};
  report.verdict = certify_system(sp, opt);

  if (!a.json_out.empty())
    write_file(a.json_out, emit_report(report, ReportFormat::json));
  if (a.json_out != "-")
    std::cout << emit_report(report, ReportFormat::text);

  switch (overall_status(report.verdict)) {
  case CheckStatus::fail: return exit_fail;
  case CheckStatus::inconclusive: return exit_inconclusive;
  default: return exit_pass;
  }
}

int run_lattice(std::string const &file, std::size_t stage, std::uint64_t dense_bound)
{
  SystemPrefix sp = parse_system(read_file(file), dense_bound);
  if (stage >= sp.size())
    throw PreconditionError("stage " + std::to_string(stage) + " does not exist");
  PermGroup const &g = sp.stages[stage].group;
  std::cout << "stage " << stage << ": order " << g.order() << ", " << to_string(g.mode())
            << " mode\n";
  g.require_dense("lattice");
  auto normals = normal_subgroups(g);
  std::cout << "normal subgroups (" << normals.size() << "):\n";
  for (std::size_t i = 0; i < normals.size(); ++i)
    std::cout << "  N" << i << " order " << normals[i].order() << " " << gens_string(normals[i])
              << "\n";
  auto index_of = [&](PermGroup const &h) {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (normals[i].same_group(h))
        return i;
    }
    return normals.size();
  };
  std::cout << "critical pairs:\n";
  for (auto const &cp : critical_pairs(g))
    std::cout << "  (N" << index_of(cp.a) << ", N" << index_of(cp.b) << ")\n";
  std::cout << "chief factors (bottom up):\n";
  for (auto const &f : chief_factors(g))
    std::cout << "  N" << index_of(f.top) << "/N" << index_of(f.bottom) << " = "
              << f.simple_type.name << "^" << f.multiplicity << "\n";
  return exit_pass;
}

int run_build(std::string const &spec, std::size_t depth, std::string const &out, bool chain,
              std::uint64_t dense_bound)
{
  SystemPrefix sp = build_wreath_tower(parse_wreath_spec(spec), depth, chain, dense_bound);
  for (auto const &st : sp.stages)
    std::cout << "stage order " << st.group.order() << " (" << to_string(st.group.mode()) << ")\n";
  write_file(out, emit_system(sp));
  return exit_pass;
}

int run_derive(std::string const &file, std::string const &out, std::uint64_t dense_bound)
{
  SystemPrefix sp = derive_reid_from_wilson(parse_system(read_file(file), dense_bound));
  for (std::size_t n = 0; n < sp.size(); ++n)
    std::cout << "stage " << n << ": A of order " << sp.stages[n].a_mark->order() << "\n";
  write_file(out, emit_system(sp));
  return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Checks stage conditions on finite prefixes of inverse systems of finite groups"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto *check = app.add_subcommand("check", "certify a system file");
  check->add_option("file", ca.file, "system JSON file")->required();
  check->add_flag("--wilson", ca.wilson, "check Wilson's conditions on the kernels");
  check->add_flag("--star", ca.star, "check the commuting-conjugates condition");
  check->add_flag("--thmb", ca.thmb, "check the strengthened conditions");
  check->add_option("--json", ca.json_out, "write the JSON report here ('-' for stdout)");
  check->add_option("--dense-bound", ca.dense_bound, "largest order held densely");
  check->add_option("--subgroup-bound", ca.subgroup_bound, "largest order for subgroup searches");
  check->add_option("--seed", ca.seed, "seed recorded in the report");
  check->add_option("--class", ca.simple_class, "simple class, e.g. C2,A5");

  std::string spec, out;
  std::size_t depth = 2;
  bool chain = false;
  std::uint64_t dense_bound = kDefaultDenseBound;
  auto *build = app.add_subcommand("build-wreath", "write an iterated wreath product tower");
  build->add_option("spec", spec, "layers such as S3:3 or S3:3,A5:5")->required();
  build->add_option("--depth", depth, "number of stages");
  build->add_option("-o,--output", out, "output file ('-' for stdout)")->required();
  build->add_flag("--chain", chain, "hold stages above the dense bound in chain mode");
  build->add_option("--dense-bound", dense_bound, "largest order held densely");

  std::string file;
  std::size_t stage = 0;
  auto *lattice = app.add_subcommand("lattice", "dump the normal lattice of one stage");
  lattice->add_option("file", file, "system JSON file")->required();
  lattice->add_option("--stage", stage, "stage index");
  lattice->add_option("--dense-bound", dense_bound, "largest order held densely");

  auto *derive = app.add_subcommand("derive", "choose A marks for a kernels-only system");
  derive->add_option("file", file, "system JSON file")->required();
  derive->add_option("-o,--output", out, "output file ('-' for stdout)")->required();
  derive->add_option("--dense-bound", dense_bound, "largest order held densely");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_input;
  }

  try {
    if (*check)
      return run_check(ca);
    if (*build)
      return run_build(spec, depth, out, chain, dense_bound);
    if (*lattice)
      return run_lattice(file, stage, dense_bound);
    if (*derive)
      return run_derive(file, out, dense_bound);
  } catch (HypothesisError const &e) {
    std::cerr << "jicert: hypothesis fails at level " << e.level() << ": " << e.what() << "\n";
    return exit_fail;
  } catch (ExhaustionFailure const &e) {
    std::cerr << "jicert: internal error: " << e.what() << "\n";
    return exit_fail;
  } catch (std::exception const &e) {
    std::cerr << "jicert: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
