#include "incidence/workbench.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "incidence/combination.hpp"
#include "incidence/elementary.hpp"
#include "incidence/error.hpp"
#include "incidence/kernels.hpp"
#include "incidence/lie_maps.hpp"
#include "incidence/poset_io.hpp"
#include "incidence/triple_io.hpp"

namespace incidence {

namespace {

/// Input problems (unreadable or invalid files) exit with 2, everything else with 1.
struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool machine = false;
  int jobs = 0;
  std::string poset_path, map_path, triple_path, out_path;
  bool lie = false, elementary = false, proper = false;
  bool complete_sigma = false, count_only = false;
};

template <typename F>
auto load(F &&f)
{
  try {
    return f();
  } catch (const Error &e) {
    throw InputFailure(e.what());
  }
}

struct Loaded {
  PosetFile file;
  AlgebraPtr algebra;
};

Loaded load_poset(const Options &o)
{
  PosetFile file = load([&] { return load_poset_file(o.poset_path); });
  auto algebra = make_algebra(file.poset, file.field);
  return {std::move(file), std::move(algebra)};
}

std::string poset_name(const Options &o)
{
  return std::filesystem::path(o.poset_path).filename().string();
}

void warn_char2(const Field &f, std::ostream &err)
{
  if (f.characteristic() == 2)
    err << "warning: characteristic 2 identifies increasing and decreasing sign patterns\n";
}

std::string chain_text(const FinitePoset &p, const Chain &c)
{
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i)
    s += (i ? " < " : "") + p.label(c[i]);
  return s;
}

std::string cycle_text(const FinitePoset &p, const Cycle &c)
{
  const auto &v = c.vertices;
  std::string s = p.label(v[0]);
  for (std::size_t i = 1; i < v.size(); ++i)
    s += (p.less(v[i - 1], v[i]) ? " < " : " > ") + p.label(v[i]);
  return s;
}

std::string basis_list(const FinitePoset &p, const std::vector<BasisVector> &b, const char *sep)
{
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i)
    s += (i ? sep : "") + format_basis(p, b[i]);
  return s;
}

int cmd_report(const Options &o, std::ostream &out)
{
  auto [file, algebra] = load_poset(o);
  const auto &p = *file.poset;
  auto chains = p.maximal_chains();
  auto cycles = p.enumerate_cycles();
  std::vector<int> dims;
  for (int m = 1;; ++m) {
    dims.push_back(static_cast<int>(radical_power_basis(p, m).size()));
    if (dims.back() == 0)
      break;
  }
  auto center = center_of_radical(p);
  bool anti = p.self_anti_isomorphism_exists();

  if (o.machine) {
    out << "elements=" << p.size() << "\nfield=" << file.field.name() << "\nmaximal_chains=" << chains.size()
        << '\n';
    for (const auto &c : chains)
      out << "chain=" << chain_text(p, c) << '\n';
    out << "cycles=" << cycles.size() << '\n';
    for (const auto &c : cycles)
      out << "cycle=" << cycle_text(p, c) << '\n';
    out << "radical_dims=";
    for (std::size_t i = 0; i < dims.size(); ++i)
      out << (i ? "," : "") << dims[i];
    out << "\ncenter=" << basis_list(p, center, ";") << "\nanti_isomorphism=" << (anti ? "yes" : "no")
        << '\n';
    return kExitOk;
  }

  out << "poset: " << poset_name(o) << '\n';
  out << "elements: " << p.size() << '\n';
  out << "field: " << file.field.name() << '\n';
  out << "maximal chains: " << chains.size() << '\n';
  for (const auto &c : chains)
    out << "  " << chain_text(p, c) << '\n';
  out << "cycles: " << cycles.size() << '\n';
  for (const auto &c : cycles)
    out << "  " << cycle_text(p, c) << '\n';
  out << "radical filtration:";
  for (std::size_t i = 0; i < dims.size(); ++i)
    out << (i ? "," : "") << " dim J_" << i + 1 << " = " << dims[i];
  out << '\n';
  out << "center of radical: " << (center.empty() ? "0" : basis_list(p, center, ", ")) << '\n';
  out << "self anti-isomorphism: " << (anti ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_verify(Options o, std::ostream &out)
{
  auto [file, algebra] = load_poset(o);
  LinearMap m = load([&] { return load_map_file(algebra, o.map_path); });
  if (!o.lie && !o.elementary && !o.proper)
    o.lie = o.elementary = o.proper = true;

  bool all = true;
  auto verdict = [&](const char *name, bool value, const std::string &detail = {}) {
    all = all && value;
    if (o.machine)
      out << name << '=' << (value ? "true" : "false") << '\n';
    else
      out << name << ": " << (value ? "true" : "false") << detail << '\n';
  };

  const bool lie = is_lie_automorphism(m);
  if (o.lie)
    verdict("lie", lie);
  if (o.elementary)
    verdict("elementary", lie && is_elementary(m));
  if (o.proper) {
    std::optional<ProperWitness> w;
    if (lie)
      w = is_proper(m);
    std::string detail;
    if (w) {
      detail = w->kind == ProperWitness::Kind::Automorphism ? " (automorphism" : " (negated anti-automorphism";
      detail += ", alpha =";
      for (const auto &a : w->alpha)
        detail += " " + a.to_string();
      detail += ")";
    } else if (!lie) {
      detail = " (not a Lie automorphism)";
    }
    verdict("proper", w.has_value(), detail);
  }
  return all ? kExitOk : kExitMathFailure;
}

void print_triple(const ElementaryTriple &t, bool machine, std::ostream &out)
{
  if (!machine) {
    out << format_triple(t);
    return;
  }
  const auto &p = t.theta.poset();
  for (auto pair : p.strict_pairs())
    out << "theta:" << format_basis(p, pair) << '=' << format_basis(p, t.theta(pair)) << '\n';
  for (auto [x, y] : p.strict_pairs())
    out << "sigma:" << p.label(x) << ',' << p.label(y) << '=' << t.sigma(x, y) << '\n';
  out << "c=";
  for (std::size_t i = 0; i < t.c.size(); ++i)
    out << (i ? " " : "") << t.c[i];
  out << '\n';
}

int cmd_decompose(const Options &o, std::ostream &out, std::ostream &err)
{
  auto [file, algebra] = load_poset(o);
  warn_char2(file.field, err);
  LinearMap m = load([&] { return load_map_file(algebra, o.map_path); });
  auto [unit, tau] = decompose_inner_elementary(m);
  auto triple = decompose_elementary(tau);
  if (o.machine) {
    out << "beta=" << format_combination(unit.beta()) << '\n';
  } else {
    out << "# inner part: conjugation by beta\n";
    out << "beta = " << format_combination(unit.beta()) << '\n';
    out << "# elementary part\n";
  }
  print_triple(triple, o.machine, out);
  return kExitOk;
}

int cmd_build_tau(const Options &o, std::ostream &out, std::ostream &err)
{
  auto [file, algebra] = load_poset(o);
  warn_char2(file.field, err);
  auto triple = [&] {
    try {
      return load_triple_file(algebra, o.triple_path, o.complete_sigma);
    } catch (const Error &e) {
      if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError)
        throw InputFailure(e.what());
      throw;
    }
  }();
  LinearMap tau = build_tau(algebra, triple);
  std::string text = format_map(tau, poset_name(o));
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
  } else {
    std::ofstream f(o.out_path);
    if (!f || !(f << text))
      throw InputFailure("cannot write '" + o.out_path + "'");
  }
  return kExitOk;
}

std::size_t theta_limit()
{
  if (const char *env = std::getenv("WORKBENCH_THETA_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception &) {
      throw InputFailure(std::string("WORKBENCH_THETA_LIMIT is not a number: ") + env);
    }
  }
  return default_theta_limit;
}

int cmd_enumerate_theta(const Options &o, std::ostream &out, std::ostream &err)
{
  auto [file, algebra] = load_poset(o);
  warn_char2(file.field, err);
  auto thetas = enumerate_theta(file.poset, theta_limit(), true);
  const auto &p = *file.poset;
  out << (o.machine ? "candidates=" : "candidates: ") << thetas.size() << '\n';
  if (o.count_only)
    return kExitOk;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto &t = thetas[i];
    bool completes = sigma_completes_from_unit_seed(t, file.field);
    if (o.machine) {
      out << "candidate=" << i + 1;
      for (auto pair : p.strict_pairs())
        out << ' ' << format_basis(p, pair) << "->" << format_basis(p, t(pair));
      out << "\nunit_sigma_completes=" << (completes ? "yes" : "no") << '\n';
      continue;
    }
    out << "# candidate " << i + 1 << '\n';
    for (auto pair : p.strict_pairs())
      out << "theta " << format_basis(p, pair) << " -> " << format_basis(p, t(pair)) << '\n';
    out << "# sigma from unit cover seed: " << (completes ? "completes" : "conflict") << '\n';
  }
  return kExitOk;
}

} // namespace

int run_workbench(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Lie automorphisms of incidence algebras of finite posets"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--machine", o.machine, "Emit key=value lines");
  app.add_option("--jobs", o.jobs, "Threads for parallel kernels")->check(CLI::NonNegativeNumber);

  auto *report = app.add_subcommand("report", "Summarize a poset and its radical filtration");
  report->add_option("poset", o.poset_path)->required();

  auto *verify = app.add_subcommand("verify", "Check predicates of a linear map");
  verify->add_option("poset", o.poset_path)->required();
  verify->add_option("map", o.map_path)->required();
  verify->add_flag("--lie", o.lie, "Lie automorphism");
  verify->add_flag("--elementary", o.elementary, "Elementary Lie automorphism");
  verify->add_flag("--proper", o.proper, "Proper Lie automorphism");

  auto *decompose = app.add_subcommand("decompose", "Split a Lie automorphism into inner and elementary parts");
  decompose->add_option("poset", o.poset_path)->required();
  decompose->add_option("map", o.map_path)->required();

  auto *build = app.add_subcommand("build-tau", "Write the map of an elementary triple");
  build->add_option("poset", o.poset_path)->required();
  build->add_option("triple", o.triple_path)->required();
  build->add_flag("--complete-sigma", o.complete_sigma, "Propagate sigma from cover pairs");
  build->add_option("-o,--output", o.out_path, "Output map file (default stdout)");

  auto *enumerate = app.add_subcommand("enumerate-theta", "List admissible monotone bijections of B");
  enumerate->add_option("poset", o.poset_path)->required();
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of candidates");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputFailure;
  }

  set_parallel_jobs(o.jobs);
  try {
    if (report->parsed())
      return cmd_report(o, out);
    if (verify->parsed())
      return cmd_verify(o, out);
    if (decompose->parsed())
      return cmd_decompose(o, out, err);
    if (build->parsed())
      return cmd_build_tau(o, out, err);
    if (enumerate->parsed())
      return cmd_enumerate_theta(o, out, err);
  } catch (const InputFailure &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputFailure;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    bool input = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError;
    return input ? kExitInputFailure : kExitMathFailure;
  }
  return kExitInputFailure;
}

} // namespace incidence
