// Command-line surface: build | lattice | classify | chains | verify | dot.
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sublat/classify.hpp"
#include "sublat/dot.hpp"
#include "sublat/error.hpp"
#include "sublat/report.hpp"
#include "sublat/spec_file.hpp"
#include "sublat/structure.hpp"
#include "sublat/verify.hpp"

namespace {

using namespace sublat;

struct Options {
  std::string group;
  std::string above;
  std::string json_path;
  std::string dot_path;
  std::string corpus = "default";
  int budget = kDefaultLatticeBudget;
  int element_order = 0;
};

LoadedGroup resolve_group(const std::string& id) {
  if (id.find('/') != std::string::npos || id.find('.') != std::string::npos ||
      std::filesystem::exists(id))
    return load_spec(id);
  return {id, build(parse_recipe_id(id))};
}

SubgroupSet parse_above(const GroupTable& t, const std::string& text) {
  std::vector<int> seed;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t next = text.find(';', start);
    std::string part = text.substr(start, next == std::string::npos ? next : next - start);
    if (!part.empty()) {
      int idx = t.index_of(parse_cycles(part, t.degree()));
      if (idx < 0) throw ParseError("--above: permutation is not a group element");
      seed.push_back(idx);
    }
    if (next == std::string::npos) break;
    start = next + 1;
  }
  if (seed.empty()) throw ParseError("--above: no generators given");
  return closure(t, seed);
}

// Full lattice when within budget, else the interval above --above.
ClassedLattice lattice_for(const GroupTable& t, const Options& opt) {
  if (t.order() <= opt.budget && opt.above.empty()) return all_subgroups(t, opt.budget);
  if (!opt.above.empty()) return overgroups(t, parse_above(t, opt.above));
  throw BudgetError("group order " + std::to_string(t.order()) + " exceeds lattice budget " +
                    std::to_string(opt.budget) + "; pass --above \"<cycles>\" for interval mode");
}

void print_class_table(const GroupTable& t, const ClassedLattice& lat, const std::string& title,
                       const std::vector<int>& reps) {
  std::cout << title << " (" << reps.size() << " class" << (reps.size() == 1 ? "" : "es")
            << "):\n";
  for (int r : reps) {
    std::cout << "  order=" << lat.order_of(r) << " ["
              << structure_hint(t, lat.subgroups[r]) << "] members="
              << lat.classes[lat.class_of[r]].size() << "\n";
  }
}

int cmd_build(const Options& opt) {
  LoadedGroup g = resolve_group(opt.group);
  std::cout << "group: " << g.name << "\n";
  std::cout << "degree: " << g.table.degree() << "\n";
  std::cout << "order: " << g.table.order() << "\n";
  std::cout << "generators:";
  for (int i : g.table.generators()) std::cout << " " << format_cycles(g.table.element(i));
  std::cout << "\n";
  return 0;
}

int cmd_lattice(const Options& opt) {
  LoadedGroup g = resolve_group(opt.group);
  ClassedLattice lat = lattice_for(g.table, opt);
  std::cout << "group: " << g.name << "  order: " << g.table.order() << "\n";
  std::cout << (lat.scope == ClassedLattice::Scope::Full ? "scope: full"
                                                         : "scope: interval")
            << "\n";
  std::cout << "subgroups: " << lat.size() << "\n";
  std::cout << "classes: " << lat.classes.size() << "\n";
  std::cout << "covers: " << lat.covers.size() << "\n";
  return 0;
}

int cmd_classify(const Options& opt) {
  LoadedGroup g = resolve_group(opt.group);
  ClassedLattice lat = lattice_for(g.table, opt);
  std::cout << "group: " << g.name << "  order: " << g.table.order() << "\n";
  if (lat.scope == ClassedLattice::Scope::Interval) {
    // Interval mode: report the maximal overgroups of the base.
    std::vector<int> reps;
    for (int m : max_over(lat, lat.bottom))
      if (std::find(reps.begin(), reps.end(), lat.class_rep(lat.class_of[m])) == reps.end())
        reps.push_back(lat.class_rep(lat.class_of[m]));
    print_class_table(g.table, lat, "max_over(base) classes", reps);
    return 0;
  }
  std::vector<int> max_reps;
  for (int m : lat.maximal_indices())
    if (lat.class_rep(lat.class_of[m]) == m) max_reps.push_back(m);
  print_class_table(g.table, lat, "Max classes", max_reps);
  Max2Sets m2 = max2_sets(lat);
  print_class_table(g.table, lat, "Max2 classes", m2.max2_class_reps);
  print_class_table(g.table, lat, "Max2* classes", m2.strict_class_reps);
  return 0;
}

int cmd_chains(const Options& opt) {
  LoadedGroup g = resolve_group(opt.group);
  if (opt.element_order < 1) throw ParseError("chains: --element-order is required");
  int seed = first_element_of_order(g.table, opt.element_order);
  if (seed < 0)
    throw ParseError("chains: no element of order " + std::to_string(opt.element_order));
  SubgroupSet h = closure(g.table, {seed});

  ClassedLattice lat = g.table.order() <= opt.budget && opt.above.empty()
                           ? all_subgroups(g.table, opt.budget)
                           : overgroups(g.table, h);
  int hi = lat.find_mask(h.bits);
  if (hi < 0) throw Error("chains: subgroup not found in lattice");

  std::cout << "group: " << g.name << "  order: " << g.table.order() << "\n";
  std::cout << "subgroup: order=" << h.order << " gens=" << format_cycles(g.table.element(seed))
            << "\n";
  DegreeResult deg = maximality_degrees(lat, hi);
  std::cout << "degrees:";
  for (int d : deg.degrees) std::cout << " " << d;
  std::cout << "\n";
  for (int d : deg.degrees) {
    const ChainCertificate& cert = deg.certificate.at(d);
    std::cout << "n=" << d << ":";
    for (std::size_t i = 0; i < cert.orders.size(); ++i)
      std::cout << (i ? " < " : " ") << cert.orders[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_dot(const Options& opt) {
  LoadedGroup g = resolve_group(opt.group);
  ClassedLattice lat = lattice_for(g.table, opt);
  std::string doc = export_dot(lat);
  if (opt.dot_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(opt.dot_path);
    if (!out) throw Error("cannot write: " + opt.dot_path);
    out << doc;
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  std::vector<CorpusEntry> corpus;
  if (opt.corpus == "default") {
    corpus = default_corpus();
  } else {
    std::ifstream in(opt.corpus);
    if (!in) throw ParseError("cannot open corpus file: " + opt.corpus);
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream tok(line);
      std::string id, mode;
      if (!(tok >> id)) continue;
      CorpusEntry e{id, parse_recipe_id(id), false, 2};
      if (tok >> mode) {
        if (mode != "interval") throw ParseError("corpus file: unknown mode '" + mode + "'");
        e.interval_only = true;
        int k = 2;
        if (tok >> k) e.interval_element_order = k;
      }
      corpus.push_back(std::move(e));
    }
  }
  Limits limits;
  limits.lattice_budget = opt.budget;
  std::vector<VerdictReport> reports = run_corpus(corpus, limits);
  long long pass = 0, fail = 0, na = 0;
  for (const VerdictReport& r : reports) {
    std::cout << r.checker << "\t" << r.group << "\t" << outcome_name(r.outcome)
              << "\tinstances=" << r.instances << "\n";
    switch (r.outcome) {
      case VerdictReport::Outcome::Pass: ++pass; break;
      case VerdictReport::Outcome::Fail: ++fail; break;
      case VerdictReport::Outcome::NotApplicable: ++na; break;
    }
  }
  std::cout << "summary: checks=" << reports.size() << " pass=" << pass << " fail=" << fail
            << " not_applicable=" << na << "\n";
  if (!opt.json_path.empty()) save_report(reports, opt.json_path);
  return fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite permutation group lattice and maximality analysis"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_group = true) {
    if (with_group)
      sub->add_option("group", opt.group, "recipe id (e.g. psl2_8) or spec file path")
          ->required();
    sub->add_option("--budget", opt.budget, "full-lattice order budget");
    sub->add_option("--above", opt.above,
                    "interval mode: cycle strings of the base subgroup, ';'-separated");
  };

  add_common(app.add_subcommand("build", "print order and generators"));
  add_common(app.add_subcommand("lattice", "print subgroup/class/cover counts"));
  add_common(app.add_subcommand("classify", "print Max, Max2, Max2* class tables"));
  auto* chains = app.add_subcommand("chains", "print maximality degrees with chain certificates");
  add_common(chains);
  chains->add_option("--element-order", opt.element_order,
                     "use the subgroup generated by the first element of this order")
      ->required();
  auto* dot = app.add_subcommand("dot", "write the class graph as DOT");
  add_common(dot);
  dot->add_option("--dot", opt.dot_path, "output path (stdout when omitted)");
  auto* verify = app.add_subcommand("verify", "run the checkers over a corpus");
  add_common(verify, false);
  verify->add_option("--corpus", opt.corpus, "'default' or a corpus file");
  verify->add_option("--json", opt.json_path, "write the verdict report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("build")) return cmd_build(opt);
    if (app.got_subcommand("lattice")) return cmd_lattice(opt);
    if (app.got_subcommand("classify")) return cmd_classify(opt);
    if (app.got_subcommand("chains")) return cmd_chains(opt);
    if (app.got_subcommand("dot")) return cmd_dot(opt);
    if (app.got_subcommand("verify")) return cmd_verify(opt);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
