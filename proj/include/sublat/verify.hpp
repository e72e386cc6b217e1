#pragma once

// Executable checkers for the maximality statements, with per-checker
// verdicts carrying counterexample witnesses, and a corpus runner that
// aggregates them over the built-in group list.

#include <string>
#include <vector>

#include "sublat/classify.hpp"
#include "sublat/recipes.hpp"

namespace sublat {

struct Witness {
  std::vector<long long> orders;                     // subgroup chain, bottom to top
  std::vector<std::vector<std::string>> generators;  // cycle strings per chain member
};

struct VerdictReport {
  enum class Outcome { Pass, Fail, NotApplicable };

  std::string checker;
  std::string group;
  long long instances = 0;  // 0 exactly when the hypothesis never matched
  Outcome outcome = Outcome::NotApplicable;
  std::vector<Witness> witnesses;  // nonempty exactly on Fail
};

const char* outcome_name(VerdictReport::Outcome o);

// A 2-maximal subgroup of least index is strictly 2-maximal, and Max2* is
// nonempty for every G != 1 of nonprime order.
VerdictReport check_lemma1(const std::string& group, const GroupTable& t,
                           const ClassedLattice& lat);
// A chain K < M < G with both indices prime makes K strictly 2-maximal;
// in a supersoluble group Max2 = Max2*.
VerdictReport check_lemma2(const std::string& group, const GroupTable& t,
                           const ClassedLattice& lat);
// In a p-soluble group, a subgroup H of index p has supersoluble G/core(H).
VerdictReport check_lemma3(const std::string& group, const GroupTable& t,
                           const ClassedLattice& lat, int p);
// Statements (1)-(4) on triples (K, M, H): M, H maximal, K <= M n H,
// K maximal in M, K not maximal in H. Works on interval scope as well,
// where K is the interval base.
VerdictReport check_theorem1(const std::string& group, const GroupTable& t,
                             const ClassedLattice& lat);
// The four corollaries; requires full scope.
std::vector<VerdictReport> check_corollaries(const std::string& group, const GroupTable& t,
                                             const ClassedLattice& lat);

struct CorpusEntry {
  std::string name;
  GroupRecipe recipe;
  bool interval_only = false;
  int interval_element_order = 2;  // seed: first element of this order
};

struct Limits {
  int element_cap = kDefaultElementCap;
  int lattice_budget = kDefaultLatticeBudget;
  int threads = 0;  // 0 = hardware concurrency
};

std::vector<CorpusEntry> default_corpus();

// Runs every applicable checker on every group; per-group errors become
// reports instead of aborting. Reports come back in corpus order.
std::vector<VerdictReport> run_corpus(const std::vector<CorpusEntry>& corpus,
                                      const Limits& limits = {});

bool any_failures(const std::vector<VerdictReport>& reports);

}  // namespace sublat
