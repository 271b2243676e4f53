#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordlab/eval.hpp"
#include "wordlab/group.hpp"
#include "wordlab/rationality.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

struct InequalityCheck {
  std::string label;
  std::string detail;
  std::string status;  // "PASS", "FAIL" or "SKIPPED"
};

/// All quantities of the conciseness argument on one (group, word) pair,
/// with each inequality re-assertable from the recorded numbers.
struct ConciseReport {
  std::string group;
  std::string word;
  int m = 0;                        // |G_w|
  long long W_order = 0;            // |w(G)|
  long long W_derived_order = 0;    // |w(G)'|
  bool W_abelian = false;
  long long centralizer_index = 0;  // |G : C_G(W)|
  std::uint64_t m_factorial = 0;    // m!, capped at UINT64_MAX
  bool kernel_equals_centralizer = false;
  std::vector<std::pair<int, std::uint64_t>> value_orders;  // (|g|, phi(|g|))
  std::uint64_t L_m = 0;            // max n with phi(n) <= m
  std::uint64_t L_m_pow_m = 0;      // L(m)^m, capped
  std::vector<InequalityCheck> checks;
  bool all_pass = false;            // no failed check
};

/// Runs the conciseness argument: W = w(G), kernel of the conjugation action
/// on G_w vs C_G(W), |G : C_G(W)| <= m!, and for abelian W the order bounds
/// phi(|g|) <= m and |W| <= L(m)^m.
ConciseReport lemma_concise_report(const FiniteGroup& G, const Word& w,
                                   const EnumOptions& opts = {});

/// Every node a commutator or variable, and no variable repeated.
bool is_multilinear_commutator(const Word& w);

struct FamBoundReport {
  std::string group;
  std::string word;
  int m = 0;
  long long W_order = 0;
  std::uint64_t bound = 0;  // (m-1)^(m-1), capped at UINT64_MAX
  bool holds = false;
  std::string note;
};

/// |w(G)| <= (m-1)^(m-1) for multilinear commutator words; refuses other
/// words with ClassificationError.
FamBoundReport fam_bound_check(const FiniteGroup& G, const Word& w,
                               const EnumOptions& opts = {});

struct CorollaryGroupVerdict {
  std::string group;
  bool skipped = false;
  std::string skip_reason;
  RationalityVerdict verdict;  // meaningful when not skipped
};

struct CorollaryReport {
  std::vector<long long> exponents;
  std::string word;
  std::vector<CorollaryGroupVerdict> per_group;
  bool aggregate = false;  // conjunction over the groups actually checked
  int checked = 0;
  int skipped = 0;
};

/// Builds the nested power-commutator word for the exponents and decides
/// full rationality on each named catalog group.
CorollaryReport corollary_check(const std::vector<long long>& exponents,
                                const std::vector<std::string>& groups,
                                const EnumOptions& opts = {});

}  // namespace wordlab
