#pragma once

#include <map>
#include <string>
#include <vector>

#include "wordlab/group.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Variable name -> element index.
using Assignment = std::map<std::string, int>;

struct EnumOptions {
  long long budget = 100'000'000;  // max word evaluations before refusing
  int jobs = 1;
};

/// Set of word values, as sorted element indices.
struct ElementSet {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;

  std::size_t size() const { return members.size(); }
  bool contains(int g) const;
};

/// Value of the word under the assignment. Throws ValidationError on a
/// missing binding or an out-of-range element index.
int evaluate_word(const FiniteGroup& G, const Word& w, const Assignment& a);

/// Exact image of the word map over all |G|^arity assignments.
/// Throws BudgetError instead of sampling when the budget is exceeded.
ElementSet word_image(const FiniteGroup& G, const Word& w,
                      const EnumOptions& opts = {});

/// Number of assignments with value g, for every g (indexed by element).
std::vector<long long> solution_counts(const FiniteGroup& G, const Word& w,
                                       const EnumOptions& opts = {});

/// Number of assignments with value g.
long long solution_count(const FiniteGroup& G, const Word& w, int g,
                         const EnumOptions& opts = {});

/// Subgroup generated by the word image; normal in G.
Subgroup verbal_subgroup(const FiniteGroup& G, const Word& w,
                         const EnumOptions& opts = {});

}  // namespace wordlab
