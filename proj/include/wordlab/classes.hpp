#pragma once

#include <string>
#include <vector>

#include "wordlab/group.hpp"

namespace wordlab {

/// Conjugacy classes in canonical order: by representative element order,
/// then class size, then smallest member index. Names follow the
/// <order><letter> convention (1A, 2A, 3A, 5A, 5B, ...).
struct ClassTable {
  const FiniteGroup* group = nullptr;
  std::vector<std::vector<int>> classes;  // sorted member lists
  std::vector<int> rep;                   // smallest member of each class
  std::vector<int> sizes;
  std::vector<int> class_of;       // element index -> class index
  std::vector<int> inverse_class;  // class index -> class of inverses
  std::vector<std::string> names;

  int num_classes() const { return static_cast<int>(classes.size()); }

  /// Class index for a name like "5B", or -1.
  int find(const std::string& name) const;

  /// Classes of rep^l for l = 0 .. order(rep)-1.
  std::vector<int> power_classes(int c) const;
};

ClassTable conjugacy_classes(const FiniteGroup& G);

}  // namespace wordlab
