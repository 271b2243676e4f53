#include "wordlab/classes.hpp"

#include <algorithm>
#include <tuple>

namespace wordlab {

ClassTable conjugacy_classes(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<int> cls_of(n, -1);
  std::vector<std::vector<int>> classes;

  // Orbit of x under conjugation; generators suffice to span the orbit.
  for (int x = 0; x < n; ++x) {
    if (cls_of[x] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<int> orbit{x};
    cls_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int g : G.generators()) {
        int y = G.conjugate(orbit[head], g);
        if (cls_of[y] < 0) {
          cls_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }

  // Canonical order: (element order of representative, size, smallest member).
  std::vector<int> idx(classes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  auto key = [&](int c) {
    return std::make_tuple(G.element_order(classes[c][0]),
                           static_cast<int>(classes[c].size()), classes[c][0]);
  };
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return key(a) < key(b); });

  ClassTable T;
  T.group = &G;
  T.classes.reserve(classes.size());
  for (int old : idx) T.classes.push_back(std::move(classes[old]));
  T.class_of.assign(n, -1);
  for (int c = 0; c < T.num_classes(); ++c) {
    T.rep.push_back(T.classes[c][0]);
    T.sizes.push_back(static_cast<int>(T.classes[c].size()));
    for (int x : T.classes[c]) T.class_of[x] = c;
  }
  for (int c = 0; c < T.num_classes(); ++c)
    T.inverse_class.push_back(T.class_of[G.inv(T.rep[c])]);

  for (int c = 0; c < T.num_classes(); ++c) {
    int ord = G.element_order(T.rep[c]);
    int nth = 0;
    for (int d = 0; d < c; ++d)
      if (G.element_order(T.rep[d]) == ord) ++nth;
    std::string letter;
    int v = nth;
    do {
      letter.insert(letter.begin(), static_cast<char>('A' + v % 26));
      v = v / 26 - 1;
    } while (v >= 0);
    T.names.push_back(std::to_string(ord) + letter);
  }
  return T;
}

int ClassTable::find(const std::string& name) const {
  for (int c = 0; c < num_classes(); ++c)
    if (names[c] == name) return c;
  return -1;
}

std::vector<int> ClassTable::power_classes(int c) const {
  const int r = rep[c];
  const int ord = group->element_order(r);
  std::vector<int> out(ord);
  int x = FiniteGroup::identity();
  for (int l = 0; l < ord; ++l) {
    out[l] = class_of[x];
    x = group->mul(x, r);
  }
  return out;
}

}  // namespace wordlab
