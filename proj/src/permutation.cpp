#include "wordlab/permutation.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "wordlab/errors.hpp"

namespace wordlab {

Permutation Permutation::identity(int degree) {
  std::vector<int> imgs(degree);
  std::iota(imgs.begin(), imgs.end(), 0);
  return Permutation(std::move(imgs));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

void Permutation::validate() const {
  if (images.empty()) throw ValidationError("permutation has degree 0");
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= degree())
      throw ValidationError("permutation image " + std::to_string(v) +
                            " out of range for degree " +
                            std::to_string(degree()));
    if (seen[v]) throw ValidationError("permutation is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images.size());
  for (int i = 0; i < degree(); ++i) inv[images[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  std::vector<int> imgs(a.images.size());
  for (std::size_t i = 0; i < imgs.size(); ++i) imgs[i] = a.images[b.images[i]];
  return Permutation(std::move(imgs));
}

std::string Permutation::cycles() const {
  std::vector<char> done(images.size(), 0);
  std::string out;
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images[start] == start) continue;
    out += '(';
    int p = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(p);
      done[p] = 1;
      p = images[p];
      first = false;
    } while (p != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation Permutation::from_cycles(const std::string& text, int min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  int max_point = -1;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number", i);
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      long v = std::stol(text.substr(i, j - i));
      if (v > 100000) throw ParseError("point too large", i);
      cyc.push_back(static_cast<int>(v));
      max_point = std::max(max_point, static_cast<int>(v));
      i = j;
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  int degree = std::max(max_point + 1, std::max(min_degree, 1));
  auto perm = Permutation::identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (perm.images[from] != from)
        throw ParseError("point " + std::to_string(from) +
                             " appears in more than one cycle",
                         0);
      perm.images[from] = to;
    }
  }
  perm.validate();
  return perm;
}

std::vector<Permutation> read_generator_file(std::istream& in) {
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line = line.substr(0, pos);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    gens.push_back(Permutation::from_cycles(line));
  }
  if (gens.empty()) throw ValidationError("generator file contains no permutations");
  int degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  for (auto& g : gens) {
    for (int i = g.degree(); i < degree; ++i) g.images.push_back(i);
  }
  return gens;
}

}  // namespace wordlab
