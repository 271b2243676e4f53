#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace wordlab {

/// A permutation of {0, ..., degree-1}, stored as its image sequence.
/// Products compose like functions: (a * b) moves a point through b first.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Permutation identity(int degree);

  /// Parse disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
  /// "()" is the identity. The degree is max point + 1, or min_degree if
  /// that is larger.
  static Permutation from_cycles(const std::string& text, int min_degree = 0);

  int degree() const { return static_cast<int>(images.size()); }
  bool is_identity() const;

  int operator()(int point) const { return images[point]; }

  /// Throws ValidationError unless images is a bijection.
  void validate() const;

  Permutation inverse() const;

  /// Canonical disjoint-cycle string; fixed points omitted, identity is "()".
  std::string cycles() const;

  auto operator<=>(const Permutation&) const = default;
};

/// a * b applies b first, then a.
Permutation compose(const Permutation& a, const Permutation& b);

/// Reads one permutation per line in disjoint-cycle notation; blank lines and
/// lines starting with '#' are skipped. All permutations are padded to the
/// largest degree seen.
std::vector<Permutation> read_generator_file(std::istream& in);

}  // namespace wordlab
