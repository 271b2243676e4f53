#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordlab/eval.hpp"
#include "wordlab/group.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// First failure found by a rationality scan, in canonical order
/// (element index ascending, then exponent ascending).
struct Witness {
  int g = -1;
  long long e = 0;
  std::optional<long long> count_g;   // full mode only
  std::optional<long long> count_ge;  // full mode only
};

struct RationalityVerdict {
  std::string mode;  // "weak" or "full"
  std::string group;
  std::string word;
  int m = 0;  // |G_w|
  bool holds = false;
  std::optional<Witness> witness;
  /// Full mode also scans exponents coprime to |g| alone (instead of |G|)
  /// and records that outcome separately.
  std::optional<bool> element_order_variant_holds;
};

/// e + d, where d is the maximal divisor of order_G coprime to e. The result
/// is coprime to order_G and congruent to e mod order_g.
long long normalize_exponent(long long e, long long order_g, long long order_G);

/// Is g^e in the word image for all g in the image and all e coprime to |g|?
RationalityVerdict weakly_rational_on(const FiniteGroup& G, const Word& w,
                                      const EnumOptions& opts = {});

/// Same predicate decided through exponents coprime to |G| instead; kept as
/// an independent implementation so the two can be cross-checked.
RationalityVerdict weakly_rational_via_group_order(const FiniteGroup& G,
                                                   const Word& w,
                                                   const EnumOptions& opts = {});

/// Are the solution counts of w(x)=g and w(x)=g^e equal for all g in G and
/// all e coprime to |G| up to exp(G)?
RationalityVerdict rational_on(const FiniteGroup& G, const Word& w,
                               const EnumOptions& opts = {});

struct PowerClosedReport {
  bool power_closed = true;
  std::optional<Witness> witness;
  bool conjugation_closed = true;
  bool contains_identity = false;
};

/// Is S closed under s -> s^e for every e coprime to |s|? Also reports
/// conjugation closure and identity membership.
PowerClosedReport power_closed(const FiniteGroup& G, std::vector<int> S);

}  // namespace wordlab
