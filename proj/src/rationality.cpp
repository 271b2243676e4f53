#include "wordlab/rationality.hpp"

#include <algorithm>
#include <numeric>

#include "wordlab/errors.hpp"
#include "wordlab/numtheory.hpp"

namespace wordlab {

long long normalize_exponent(long long e, long long order_g, long long order_G) {
  if (e < 1 || order_g < 1 || order_G < 1)
    throw ValidationError("normalize_exponent arguments must be positive");
  if (order_G % order_g != 0)
    throw ValidationError("element order must divide group order");
  if (std::gcd(e, order_g) != 1)
    throw ValidationError("exponent must be coprime to the element order");

  long long d = 1;
  for (const auto& [p, a] : factorize(order_G)) {
    if (e % p == 0) continue;
    for (int i = 0; i < a; ++i) d *= p;
  }
  return e + d;
}

RationalityVerdict weakly_rational_on(const FiniteGroup& G, const Word& w,
                                      const EnumOptions& opts) {
  const ElementSet image = word_image(G, w, opts);
  RationalityVerdict v;
  v.mode = "weak";
  v.group = G.name();
  v.word = w.render();
  v.m = static_cast<int>(image.size());
  v.holds = true;
  for (int g : image.members) {
    const int ord = G.element_order(g);
    for (int e = 1; e <= ord; ++e) {
      if (std::gcd(e, ord) != 1) continue;
      if (!image.contains(G.power(g, e))) {
        v.holds = false;
        v.witness = Witness{g, e, {}, {}};
        return v;
      }
    }
  }
  return v;
}

RationalityVerdict weakly_rational_via_group_order(const FiniteGroup& G,
                                                   const Word& w,
                                                   const EnumOptions& opts) {
  const ElementSet image = word_image(G, w, opts);
  RationalityVerdict v;
  v.mode = "weak";
  v.group = G.name();
  v.word = w.render();
  v.m = static_cast<int>(image.size());
  v.holds = true;
  const long long n = G.order();
  for (int g : image.members) {
    // Walk g, g^2, g^3, ... by explicit multiplication; no shared code with
    // the element-order scan above.
    int pw = g;
    for (long long e = 1; e <= G.exponent(); ++e, pw = G.mul(pw, g)) {
      if (std::gcd(e, n) != 1) continue;
      if (!image.contains(pw)) {
        v.holds = false;
        v.witness = Witness{g, e, {}, {}};
        return v;
      }
    }
  }
  return v;
}

RationalityVerdict rational_on(const FiniteGroup& G, const Word& w,
                               const EnumOptions& opts) {
  const std::vector<long long> counts = solution_counts(G, w, opts);
  RationalityVerdict v;
  v.mode = "full";
  v.group = G.name();
  v.word = w.render();
  v.m = static_cast<int>(
      std::count_if(counts.begin(), counts.end(), [](long long c) { return c > 0; }));
  v.holds = true;

  const long long n = G.order();
  for (int g = 0; g < n && v.holds; ++g) {
    for (long long e = 1; e <= G.exponent(); ++e) {
      if (std::gcd(e, n) != 1) continue;
      const int ge = G.power(g, e);
      if (counts[g] != counts[ge]) {
        v.holds = false;
        v.witness = Witness{g, e, counts[g], counts[ge]};
        break;
      }
    }
  }

  bool variant = true;
  for (int g = 0; g < n && variant; ++g) {
    const int ord = G.element_order(g);
    for (int e = 1; e <= ord; ++e) {
      if (std::gcd(e, ord) != 1) continue;
      if (counts[g] != counts[G.power(g, e)]) {
        variant = false;
        break;
      }
    }
  }
  v.element_order_variant_holds = variant;
  return v;
}

PowerClosedReport power_closed(const FiniteGroup& G, std::vector<int> S) {
  for (int s : S)
    if (s < 0 || s >= G.order())
      throw ValidationError("element index out of range");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());

  PowerClosedReport r;
  r.contains_identity =
      std::binary_search(S.begin(), S.end(), FiniteGroup::identity());
  auto in_set = [&](int g) { return std::binary_search(S.begin(), S.end(), g); };

  for (int s : S) {
    const int ord = G.element_order(s);
    for (int e = 1; e <= ord; ++e) {
      if (std::gcd(e, ord) != 1) continue;
      if (!in_set(G.power(s, e))) {
        r.power_closed = false;
        if (!r.witness) r.witness = Witness{s, e, {}, {}};
        break;
      }
    }
    if (!r.power_closed) break;
  }

  for (int s : S) {
    for (int g = 0; g < G.order() && r.conjugation_closed; ++g)
      if (!in_set(G.conjugate(s, g))) r.conjugation_closed = false;
    if (!r.conjugation_closed) break;
  }
  return r;
}

}  // namespace wordlab
