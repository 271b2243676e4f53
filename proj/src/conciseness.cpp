#include "wordlab/conciseness.hpp"

#include <algorithm>

#include "wordlab/errors.hpp"
#include "wordlab/numtheory.hpp"
#include "wordlab/permutation.hpp"

namespace wordlab {

namespace {

int position_in(const std::vector<int>& sorted, int g) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), g);
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

ConciseReport lemma_concise_report(const FiniteGroup& G, const Word& w,
                                   const EnumOptions& opts) {
  const ElementSet image = word_image(G, w, opts);
  const Subgroup W = subgroup_generated(G, image.members);
  const Subgroup C = centralizer(G, W.members);
  const Subgroup Wd = derived_of(G, W);

  ConciseReport rep;
  rep.group = G.name();
  rep.word = w.render();
  rep.m = static_cast<int>(image.size());
  rep.W_order = static_cast<long long>(W.order());
  rep.W_derived_order = static_cast<long long>(Wd.order());
  rep.W_abelian = Wd.order() == 1;
  rep.centralizer_index = G.order() / static_cast<long long>(C.order());
  rep.m_factorial = saturating_factorial(rep.m);
  rep.L_m = max_order_with_phi_at_most(rep.m);
  rep.L_m_pow_m = saturating_pow(rep.L_m, rep.m);
  for (int g : image.members) {
    const int ord = G.element_order(g);
    rep.value_orders.emplace_back(ord, euler_phi(ord));
  }

  // The conjugation action on G_w, as one explicit permutation per group
  // element; its kernel must match the centralizer computed independently.
  std::vector<int> kernel;
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> images(image.size());
    for (std::size_t i = 0; i < image.members.size(); ++i) {
      const int y = G.conjugate(image.members[i], g);
      if (!image.contains(y))
        throw InternalError("conjugation leaves the word image");
      images[i] = position_in(image.members, y);
    }
    const Permutation pi{images};
    pi.validate();
    if (pi.is_identity()) kernel.push_back(g);
  }
  rep.kernel_equals_centralizer = kernel == C.members;

  auto add = [&rep](const std::string& label, const std::string& detail,
                    const std::string& status) {
    rep.checks.push_back({label, detail, status});
  };
  add("kernel(conjugation action on G_w) = C_G(W)",
      std::to_string(kernel.size()) + " vs " + std::to_string(C.order()),
      rep.kernel_equals_centralizer ? "PASS" : "FAIL");
  add("[G : C_G(W)] <= m!",
      std::to_string(rep.centralizer_index) + " <= " + std::to_string(rep.m_factorial),
      rep.centralizer_index >= 0 &&
              static_cast<std::uint64_t>(rep.centralizer_index) <= rep.m_factorial
          ? "PASS"
          : "FAIL");
  if (rep.W_abelian) {
    bool phi_ok = true;
    std::uint64_t phi_max = 0;
    for (const auto& [ord, phi] : rep.value_orders) {
      phi_max = std::max(phi_max, phi);
      if (phi > static_cast<std::uint64_t>(rep.m)) phi_ok = false;
    }
    add("phi(|g|) <= m for every g in G_w",
        "max phi = " + std::to_string(phi_max) + ", m = " + std::to_string(rep.m),
        phi_ok ? "PASS" : "FAIL");
    add("|W| <= L(m)^m",
        std::to_string(rep.W_order) + " <= " + std::to_string(rep.L_m_pow_m),
        static_cast<std::uint64_t>(rep.W_order) <= rep.L_m_pow_m ? "PASS" : "FAIL");
  } else {
    add("phi(|g|) <= m for every g in G_w", "W nonabelian; values recorded only",
        "SKIPPED");
    add("|W| <= L(m)^m", "W nonabelian; values recorded only", "SKIPPED");
  }

  rep.all_pass = std::none_of(rep.checks.begin(), rep.checks.end(),
                              [](const InequalityCheck& c) { return c.status == "FAIL"; });
  return rep;
}

namespace {

bool commutator_shape(const WordNode& n) {
  if (n.kind == NodeKind::Var) return true;
  if (n.kind != NodeKind::Commutator) return false;
  return commutator_shape(n.children[0]) && commutator_shape(n.children[1]);
}

void count_vars(const WordNode& n, std::vector<std::string>& out) {
  if (n.kind == NodeKind::Var) {
    out.push_back(n.var);
    return;
  }
  for (const WordNode& c : n.children) count_vars(c, out);
}

}  // namespace

bool is_multilinear_commutator(const Word& w) {
  if (!commutator_shape(w.root())) return false;
  std::vector<std::string> occurrences;
  count_vars(w.root(), occurrences);
  std::sort(occurrences.begin(), occurrences.end());
  return std::adjacent_find(occurrences.begin(), occurrences.end()) ==
         occurrences.end();
}

FamBoundReport fam_bound_check(const FiniteGroup& G, const Word& w,
                               const EnumOptions& opts) {
  if (!is_multilinear_commutator(w))
    throw ClassificationError(
        "word \"" + w.render() +
        "\" is not a multilinear commutator (commutators of distinct variables only)");

  const ElementSet image = word_image(G, w, opts);
  const Subgroup W = subgroup_generated(G, image.members);

  FamBoundReport rep;
  rep.group = G.name();
  rep.word = w.render();
  rep.m = static_cast<int>(image.size());
  rep.W_order = static_cast<long long>(W.order());
  if (rep.m >= 2) {
    rep.bound = saturating_pow(rep.m - 1, rep.m - 1);
  } else {
    rep.bound = 1;
    rep.note = "m = 1; (m-1)^(m-1) read as 0^0 = 1";
  }
  rep.holds = static_cast<std::uint64_t>(rep.W_order) <= rep.bound;
  if (!rep.holds) {
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += "bound exceeded on this instance";
  }
  return rep;
}

CorollaryReport corollary_check(const std::vector<long long>& exponents,
                                const std::vector<std::string>& groups,
                                const EnumOptions& opts) {
  const Word w = gamma_power_word(exponents);

  CorollaryReport rep;
  rep.exponents = exponents;
  rep.word = w.render();
  rep.aggregate = true;
  for (const std::string& name : groups) {
    CorollaryGroupVerdict gv;
    gv.group = name;
    const FiniteGroup G = catalog_group(name);
    try {
      gv.verdict = rational_on(G, w, opts);
    } catch (const BudgetError& ex) {
      gv.skipped = true;
      gv.skip_reason = ex.what();
      ++rep.skipped;
      rep.per_group.push_back(std::move(gv));
      continue;
    }
    ++rep.checked;
    if (!gv.verdict.holds) rep.aggregate = false;
    rep.per_group.push_back(std::move(gv));
  }
  // an all-skipped run verified nothing and must not claim success
  if (rep.checked == 0) rep.aggregate = false;
  return rep;
}

}  // namespace wordlab
