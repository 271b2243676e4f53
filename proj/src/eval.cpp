#include "wordlab/eval.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

// Words are compiled to a tiny stack program so the enumeration loop does
// nothing but table lookups.
struct Op {
  enum Kind { kPush, kInv, kPow, kMul, kComm };
  Kind kind;
  int slot = 0;
  long long exp = 0;
};

void compile_node(const WordNode& n, const std::vector<std::string>& vars,
                  std::vector<Op>& out) {
  switch (n.kind) {
    case NodeKind::Var: {
      auto it = std::find(vars.begin(), vars.end(), n.var);
      out.push_back({Op::kPush, static_cast<int>(it - vars.begin()), 0});
      break;
    }
    case NodeKind::Inverse:
      compile_node(n.children[0], vars, out);
      out.push_back({Op::kInv, 0, 0});
      break;
    case NodeKind::Power:
      compile_node(n.children[0], vars, out);
      out.push_back({Op::kPow, 0, n.exponent});
      break;
    case NodeKind::Product:
      compile_node(n.children[0], vars, out);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        compile_node(n.children[i], vars, out);
        out.push_back({Op::kMul, 0, 0});
      }
      break;
    case NodeKind::Commutator:
      compile_node(n.children[0], vars, out);
      compile_node(n.children[1], vars, out);
      out.push_back({Op::kComm, 0, 0});
      break;
  }
}

int run_program(const FiniteGroup& G, const std::vector<Op>& prog,
                const int* vals, int* stack) {
  int sp = 0;
  for (const Op& op : prog) {
    switch (op.kind) {
      case Op::kPush:
        stack[sp++] = vals[op.slot];
        break;
      case Op::kInv:
        stack[sp - 1] = G.inv(stack[sp - 1]);
        break;
      case Op::kPow:
        stack[sp - 1] = G.power(stack[sp - 1], op.exp);
        break;
      case Op::kMul: {
        const int rhs = stack[--sp];
        stack[sp - 1] = G.mul(stack[sp - 1], rhs);
        break;
      }
      case Op::kComm: {
        const int rhs = stack[--sp];
        stack[sp - 1] = G.commutator(stack[sp - 1], rhs);
        break;
      }
    }
  }
  return stack[0];
}

std::string pow_text(int n, int k) {
  __uint128_t t = 1;
  for (int i = 0; i < k; ++i) {
    t *= static_cast<unsigned>(n);
    if (t > static_cast<__uint128_t>(UINT64_MAX))
      return std::to_string(n) + "^" + std::to_string(k);
  }
  return std::to_string(static_cast<unsigned long long>(t));
}

// vals = digits of idx in base n, most significant first.
void decode_odometer(unsigned long long idx, int n, std::vector<int>& vals) {
  for (std::size_t d = vals.size(); d-- > 0;) {
    vals[d] = static_cast<int>(idx % static_cast<unsigned>(n));
    idx /= static_cast<unsigned>(n);
  }
}

std::vector<long long> enumerate_counts(const FiniteGroup& G, const Word& w,
                                        const EnumOptions& opts) {
  const int n = G.order();
  const int k = w.arity();
  if (opts.budget <= 0) throw ValidationError("enumeration budget must be positive");

  const auto budget = static_cast<unsigned long long>(opts.budget);
  unsigned long long total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / static_cast<unsigned>(n))
      throw BudgetError("enumerating \"" + w.render() + "\" over " + G.name() +
                        " needs " + pow_text(n, k) +
                        " evaluations; budget is " + std::to_string(opts.budget));
    total *= static_cast<unsigned>(n);
  }

  std::vector<Op> prog;
  compile_node(w.root(), w.variables(), prog);

  auto scan_range = [&](unsigned long long lo, unsigned long long hi,
                        std::vector<long long>& counts) {
    std::vector<int> vals(k);
    std::vector<int> stack(prog.size());
    decode_odometer(lo, n, vals);
    for (unsigned long long idx = lo; idx < hi; ++idx) {
      ++counts[run_program(G, prog, vals.data(), stack.data())];
      for (std::size_t d = vals.size(); d-- > 0;) {
        if (++vals[d] < n) break;
        vals[d] = 0;
      }
    }
  };

  const int jobs = std::clamp<long long>(opts.jobs, 1,
                                         static_cast<long long>(total ? total : 1));
  std::vector<long long> counts(n, 0);
  if (jobs == 1) {
    scan_range(0, total, counts);
    return counts;
  }

  const unsigned long long block = (total + jobs - 1) / jobs;
  std::vector<std::vector<long long>> partial(jobs, std::vector<long long>(n, 0));
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    const unsigned long long lo = block * j;
    const unsigned long long hi = std::min(total, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&, j, lo, hi] { scan_range(lo, hi, partial[j]); });
  }
  for (auto& t : pool) t.join();
  for (const auto& p : partial)
    for (int g = 0; g < n; ++g) counts[g] += p[g];
  return counts;
}

}  // namespace

bool ElementSet::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

int evaluate_word(const FiniteGroup& G, const Word& w, const Assignment& a) {
  std::vector<int> vals;
  vals.reserve(w.variables().size());
  for (const std::string& v : w.variables()) {
    auto it = a.find(v);
    if (it == a.end())
      throw ValidationError("no binding for word variable " + v);
    if (it->second < 0 || it->second >= G.order())
      throw ValidationError("element index for " + v + " out of range");
    vals.push_back(it->second);
  }
  std::vector<Op> prog;
  compile_node(w.root(), w.variables(), prog);
  std::vector<int> stack(prog.size());
  return run_program(G, prog, vals.data(), stack.data());
}

ElementSet word_image(const FiniteGroup& G, const Word& w,
                      const EnumOptions& opts) {
  const auto counts = enumerate_counts(G, w, opts);
  ElementSet set;
  set.parent = &G;
  for (int g = 0; g < G.order(); ++g)
    if (counts[g] > 0) set.members.push_back(g);
  return set;
}

std::vector<long long> solution_counts(const FiniteGroup& G, const Word& w,
                                       const EnumOptions& opts) {
  return enumerate_counts(G, w, opts);
}

long long solution_count(const FiniteGroup& G, const Word& w, int g,
                         const EnumOptions& opts) {
  if (g < 0 || g >= G.order())
    throw ValidationError("element index out of range");
  return enumerate_counts(G, w, opts)[g];
}

Subgroup verbal_subgroup(const FiniteGroup& G, const Word& w,
                         const EnumOptions& opts) {
  return subgroup_generated(G, word_image(G, w, opts).members);
}

}  // namespace wordlab
