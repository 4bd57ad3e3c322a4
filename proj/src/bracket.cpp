#include "cablejones/bracket.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <unordered_map>

#include "cablejones/errors.hpp"

namespace cj {

ChebyshevExpansion chebyshev(int n) {
  if (n < 0) throw DomainError("Chebyshev index must be nonnegative");
  std::map<int, Int> prev{{0, 1}};
  if (n == 0) return {prev};
  std::map<int, Int> cur{{1, 1}};
  for (int k = 1; k < n; ++k) {
    std::map<int, Int> nxt;
    for (const auto& [d, c] : cur) nxt[d + 1] += c;
    for (const auto& [d, c] : prev) nxt[d] -= c;
    std::erase_if(nxt, [](const auto& kv) { return kv.second == 0; });
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return {cur};
}

EvaluatorBudget EvaluatorBudget::from_environment() {
  EvaluatorBudget b;
  auto read = [](const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long x = std::strtol(v, &end, 10);
    if (*end != '\0' || x <= 0) throw ParseError(std::string("bad value for ") + name);
    return static_cast<int>(x);
  };
  b.max_crossings = read("CABLEJONES_MAX_CROSSINGS", b.max_crossings);
  b.max_strands = read("CABLEJONES_MAX_STRANDS", b.max_strands);
  return b;
}

namespace {

QLaurent loop_power(int k) { return QLaurent::loop_value().pow(static_cast<unsigned>(k)); }

// ---- state sum ----

struct RollbackSets {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> history;
  int components;
  explicit RollbackSets(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1), components(n) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) const {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history.push_back({-1, -1});
      return;
    }
    if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
    --components;
    history.push_back({b, a});
  }
  void undo() {
    auto [b, a] = history.back();
    history.pop_back();
    if (b < 0) return;
    parent[static_cast<size_t>(b)] = b;
    size[static_cast<size_t>(a)] -= size[static_cast<size_t>(b)];
    ++components;
  }
};

class StateSum {
 public:
  explicit StateSum(const PDCode& d) : c_(d.crossing_count()) {
    for (const auto& x : d.crossings()) {
      std::array<int, 4> a{};
      for (size_t k = 0; k < 4; ++k) a[k] = static_cast<int>(x.arcs[k]);
      xs_.push_back(a);
    }
  }

  // hist[nA * width + circles]
  std::vector<uint64_t> run(int threads) {
    width_ = 2 * c_ + 1;
    std::vector<uint64_t> total(static_cast<size_t>((c_ + 1) * width_), 0);
    int depth = 0;
    if (threads > 1) {
      while ((1 << depth) < 4 * threads && depth < c_) ++depth;
    }
    const uint64_t tasks = uint64_t{1} << depth;
    std::atomic<uint64_t> next{0};
    std::vector<std::vector<uint64_t>> partial(static_cast<size_t>(std::max(threads, 1)),
                                               std::vector<uint64_t>(total.size(), 0));
    auto worker = [&](size_t slot) {
      auto& hist = partial[slot];
      for (uint64_t t = next++; t < tasks; t = next++) {
        RollbackSets sets(2 * c_);
        int n_a = 0;
        for (int k = 0; k < depth; ++k) {
          bool a_choice = ((t >> k) & 1u) == 0;
          choose(sets, k, a_choice);
          n_a += a_choice ? 1 : 0;
        }
        descend(sets, depth, n_a, hist);
      }
    };
    if (threads <= 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(worker, static_cast<size_t>(i));
      for (auto& th : pool) th.join();
    }
    for (const auto& h : partial)
      for (size_t i = 0; i < h.size(); ++i) total[i] += h[i];
    return total;
  }

  int width() const { return width_; }

 private:
  void choose(RollbackSets& s, int k, bool a_smoothing) const {
    const auto& x = xs_[static_cast<size_t>(k)];
    if (a_smoothing) {
      s.unite(x[0], x[1]);
      s.unite(x[2], x[3]);
    } else {
      s.unite(x[0], x[3]);
      s.unite(x[1], x[2]);
    }
  }

  void descend(RollbackSets& s, int k, int n_a, std::vector<uint64_t>& hist) const {
    if (k == c_) {
      ++hist[static_cast<size_t>(n_a * width_ + s.components)];
      return;
    }
    choose(s, k, true);
    descend(s, k + 1, n_a + 1, hist);
    s.undo();
    s.undo();
    choose(s, k, false);
    descend(s, k + 1, n_a, hist);
    s.undo();
    s.undo();
  }

  int c_;
  int width_ = 0;
  std::vector<std::array<int, 4>> xs_;
};

QLaurent state_sum_bracket(const PDCode& d, const EvaluatorBudget& budget) {
  int c = d.crossing_count();
  if (c > budget.max_crossings) throw BudgetError("crossings", c, budget.max_crossings);
  if (c == 0) return loop_power(d.free_loops());
  StateSum sum(d.normalized());
  auto hist = sum.run(budget.threads);
  int width = sum.width();
  LaurentAccumulator result;
  QLaurent delta_k = QLaurent::one();
  for (int circles = 0; circles < width; ++circles) {
    LaurentAccumulator inner;
    for (int n_a = 0; n_a <= c; ++n_a) {
      uint64_t count = hist[static_cast<size_t>(n_a * width + circles)];
      // A^(nA - nB) with A = v^(-1/4)
      if (count) inner.add_term(c - 2 * n_a, Int(static_cast<unsigned long>(count)));
    }
    QLaurent in = inner.take();
    if (!in.is_zero()) result.add(in * delta_k);
    delta_k *= QLaurent::loop_value();
  }
  return result.take();
}

// ---- Temperley-Lieb contraction along a braid ----

// Boundary points: bottom 0..s-1 left to right, then top s-1..0.
class Matching {
 public:
  explicit Matching(int s) : s_(s), partner_(static_cast<size_t>(2 * s)) {}

  static Matching identity(int s) {
    Matching m(s);
    for (int j = 0; j < s; ++j) m.pair(j, m.top(j));
    return m;
  }

  static Matching decode(uint64_t code, int s) {
    Matching m(s);
    std::vector<int> stack;
    for (int k = 0; k < 2 * s; ++k) {
      if ((code >> k) & 1u) {
        stack.push_back(k);
      } else {
        m.pair(stack.back(), k);
        stack.pop_back();
      }
    }
    return m;
  }

  uint64_t encode() const {
    uint64_t code = 0;
    for (int k = 0; k < 2 * s_; ++k)
      if (partner_[static_cast<size_t>(k)] > k) code |= uint64_t{1} << k;
    return code;
  }

  int top(int j) const { return 2 * s_ - 1 - j; }

  // Stack the generator e joining positions p, p+1 on top; returns closed loops.
  int attach_cupcap(int p) {
    int tp = top(p), tq = top(p + 1);
    int x = partner_[static_cast<size_t>(tp)], y = partner_[static_cast<size_t>(tq)];
    if (x == tq) return 1;
    pair(x, y);
    pair(tp, tq);
    return 0;
  }

  int closure_loops() const {
    std::vector<bool> seen(partner_.size(), false);
    int loops = 0;
    for (int start = 0; start < 2 * s_; ++start) {
      if (seen[static_cast<size_t>(start)]) continue;
      ++loops;
      int k = start;
      while (!seen[static_cast<size_t>(k)]) {
        seen[static_cast<size_t>(k)] = true;
        int p = partner_[static_cast<size_t>(k)];
        seen[static_cast<size_t>(p)] = true;
        k = p < s_ ? top(p) : 2 * s_ - 1 - p;  // through the closing strand
      }
    }
    return loops;
  }

 private:
  void pair(int a, int b) {
    partner_[static_cast<size_t>(a)] = b;
    partner_[static_cast<size_t>(b)] = a;
  }
  int s_;
  std::vector<int> partner_;
};

QLaurent temperley_lieb_bracket(const BraidWord& b, const EvaluatorBudget& budget) {
  int s = b.strands();
  if (s > budget.max_strands) throw BudgetError("strands", s, budget.max_strands);
  if (2 * s > 64) throw BudgetError("strands", s, 32);
  const QLaurent delta = QLaurent::loop_value();
  std::unordered_map<uint64_t, QLaurent> states{{Matching::identity(s).encode(), QLaurent::one()}};
  for (int l : b.letters()) {
    int p = std::abs(l) - 1;
    long keep = l > 0 ? -1 : 1;  // A^(+-1) on the identity smoothing
    std::unordered_map<uint64_t, QLaurent> next;
    next.reserve(states.size() * 2);
    for (const auto& [code, coeff] : states) {
      next[code] += coeff.shifted(keep);
      Matching m = Matching::decode(code, s);
      int loops = m.attach_cupcap(p);
      QLaurent term = coeff.shifted(-keep);
      if (loops) term = term * delta;
      next[m.encode()] += term;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  LaurentAccumulator result;
  std::map<int, QLaurent> powers;
  for (const auto& [code, coeff] : states) {
    int loops = Matching::decode(code, s).closure_loops();
    auto it = powers.find(loops);
    if (it == powers.end()) it = powers.emplace(loops, loop_power(loops)).first;
    result.add(coeff * it->second);
  }
  return result.take();
}

bool use_temperley_lieb(const BraidWord& b, const EvaluatorBudget& budget, Backend backend) {
  if (backend == Backend::temperley_lieb) return true;
  if (backend == Backend::state_sum) return false;
  if (b.strands() <= budget.max_strands) return true;
  if (b.crossings() <= budget.max_crossings) return false;
  throw BudgetError("strands", b.strands(), budget.max_strands);
}

QLaurent assemble_jones(long n, int writhe, const std::function<QLaurent(int)>& bracket_of_cable) {
  if (n < 1) throw DomainError("color must be positive");
  auto cheb = chebyshev(static_cast<int>(n - 1));
  LaurentAccumulator acc;
  for (const auto& [m, c] : cheb.coefficients) {
    if (c == 0) continue;
    acc.add_scaled(m == 0 ? QLaurent::one() : bracket_of_cable(m), 0, c);
  }
  QLaurent sum = acc.take();
  // ((-1)^(n-1) v^((n^2-1)/4))^w (-1)^(n-1)
  bool odd = (n - 1) % 2 != 0;
  bool negate = odd && ((static_cast<long>(writhe) + 1) % 2 != 0);
  QLaurent j = sum.shifted(static_cast<long>(writhe) * (n * n - 1));
  if (negate) j = -j;
  for (const auto& t : j.terms())
    if (t.e % 2 != 0) throw std::logic_error("colored Jones polynomial left Z[v^(1/2)]");
  return j;
}

}  // namespace

QLaurent kauffman_bracket(const PDCode& d, const EvaluatorBudget& budget) {
  return state_sum_bracket(d, budget);
}

QLaurent kauffman_bracket(const BraidWord& b, const EvaluatorBudget& budget, Backend backend) {
  if (use_temperley_lieb(b, budget, backend)) return temperley_lieb_bracket(b, budget);
  return state_sum_bracket(PDCode::from_braid(b), budget);
}

QLaurent colored_jones(const PDCode& d, long n, const EvaluatorBudget& budget) {
  d.require_knot();
  if (n < 1) throw DomainError("color must be positive");
  long top = static_cast<long>(d.crossing_count()) * (n - 1) * (n - 1);
  if (top > budget.max_crossings) throw BudgetError("crossings", top, budget.max_crossings);
  return assemble_jones(n, d.writhe(), [&](int m) { return state_sum_bracket(d.cabled(m), budget); });
}

QLaurent colored_jones(const BraidWord& b, long n, const EvaluatorBudget& budget, Backend backend) {
  b.require_knot();
  if (n < 1) throw DomainError("color must be positive");
  BraidWord widest = n > 1 ? b.cabled(static_cast<int>(n - 1)) : b;
  bool tl = n == 1 || use_temperley_lieb(widest, budget, backend);
  if (tl && widest.strands() > budget.max_strands)
    throw BudgetError("strands", widest.strands(), budget.max_strands);
  if (!tl && widest.crossings() > budget.max_crossings)
    throw BudgetError("crossings", widest.crossings(), budget.max_crossings);
  return assemble_jones(n, b.writhe(), [&](int m) {
    BraidWord cable = b.cabled(m);
    return tl ? temperley_lieb_bracket(cable, budget)
              : state_sum_bracket(PDCode::from_braid(cable), budget);
  });
}

}  // namespace cj
