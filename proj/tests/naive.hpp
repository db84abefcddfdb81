#pragma once

// Test-side reference arithmetic. Group elements are exponent tuples and
// algebra elements are coefficient arrays indexed by the mixed-radix index
// e_1 + q_1 (e_2 + q_2 (...)), computed here without the library. Subgroups
// are closed by breadth-first search. Slow, short and obviously correct.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace naive {

using Tuple = std::vector<std::uint32_t>;

struct Group {
  std::vector<std::uint32_t> q;

  std::uint32_t order() const {
    std::uint32_t n = 1;
    for (auto x : q) n *= x;
    return n;
  }
  std::uint32_t index(const Tuple& e) const {
    std::uint32_t idx = 0;
    for (std::size_t i = q.size(); i-- > 0;) idx = idx * q[i] + e[i];
    return idx;
  }
  Tuple tuple(std::uint32_t idx) const {
    Tuple e(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      e[i] = idx % q[i];
      idx /= q[i];
    }
    return e;
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    Tuple a = tuple(x), b = tuple(y);
    for (std::size_t i = 0; i < q.size(); ++i) a[i] = (a[i] + b[i]) % q[i];
    return index(a);
  }
  std::uint32_t power(std::uint32_t x, std::uint64_t k) const {
    Tuple a = tuple(x);
    for (std::size_t i = 0; i < q.size(); ++i) a[i] = static_cast<std::uint32_t>((a[i] * k) % q[i]);
    return index(a);
  }
  std::uint32_t order_of(std::uint32_t x) const {
    std::uint32_t k = 1;
    while (power(x, k) != 0) ++k;
    return k;
  }
  // eta inverts the positions in h.
  std::uint32_t eta(std::uint32_t x, const std::vector<std::size_t>& h) const {
    Tuple a = tuple(x);
    for (std::size_t i : h) a[i] = (q[i] - a[i]) % q[i];
    return index(a);
  }
};

using Vec = std::vector<std::uint8_t>;

inline Vec from_bits(const Group& g, std::uint64_t bits) {
  Vec v(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) v[i] = (bits >> i) & 1;
  return v;
}

inline std::uint64_t to_bits(const Vec& v) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < v.size(); ++i) b |= std::uint64_t{v[i]} << i;
  return b;
}

inline Vec mul(const Group& g, const Vec& x, const Vec& y) {
  Vec out(g.order());
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (!x[a]) continue;
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      if (y[b]) out[g.mul(a, b)] ^= 1;
    }
  }
  return out;
}

inline std::uint64_t mul_bits(const Group& g, std::uint64_t x, std::uint64_t y) {
  return to_bits(mul(g, from_bits(g, x), from_bits(g, y)));
}

inline std::uint64_t eta_bits(const Group& g, std::uint64_t x, const std::vector<std::size_t>& h) {
  std::uint64_t out = 0;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if ((x >> a) & 1) out |= std::uint64_t{1} << g.eta(a, h);
  }
  return out;
}

inline std::uint64_t unit_order(const Group& g, std::uint64_t x) {
  std::uint64_t k = 1;
  std::uint64_t p = x;
  while (p != 1) {
    p = mul_bits(g, p, x);
    ++k;
  }
  return k;
}

inline std::uint64_t inverse_bits(const Group& g, std::uint64_t x) {
  std::uint64_t p = x, prev = 1;
  while (p != 1) {
    prev = p;
    p = mul_bits(g, p, x);
  }
  return prev == 1 && x == 1 ? 1 : prev;
}

// Subgroup generated by gens, by breadth-first closure.
inline std::set<std::uint64_t> closure(const Group& g, const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t x : frontier) {
      for (std::uint64_t s : gens) {
        const std::uint64_t y = mul_bits(g, x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<std::uint64_t> units(const Group& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t n = g.order();
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (__builtin_popcountll(b) & 1) out.push_back(b);
  }
  return out;
}

// Invariants of an abelian 2-group from the number of elements of each
// order: n_j = #{x : x^(2^j) = 1} determines the cyclic decomposition.
inline std::vector<std::uint64_t> invariants(const Group& g, const std::set<std::uint64_t>& a) {
  std::map<int, std::uint64_t> at_most;  // j -> #{x : order <= 2^j}
  int top = 0;
  for (std::uint64_t x : a) {
    const std::uint64_t o = unit_order(g, x);
    int j = 0;
    while ((std::uint64_t{1} << j) < o) ++j;
    top = std::max(top, j);
    for (int k = j; k <= 12; ++k) ++at_most[k];
  }
  // log2 n_j = sum over factors of min(j, e).
  std::vector<int> lg(static_cast<std::size_t>(top) + 2, 0);
  for (int j = 0; j <= top + 1; ++j) {
    std::uint64_t v = at_most[j];
    while (v > 1) {
      v >>= 1;
      ++lg[static_cast<std::size_t>(j)];
    }
  }
  std::vector<std::uint64_t> out;
  for (int j = top; j >= 1; --j) {
    const int ge_j = lg[static_cast<std::size_t>(j)] - lg[static_cast<std::size_t>(j - 1)];
    const int ge_j1 = lg[static_cast<std::size_t>(j + 1)] - lg[static_cast<std::size_t>(j)];
    for (int c = 0; c < ge_j - ge_j1; ++c) out.push_back(std::uint64_t{1} << j);
  }
  return out;
}

}  // namespace naive
