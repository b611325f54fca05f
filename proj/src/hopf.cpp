#include "nh/hopf.hpp"

#include <map>

namespace nh {

LinComb basis(const Forest& f) { return LinComb(reduce(f)); }

LinComb product(const LinComb& x, const LinComb& y) { return concat_product(x, y); }

TensorComb coproduct(const Forest& f) {
  Forest g = reduce(f);
  TensorComb r;
  int n = degree(g);
  for (const auto& p : admissible_pairs(g)) {
    std::vector<char> up(n + 1, 0), low(n + 1, 0);
    for (int i : p.upper) up[i] = 1;
    for (int i : p.lower) low[i] = 1;
    r.add({restrict_mask(g, up), restrict_mask(g, low)}, 1);
  }
  return r;
}

TensorComb coproduct(const LinComb& x) {
  TensorComb r;
  for (const auto& [f, c] : x) r.add(coproduct(f), c);
  return r;
}

namespace {

// Every way to write t = y(w1, ..., wk): y is an upper cut and w lists what
// hangs below each leaf of y, leaves included.
std::vector<std::pair<Term, Forest>> factorizations(const Term& t) {
  std::vector<std::pair<Term, Forest>> out;
  out.push_back({Term::leaf(), Forest{t}});
  if (t.is_leaf()) return out;
  std::vector<std::pair<Term, Forest>> partial{{Term::node(t.gen, {}), Forest{}}};
  for (const auto& c : t.children) {
    auto sub = factorizations(c);
    std::vector<std::pair<Term, Forest>> next;
    for (const auto& [y, w] : partial)
      for (const auto& [yc, wc] : sub) {
        Term ny = y;
        ny.children.push_back(yc);
        next.push_back({std::move(ny), concat(w, wc)});
      }
    partial = std::move(next);
  }
  out.insert(out.end(), partial.begin(), partial.end());
  return out;
}

}  // namespace

TensorComb coproduct_via_factorizations(const Term& t) {
  TensorComb r;
  for (const auto& [y, w] : factorizations(t)) r.add({reduce(Forest{y}), reduce(w)}, 1);
  return r;
}

Int counit(const LinComb& x) { return x.coeff(Forest{}); }

namespace {

const LinComb& antipode_basis(const Forest& f, std::map<Forest, LinComb>& memo) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  LinComb s;
  if (f.empty()) {
    s = LinComb(Forest{});
  } else {
    for (const auto& [k, c] : coproduct(f)) {
      if (k.second.empty()) continue;
      if (k.first.empty()) {
        s.add(LinComb(k.second), -c);
        continue;
      }
      LinComb left = antipode_basis(k.first, memo);
      s.add(product(left, LinComb(k.second)), -c);
    }
  }
  return memo.emplace(f, std::move(s)).first->second;
}

}  // namespace

LinComb antipode(const LinComb& x) {
  std::map<Forest, LinComb> memo;
  LinComb r;
  for (const auto& [f, c] : x) r.add(antipode_basis(f, memo), c);
  return r;
}

Combination<Triple> coproduct_left(const TensorComb& x) {
  Combination<Triple> r;
  for (const auto& [k, c] : x)
    for (const auto& [k1, c1] : coproduct(k.first)) r.add(Triple{k1.first, k1.second, k.second}, c * c1);
  return r;
}

Combination<Triple> coproduct_right(const TensorComb& x) {
  Combination<Triple> r;
  for (const auto& [k, c] : x)
    for (const auto& [k2, c2] : coproduct(k.second)) r.add(Triple{k.first, k2.first, k2.second}, c * c2);
  return r;
}

// ---------------------------------------------------------------- Hilbert series

namespace {

using Series = std::vector<Int>;

Series mul(const Series& a, const Series& b, int n) {
  Series r(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

// T = 1 + z S(T), S(z) = sum over generators of z^arity.
std::vector<Int> term_counts(const Signature& sig, int n_max) {
  if (n_max < 0) return {};
  std::vector<int> prof = sig.profile();
  Series t(n_max + 1, 0);
  t[0] = 1;
  // Coefficient n of T depends only on coefficients < n, so refine n times.
  for (int round = 0; round < n_max; ++round) {
    Series st(n_max + 1, 0), power(n_max + 1, 0);
    power[0] = 1;
    for (std::size_t k = 0; k < prof.size(); ++k) {
      if (k > 0) power = mul(power, t, n_max);
      for (int i = 0; i <= n_max; ++i) st[i] += prof[k] * power[i];
    }
    Series next(n_max + 1, 0);
    next[0] = 1;
    for (int i = 0; i < n_max; ++i) next[i + 1] = st[i];
    t = std::move(next);
  }
  return t;
}

// Reduced forests are sequences of positive-degree terms: 1 / (2 - T).
std::vector<Int> hilbert_dims(const Signature& sig, int n_max) {
  if (n_max < 0) return {};
  Series t = term_counts(sig, n_max);
  Series h(n_max + 1, 0);
  h[0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k) h[n] += t[k] * h[n - k];
  return h;
}

Classification classify_profile(const Signature& sig) {
  std::vector<int> p = sig.profile();
  Classification c;
  c.commutative = p.empty() || (p.size() == 1 && p[0] == 1);
  c.cocommutative = p.size() <= 1 || (p.size() == 2 && p[0] == 0 && p[1] == 1);
  return c;
}

}  // namespace nh
