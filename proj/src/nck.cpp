#include "nh/nck.hpp"

#include <set>

namespace nh {

namespace {

bool trimmed_term(const Term& t, const Signature& sig) {
  if (t.is_leaf() || t.gen >= sig.size()) return false;
  if (static_cast<int>(t.children.size()) > sig.arity(t.gen)) return false;
  for (const auto& c : t.children)
    if (!trimmed_term(c, sig)) return false;
  return true;
}

Term trim_term(const Term& t) {
  Term r{t.gen, {}};
  for (const auto& c : t.children)
    if (!c.is_leaf()) r.children.push_back(trim_term(c));
  return r;
}

Int charge_term(const Term& t, const Signature& sig) {
  Int c = binomial(sig.arity(t.gen), static_cast<long>(t.children.size()));
  for (const auto& ch : t.children) c *= charge_term(ch, sig);
  return c;
}

// Child slots chosen in increasing order; leaves fill the rest.
std::vector<Term> untrim_term(const Term& t, const Signature& sig) {
  int ar = sig.arity(t.gen);
  int c = static_cast<int>(t.children.size());
  std::vector<std::vector<Term>> options;
  for (const auto& ch : t.children) options.push_back(untrim_term(ch, sig));
  std::vector<Term> out;
  std::vector<int> slots;
  auto choose = [&](auto&& self, int next) -> void {
    if (static_cast<int>(slots.size()) == c) {
      // cartesian product over the children's preimages
      std::vector<std::size_t> idx(c, 0);
      while (true) {
        Term r{t.gen, std::vector<Term>(ar, Term::leaf())};
        for (int k = 0; k < c; ++k) r.children[slots[k]] = options[k][idx[k]];
        out.push_back(std::move(r));
        int k = c - 1;
        while (k >= 0 && ++idx[k] == options[k].size()) idx[k--] = 0;
        if (k < 0) break;
      }
      return;
    }
    for (int s = next; s <= ar - (c - static_cast<int>(slots.size())); ++s) {
      slots.push_back(s);
      self(self, s + 1);
      slots.pop_back();
    }
  };
  choose(choose, 0);
  return out;
}

}  // namespace

bool is_trimmed(const TrimmedForest& t, const Signature& sig) {
  for (const auto& x : t)
    if (!trimmed_term(x, sig)) return false;
  return true;
}

TrimmedForest trim(const Forest& f) {
  TrimmedForest r;
  for (const auto& t : f)
    if (!t.is_leaf()) r.push_back(trim_term(t));
  return r;
}

Int charge(const TrimmedForest& t, const Signature& sig) {
  if (!is_trimmed(t, sig)) throw DomainError("charge: not a trimmed forest over this signature");
  Int c = 1;
  for (const auto& x : t) c *= charge_term(x, sig);
  return c;
}

std::vector<Forest> untrim(const TrimmedForest& t, const Signature& sig) {
  if (!is_trimmed(t, sig)) throw DomainError("untrim: not a trimmed forest over this signature");
  std::vector<Forest> out{Forest{}};
  for (const auto& x : t) {
    std::vector<Forest> next;
    for (const auto& y : untrim_term(x, sig))
      for (const auto& f : out) next.push_back(concat(f, Forest{y}));
    out = std::move(next);
  }
  return out;
}

LinComb nck_product(const LinComb& x, const LinComb& y) { return concat_product(x, y); }

TensorComb nck_coproduct(const TrimmedForest& t) {
  TensorComb r;
  int n = degree(t);
  for (const auto& p : admissible_pairs(t)) {
    std::vector<char> up(n + 1, 0), low(n + 1, 0);
    for (int i : p.upper) up[i] = 1;
    for (int i : p.lower) low[i] = 1;
    r.add({restrict_nodes(t, up, true), restrict_nodes(t, low, true)}, 1);
  }
  return r;
}

TensorComb nck_coproduct(const LinComb& x) {
  TensorComb r;
  for (const auto& [t, c] : x) r.add(nck_coproduct(t), c);
  return r;
}

TensorComb trim_legs(const TensorComb& x) {
  TensorComb r;
  for (const auto& [k, c] : x) r.add({trim(k.first), trim(k.second)}, c);
  return r;
}

namespace {

// Children in the leftmost slots.
Term first_preimage(const Term& t, const Signature& sig) {
  Term r{t.gen, std::vector<Term>(sig.arity(t.gen), Term::leaf())};
  for (std::size_t k = 0; k < t.children.size(); ++k) r.children[k] = first_preimage(t.children[k], sig);
  return r;
}

}  // namespace

Polynomial length_polynomial(const TrimmedForest& t, const Signature& sig, const LengthAlphabet& A) {
  if (!is_trimmed(t, sig)) throw DomainError("length_polynomial: not a trimmed forest over this signature");
  Forest f;
  for (const auto& x : t) f.push_back(first_preimage(x, sig));
  return realize(f, A);
}

Polynomial mas_lengths_expand(const Multiset& m, const Signature& sig, const LengthAlphabet& A) {
  if (m.empty()) throw DomainError("mas_lengths_expand: the multiset must be nonempty");
  std::set<TrimmedForest> shapes;
  for (const auto& t : enumerate_terms(sig, static_cast<int>(m.size())))
    if (content(t) == m) shapes.insert(trim(Forest{t}));
  Polynomial p;
  for (const auto& s : shapes) p.add(length_polynomial(s, sig, A), charge(s, sig));
  return p;
}

}  // namespace nh
