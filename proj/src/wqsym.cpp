#include "nh/wqsym.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nh {

DecoratedWord pack(const DecoratedWord& u) {
  std::vector<int> vals;
  for (const auto& l : u) vals.push_back(l.value);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  DecoratedWord r;
  for (const auto& l : u) {
    int rank = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), l.value) - vals.begin()) + 1;
    r.push_back({rank, l.gen});
  }
  return r;
}

bool is_packed(const DecoratedWord& u) {
  for (const auto& l : u)
    if (l.value < 1) return false;
  return pack(u) == u;
}

Word monomial_of(const DecoratedWord& u, const LengthAlphabet& A) {
  Word w;
  for (const auto& l : u) w.push_back(A.letter(l.gen, l.value));
  return w;
}

Polynomial M_polynomial(const DecoratedWord& u, const LengthAlphabet& A) {
  if (!is_packed(u)) throw DomainError("M_polynomial: the word is not packed");
  int k = 0;
  for (const auto& l : u) k = std::max(k, l.value);
  Polynomial p;
  // Strictly increasing images of 1..k inside 0..L.
  std::vector<int> img(k + 1);
  auto rec = [&](auto&& self, int idx, int lo) -> void {
    if (idx > k) {
      Word w;
      for (const auto& l : u) w.push_back(A.letter(l.gen, img[l.value]));
      p.add(std::move(w), 1);
      return;
    }
    for (int v = lo; v <= A.L() - (k - idx); ++v) {
      img[idx] = v;
      self(self, idx + 1, v + 1);
    }
  };
  rec(rec, 1, 0);
  return p;
}

WQSymComb wqsym_decompose(const Forest& f, const Signature& sig) {
  Forest g = reduce(f);
  NodeTable nt(g);
  int n = nt.size();
  LengthAlphabet A(sig, std::max(n, 1));
  WQSymComb r;
  DecoratedWord u(n);
  for (int i = 1; i <= n; ++i) u[i - 1].gen = nt[i].gen;
  // Values strictly increase along edges; a parent precedes its children in preorder.
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      if (is_packed(u) && compatible(monomial_of(u, A), g, A)) r.add(u, 1);
      return;
    }
    int lo = nt[i].parent ? u[nt[i].parent - 1].value + 1 : 1;
    for (int v = lo; v <= n; ++v) {
      u[i - 1].value = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return r;
}

std::string decorated_word_to_string(const DecoratedWord& u, const Signature& sig) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(u[i].value) + "^" + sig.name(u[i].gen);
  }
  return s;
}

DecoratedWord parse_decorated_word(std::string_view text, const Signature& sig) {
  std::istringstream in{std::string(text)};
  std::string tok;
  DecoratedWord u;
  while (in >> tok) {
    auto caret = tok.find('^');
    if (caret == std::string::npos || caret == 0) throw DomainError("expected value^generator, got '" + tok + "'");
    std::string v = tok.substr(0, caret);
    if (!std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DomainError("expected a positive value in '" + tok + "'");
    int value = std::stoi(v);
    if (value < 1) throw DomainError("values of decorated letters start at 1, got '" + tok + "'");
    auto g = sig.find(tok.substr(caret + 1));
    if (!g) throw DomainError("unknown generator in '" + tok + "'");
    u.push_back({value, *g});
  }
  return u;
}

}  // namespace nh
