#include "nh/quotient.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace nh {

Multiset content(const Term& t) {
  Multiset m;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.is_leaf()) return;
    m.push_back(u.gen);
    for (const auto& c : u.children) walk(c);
  };
  walk(t);
  std::sort(m.begin(), m.end());
  return m;
}

namespace {

void require_binary(const Signature& sig, const char* what) {
  if (!sig.is_binary()) throw DomainError(std::string(what) + " requires a binary signature");
}

void infix_walk(const Term& t, SigWord& out) {
  if (t.is_leaf()) return;
  if (t.children.size() != 2) throw DomainError("infix reading requires binary nodes");
  infix_walk(t.children[0], out);
  out.push_back(t.gen);
  infix_walk(t.children[1], out);
}

}  // namespace

SigWord infix(const Term& t, const Signature& sig) {
  require_binary(sig, "infix reading");
  SigWord u;
  infix_walk(t, u);
  return u;
}

int mas_arity(const Multiset& m, const Signature& sig) {
  int a = 1;
  for (int g : m) a += sig.arity(g) - 1;
  return a;
}

Multiset mas_compose(const Multiset& m, int i, const Multiset& m2, const Signature& sig) {
  int n = mas_arity(m, sig);
  if (i < 1 || i > n) throw DomainError("mas_compose: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  Multiset r = concat(m, m2);
  std::sort(r.begin(), r.end());
  return r;
}

SigWord int_compose(const SigWord& u, int i, const SigWord& u2) {
  int n = static_cast<int>(u.size()) + 1;
  if (i < 1 || i > n) throw DomainError("int_compose: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  SigWord r(u.begin(), u.begin() + (i - 1));
  r.insert(r.end(), u2.begin(), u2.end());
  r.insert(r.end(), u.begin() + (i - 1), u.end());
  return r;
}

std::vector<int> project(const Term& t, QuotientKind kind, const Signature& sig) {
  switch (kind) {
    case QuotientKind::MAs:
      return content(t);
    case QuotientKind::Int:
      return infix(t, sig);
    case QuotientKind::As:
      require_binary(sig, "the associative quotient");
      return std::vector<int>(t.degree(), 0);
  }
  return {};
}

Phrase project(const Forest& f, QuotientKind kind, const Signature& sig) {
  Phrase x;
  for (const auto& t : reduce(f)) x.push_back(project(t, kind, sig));
  return x;
}

namespace {

int quotient_arity(const std::vector<int>& x, QuotientKind kind, const Signature& sig) {
  return kind == QuotientKind::MAs ? mas_arity(x, sig) : static_cast<int>(x.size()) + 1;
}

std::vector<int> quotient_compose(const std::vector<int>& x, int i, const std::vector<int>& y, QuotientKind kind,
                                  const Signature& sig) {
  switch (kind) {
    case QuotientKind::MAs:
      return mas_compose(x, i, y, sig);
    case QuotientKind::Int:
      return int_compose(x, i, y);
    case QuotientKind::As:
      if (i < 1 || i > static_cast<int>(x.size()) + 1) throw DomainError("associative composition: index out of range");
      return std::vector<int>(x.size() + y.size(), 0);
  }
  return {};
}

void validate_entry(const std::vector<int>& e, QuotientKind kind, const Signature& sig) {
  if (e.empty()) throw DomainError("phrase entries must be nonempty");
  for (int g : e)
    if (g < 0 || g >= sig.size()) throw DomainError("phrase entry references a missing generator");
  if (kind == QuotientKind::MAs && !std::is_sorted(e.begin(), e.end()))
    throw DomainError("multiset entries must be sorted");
  if (kind != QuotientKind::MAs) require_binary(sig, "this quotient");
  if (kind == QuotientKind::As && std::any_of(e.begin(), e.end(), [](int g) { return g != 0; }))
    throw DomainError("associative classes are written with the first generator only");
}

// Terms of each degree grouped by their canonical representative.
class ClassIndex {
 public:
  ClassIndex(QuotientKind kind, const Signature& sig) : kind_(kind), sig_(sig) {}

  const std::vector<Term>& members(const std::vector<int>& x) {
    fill(static_cast<int>(x.size()));
    static const std::vector<Term> none;
    auto it = classes_.find(x);
    return it == classes_.end() ? none : it->second;
  }

 private:
  void fill(int d) {
    if (!done_.insert(d).second) return;
    for (auto& t : enumerate_terms(sig_, d)) classes_[project(t, kind_, sig_)].push_back(std::move(t));
  }

  QuotientKind kind_;
  const Signature& sig_;
  std::set<int> done_;
  std::map<std::vector<int>, std::vector<Term>> classes_;
};

using Counts = std::vector<int>;

// Every sequence of nonzero count vectors summing to c.
void compositions(const Counts& c, std::vector<Counts>& cur, const std::function<void(const std::vector<Counts>&)>& emit) {
  if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) {
    emit(cur);
    return;
  }
  Counts p(c.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == c[k]) p[k++] = 0;
    if (k == p.size()) break;
    ++p[k];
    Counts rest(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) rest[i] = c[i] - p[i];
    cur.push_back(p);
    compositions(rest, cur, emit);
    cur.pop_back();
  }
}

// Every count vector p <= c, zero included.
void sub_vectors(const Counts& c, const std::function<void(const Counts&)>& emit) {
  Counts p(c.size(), 0);
  while (true) {
    emit(p);
    std::size_t k = 0;
    while (k < p.size() && p[k] == c[k]) p[k++] = 0;
    if (k == p.size()) break;
    ++p[k];
  }
}

Multiset from_counts(const Counts& c) {
  Multiset m;
  for (std::size_t g = 0; g < c.size(); ++g) m.insert(m.end(), c[g], static_cast<int>(g));
  return m;
}

bool is_zero(const Counts& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

int total(const Counts& c) {
  int t = 0;
  for (int x : c) t += x;
  return t;
}

// Multiplicative extension of a coproduct defined on single entries.
PhraseTensor extend(const Phrase& x, const std::function<PhraseTensor(const std::vector<int>&)>& single) {
  PhraseTensor r(PhrasePair{{}, {}});
  for (const auto& e : x) r = tensor_product(r, single(e));
  return r;
}

}  // namespace

LinComb phi_expand(const Phrase& x, QuotientKind kind, const Signature& sig) {
  ClassIndex idx(kind, sig);
  LinComb r(Forest{});
  for (const auto& e : x) {
    validate_entry(e, kind, sig);
    LinComb part;
    for (const auto& t : idx.members(e)) part.add(Forest{t}, 1);
    r = product(r, part);
  }
  return r;
}

Polynomial realize_quotient(const Phrase& x, QuotientKind kind, const Signature& sig, const ForestLikeAlphabet& A) {
  return realize(phi_expand(x, kind, sig), A);
}

PhraseTensor mas_coproduct(const Phrase& x, const Signature& sig) {
  return extend(x, [&](const std::vector<int>& m) {
    validate_entry(m, QuotientKind::MAs, sig);
    Counts c(sig.size(), 0);
    for (int g : m) ++c[g];
    PhraseTensor r;
    sub_vectors(c, [&](const Counts& left) {
      Multiset ml = from_counts(left);
      int ar = mas_arity(ml, sig);
      Counts rest(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) rest[i] = c[i] - left[i];
      std::vector<Counts> cur;
      compositions(rest, cur, [&](const std::vector<Counts>& parts) {
        Int coef = binomial(ar, static_cast<long>(parts.size()));
        if (coef == 0) return;
        Phrase lp = ml.empty() ? Phrase{} : Phrase{ml};
        Phrase rp;
        for (const auto& p : parts) rp.push_back(from_counts(p));
        r.add({std::move(lp), std::move(rp)}, coef);
      });
    });
    return r;
  });
}

PhraseTensor fdb_coproduct(int r, int s, const Phrase& x) {
  if (r < 0 || s < 1) throw DomainError("fdb_coproduct: need r >= 0 and s >= 1");
  return extend(x, [&](const std::vector<int>& u) {
    if (static_cast<int>(u.size()) != s || is_zero(u) || std::any_of(u.begin(), u.end(), [](int v) { return v < 0; }))
      throw DomainError("fdb_coproduct: entries must be nonzero count vectors of length " + std::to_string(s));
    PhraseTensor out;
    sub_vectors(u, [&](const Counts& left) {
      long ar = static_cast<long>(total(left)) * r + 1;
      Counts rest(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) rest[i] = u[i] - left[i];
      std::vector<Counts> cur;
      compositions(rest, cur, [&](const std::vector<Counts>& parts) {
        Int coef = binomial(ar, static_cast<long>(parts.size()));
        if (coef == 0) return;
        out.add({is_zero(left) ? Phrase{} : Phrase{left}, Phrase(parts.begin(), parts.end())}, coef);
      });
    });
    return out;
  });
}

PhraseTensor phr_coproduct(const Phrase& x) {
  return extend(x, [](const std::vector<int>& u) {
    if (u.empty()) throw DomainError("phrase entries must be nonempty");
    int n = static_cast<int>(u.size());
    if (n > 20) throw DomainError("phr_coproduct: word too long");
    PhraseTensor r;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      SigWord v, gap;
      Phrase gaps;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          v.push_back(u[i]);
          if (!gap.empty()) gaps.push_back(std::move(gap));
          gap.clear();
        } else {
          gap.push_back(u[i]);
        }
      }
      if (!gap.empty()) gaps.push_back(std::move(gap));
      r.add({v.empty() ? Phrase{} : Phrase{v}, std::move(gaps)}, 1);
    }
    return r;
  });
}

PhraseTensor quotient_coproduct_via_phi(const Phrase& x, QuotientKind kind, const Signature& sig) {
  ClassIndex idx(kind, sig);
  auto is_rep = [&](const Forest& f) {
    for (const auto& t : f) {
      const auto& mem = idx.members(project(t, kind, sig));
      if (mem.empty() || !(mem.front() == t)) return false;
    }
    return true;
  };
  PhraseTensor r;
  for (const auto& [k, c] : coproduct(phi_expand(x, kind, sig)))
    if (is_rep(k.first) && is_rep(k.second)) r.add({project(k.first, kind, sig), project(k.second, kind, sig)}, c);
  return r;
}

std::vector<std::string> congruence_check(QuotientKind kind, const Signature& sig, int degree_max) {
  if (kind != QuotientKind::MAs) require_binary(sig, "this congruence");
  std::vector<std::string> bad;
  std::vector<std::vector<Term>> terms;
  for (int d = 0; d <= degree_max; ++d) terms.push_back(enumerate_terms(sig, d));
  for (int d1 = 0; d1 <= degree_max; ++d1)
    for (const auto& t1 : terms[d1]) {
      auto x1 = project(t1, kind, sig);
      if (static_cast<int>(x1.size()) != d1) bad.push_back("degree not preserved by " + to_string(t1, sig));
      if (quotient_arity(x1, kind, sig) != t1.arity()) bad.push_back("arity not preserved by " + to_string(t1, sig));
      for (int d2 = 0; d1 + d2 <= degree_max; ++d2)
        for (const auto& t2 : terms[d2]) {
          auto x2 = project(t2, kind, sig);
          for (int i = 1; i <= t1.arity(); ++i) {
            auto lhs = project(partial_compose(t1, i, t2), kind, sig);
            if (lhs != quotient_compose(x1, i, x2, kind, sig))
              bad.push_back("composition " + to_string(t1, sig) + " o_" + std::to_string(i) + " " + to_string(t2, sig));
          }
        }
    }
  return bad;
}

// ---------------------------------------------------------------- text

namespace {

std::string word_text(const std::vector<int>& u, const Signature& sig) {
  bool single = sig.single_char_names();
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!single && i) s += '.';
    s += sig.name(u[i]);
  }
  return s;
}

std::string trim_ws(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(trim_ws(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

// Longest-match tokenization of concatenated generator names; '.' and blanks separate freely.
SigWord parse_sig_word(std::string_view s, const Signature& sig) {
  SigWord u;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '.' || std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    int best = -1;
    std::size_t best_len = 0;
    for (int g = 0; g < sig.size(); ++g) {
      const auto& n = sig.name(g);
      if (n.size() > best_len && s.substr(i, n.size()) == n) {
        best = g;
        best_len = n.size();
      }
    }
    if (best < 0) throw DomainError("unknown generator in word '" + std::string(s) + "'");
    u.push_back(best);
    i += best_len;
  }
  return u;
}

}  // namespace

std::string phrase_to_string(const Phrase& x, QuotientKind kind, const Signature& sig) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (kind == QuotientKind::MAs) {
      if (i) s += " ; ";
      s += '{';
      for (std::size_t k = 0; k < x[i].size(); ++k) {
        if (k) s += ',';
        s += sig.name(x[i][k]);
      }
      s += '}';
    } else {
      if (i) s += ", ";
      s += word_text(x[i], sig);
    }
  }
  return s;
}

Phrase parse_phrase(std::string_view text, QuotientKind kind, const Signature& sig) {
  Phrase x;
  if (trim_ws(text).empty()) return x;
  if (kind == QuotientKind::MAs) {
    for (const auto& part : split(text, ';')) {
      if (part.size() < 2 || part.front() != '{' || part.back() != '}')
        throw DomainError("expected a multiset like {a,b,b}, got '" + part + "'");
      Multiset m;
      std::string body = part.substr(1, part.size() - 2);
      if (!trim_ws(body).empty())
        for (const auto& name : split(body, ',')) {
          auto g = sig.find(name);
          if (!g) throw DomainError("unknown generator '" + name + "'");
          m.push_back(*g);
        }
      std::sort(m.begin(), m.end());
      validate_entry(m, kind, sig);
      x.push_back(std::move(m));
    }
  } else {
    for (const auto& part : split(text, ',')) {
      SigWord u = parse_sig_word(part, sig);
      if (kind == QuotientKind::As) u.assign(u.size(), 0);
      validate_entry(u, kind, sig);
      x.push_back(std::move(u));
    }
  }
  return x;
}

std::string fdb_phrase_to_string(const Phrase& x, int s) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    const auto& u = x[i];
    bool digits = std::all_of(u.begin(), u.end(), [](int v) { return v <= 9; });
    if (s == 1) {
      out += std::to_string(u.at(0));
    } else if (digits) {
      for (int v : u) out += std::to_string(v);
    } else {
      out += '(';
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(u[k]);
      }
      out += ')';
    }
  }
  return out;
}

Phrase parse_fdb_phrase(std::string_view text, int s) {
  Phrase x;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() {
    skip();
    std::size_t b = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (b == i) throw DomainError("expected a number in '" + std::string(text) + "'");
    return std::string(text.substr(b, i - b));
  };
  skip();
  if (i == text.size()) return x;
  while (true) {
    skip();
    std::vector<int> u;
    if (i < text.size() && text[i] == '(') {
      ++i;
      u.push_back(std::stoi(number()));
      skip();
      while (i < text.size() && text[i] == ',') {
        ++i;
        u.push_back(std::stoi(number()));
        skip();
      }
      if (i == text.size() || text[i] != ')') throw DomainError("expected ')' in '" + std::string(text) + "'");
      ++i;
    } else {
      std::string d = number();
      if (s == 1)
        u.push_back(std::stoi(d));
      else
        for (char c : d) u.push_back(c - '0');
    }
    if (static_cast<int>(u.size()) != s || is_zero(u))
      throw DomainError("entries must be nonzero count vectors of length " + std::to_string(s));
    x.push_back(std::move(u));
    skip();
    if (i == text.size()) break;
    if (text[i] != ',') throw DomainError("expected ',' in '" + std::string(text) + "'");
    ++i;
  }
  return x;
}

}  // namespace nh
