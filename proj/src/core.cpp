#include "nh/core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace nh {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------- Signature

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string auto_name(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i);
}

}  // namespace

Signature::Signature(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!valid_name(gens_[i].name)) throw DomainError("invalid generator name '" + gens_[i].name + "'");
    if (gens_[i].arity < 0) throw DomainError("negative arity for generator '" + gens_[i].name + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].name == gens_[i].name) throw DomainError("duplicate generator name '" + gens_[i].name + "'");
  }
}

Signature Signature::from_profile(const std::vector<int>& counts) {
  std::vector<Generator> gens;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] < 0) throw DomainError("negative profile entry");
    for (int c = 0; c < counts[k]; ++c) gens.push_back({auto_name(static_cast<int>(gens.size())), static_cast<int>(k)});
  }
  return Signature(std::move(gens));
}

Signature Signature::parse(std::string_view text) {
  std::vector<Generator> gens;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    int ar;
    std::string extra;
    if (!(ls >> ar) || (ls >> extra))
      throw DomainError("signature line " + std::to_string(lineno) + ": expected 'name arity'");
    gens.push_back({name, ar});
  }
  return Signature(std::move(gens));
}

std::optional<int> Signature::find(std::string_view name) const {
  for (int g = 0; g < size(); ++g)
    if (gens_[g].name == name) return g;
  return std::nullopt;
}

int Signature::max_arity() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.arity);
  return m;
}

std::vector<int> Signature::profile() const {
  std::vector<int> p;
  for (const auto& g : gens_) {
    if (static_cast<int>(p.size()) <= g.arity) p.resize(g.arity + 1, 0);
    ++p[g.arity];
  }
  return p;
}

bool Signature::is_binary() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.arity == 2; });
}

bool Signature::single_char_names() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.name.size() == 1; });
}

// ---------------------------------------------------------------- Term

int Term::degree() const {
  if (is_leaf()) return 0;
  int d = 1;
  for (const auto& c : children) d += c.degree();
  return d;
}

int Term::arity() const {
  if (is_leaf()) return 1;
  int a = 0;
  for (const auto& c : children) a += c.arity();
  return a;
}

bool Term::operator==(const Term& o) const { return gen == o.gen && children == o.children; }

std::strong_ordering Term::operator<=>(const Term& o) const {
  if (auto c = gen <=> o.gen; c != 0) return c;
  std::size_t n = std::min(children.size(), o.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = children[i] <=> o.children[i]; c != 0) return c;
  return children.size() <=> o.children.size();
}

int degree(const Forest& f) {
  int d = 0;
  for (const auto& t : f) d += t.degree();
  return d;
}

int arity(const Forest& f) {
  int a = 0;
  for (const auto& t : f) a += t.arity();
  return a;
}

int depth(const Term& t) {
  if (t.is_leaf()) return 0;
  int d = 0;
  for (const auto& c : t.children) d = std::max(d, depth(c));
  return d + 1;
}

int depth(const Forest& f) {
  int d = 0;
  for (const auto& t : f) d = std::max(d, depth(t));
  return d;
}

bool is_reduced(const Forest& f) {
  return std::none_of(f.begin(), f.end(), [](const Term& t) { return t.is_leaf(); });
}

Forest reduce(const Forest& f) {
  Forest r;
  for (const auto& t : f)
    if (!t.is_leaf()) r.push_back(t);
  return r;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, ParseMode mode) : s_(text), sig_(sig), mode_(mode) {}

  Forest forest() {
    Forest f;
    skip();
    if (pos_ == s_.size()) return f;
    f.push_back(term());
    skip();
    while (pos_ < s_.size() && s_[pos_] == ';') {
      ++pos_;
      f.push_back(term());
      skip();
    }
    expect_end();
    return f;
  }

  Term single() {
    Term t = term();
    skip();
    expect_end();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect_end() {
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  Term term() {
    skip();
    if (pos_ == s_.size()) fail("expected a term");
    if (s_[pos_] == '*') {
      if (mode_ == ParseMode::Trimmed) fail("leaves are not written in trimmed forests");
      ++pos_;
      return Term::leaf();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) {
      pos_ = start;
      fail("expected '*' or a generator name");
    }
    auto g = sig_.find(name);
    if (!g) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    std::vector<Term> ch;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      ch.push_back(term());
      skip();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        ch.push_back(term());
        skip();
      }
      if (pos_ == s_.size() || s_[pos_] != ')') fail("expected ',' or ')'");
      ++pos_;
    }
    int ar = sig_.arity(*g);
    int n = static_cast<int>(ch.size());
    if (mode_ == ParseMode::Full && n != ar)
      throw DomainError("generator '" + std::string(name) + "' has arity " + std::to_string(ar) + " but got " +
                        std::to_string(n) + " children");
    if (mode_ == ParseMode::Trimmed && n > ar)
      throw DomainError("generator '" + std::string(name) + "' has arity " + std::to_string(ar) +
                        " but a trimmed node carries " + std::to_string(n) + " children");
    return Term::node(*g, std::move(ch));
  }

  std::string_view s_;
  const Signature& sig_;
  ParseMode mode_;
  std::size_t pos_ = 0;
};

void print(const Term& t, const Signature& sig, std::string& out) {
  if (t.is_leaf()) {
    out += '*';
    return;
  }
  out += sig.name(t.gen);
  if (t.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ',';
    print(t.children[i], sig, out);
  }
  out += ')';
}

}  // namespace

Term parse_term(std::string_view text, const Signature& sig, ParseMode mode) {
  return Parser(text, sig, mode).single();
}

Forest parse_forest(std::string_view text, const Signature& sig, ParseMode mode) {
  return Parser(text, sig, mode).forest();
}

std::string to_string(const Term& t, const Signature& sig) {
  std::string s;
  print(t, sig, s);
  return s;
}

std::string to_string(const Forest& f, const Signature& sig) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " ; ";
    print(f[i], sig, s);
  }
  return s;
}

bool canonical_less(const Forest& a, const Forest& b, const Signature& sig) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return to_string(a, sig) < to_string(b, sig);
}

// ---------------------------------------------------------------- node table

NodeTable::NodeTable(const Forest& f) {
  std::function<void(const Term&, int, int, int, const std::vector<int>&, int)> walk =
      [&](const Term& t, int parent, int j, int h, const std::vector<int>& pos, int tree) {
        if (t.is_leaf()) return;
        int id = static_cast<int>(nodes_.size()) + 1;
        nodes_.push_back({t.gen, h, pos, parent, j, tree, {}});
        if (parent) nodes_[parent - 1].children.push_back(id);
        for (std::size_t k = 0; k < t.children.size(); ++k) {
          std::vector<int> p = pos;
          p.push_back(static_cast<int>(k) + 1);
          walk(t.children[k], id, static_cast<int>(k) + 1, h + 1, p, tree);
        }
      };
  for (std::size_t i = 0; i < f.size(); ++i) walk(f[i], 0, 0, 0, {}, static_cast<int>(i));
}

// ---------------------------------------------------------------- composition

namespace {

Term graft(const Term& t, const std::vector<const Term*>& args, std::size_t& next) {
  if (t.is_leaf()) {
    const Term* a = args[next++];
    return a ? *a : Term::leaf();
  }
  Term r{t.gen, {}};
  r.children.reserve(t.children.size());
  for (const auto& c : t.children) r.children.push_back(graft(c, args, next));
  return r;
}

}  // namespace

Term compose(const Term& t, const std::vector<Term>& args) {
  if (static_cast<int>(args.size()) != t.arity())
    throw DomainError("compose: expected " + std::to_string(t.arity()) + " arguments, got " +
                      std::to_string(args.size()));
  std::vector<const Term*> ptrs;
  for (const auto& a : args) ptrs.push_back(&a);
  std::size_t next = 0;
  return graft(t, ptrs, next);
}

Term partial_compose(const Term& t, int i, const Term& s) {
  int n = t.arity();
  if (i < 1 || i > n)
    throw DomainError("partial_compose: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  std::vector<const Term*> ptrs(n, nullptr);
  ptrs[i - 1] = &s;
  std::size_t next = 0;
  return graft(t, ptrs, next);
}

// ---------------------------------------------------------------- restriction

namespace {

struct Flat {
  std::vector<const Term*> node;  // 1-based
  std::vector<int> parent;
  std::vector<std::vector<int>> slots;  // per node, child node id per slot or 0 for a leaf
};

Flat flatten(const Forest& f) {
  Flat fl;
  fl.node.push_back(nullptr);
  fl.parent.push_back(0);
  fl.slots.emplace_back();
  std::function<int(const Term&, int)> walk = [&](const Term& t, int parent) -> int {
    if (t.is_leaf()) return 0;
    int id = static_cast<int>(fl.node.size());
    fl.node.push_back(&t);
    fl.parent.push_back(parent);
    fl.slots.emplace_back();
    std::vector<int> s;
    for (const auto& c : t.children) s.push_back(walk(c, id));
    fl.slots[id] = std::move(s);
    return id;
  };
  for (const auto& t : f) walk(t, 0);
  return fl;
}

Term build_piece(const Flat& fl, const std::vector<char>& keep, int i, bool drop_removed) {
  Term r{fl.node[i]->gen, {}};
  for (int c : fl.slots[i]) {
    if (c && keep[c])
      r.children.push_back(build_piece(fl, keep, c, drop_removed));
    else if (!drop_removed)
      r.children.push_back(Term::leaf());
  }
  return r;
}

}  // namespace

Forest restrict_nodes(const Forest& f, const std::vector<char>& keep, bool drop_removed) {
  Flat fl = flatten(f);
  int n = static_cast<int>(fl.node.size()) - 1;
  if (static_cast<int>(keep.size()) < n + 1) throw DomainError("restrict: mask too short");
  Forest r;
  for (int i = 1; i <= n; ++i)
    if (keep[i] && (fl.parent[i] == 0 || !keep[fl.parent[i]])) r.push_back(build_piece(fl, keep, i, drop_removed));
  return r;
}

Forest restrict_mask(const Forest& f, const std::vector<char>& keep) { return restrict_nodes(f, keep, false); }

Forest restrict(const Forest& f, const std::vector<int>& nodes) {
  int n = degree(f);
  std::vector<char> keep(n + 1, 0);
  for (int i : nodes) {
    if (i < 1 || i > n) throw DomainError("restrict: node " + std::to_string(i) + " outside 1.." + std::to_string(n));
    keep[i] = 1;
  }
  return restrict_mask(f, keep);
}

// ---------------------------------------------------------------- admissible pairs

std::vector<AdmissiblePair> admissible_pairs(const Forest& f) {
  NodeTable nt(f);
  int n = nt.size();
  std::vector<char> in(n + 1, 0);
  std::vector<AdmissiblePair> out;
  std::function<void(int)> dfs = [&](int i) {
    if (i > n) {
      AdmissiblePair p;
      for (int k = 1; k <= n; ++k) (in[k] ? p.upper : p.lower).push_back(k);
      out.push_back(std::move(p));
      return;
    }
    in[i] = 0;
    dfs(i + 1);
    int par = nt[i].parent;
    if (par == 0 || in[par]) {
      in[i] = 1;
      dfs(i + 1);
      in[i] = 0;
    }
  };
  dfs(1);
  std::sort(out.begin(), out.end(), [](const AdmissiblePair& a, const AdmissiblePair& b) { return a.upper < b.upper; });
  return out;
}

bool is_admissible(const Forest& f, const std::vector<int>& upper) {
  NodeTable nt(f);
  int n = nt.size();
  std::vector<char> in(n + 1, 0);
  for (int i : upper) {
    if (i < 1 || i > n) return false;
    in[i] = 1;
  }
  for (int i = 1; i <= n; ++i)
    if (in[i] && nt[i].parent && !in[nt[i].parent]) return false;
  return true;
}

// ---------------------------------------------------------------- enumeration

namespace {

class TermEnumerator {
 public:
  explicit TermEnumerator(const Signature& sig) : sig_(sig) {}

  const std::vector<Term>& terms(int d) {
    while (static_cast<int>(memo_.size()) <= d) memo_.emplace_back();
    while (static_cast<int>(done_.size()) <= d) done_.push_back(false);
    if (done_[d]) return memo_[d];
    std::vector<Term> out;
    if (d == 0) {
      out.push_back(Term::leaf());
    } else {
      for (int g = 0; g < sig_.size(); ++g) {
        int k = sig_.arity(g);
        if (k == 0) {
          if (d == 1) out.push_back(Term::node(g, {}));
          continue;
        }
        std::vector<Term> ch(k);
        fill(g, k, 0, d - 1, ch, out);
      }
      std::vector<std::pair<std::string, Term>> keyed;
      keyed.reserve(out.size());
      for (auto& t : out) keyed.emplace_back(to_string(t, sig_), std::move(t));
      std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.clear();
      for (auto& [s, t] : keyed) out.push_back(std::move(t));
    }
    memo_[d] = std::move(out);
    done_[d] = true;
    return memo_[d];
  }

 private:
  void fill(int g, int k, int slot, int remaining, std::vector<Term>& ch, std::vector<Term>& out) {
    if (slot == k - 1) {
      for (const auto& t : terms(remaining)) {
        ch[slot] = t;
        out.push_back(Term::node(g, ch));
      }
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      // memo_ already spans every smaller degree, so this reference stays valid
      for (const auto& t : terms(d)) {
        ch[slot] = t;
        fill(g, k, slot + 1, remaining - d, ch, out);
      }
    }
  }

  const Signature& sig_;
  std::vector<std::vector<Term>> memo_;
  std::vector<bool> done_;
};

}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, int degree) {
  if (degree < 0) throw DomainError("enumerate_terms: negative degree");
  TermEnumerator e(sig);
  return e.terms(degree);
}

std::vector<Forest> enumerate_forests(const Signature& sig, int degree) {
  if (degree < 0) throw DomainError("enumerate_forests: negative degree");
  TermEnumerator e(sig);
  for (int d = 0; d <= degree; ++d) e.terms(d);
  std::vector<Forest> out;
  Forest cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int d = 1; d <= remaining; ++d)
      for (const auto& t : e.terms(d)) {
        cur.push_back(t);
        rec(remaining - d);
        cur.pop_back();
      }
  };
  rec(degree);
  std::vector<std::pair<std::string, Forest>> keyed;
  keyed.reserve(out.size());
  for (auto& f : out) keyed.emplace_back(to_string(f, sig), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [s, f] : keyed) out.push_back(std::move(f));
  return out;
}

}  // namespace nh
