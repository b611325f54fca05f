#include "nh/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <map>
#include <sstream>

namespace nh {

// ---------------------------------------------------------------- base

std::optional<Letter> ForestLikeAlphabet::find_letter(std::string_view name) const {
  for (Letter a = 0; a < size(); ++a)
    if (letter_name(a) == name) return a;
  return std::nullopt;
}

std::vector<Letter> ForestLikeAlphabet::root_candidates(int gen) const {
  std::vector<Letter> r;
  for (Letter a = 0; a < size(); ++a)
    if (is_root(a) && in_dec(gen, a)) r.push_back(a);
  return r;
}

std::vector<Letter> ForestLikeAlphabet::child_candidates(int j, Letter a, int gen) const {
  std::vector<Letter> r;
  for (Letter b = 0; b < size(); ++b)
    if (in_dec(gen, b) && has_edge(j, a, b)) r.push_back(b);
  return r;
}

// ---------------------------------------------------------------- table

TableAlphabet::TableAlphabet(std::vector<std::string> names, int num_gens, int max_child)
    : names_(std::move(names)), num_gens_(num_gens), max_child_(max_child) {
  int n = size();
  root_.assign(n, 0);
  dec_.assign(num_gens_, std::vector<char>(n, 0));
  edge_.assign(max_child_, std::vector<char>(static_cast<std::size_t>(n) * n, 0));
}

void TableAlphabet::set_root(Letter a, bool v) { root_.at(a) = v; }
void TableAlphabet::set_dec(int gen, Letter a, bool v) { dec_.at(gen).at(a) = v; }
void TableAlphabet::set_edge(int j, Letter a, Letter b, bool v) {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw DomainError("edge references a missing letter");
  edge_.at(j - 1)[static_cast<std::size_t>(a) * size() + b] = v;
}

bool TableAlphabet::in_dec(int gen, Letter a) const {
  return gen >= 0 && gen < num_gens_ && dec_[gen][a];
}

bool TableAlphabet::has_edge(int j, Letter a, Letter b) const {
  return j >= 1 && j <= max_child_ && edge_[j - 1][static_cast<std::size_t>(a) * size() + b];
}

std::shared_ptr<TableAlphabet> empty_alphabet(int num_gens, int max_child) {
  return std::make_shared<TableAlphabet>(std::vector<std::string>{}, num_gens, max_child);
}

// ---------------------------------------------------------------- positions

namespace {

std::string label_string(const std::vector<int>& u) {
  bool digits = std::all_of(u.begin(), u.end(), [](int x) { return x <= 9; });
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(u[i]);
  }
  if (!digits && u.size() == 1) s += ',';  // keeps "12," apart from the digit string "12"
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// "a^name_rest" -> (name, rest)
std::optional<std::pair<std::string_view, std::string_view>> split_letter(std::string_view s) {
  if (s.size() < 4 || s[0] != 'a' || s[1] != '^') return std::nullopt;
  // generator names may contain '_', labels never do
  auto last = s.rfind('_');
  if (last == std::string_view::npos || last < 3) return std::nullopt;
  return std::make_pair(s.substr(2, last - 2), s.substr(last + 1));
}

}  // namespace

PositionAlphabet::PositionAlphabet(Signature sig, int L, int J) : sig_(std::move(sig)), L_(L), J_(J) {
  if (L < 0) throw DomainError("positions alphabet: L must be nonnegative");
  if (J < sig_.max_arity()) throw DomainError("positions alphabet: J must be at least the maximal arity");
  long base = J + 1, total = 0, pw = 1;
  for (int k = 0; k <= L + 1; ++k) {
    offset_.push_back(total);
    if (k == L + 1) break;
    total += pw;
    if (total * std::max(1, sig_.size()) > INT_MAX / 2) throw DomainError("positions alphabet too large");
    pw *= base;
  }
  num_labels_ = static_cast<int>(total);
}

std::vector<int> PositionAlphabet::label_of(Letter a) const {
  long r = a % num_labels_;
  int k = 0;
  while (offset_[k + 1] <= r) ++k;
  long v = r - offset_[k];
  std::vector<int> u(k);
  for (int i = k - 1; i >= 0; --i) {
    u[i] = static_cast<int>(v % (J_ + 1));
    v /= J_ + 1;
  }
  return u;
}

std::optional<Letter> PositionAlphabet::letter(int gen, const std::vector<int>& label) const {
  if (gen < 0 || gen >= sig_.size() || static_cast<int>(label.size()) > L_) return std::nullopt;
  long v = 0;
  for (int x : label) {
    if (x < 0 || x > J_) return std::nullopt;
    v = v * (J_ + 1) + x;
  }
  return static_cast<Letter>(gen * static_cast<long>(num_labels_) + offset_[label.size()] + v);
}

std::string PositionAlphabet::letter_name(Letter a) const {
  return "a^" + sig_.name(gen_of(a)) + "_[" + label_string(label_of(a)) + "]";
}

std::optional<Letter> PositionAlphabet::find_letter(std::string_view name) const {
  auto parts = split_letter(name);
  if (!parts) return std::nullopt;
  auto [g, rest] = *parts;
  auto gen = sig_.find(g);
  if (!gen || rest.size() < 2 || rest.front() != '[' || rest.back() != ']') return std::nullopt;
  std::string_view body = rest.substr(1, rest.size() - 2);
  std::vector<int> u;
  if (body.find(',') != std::string_view::npos) {
    if (body.back() == ',') body.remove_suffix(1);
    std::size_t start = 0;
    while (true) {
      auto c = body.find(',', start);
      auto v = parse_int(body.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start));
      if (!v) return std::nullopt;
      u.push_back(*v);
      if (c == std::string_view::npos) break;
      start = c + 1;
    }
  } else {
    for (char ch : body) {
      if (ch < '0' || ch > '9') return std::nullopt;
      u.push_back(ch - '0');
    }
  }
  return letter(*gen, u);
}

bool PositionAlphabet::is_root(Letter a) const {
  auto u = label_of(a);
  return std::all_of(u.begin(), u.end(), [](int x) { return x == 0; });
}

bool PositionAlphabet::has_edge(int j, Letter a, Letter b) const {
  if (j < 1) return false;
  auto u = label_of(a), v = label_of(b);
  if (v.size() < u.size() + 1 || !std::equal(u.begin(), u.end(), v.begin())) return false;
  if (v[u.size()] != j) return false;
  return std::all_of(v.begin() + u.size() + 1, v.end(), [](int x) { return x == 0; });
}

std::vector<Letter> PositionAlphabet::root_candidates(int gen) const {
  std::vector<Letter> r;
  for (int l = 0; l <= L_; ++l) r.push_back(*letter(gen, std::vector<int>(l, 0)));
  return r;
}

std::vector<Letter> PositionAlphabet::child_candidates(int j, Letter a, int gen) const {
  std::vector<Letter> r;
  if (j < 1 || j > J_) return r;
  std::vector<int> v = label_of(a);
  v.push_back(j);
  while (static_cast<int>(v.size()) <= L_) {
    r.push_back(*letter(gen, v));
    v.push_back(0);
  }
  return r;
}

// ---------------------------------------------------------------- lengths

LengthAlphabet::LengthAlphabet(Signature sig, int L) : sig_(std::move(sig)), L_(L) {
  if (L < 0) throw DomainError("lengths alphabet: L must be nonnegative");
}

Letter LengthAlphabet::letter(int gen, int length) const {
  if (gen < 0 || gen >= sig_.size() || length < 0 || length > L_)
    throw DomainError("letter outside the truncated lengths alphabet");
  return gen * (L_ + 1) + length;
}

std::string LengthAlphabet::letter_name(Letter a) const {
  return "a^" + sig_.name(gen_of(a)) + "_" + std::to_string(length_of(a));
}

std::optional<Letter> LengthAlphabet::find_letter(std::string_view name) const {
  auto parts = split_letter(name);
  if (!parts) return std::nullopt;
  auto gen = sig_.find(parts->first);
  auto l = parse_int(parts->second);
  if (!gen || !l || *l < 0 || *l > L_) return std::nullopt;
  return letter(*gen, *l);
}

bool LengthAlphabet::has_edge(int j, Letter a, Letter b) const { return j >= 1 && length_of(a) < length_of(b); }

std::vector<Letter> LengthAlphabet::root_candidates(int gen) const {
  std::vector<Letter> r;
  for (int l = 0; l <= L_; ++l) r.push_back(letter(gen, l));
  return r;
}

std::vector<Letter> LengthAlphabet::child_candidates(int j, Letter a, int gen) const {
  std::vector<Letter> r;
  if (j < 1) return r;
  for (int l = length_of(a) + 1; l <= L_; ++l) r.push_back(letter(gen, l));
  return r;
}

// ---------------------------------------------------------------- disjoint sum

SumAlphabet::SumAlphabet(AlphabetPtr a1, AlphabetPtr a2) : a1_(std::move(a1)), a2_(std::move(a2)), n1_(a1_->size()) {}

std::pair<int, Letter> SumAlphabet::component(Letter a) const {
  return a < n1_ ? std::make_pair(1, a) : std::make_pair(2, a - n1_);
}

std::string SumAlphabet::letter_name(Letter a) const {
  auto [c, x] = component(a);
  return std::to_string(c) + ":" + (c == 1 ? a1_->letter_name(x) : a2_->letter_name(x));
}

std::optional<Letter> SumAlphabet::find_letter(std::string_view name) const {
  if (name.size() < 2 || name[1] != ':') return std::nullopt;
  if (name[0] == '1') return a1_->find_letter(name.substr(2));
  if (name[0] == '2') {
    auto x = a2_->find_letter(name.substr(2));
    if (x) return *x + n1_;
  }
  return std::nullopt;
}

bool SumAlphabet::is_root(Letter a) const {
  auto [c, x] = component(a);
  return c == 1 ? a1_->is_root(x) : a2_->is_root(x);
}

bool SumAlphabet::in_dec(int gen, Letter a) const {
  auto [c, x] = component(a);
  return c == 1 ? a1_->in_dec(gen, x) : a2_->in_dec(gen, x);
}

bool SumAlphabet::has_edge(int j, Letter a, Letter b) const {
  auto [ca, xa] = component(a);
  auto [cb, xb] = component(b);
  if (ca == 1 && cb == 1) return a1_->has_edge(j, xa, xb);
  if (ca == 2 && cb == 2) return a2_->has_edge(j, xa, xb);
  // from A1 into A2 exactly when the target is a root of A2
  return ca == 1 && j >= 1 && a2_->is_root(xb);
}

std::vector<Letter> SumAlphabet::root_candidates(int gen) const {
  std::vector<Letter> r = a1_->root_candidates(gen);
  for (Letter x : a2_->root_candidates(gen)) r.push_back(x + n1_);
  return r;
}

std::vector<Letter> SumAlphabet::child_candidates(int j, Letter a, int gen) const {
  auto [c, x] = component(a);
  std::vector<Letter> r;
  if (c == 1) {
    r = a1_->child_candidates(j, x, gen);
    if (j >= 1)
      for (Letter y : a2_->root_candidates(gen)) r.push_back(y + n1_);
  } else {
    for (Letter y : a2_->child_candidates(j, x, gen)) r.push_back(y + n1_);
  }
  return r;
}

std::shared_ptr<PositionAlphabet> alphabet_positions(const Signature& sig, int L, int J) {
  return std::make_shared<PositionAlphabet>(sig, L, J);
}

std::shared_ptr<LengthAlphabet> alphabet_lengths(const Signature& sig, int L) {
  return std::make_shared<LengthAlphabet>(sig, L);
}

std::shared_ptr<SumAlphabet> disjoint_sum(AlphabetPtr a1, AlphabetPtr a2) {
  return std::make_shared<SumAlphabet>(std::move(a1), std::move(a2));
}

// ---------------------------------------------------------------- realization

bool compatible(const Word& w, const Forest& f, const ForestLikeAlphabet& A) {
  NodeTable nt(f);
  if (static_cast<int>(w.size()) != nt.size()) return false;
  for (Letter a : w)
    if (a < 0 || a >= A.size()) return false;
  for (int i = 1; i <= nt.size(); ++i) {
    const auto& n = nt[i];
    Letter a = w[i - 1];
    if (n.parent == 0 && !A.is_root(a)) return false;
    if (!A.in_dec(n.gen, a)) return false;
    if (n.parent && !A.has_edge(n.child_index, w[n.parent - 1], a)) return false;
  }
  return true;
}

Polynomial realize(const Forest& f, const ForestLikeAlphabet& A) {
  Forest g = reduce(f);
  NodeTable nt(g);
  int n = nt.size();
  Polynomial p;
  Word w(n);
  // Preorder: a parent always precedes its children, so its letter is fixed.
  auto dfs = [&](auto&& self, int i) -> void {
    if (i > n) {
      p.add(w, 1);
      return;
    }
    const auto& node = nt[i];
    std::vector<Letter> cand = node.parent == 0 ? A.root_candidates(node.gen)
                                                : A.child_candidates(node.child_index, w[node.parent - 1], node.gen);
    for (Letter a : cand) {
      w[i - 1] = a;
      self(self, i + 1);
    }
  };
  dfs(dfs, 1);
  return p;
}

Polynomial realize(const LinComb& x, const ForestLikeAlphabet& A) {
  Polynomial p;
  for (const auto& [f, c] : x) p.add(realize(f, A), c);
  return p;
}

PolyTensor realize_tensor(const TensorComb& x, const ForestLikeAlphabet& A1, const ForestLikeAlphabet& A2) {
  std::map<Forest, Polynomial> c1, c2;
  auto get = [](std::map<Forest, Polynomial>& cache, const Forest& f, const ForestLikeAlphabet& A) -> const Polynomial& {
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, realize(f, A)).first;
    return it->second;
  };
  PolyTensor r;
  for (const auto& [k, c] : x) {
    const Polynomial& p1 = get(c1, k.first, A1);
    const Polynomial& p2 = get(c2, k.second, A2);
    for (const auto& [u, cu] : p1)
      for (const auto& [v, cv] : p2) r.add({u, v}, c * cu * cv);
  }
  return r;
}

PolyTensor theta_split(const Polynomial& p, const SumAlphabet& A) {
  PolyTensor r;
  for (const auto& [w, c] : p) {
    WordPair s;
    for (Letter a : w) {
      auto [comp, x] = A.component(a);
      (comp == 1 ? s.first : s.second).push_back(x);
    }
    r.add(std::move(s), c);
  }
  return r;
}

Polynomial project_lengths(const Polynomial& p, const PositionAlphabet& Ap, const LengthAlphabet& Al) {
  Polynomial r;
  for (const auto& [w, c] : p) {
    Word v;
    v.reserve(w.size());
    for (Letter a : w) v.push_back(Al.letter(Ap.gen_of(a), static_cast<int>(Ap.label_of(a).size())));
    r.add(std::move(v), c);
  }
  return r;
}

// ---------------------------------------------------------------- positions encoding

std::vector<PositionLetter> pos_letters(const Forest& f) {
  NodeTable nt(reduce(f));
  std::vector<PositionLetter> r;
  for (int i = 1; i <= nt.size(); ++i) r.push_back({nt[i].gen, nt[i].position});
  return r;
}

Word pos_word(const Forest& f, const PositionAlphabet& A) {
  Word w;
  for (const auto& pl : pos_letters(f)) {
    auto a = A.letter(pl.gen, pl.label);
    if (!a) throw DomainError("pos_word: a position does not fit the truncated alphabet");
    w.push_back(*a);
  }
  return w;
}

int weight(const Word& w, const PositionAlphabet& A) {
  int s = 0;
  for (Letter a : w) s += static_cast<int>(A.label_of(a).size());
  return s;
}

namespace {

struct Building {
  int gen;
  std::vector<int> child;  // node index per slot, -1 for a leaf
};

Term freeze(const std::vector<Building>& nodes, int i) {
  Term t{nodes[i].gen, {}};
  for (int c : nodes[i].child) t.children.push_back(c < 0 ? Term::leaf() : freeze(nodes, c));
  return t;
}

}  // namespace

Forest leading_forest(const Polynomial& p, const PositionAlphabet& A) {
  if (p.empty()) throw DomainError("leading_forest: zero polynomial");
  int best = -1;
  const Word* lead = nullptr;
  bool tie = false;
  for (const auto& [w, c] : p) {
    int wt = weight(w, A);
    if (best < 0 || wt < best) {
      best = wt;
      lead = &w;
      tie = false;
    } else if (wt == best) {
      tie = true;
    }
  }
  if (tie) throw DomainError("leading_forest: no unique monomial of minimal weight");

  const Signature& sig = A.signature();
  std::vector<Building> nodes;
  std::vector<int> roots;
  std::map<std::vector<int>, int> in_tree;  // position -> node, current tree only
  for (Letter a : *lead) {
    std::vector<int> u = A.label_of(a);
    std::vector<int> pos;
    for (int x : u)
      if (x) pos.push_back(x);
    int g = A.gen_of(a);
    int id = static_cast<int>(nodes.size());
    nodes.push_back({g, std::vector<int>(sig.arity(g), -1)});
    if (pos.empty()) {
      roots.push_back(id);
      in_tree.clear();
    } else {
      std::vector<int> up(pos.begin(), pos.end() - 1);
      auto it = in_tree.find(up);
      if (it == in_tree.end()) throw DomainError("leading_forest: monomial does not encode a forest");
      int slot = pos.back();
      auto& parent = nodes[it->second];
      if (slot > static_cast<int>(parent.child.size()) || parent.child[slot - 1] >= 0)
        throw DomainError("leading_forest: monomial does not encode a forest");
      parent.child[slot - 1] = id;
    }
    in_tree[pos] = id;
  }
  Forest f;
  for (int r : roots) f.push_back(freeze(nodes, r));
  // The rebuilt forest must list exactly these letters in preorder.
  std::vector<PositionLetter> expect;
  for (Letter a : *lead) {
    std::vector<int> pos;
    for (int x : A.label_of(a))
      if (x) pos.push_back(x);
    expect.push_back({A.gen_of(a), pos});
  }
  if (pos_letters(f) != expect) throw DomainError("leading_forest: monomial does not encode a forest");
  return f;
}

std::string word_to_string(const Word& w, const ForestLikeAlphabet& A) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += A.letter_name(w[i]);
  }
  return s;
}

Word parse_word(std::string_view text, const ForestLikeAlphabet& A) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Word w;
  while (in >> tok) {
    auto a = A.find_letter(tok);
    if (!a) throw DomainError("unknown letter '" + tok + "'");
    w.push_back(*a);
  }
  return w;
}

}  // namespace nh
