#include "nh/acceptance.hpp"

#include "nh/alphabet.hpp"
#include "nh/hopf.hpp"
#include "nh/nck.hpp"
#include "nh/quotient.hpp"
#include "nh/wqsym.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace nh {

namespace {

Signature sig_e() { return Signature({{"a", 1}, {"b", 2}, {"c", 3}}); }

struct Report {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
  std::string detail(const std::string& summary) const {
    if (ok()) return summary + " (" + std::to_string(checks) + " checks)";
    return std::to_string(failures.size()) + " of " + std::to_string(checks) + " checks failed; first: " +
           failures.front();
  }
};

std::vector<Forest> forests_up_to(const Signature& sig, int d) {
  std::vector<Forest> all;
  for (int k = 0; k <= d; ++k) {
    auto fs = enumerate_forests(sig, k);
    all.insert(all.end(), fs.begin(), fs.end());
  }
  return all;
}

std::vector<Multiset> multisets_up_to(int gens, int d) {
  std::vector<Multiset> out;
  Multiset cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == d) return;
    for (int g = from; g < gens; ++g) {
      cur.push_back(g);
      self(self, g);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<SigWord> words_up_to(int gens, int d) {
  std::vector<SigWord> out;
  SigWord cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == d) return;
    for (int g = 0; g < gens; ++g) {
      cur.push_back(g);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

TensorComb phi_tensor(const PhraseTensor& x, QuotientKind kind, const Signature& sig) {
  TensorComb r;
  for (const auto& [k, c] : x) r.add(tensor(phi_expand(k.first, kind, sig), phi_expand(k.second, kind, sig)), c);
  return r;
}

// Seeded random alphabet: each root flag, decoration flag and edge is a fair coin.
std::shared_ptr<TableAlphabet> random_alphabet(std::mt19937& rng, int letters, int gens, int max_child,
                                               const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 0; i < letters; ++i) names.push_back(prefix + std::to_string(i));
  auto A = std::make_shared<TableAlphabet>(names, gens, max_child);
  std::bernoulli_distribution coin(0.5);
  for (int a = 0; a < letters; ++a) {
    A->set_root(a, coin(rng));
    for (int g = 0; g < gens; ++g) A->set_dec(g, a, coin(rng));
  }
  for (int j = 1; j <= max_child; ++j)
    for (int a = 0; a < letters; ++a)
      for (int b = 0; b < letters; ++b) A->set_edge(j, a, b, coin(rng));
  return A;
}

PhraseTensor fdb_text(std::initializer_list<std::tuple<const char*, const char*, int>> rows, int s) {
  PhraseTensor t;
  for (const auto& [l, r, c] : rows) t.add({parse_fdb_phrase(l, s), parse_fdb_phrase(r, s)}, c);
  return t;
}

// ---------------------------------------------------------------- criteria

Report faa_di_bruno() {
  Report r;
  PhraseTensor want = fdb_text({{"", "3", 1}, {"1", "2", 2}, {"1", "1, 1", 1}, {"2", "1", 3}, {"3", "", 1}}, 1);
  r.expect(fdb_coproduct(1, 1, parse_fdb_phrase("3", 1)) == want, "closed form differs from the expected coproduct");
  Signature bin({{"a", 2}});
  PhraseTensor via = quotient_coproduct_via_phi({{0, 0, 0}}, QuotientKind::As, bin);
  PhraseTensor by_degree;
  auto degrees = [](const Phrase& x) {
    Phrase d;
    for (const auto& e : x) d.push_back({static_cast<int>(e.size())});
    return d;
  };
  for (const auto& [k, c] : via) by_degree.add({degrees(k.first), degrees(k.second)}, c);
  r.expect(by_degree == want, "coproduct read off the binary trees differs");
  return r;
}

Report phi_binary() {
  Report r;
  Signature bin({{"a", 2}});
  LinComb got = phi_expand({{0, 0, 0}}, QuotientKind::As, bin);
  LinComb want;
  for (const char* s : {"a(a(a(*,*),*),*)", "a(a(*,a(*,*)),*)", "a(a(*,*),a(*,*))", "a(*,a(a(*,*),*))",
                        "a(*,a(*,a(*,*)))"})
    want.add(parse_forest(s, bin), 1);
  r.expect(got.size() == 5, "support size is " + std::to_string(got.size()));
  r.expect(got == want, "expansion differs from the five binary trees");
  return r;
}

Report hilbert() {
  Report r;
  for (int k = 1; k <= 3; ++k) {
    auto d1 = hilbert_dims(Signature::from_profile({0, k}), 6);
    auto d2 = hilbert_dims(Signature::from_profile({0, 0, k}), 6);
    for (int n = 0; n <= 6; ++n) {
      Int w1 = n == 0 ? Int(1) : Int(pow(Int(k), n) * pow(Int(2), n - 1));
      Int w2 = n == 0 ? Int(1) : Int(pow(Int(k), n) * binomial(2 * n - 1, n));
      r.expect(d1[n] == w1, "unary profile k=" + std::to_string(k) + " n=" + std::to_string(n));
      r.expect(d2[n] == w2, "binary profile k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    // direct enumeration as a second oracle on small degrees
    for (int n = 0; n <= 4; ++n) {
      r.expect(d1[n] == enumerate_forests(Signature::from_profile({0, k}), n).size(), "enumeration, unary");
      r.expect(d2[n] == enumerate_forests(Signature::from_profile({0, 0, k}), n).size(), "enumeration, binary");
    }
  }
  return r;
}

Report classification() {
  Report r;
  std::vector<std::vector<int>> profiles{{2}, {0, 1}, {0, 1, 1}, {0, 0, 1}, {}, {1}};
  for (const auto& p : profiles) {
    Signature sig = Signature::from_profile(p);
    auto basis_set = forests_up_to(sig, 3);
    bool cocomm = true, comm = true;
    for (const auto& f : basis_set) {
      TensorComb d = coproduct(f);
      if (!(swap_legs(d) == d)) cocomm = false;
    }
    for (const auto& f : basis_set)
      for (const auto& g : basis_set)
        if (degree(f) + degree(g) <= 3 && concat(f, g) != concat(g, f)) comm = false;
    Classification c = classify_profile(sig);
    std::string name;
    for (int x : p) name += std::to_string(x);
    name += "0^w";
    r.expect(c.cocommutative == cocomm, "cocommutativity of profile " + name);
    r.expect(c.commutative == comm, "commutativity of profile " + name);
  }
  return r;
}

Report hopf_axioms() {
  Report r;
  Signature sig = sig_e();
  auto fs = forests_up_to(sig, 4);
  std::map<Forest, TensorComb> delta;
  for (const auto& f : fs) delta.emplace(f, coproduct(f));
  for (const auto& f : fs)
    r.expect(coproduct_left(delta[f]) == coproduct_right(delta[f]), "coassociativity at " + to_string(f, sig));
  for (const auto& f : fs)
    for (const auto& g : fs)
      if (degree(f) + degree(g) <= 4)
        r.expect(delta[concat(f, g)] == tensor_product(delta[f], delta[g]),
                 "compatibility at " + to_string(f, sig) + " | " + to_string(g, sig));
  for (const auto& f : fs) {
    if (degree(f) > 3) continue;
    LinComb left, right;
    for (const auto& [k, c] : delta[f]) {
      left.add(product(antipode(LinComb(k.first)), LinComb(k.second)), c);
      right.add(product(LinComb(k.first), antipode(LinComb(k.second))), c);
    }
    LinComb unit = f.empty() ? LinComb(Forest{}) : LinComb();
    r.expect(left == unit, "m(S x id)Delta at " + to_string(f, sig));
    r.expect(right == unit, "m(id x S)Delta at " + to_string(f, sig));
  }
  return r;
}

Report engines() {
  Report r;
  Signature sig = sig_e();
  for (int d = 0; d <= 4; ++d)
    for (const auto& t : enumerate_terms(sig, d))
      r.expect(coproduct(Forest{t}) == coproduct_via_factorizations(t), "engines differ at " + to_string(t, sig));
  return r;
}

Report doubling() {
  Report r;
  Signature sig = sig_e();
  auto fs = forests_up_to(sig, 3);
  auto check = [&](AlphabetPtr a1, AlphabetPtr a2, const std::string& label) {
    auto sum = disjoint_sum(a1, a2);
    for (const auto& f : fs)
      r.expect(theta_split(realize(f, *sum), *sum) == realize_tensor(coproduct(f), *a1, *a2),
               label + " at " + to_string(f, sig));
  };
  check(alphabet_lengths(sig, 2), alphabet_lengths(sig, 3), "lengths 2 ++ lengths 3");
  std::mt19937 rng(20240601);
  for (int i = 0; i < 50; ++i)
    check(random_alphabet(rng, 3, 3, 3, "x"), random_alphabet(rng, 3, 3, 3, "y"), "random pair " + std::to_string(i));
  return r;
}

Report triangularity() {
  Report r;
  Signature sig = sig_e();
  std::map<int, std::shared_ptr<PositionAlphabet>> alph;
  for (const auto& f : forests_up_to(sig, 4)) {
    int L = depth(f) + degree(f);
    auto& A = alph[L];
    if (!A) A = alphabet_positions(sig, L, sig.max_arity());
    Polynomial p = realize(f, *A);
    Word pw = pos_word(f, *A);
    int best = weight(pw, *A);
    int at_min = 0;
    bool below = false;
    for (const auto& [w, c] : p) {
      int wt = weight(w, *A);
      if (wt < best) below = true;
      if (wt == best) ++at_min;
    }
    std::string where = to_string(f, sig);
    r.expect(!below && at_min == 1 && p.coeff(pw) == 1, "pos word is not the unique minimum at " + where);
    r.expect(leading_forest(p, *A) == f, "leading forest does not round-trip at " + where);
  }
  return r;
}

Report lengths_projection() {
  Report r;
  Signature sig = sig_e();
  for (const auto& f : forests_up_to(sig, 3)) {
    int L = depth(f) + degree(f);
    auto Ap = alphabet_positions(sig, L, sig.max_arity());
    auto Al = alphabet_lengths(sig, L);
    r.expect(project_lengths(realize(f, *Ap), *Ap, *Al) == realize(f, *Al), "projection at " + to_string(f, sig));
  }
  return r;
}

Report wqsym() {
  Report r;
  Signature sig = sig_e();
  WQSymComb want;
  for (const char* u : {"1^c 2^a 2^b", "1^c 2^a 3^b", "1^c 3^a 2^b"}) want.add(parse_decorated_word(u, sig), 1);
  r.expect(wqsym_decompose(parse_forest("c(a(*),*,b(*,*))", sig), sig) == want, "decomposition of c(a(*),*,b(*,*))");
  auto A = alphabet_lengths(sig, 5);
  for (const auto& f : forests_up_to(sig, 3)) {
    WQSymComb dec = wqsym_decompose(f, sig);
    Polynomial sum;
    std::set<Word> seen;
    bool disjoint = true, unit = true;
    for (const auto& [u, c] : dec) {
      if (c != 1) unit = false;
      Polynomial m = M_polynomial(u, *A);
      for (const auto& [w, cw] : m)
        if (!seen.insert(w).second) disjoint = false;
      sum.add(m, c);
    }
    std::string where = to_string(f, sig);
    r.expect(unit, "coefficient other than 1 at " + where);
    r.expect(disjoint, "overlapping supports at " + where);
    r.expect(sum == realize(f, *A), "recombination at " + where);
  }
  return r;
}

Report charges() {
  Report r;
  Signature sig = sig_e();
  TrimmedForest f1 = parse_forest("c(a,c(c,b,b)) ; b ; a(b)", sig, ParseMode::Trimmed);
  TrimmedForest f2 = trim(parse_forest("b(a(*),*) ; * ; c(*,*,b(a(*),c(*,*,*)))", sig));
  r.expect(f2 == parse_forest("b(a) ; c(b(a,c))", sig, ParseMode::Trimmed), "trim of the second example");
  r.expect(charge(f1, sig) == 3, "charge of the first example");
  r.expect(charge(f2, sig) == 6, "charge of the second example");
  r.expect(untrim(f1, sig).size() == 3, "untrim count of the first example");
  for (int d = 0; d <= 5; ++d) {
    std::map<TrimmedForest, std::set<Forest>> groups;
    for (auto& f : enumerate_forests(sig, d)) groups[trim(f)].insert(std::move(f));
    for (const auto& [t, members] : groups) {
      auto ups = untrim(t, sig);
      std::set<Forest> as_set(ups.begin(), ups.end());
      std::string where = to_string(t, sig);
      r.expect(charge(t, sig) == ups.size(), "charge vs untrim at " + where);
      r.expect(as_set.size() == ups.size() && as_set == members, "untrim vs enumerated preimages at " + where);
    }
  }
  return r;
}

Report nck() {
  Report r;
  Signature sig = sig_e();
  auto tf = [&](const char* s) { return parse_forest(s, sig, ParseMode::Trimmed); };
  TensorComb want;
  want.add({tf(""), tf("c(b,a)")}, 1);
  want.add({tf("c"), tf("b ; a")}, 1);
  want.add({tf("c(b)"), tf("a")}, 1);
  want.add({tf("c(a)"), tf("b")}, 1);
  want.add({tf("c(b,a)"), tf("")}, 1);
  r.expect(nck_coproduct(tf("c(b,a)")) == want, "coproduct of c(b,a)");
  for (const auto& f : forests_up_to(sig, 4))
    r.expect(trim_legs(coproduct(f)) == nck_coproduct(trim(f)), "commuting square at " + to_string(f, sig));
  return r;
}

Report kernel() {
  Report r;
  Signature sig = sig_e();
  std::vector<Forest> fs = forests_up_to(sig, 4);
  std::map<int, std::shared_ptr<LengthAlphabet>> alph;
  std::map<Forest, Polynomial> poly;
  for (const auto& f : fs) {
    int L = degree(f) + 2;
    auto& A = alph[L];
    if (!A) A = alphabet_lengths(sig, L);
    poly.emplace(f, realize(f, *A));
  }
  std::map<TrimmedForest, std::vector<const Forest*>> groups;
  for (const auto& f : fs) groups[trim(f)].push_back(&f);
  for (const auto& [t, members] : groups)
    for (const Forest* f : members)
      r.expect(poly[*f] == poly[*members.front()], "equal trims realize differently at " + to_string(*f, sig));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  int sampled = 0;
  while (sampled < 20) {
    const Forest& f = fs[pick(rng)];
    const Forest& g = fs[pick(rng)];
    if (degree(f) != degree(g) || trim(f) == trim(g)) continue;
    ++sampled;
    r.expect(!(poly[f] == poly[g]), "unequal trims realize equally: " + to_string(f, sig) + " | " + to_string(g, sig));
  }
  return r;
}

Report mas() {
  Report r;
  Signature sig = sig_e();
  auto ph = [&](const char* s) { return parse_phrase(s, QuotientKind::MAs, sig); };
  PhraseTensor want;
  want.add({ph(""), ph("{a,b,b}")}, 1);
  want.add({ph("{a}"), ph("{b,b}")}, 1);
  want.add({ph("{b}"), ph("{a,b}")}, 2);
  want.add({ph("{b}"), ph("{a} ; {b}")}, 1);
  want.add({ph("{b}"), ph("{b} ; {a}")}, 1);
  want.add({ph("{a,b}"), ph("{b}")}, 2);
  want.add({ph("{b,b}"), ph("{a}")}, 3);
  want.add({ph("{a,b,b}"), ph("")}, 1);
  r.expect(mas_coproduct(ph("{a,b,b}"), sig) == want, "coproduct of {a,b,b}");
  for (const auto& m : multisets_up_to(sig.size(), 3)) {
    Phrase x{m};
    PhraseTensor closed = mas_coproduct(x, sig);
    std::string where = phrase_to_string(x, QuotientKind::MAs, sig);
    r.expect(phi_tensor(closed, QuotientKind::MAs, sig) == coproduct(phi_expand(x, QuotientKind::MAs, sig)),
             "phi is not a coalgebra map at " + where);
    r.expect(closed == quotient_coproduct_via_phi(x, QuotientKind::MAs, sig), "representative reading at " + where);
  }
  return r;
}

Report fdb_specializations() {
  Report r;
  PhraseTensor r2 = fdb_text({{"", "3", 1}, {"1", "2", 3}, {"1", "1, 1", 3}, {"2", "1", 5}, {"3", "", 1}}, 1);
  r.expect(fdb_coproduct(2, 1, parse_fdb_phrase("3", 1)) == r2, "r = 2 coproduct of E_3");
  PhraseTensor s3 = fdb_text({{"", "120", 1},
                              {"100", "020", 1},
                              {"010", "110", 1},
                              {"110", "010", 1},
                              {"020", "100", 1},
                              {"120", "", 1}},
                             3);
  r.expect(fdb_coproduct(0, 3, parse_fdb_phrase("120", 3)) == s3, "r = 0, s = 3 coproduct of E_120");
  // the same closed forms from multisets over materialized signatures
  auto to_counts = [](const PhraseTensor& t, int s) {
    PhraseTensor out;
    auto conv = [s](const Phrase& x) {
      Phrase y;
      for (const auto& m : x) {
        std::vector<int> c(s, 0);
        for (int g : m) ++c[g];
        y.push_back(c);
      }
      return y;
    };
    for (const auto& [k, c] : t) out.add({conv(k.first), conv(k.second)}, c);
    return out;
  };
  Signature ternary({{"a", 3}});
  r.expect(to_counts(mas_coproduct({{0, 0, 0}}, ternary), 1) == r2, "r = 2 against multisets");
  Signature unary3({{"a", 1}, {"b", 1}, {"c", 1}});
  r.expect(to_counts(mas_coproduct({{0, 1, 1}}, unary3), 3) == s3, "s = 3 against multisets");
  return r;
}

Report lengths_realization() {
  Report r;
  Signature sig = sig_e();
  auto A = alphabet_lengths(sig, 5);
  for (const auto& m : multisets_up_to(sig.size(), 3))
    r.expect(mas_lengths_expand(m, sig, *A) == realize_quotient({m}, QuotientKind::MAs, sig, *A),
             "expansion at " + phrase_to_string({m}, QuotientKind::MAs, sig));
  // 2[l1<l2<l3] a b b + (3[l1<l2<l3] + [l1<l3<=l2]) b a b + (5[l1<l2<l3] + [l1<l3<=l2]) b b a
  Polynomial want;
  for (int l1 = 0; l1 <= 5; ++l1)
    for (int l2 = 0; l2 <= 5; ++l2)
      for (int l3 = 0; l3 <= 5; ++l3) {
        int chain = l1 < l2 && l2 < l3, fork = l1 < l3 && l3 <= l2;
        auto w = [&](int g1, int g2, int g3) { return Word{A->letter(g1, l1), A->letter(g2, l2), A->letter(g3, l3)}; };
        want.add(w(0, 1, 1), 2 * chain);
        want.add(w(1, 0, 1), 3 * chain + fork);
        want.add(w(1, 1, 0), 5 * chain + fork);
      }
  r.expect(mas_lengths_expand({0, 1, 1}, sig, *A) == want, "collected coefficients of {a,b,b}");
  return r;
}

Report phrases() {
  Report r;
  Signature sig({{"a", 2}, {"b", 2}});
  auto ph = [&](const char* s) { return parse_phrase(s, QuotientKind::Int, sig); };
  PhraseTensor want;
  want.add({ph(""), ph("aab")}, 1);
  want.add({ph("a"), ph("a, b")}, 1);
  want.add({ph("a"), ph("ab")}, 1);
  want.add({ph("b"), ph("aa")}, 1);
  want.add({ph("aa"), ph("b")}, 1);
  want.add({ph("ab"), ph("a")}, 2);
  want.add({ph("aab"), ph("")}, 1);
  r.expect(phr_coproduct(ph("aab")) == want, "coproduct of aab");
  for (int L = 3; L <= 5; ++L) {
    auto A = alphabet_lengths(sig, L);
    r.expect(realize_quotient(ph("ab"), QuotientKind::Int, sig, *A) ==
                 realize_quotient(ph("ba"), QuotientKind::Int, sig, *A),
             "ab and ba differ at L = " + std::to_string(L));
  }
  for (const auto& u : words_up_to(sig.size(), 3)) {
    Phrase x{u};
    r.expect(phi_tensor(phr_coproduct(x), QuotientKind::Int, sig) == coproduct(phi_expand(x, QuotientKind::Int, sig)),
             "phi is not a coalgebra map at " + phrase_to_string(x, QuotientKind::Int, sig));
  }
  return r;
}

Report sum_lemma() {
  Report r;
  Signature sig = sig_e();
  auto fs = forests_up_to(sig, 3);
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> size(1, 3);
  for (int trial = 0; trial < 12; ++trial) {
    auto a1 = random_alphabet(rng, size(rng), 3, 3, "x");
    auto a2 = random_alphabet(rng, size(rng), 3, 3, "y");
    auto sum = disjoint_sum(a1, a2);
    int n = sum->size();
    for (const auto& f : fs) {
      int d = degree(f);
      Word w(d, 0);
      while (true) {
        std::vector<int> upper;
        std::vector<char> up(d + 1, 0), low(d + 1, 0);
        Word w1, w2;
        for (int i = 0; i < d; ++i) {
          auto [comp, x] = sum->component(w[i]);
          if (comp == 1) {
            upper.push_back(i + 1);
            up[i + 1] = 1;
            w1.push_back(x);
          } else {
            low[i + 1] = 1;
            w2.push_back(x);
          }
        }
        bool rhs = is_admissible(f, upper) && compatible(w1, restrict_mask(f, up), *a1) &&
                   compatible(w2, restrict_mask(f, low), *a2);
        r.expect(compatible(w, f, *sum) == rhs, "equivalence fails at " + to_string(f, sig));
        int k = 0;
        while (k < d && ++w[k] == n) w[k++] = 0;
        if (k == d) break;
      }
    }
  }
  return r;
}

struct Entry {
  const char* name;
  Report (*run)();
  const char* summary;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"faa-di-bruno-coproduct", faa_di_bruno, "noncommutative Faa di Bruno coproduct of E_3"},
      {"phi-binary-trees", phi_binary, "phi of the degree-3 associative class"},
      {"hilbert-dimensions", hilbert, "dimensions for unary and binary profiles, k <= 3, n <= 6"},
      {"commutativity-classification", classification, "classification against symmetry checks"},
      {"hopf-axioms", hopf_axioms, "coassociativity, compatibility and antipode"},
      {"coproduct-engines", engines, "admissible pairs against factorizations, degree <= 4"},
      {"alphabet-doubling", doubling, "theta of realization against realized coproduct"},
      {"positions-triangularity", triangularity, "unique minimal monomial and reconstruction, degree <= 4"},
      {"lengths-projection", lengths_projection, "projection of positions onto lengths, degree <= 3"},
      {"wqsym-decomposition", wqsym, "decomposition, recombination and disjoint supports"},
      {"charge-untrim", charges, "charges and preimage counts, degree <= 5"},
      {"nck-coproduct", nck, "trimmed coproduct and commuting square, degree <= 4"},
      {"nck-kernel", kernel, "equal trims realize equally, sampled unequal trims differ"},
      {"mas-coproduct", mas, "multiassociative coproduct and phi compatibility"},
      {"fdb-specializations", fdb_specializations, "deformed and multi-symmetric specializations"},
      {"mas-lengths-realization", lengths_realization, "charge-weighted expansion over lengths"},
      {"phrase-coproduct", phrases, "phrase coproduct and the ab/ba collision"},
      {"sum-compatibility", sum_lemma, "compatibility over a disjoint sum, brute force"},
  };
  return e;
}

}  // namespace

int acceptance_count() { return static_cast<int>(entries().size()); }

CriterionResult run_criterion(int id) {
  const Entry& e = entries().at(id - 1);
  CriterionResult res;
  res.id = id;
  res.name = e.name;
  auto start = std::chrono::steady_clock::now();
  try {
    Report rep = e.run();
    res.pass = rep.ok();
    res.detail = rep.detail(e.summary);
  } catch (const std::exception& ex) {
    res.pass = false;
    res.detail = std::string("exception: ") + ex.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= acceptance_count(); ++i) {
    out.push_back(run_criterion(i));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char id[8];
  std::snprintf(id, sizeof id, "%02d", r.id);
  return std::string(r.pass ? "PASS" : "FAIL") + " " + id + " " + r.name + ": " + r.detail;
}

}  // namespace nh
