#include "support.hpp"

#include <random>
#include <set>

using namespace nh;
using namespace nhtest;

namespace {

DecoratedWord D(const char* s) { return parse_decorated_word(s, sig_e()); }

// (Delta x id) and (id x Delta) with the trimmed coproduct.
Combination<Triple> nck_left(const TensorComb& x) {
  Combination<Triple> r;
  for (const auto& [k, c] : x)
    for (const auto& [l, d] : nck_coproduct(k.first)) r.add(Triple{l.first, l.second, k.second}, c * d);
  return r;
}

Combination<Triple> nck_right(const TensorComb& x) {
  Combination<Triple> r;
  for (const auto& [k, c] : x)
    for (const auto& [l, d] : nck_coproduct(k.second)) r.add(Triple{k.first, l.first, l.second}, c * d);
  return r;
}

}  // namespace

TEST_SUITE("wqsym") {

TEST_CASE("packing") {
  CHECK(pack(D("4^b 2^b 3^a 4^b 4^c 6^c 3^a")) == D("3^b 1^b 2^a 3^b 3^c 4^c 2^a"));
  CHECK(pack({}).empty());
  DecoratedWord packed = D("2^a 1^c 2^b");
  CHECK(pack(packed) == packed);
  CHECK(is_packed(packed));
  CHECK_FALSE(is_packed(D("1^a 3^a")));
}

TEST_CASE("packing preserves comparisons and is idempotent") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 8), val(1, 9), gen(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    DecoratedWord u(len(rng));
    for (auto& l : u) l = {val(rng), gen(rng)};
    DecoratedWord p = pack(u);
    REQUIRE(p.size() == u.size());
    CHECK(pack(p) == p);
    for (std::size_t i = 0; i < u.size(); ++i) {
      CHECK(p[i].gen == u[i].gen);
      for (std::size_t j = 0; j < u.size(); ++j) {
        CHECK((u[i].value < u[j].value) == (p[i].value < p[j].value));
        CHECK((u[i].value == u[j].value) == (p[i].value == p[j].value));
      }
    }
  }
}

TEST_CASE("monomials of decorated words") {
  auto A = alphabet_lengths(sig_e(), 4);
  CHECK(word_to_string(monomial_of(D("2^a 1^a 1^b 4^c 2^b"), *A), *A) == "a^a_2 a^a_1 a^b_1 a^c_4 a^b_2");
  CHECK(monomial_of({}, *A).empty());
  CHECK(monomial_of(D("1^a"), *A) == Word{A->letter(0, 1)});
}

TEST_CASE("monomial basis polynomials") {
  int L = 4;
  auto A = alphabet_lengths(sig_e(), L);
  Polynomial want;
  for (int l1 = 0; l1 <= L; ++l1)
    for (int l2 = 0; l2 <= L; ++l2)
      for (int l4 = 0; l4 <= L; ++l4)
        if (l2 < l1 && l1 < l4) want.add(Word{A->letter(1, l1), A->letter(2, l2), A->letter(2, l2), A->letter(0, l4)}, 1);
  CHECK(M_polynomial(D("2^b 1^c 1^c 3^a"), *A) == want);
  CHECK(M_polynomial({}, *A) == Polynomial(Word{}));
  auto A3 = alphabet_lengths(sig_e(), 3);
  CHECK(M_polynomial(D("1^a 2^a"), *A3).coeff(Word{A3->letter(0, 1), A3->letter(0, 3)}) == 1);
}

TEST_CASE("decomposition") {
  Signature s = sig_e();
  WQSymComb want;
  for (const char* u : {"1^c 2^a 2^b", "1^c 2^a 3^b", "1^c 3^a 2^b"}) want.add(D(u), 1);
  CHECK(wqsym_decompose(F("c(a(*),*,b(*,*))"), s) == want);
  CHECK(wqsym_decompose(Forest{}, s) == WQSymComb(DecoratedWord{}));
}

TEST_CASE("decomposition recombines for two-generator forests") {
  auto A = alphabet_lengths(sig_e(), 5);
  for (const auto& f : forests_up_to(sig_e(), 2)) {
    Polynomial sum;
    for (const auto& [u, c] : wqsym_decompose(f, sig_e())) sum.add(M_polynomial(u, *A), c);
    CHECK(sum == realize(f, *A));
  }
}

TEST_CASE("decorated word text") {
  DecoratedWord u = D("3^b 1^b 2^a");
  CHECK(decorated_word_to_string(u, sig_e()) == "3^b 1^b 2^a");
  CHECK_THROWS_AS(D("3^z"), DomainError);
  CHECK_THROWS_AS(D("0^a"), DomainError);
}

}  // TEST_SUITE

TEST_SUITE("nck") {

TEST_CASE("trim") {
  CHECK(trim(F("b(a(*),*) ; * ; c(*,*,b(a(*),c(*,*,*)))")) == TF("b(a) ; c(b(a,c))"));
  CHECK(trim(F("* ; *")).empty());
  Forest full = F("c(a(*),c(c(*,*,*),b(*,*),b(*,*)),*)");
  CHECK(degree(trim(full)) == degree(full));
  CHECK(is_trimmed(TF("c(a,c(c,b,b)) ; b ; a(b)"), sig_e()));
  CHECK_FALSE(is_trimmed(F("a(*)"), sig_e()));
  CHECK_THROWS_AS(TF("a(b,c)"), DomainError);
}

TEST_CASE("charge") {
  CHECK(charge(TF("c(a,c(c,b,b)) ; b ; a(b)"), sig_e()) == 3);
  CHECK(charge(TF("b(a) ; c(b(a,c))"), sig_e()) == 6);
  CHECK(charge(TF("b"), sig_e()) == 1);
  CHECK(charge(TF("c(a)"), sig_e()) == 3);
  CHECK(charge(TF(""), sig_e()) == 1);
}

TEST_CASE("untrim") {
  auto ups = untrim(TF("c(a,c(c,b,b)) ; b ; a(b)"), sig_e());
  CHECK(ups.size() == 3);
  CHECK(untrim(TF(""), sig_e()) == std::vector<Forest>{Forest{}});
  for (const char* t : {"c(a,c(c,b,b)) ; b ; a(b)", "b(a) ; c(b(a,c))", "c(b)", "a(a(a))"}) {
    TrimmedForest tf = TF(t);
    auto preimages = untrim(tf, sig_e());
    CHECK(std::set<Forest>(preimages.begin(), preimages.end()).size() == preimages.size());
    for (const auto& f : preimages) {
      CHECK(trim(f) == tf);
      CHECK(is_reduced(f));
    }
  }
}

TEST_CASE("trimmed coproduct") {
  TensorComb want;
  want.add({TF(""), TF("c(b,a)")}, 1);
  want.add({TF("c"), TF("b ; a")}, 1);
  want.add({TF("c(b)"), TF("a")}, 1);
  want.add({TF("c(a)"), TF("b")}, 1);
  want.add({TF("c(b,a)"), TF("")}, 1);
  CHECK(nck_coproduct(TF("c(b,a)")) == want);
  CHECK(nck_coproduct(TrimmedForest{}) == TensorComb(ForestPair{}));
}

TEST_CASE("trimmed bialgebra axioms") {
  std::set<TrimmedForest> trims;
  for (const auto& f : forests_up_to(sig_e(), 4)) trims.insert(trim(f));
  for (const auto& t : trims) {
    TensorComb d = nck_coproduct(t);
    CHECK(nck_left(d) == nck_right(d));
  }
  std::vector<TrimmedForest> small;
  for (const auto& t : trims)
    if (degree(t) <= 2) small.push_back(t);
  for (const auto& x : small)
    for (const auto& y : small)
      CHECK(nck_coproduct(concat(x, y)) == tensor_product(nck_coproduct(x), nck_coproduct(y)));
  CHECK(nck_product(LinComb(TF("a")), LinComb(TF("b"))) == LinComb(TF("a ; b")));
}

TEST_CASE("length polynomial") {
  int L = 4;
  auto A = alphabet_lengths(sig_e(), L);
  Polynomial want;
  std::vector<int> l(7);
  int n = L + 1;
  int total = n * n * n * n * n * n * n;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int& x : l) {
      x = c % n;
      c /= n;
    }
    if (l[0] < l[1] && l[0] < l[2] && l[2] < l[3] && l[2] < l[4] && l[2] < l[5])
      want.add(Word{A->letter(2, l[0]), A->letter(0, l[1]), A->letter(2, l[2]), A->letter(2, l[3]),
                    A->letter(1, l[4]), A->letter(1, l[5]), A->letter(1, l[6])},
               1);
  }
  CHECK(length_polynomial(TF("c(a,c(c,b,b)) ; b"), sig_e(), *A) == want);

  Polynomial single;
  for (int k = 0; k <= L; ++k) single.add(Word{A->letter(1, k)}, 1);
  CHECK(length_polynomial(TF("b"), sig_e(), *A) == single);
}

TEST_CASE("length polynomial does not depend on the preimage") {
  std::set<TrimmedForest> trims;
  for (const auto& f : forests_up_to(sig_e(), 4)) trims.insert(trim(f));
  for (const auto& t : trims) {
    auto A = alphabet_lengths(sig_e(), degree(t) + 1);
    Polynomial p = length_polynomial(t, sig_e(), *A);
    for (const auto& f : untrim(t, sig_e())) CHECK(realize(f, *A) == p);
  }
}

TEST_CASE("charge-weighted expansion for a single generator") {
  auto A = alphabet_lengths(sig_e(), 3);
  Polynomial want;
  for (int k = 0; k <= 3; ++k) want.add(Word{A->letter(0, k)}, 1);
  CHECK(mas_lengths_expand({0}, sig_e(), *A) == want);
  CHECK_THROWS_AS(mas_lengths_expand({}, sig_e(), *A), DomainError);
}

}  // TEST_SUITE
