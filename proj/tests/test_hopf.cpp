#include "support.hpp"

#include <map>

using namespace nh;
using namespace nhtest;

namespace {

LinComb E(const char* s, const Signature& sig = sig_e()) { return LinComb(F(s, sig)); }

TensorComb EE(const char* l, const char* r, const Signature& sig = sig_e()) {
  return TensorComb(ForestPair{F(l, sig), F(r, sig)});
}

}  // namespace

TEST_SUITE("hopf") {

TEST_CASE("product") {
  CHECK(product(E(""), E("a(*)")) == E("a(*)"));
  CHECK(product(E("a(b(*,*)) ; c(a(*),*,*)"), E("b(a(*),*)")) == E("a(b(*,*)) ; c(a(*),*,*) ; b(a(*),*)"));
  LinComb x = E("a(*)") + E("b(*,*)") * Int(2);
  CHECK(product(x, E("c(*,*,*)")) == E("a(*) ; c(*,*,*)") + E("b(*,*) ; c(*,*,*)") * Int(2));
  // leaves vanish in the reduced basis
  CHECK(basis(F("* ; a(*) ; *")) == E("a(*)"));
}

TEST_CASE("coproduct of the two-tree forest") {
  TensorComb want = EE("", "c(*,a(*),*) ; b(*,*)") + EE("c(*,*,*)", "a(*) ; b(*,*)") +
                    EE("b(*,*)", "c(*,a(*),*)") + EE("c(*,a(*),*)", "b(*,*)") +
                    EE("c(*,*,*) ; b(*,*)", "a(*)") + EE("c(*,a(*),*) ; b(*,*)", "");
  TensorComb got = coproduct(F("c(*,a(*),*) ; b(*,*)"));
  CHECK(got.size() == 6);
  CHECK(got == want);
}

TEST_CASE("coproduct basics") {
  CHECK(coproduct(Forest{}) == EE("", ""));
  CHECK(coproduct(F("a(*)")) == EE("", "a(*)") + EE("a(*)", ""));
  CHECK(coproduct_via_factorizations(Term::leaf()) == EE("", ""));
  CHECK(coproduct_via_factorizations(Tm("a(a(*))")) ==
        EE("", "a(a(*))") + EE("a(*)", "a(*)") + EE("a(a(*))", ""));
  CHECK(coproduct(E("a(*)") * Int(3)) == (EE("", "a(*)") + EE("a(*)", "")) * Int(3));
}

TEST_CASE("counit") {
  CHECK(counit(E("")) == 1);
  CHECK(counit(E("a(*)")) == 0);
  CHECK(counit(E("") * Int(3) + E("b(*,*)")) == 3);
}

TEST_CASE("antipode") {
  CHECK(antipode(E("")) == E(""));
  CHECK(antipode(E("a(*)")) == E("a(*)") * Int(-1));
  // S(a(a(*))) = -a(a) + a.a
  CHECK(antipode(E("a(a(*))")) == E("a(*) ; a(*)") - E("a(a(*))"));
}

TEST_CASE("antipode is an antimorphism") {
  auto fs = forests_up_to(sig_e(), 2);
  for (const auto& f : fs)
    for (const auto& g : fs)
      if (degree(f) + degree(g) <= 3)
        CHECK(antipode(LinComb(concat(f, g))) == product(antipode(LinComb(g)), antipode(LinComb(f))));
}

TEST_CASE("antipode is an involution in the cocommutative case") {
  Signature s = Signature::from_profile({0, 1});
  for (const auto& f : forests_up_to(s, 4)) CHECK(antipode(antipode(LinComb(f))) == LinComb(f));
}

TEST_CASE("counit and coproduct") {
  for (const auto& f : forests_up_to(sig_e(), 3)) {
    LinComb left, right;
    for (const auto& [k, c] : coproduct(f)) {
      left.add(LinComb(k.second), c * counit(LinComb(k.first)));
      right.add(LinComb(k.first), c * counit(LinComb(k.second)));
    }
    CHECK(left == LinComb(f));
    CHECK(right == LinComb(f));
  }
}

TEST_CASE("coproduct term count is the number of admissible pairs") {
  for (const auto& f : forests_up_to(sig_e(), 3)) {
    Int total = 0;
    for (const auto& [k, c] : coproduct(f)) total += c;
    CHECK(total == admissible_pairs(f).size());
  }
}

TEST_CASE("graded dimensions") {
  CHECK(hilbert_dims(Signature::from_profile({0, 2}), 4) == std::vector<Int>{1, 2, 8, 32, 128});
  CHECK(hilbert_dims(Signature::from_profile({0, 0, 1}), 4) == std::vector<Int>{1, 1, 3, 10, 35});
  CHECK(hilbert_dims(Signature::from_profile({}), 3) == std::vector<Int>{1, 0, 0, 0});
  CHECK(term_counts(Signature::from_profile({0, 0, 1}), 4) == std::vector<Int>{1, 1, 2, 5, 14});
  // dimensions grow past 64 bits without overflow
  auto big = hilbert_dims(Signature::from_profile({0, 3}), 40);
  CHECK(big[40] == pow(Int(3), 40) * pow(Int(2), 39));
}

TEST_CASE("classification") {
  auto cls = [](std::vector<int> p) { return classify_profile(Signature::from_profile(p)); };
  CHECK((cls({1}).commutative && cls({1}).cocommutative));
  CHECK((cls({}).commutative && cls({}).cocommutative));
  CHECK((!cls({0, 1}).commutative && cls({0, 1}).cocommutative));
  CHECK((!cls({3}).commutative && cls({3}).cocommutative));
  CHECK((!cls({0, 1, 1, 1}).commutative && !cls({0, 1, 1, 1}).cocommutative));
  CHECK((!cls({0, 2}).commutative && !cls({0, 2}).cocommutative));
  CHECK((!cls({1, 1}).commutative && !cls({1, 1}).cocommutative));
}

TEST_CASE("iterated coproducts agree on a sample") {
  TensorComb d = coproduct(F("b(a(*),c(*,*,*))"));
  CHECK(coproduct_left(d) == coproduct_right(d));
}

}  // TEST_SUITE
