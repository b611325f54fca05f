#include "support.hpp"

#include <set>

using namespace nh;
using namespace nhtest;

TEST_SUITE("core") {

TEST_CASE("signature parsing and profiles") {
  Signature s = Signature::parse("# comment\na 1\n\nb 2  # trailing\nc 3\n");
  CHECK(s.size() == 3);
  CHECK(s.profile() == std::vector<int>{0, 1, 1, 1});
  CHECK(s.find("b") == 1);
  CHECK_FALSE(s.find("z").has_value());
  CHECK_THROWS_AS(Signature::parse("a"), DomainError);
  CHECK_THROWS_AS(Signature::parse("a 1 2"), DomainError);

  Signature p = Signature::from_profile({1, 0, 2});
  CHECK(p.size() == 3);
  CHECK(p.arity(0) == 0);
  CHECK(p.arity(1) == 2);
  CHECK(p.arity(2) == 2);
  CHECK(p.is_binary() == false);
  CHECK(Signature::from_profile({0, 0, 3}).is_binary());
}

TEST_CASE("term parsing") {
  Signature s = sig_e();
  CHECK(parse_term("*", s).is_leaf());
  Term t = parse_term("c(*,b(*,a(*)),b(*,*))", s);
  CHECK(t.degree() == 4);
  CHECK(t.arity() == 5);
  CHECK(to_string(t, s) == "c(*,b(*,a(*)),b(*,*))");
  CHECK_THROWS_AS(parse_term("b(a(*))", s), DomainError);
  CHECK_THROWS_AS(parse_term("a(*", s), DomainError);
  CHECK_THROWS_AS(parse_term("q(*)", s), DomainError);
  CHECK_THROWS_AS(parse_term("a", s), DomainError);

  Signature nullary = Signature::from_profile({1, 1});
  Term e = parse_term("b(a)", nullary);
  CHECK(e.degree() == 2);
  CHECK(e.arity() == 0);
  CHECK(to_string(e, nullary) == "b(a)");
}

TEST_CASE("forest statistics") {
  CHECK(degree(Forest{}) == 0);
  CHECK(arity(Forest{}) == 0);
  Forest f = F("* ; c(a(*),*,b(a(*),*)) ; * ; * ; b(*,b(a(*),*))");
  CHECK(degree(f) == 7);
  CHECK(arity(f) == 10);
  CHECK(to_string(f, sig_e()) == "* ; c(a(*),*,b(a(*),*)) ; * ; * ; b(*,b(a(*),*))");
  CHECK(depth(F("a(a(*)) ; b(*,*)")) == 2);
}

TEST_CASE("node table of the seven-node forest") {
  Forest f = F("* ; c(a(*),*,b(a(*),*)) ; * ; * ; b(*,b(a(*),*))");
  NodeTable nt(f);
  REQUIRE(nt.size() == 7);
  CHECK(nt[1].gen == 2);
  CHECK(nt[3].gen == 1);
  CHECK((nt[2].parent == 1 && nt[2].child_index == 1));
  CHECK((nt[3].parent == 1 && nt[3].child_index == 3));
  CHECK((nt[6].parent == 5 && nt[6].child_index == 2));
  CHECK(nt[1].position.empty());
  CHECK(nt[5].position.empty());
  CHECK(nt[4].position == std::vector<int>{3, 1});
  CHECK(nt[7].position == std::vector<int>{2, 1});
  CHECK(nt[4].height == 2);
}

TEST_CASE("positions of the eight-node forest") {
  Forest f = F("b(c(*,*,a(*)),a(b(*,*))) ; c(*,a(*),b(*,*))");
  NodeTable nt(f);
  std::vector<std::vector<int>> want{{}, {1}, {1, 3}, {2}, {2, 1}, {}, {2}, {3}};
  REQUIRE(nt.size() == 8);
  for (int i = 1; i <= 8; ++i) CHECK(nt[i].position == want[i - 1]);
  Term single = Tm("a(*)");
  NodeTable one(Forest{single});
  CHECK(one.size() == 1);
  CHECK(one[1].height == 0);
  CHECK(one[1].position.empty());
}

TEST_CASE("full and partial composition") {
  Signature s = sig_e();
  Term t = Tm("c(*,b(*,a(*)),b(*,*))");
  CHECK(compose(Term::leaf(), {t}) == t);
  CHECK(compose(Tm("b(*,*)"), {Tm("a(*)"), Term::leaf()}) == Tm("b(a(*),*)"));
  CHECK(compose(t, std::vector<Term>(5, Term::leaf())) == t);
  CHECK_THROWS_AS(compose(Tm("b(*,*)"), {Term::leaf()}), DomainError);

  CHECK(partial_compose(Tm("a(*)"), 1, Tm("a(*)")) == Tm("a(a(*))"));
  CHECK(partial_compose(Tm("b(*,*)"), 2, Tm("c(*,*,*)")) == Tm("b(*,c(*,*,*))"));
  CHECK(partial_compose(Tm("b(a(*),c(*,*,*))"), 2, Tm("b(*,c(*,*,*))")) == Tm("b(a(*),c(b(*,c(*,*,*)),*,*))"));
  CHECK_THROWS_AS(partial_compose(Tm("a(*)"), 2, Tm("a(*)")), DomainError);
  (void)s;
}

TEST_CASE("reduction") {
  Term t = Tm("a(*)");
  CHECK(reduce(Forest{Term::leaf(), t, Term::leaf()}) == Forest{t});
  Forest r = F("a(*) ; b(*,*)");
  CHECK(reduce(r) == r);
  CHECK(is_reduced(r));
  CHECK(reduce(F("* ; *")).empty());
  CHECK_FALSE(is_reduced(F("* ; a(*)")));
}

TEST_CASE("restriction") {
  Forest f = F("b(a(*),c(*,b(*,*),*)) ; a(c(*,*,b(*,*)))");
  CHECK(restrict(f, {}).empty());
  CHECK(restrict(f, {1, 2, 4, 7}) == F("b(a(*),*) ; b(*,*) ; b(*,*)"));
  CHECK(restrict(f, {1, 2, 3, 4, 5, 6, 7}) == reduce(f));
  CHECK(restrict(f, {3, 4}) == F("c(*,b(*,*),*)"));
}

TEST_CASE("admissible pairs") {
  Forest f = F("b(a(*),c(*,b(*,*),*)) ; a(c(*,*,b(*,*)))");
  CHECK_FALSE(is_admissible(f, {1, 2, 4, 7}));
  CHECK(is_admissible(f, {1, 3, 5}));
  auto pairs = admissible_pairs(f);
  bool found = false;
  for (const auto& p : pairs)
    if (p.upper == std::vector<int>{1, 3, 5}) {
      found = true;
      CHECK(p.lower == std::vector<int>{2, 4, 6, 7});
    }
  CHECK(found);

  auto single = admissible_pairs(F("a(*)"));
  REQUIRE(single.size() == 2);
  CHECK((single[0].upper.empty() && single[0].lower == std::vector<int>{1}));
  CHECK((single[1].upper == std::vector<int>{1} && single[1].lower.empty()));
}

TEST_CASE("admissible pairs are exactly the ancestor-closed subsets") {
  // Oracle: walk parent links for every subset.
  for (const auto& f : forests_up_to(sig_e(), 4)) {
    NodeTable nt(f);
    int n = nt.size();
    std::set<std::vector<int>> expected;
    for (int mask = 0; mask < (1 << n); ++mask) {
      bool closed = true;
      std::vector<int> upper;
      for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1) {
          upper.push_back(i);
          if (nt[i].parent && !(mask >> (nt[i].parent - 1) & 1)) closed = false;
        }
      if (closed) expected.insert(upper);
    }
    std::set<std::vector<int>> got;
    for (const auto& p : admissible_pairs(f)) {
      got.insert(p.upper);
      CHECK(p.upper.size() + p.lower.size() == static_cast<std::size_t>(n));
    }
    CHECK(got == expected);
  }
}

TEST_CASE("restriction keeps decorations in preorder") {
  for (const auto& f : forests_up_to(sig_e(), 3)) {
    NodeTable nt(f);
    int n = nt.size();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> keep, gens;
      for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1) {
          keep.push_back(i);
          gens.push_back(nt[i].gen);
        }
      Forest r = restrict(f, keep);
      CHECK(is_reduced(r));
      NodeTable rt(r);
      REQUIRE(rt.size() == static_cast<int>(keep.size()));
      for (int i = 1; i <= rt.size(); ++i) CHECK(rt[i].gen == gens[i - 1]);
    }
  }
}

TEST_CASE("term enumeration") {
  auto zero = enumerate_terms(sig_e(), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_leaf());
  CHECK(enumerate_terms(Signature::from_profile({0, 0, 1}), 3).size() == 5);
  auto one = enumerate_terms(sig_e(), 1);
  REQUIRE(one.size() == 3);
  std::set<std::string> names;
  for (const auto& t : one) names.insert(to_string(t, sig_e()));
  CHECK(names == std::set<std::string>{"a(*)", "b(*,*)", "c(*,*,*)"});
  for (int d = 0; d <= 4; ++d) {
    auto ts = enumerate_terms(sig_e(), d);
    CHECK(std::set<Term>(ts.begin(), ts.end()).size() == ts.size());
    for (const auto& t : ts) CHECK(t.degree() == d);
  }
}

TEST_CASE("forest enumeration agrees with the dimension recurrence") {
  for (auto profile : {std::vector<int>{0, 1, 1, 1}, std::vector<int>{1, 1}, std::vector<int>{0, 0, 2}}) {
    Signature s = Signature::from_profile(profile);
    auto dims = hilbert_dims(s, 4);
    for (int d = 0; d <= 4; ++d) {
      auto fs = enumerate_forests(s, d);
      CHECK(dims[d] == fs.size());
      for (const auto& f : fs) CHECK(is_reduced(f));
    }
  }
}

TEST_CASE("parse and print round trip") {
  for (const auto& f : forests_up_to(sig_e(), 3)) CHECK(F(to_string(f, sig_e()).c_str()) == f);
}

}  // TEST_SUITE
