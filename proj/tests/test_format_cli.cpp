#include "support.hpp"

#include "cli.hpp"

#include <cstdlib>
#include <sstream>

using namespace nh;
using namespace nhtest;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("format") {

TEST_CASE("coefficients in JSON") {
  CHECK(coeff_json(Int(-7)) == json(-7));
  Int big = pow(Int(10), 30);
  CHECK(coeff_json(big) == json("1000000000000000000000000000000"));
  CHECK(coeff_from_json(coeff_json(big)) == big);
  CHECK_THROWS_AS(coeff_from_json(json(1.5)), DomainError);
}

TEST_CASE("text output") {
  Signature s = sig_e();
  CHECK(lincomb_text(LinComb(), s) == "0\n");
  CHECK(lincomb_text(antipode(LinComb(F("a(a(*))"))), s) == "1 * [a(*) ; a(*)]\n-1 * [a(a(*))]\n");
  CHECK(tensor_text(coproduct(F("a(*)")), s) == "1 * [] (x) [a(*)]\n1 * [a(*)] (x) []\n");
}

TEST_CASE("JSON round trips are byte identical") {
  Signature s = sig_e();
  for (const auto& f : forests_up_to(s, 3)) {
    LinComb x = antipode(LinComb(f));
    std::string a = lincomb_json(x, s).dump(2);
    CHECK(lincomb_json(lincomb_from_json(json::parse(a), s), s).dump(2) == a);

    TensorComb d = coproduct(f);
    std::string b = tensor_json(d, s).dump(2);
    CHECK(tensor_json(tensor_from_json(json::parse(b), s), s).dump(2) == b);

    auto A = alphabet_positions(s, degree(f) + 1, 3);
    Polynomial p = realize(f, *A);
    std::string c = polynomial_json(p, *A).dump(2);
    CHECK(polynomial_json(polynomial_from_json(json::parse(c), *A), *A).dump(2) == c);

    WQSymComb w = wqsym_decompose(f, s);
    std::string e = wqsym_json(w, s).dump(2);
    CHECK(wqsym_json(wqsym_from_json(json::parse(e), s), s).dump(2) == e);
  }
  PhrasePrinter print = [&](const Phrase& x) { return phrase_to_string(x, QuotientKind::MAs, s); };
  PhraseParser parse = [&](const std::string& t) { return parse_phrase(t, QuotientKind::MAs, s); };
  PhraseTensor m = mas_coproduct(parse_phrase("{a,b,b}", QuotientKind::MAs, s), s);
  std::string text = phrase_tensor_json(m, print).dump(2);
  CHECK(phrase_tensor_json(phrase_tensor_from_json(json::parse(text), parse), print).dump(2) == text);
  CHECK(phrase_tensor_from_json(json::parse(text), parse) == m);

  LinComb huge;
  huge.add(F("a(*)"), pow(Int(2), 100));
  std::string h = lincomb_json(huge, s).dump(2);
  CHECK(lincomb_from_json(json::parse(h), s) == huge);
  CHECK(lincomb_json(lincomb_from_json(json::parse(h), s), s).dump(2) == h);
}

TEST_CASE("malformed JSON input") {
  Signature s = sig_e();
  CHECK_THROWS_AS(lincomb_from_json(json::object(), s), DomainError);
  json missing_coeff = json::array({json{{"forest", "a(*)"}}});
  CHECK_THROWS(lincomb_from_json(missing_coeff, s));
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
  auto r = cli({"stats", "--sig", "sigma_e.sig", "c(*,b(*,a(*)),b(*,*))"});
  CHECK(r.status == 0);
  CHECK(r.out == "degree=4 arity=5\n");
  r = cli({"hilbert", "--profile", "0,2", "--n", "4"});
  CHECK(r.out == "1 2 8 32 128\n");
  r = cli({"charge", "--sig", "sigma_e.sig", "c(a,c(c,b,b)) ; b ; a(b)"});
  CHECK(r.out == "3\n");
}

TEST_CASE("verbs") {
  CHECK(cli({"product", "a(*)", "b(*,*)"}).out == "1 * [a(*) ; b(*,*)]\n");
  CHECK(cli({"coproduct", "--engine", "factorizations", "a(a(*))"}).out ==
        cli({"coproduct", "a(a(*))"}).out);
  CHECK(cli({"antipode", "a(*)"}).out == "-1 * [a(*)]\n");
  CHECK(cli({"classify", "--profile", "0,1"}).out == "commutative=false cocommutative=true\n");
  CHECK(cli({"trim", "b(a(*),*) ; * ; c(*,*,b(a(*),c(*,*,*)))"}).out == "b(a) ; c(b(a,c))\n");
  CHECK(cli({"untrim", "c(a)"}).out == "1 * [c(*,*,a(*))]\n1 * [c(*,a(*),*)]\n1 * [c(a(*),*,*)]\n");
  CHECK(cli({"nck-coproduct", "c(b,a)"}).out ==
        "1 * [] (x) [c(b,a)]\n1 * [c] (x) [b ; a]\n1 * [c(a)] (x) [b]\n1 * [c(b)] (x) [a]\n1 * [c(b,a)] (x) []\n");
  CHECK(cli({"pos", "b(c(*,*,a(*)),a(b(*,*))) ; c(*,a(*),b(*,*))"}).out ==
        "a^b_[] a^c_[1] a^a_[13] a^a_[2] a^b_[21] a^c_[] a^a_[2] a^b_[3]\n");
  CHECK(cli({"decompose-wqsym", "c(a(*),*,b(*,*))"}).out ==
        "1 * M[1^c 2^a 2^b]\n1 * M[1^c 2^a 3^b]\n1 * M[1^c 3^a 2^b]\n");
  CHECK(cli({"realize", "--L", "1", "a(*)"}).out == "1 * [a^a_0]\n1 * [a^a_1]\n");
  CHECK(cli({"realize", "--profile", "0,1", "--alphabet", "positions", "--L", "1", "--J", "1", "a(*)"}).out ==
        "1 * [a^a_[]]\n1 * [a^a_[0]]\n");
  CHECK(cli({"length-poly", "--L", "1", "b"}).out == "1 * [a^b_0]\n1 * [a^b_1]\n");
  CHECK(cli({"theta-check", "c(a(*),*,b(*,*))"}).status == 0);
  CHECK(cli({"phi", "--kind", "as", "--profile", "0,0,1", "aa"}).out == "1 * [a(*,a(*,*))]\n1 * [a(a(*,*),*)]\n");
  CHECK(cli({"fdb-coproduct", "--r", "2", "3"}).out ==
        "1 * [] (x) [3]\n3 * [1] (x) [2]\n3 * [1] (x) [1, 1]\n5 * [2] (x) [1]\n1 * [3] (x) []\n");
  CHECK(cli({"phr-coproduct", "--profile", "0,0,2", "ab"}).out ==
        "1 * [] (x) [ab]\n1 * [a] (x) [b]\n1 * [b] (x) [a]\n1 * [ab] (x) []\n");
  auto mas = cli({"mas-coproduct", "{a,b,b}"});
  CHECK(mas.status == 0);
  CHECK(mas.out.find("3 * [{b,b}] (x) [{a}]\n") != std::string::npos);
}

TEST_CASE("JSON output") {
  auto r = cli({"stats", "--format", "json", "a(b(*,*))"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["degree"] == 2);
  CHECK(j["arity"] == 2);
  auto t = cli({"coproduct", "--format", "json", "a(*) ; b(*,*)"});
  CHECK(tensor_from_json(json::parse(t.out), sig_e()) == coproduct(F("a(*) ; b(*,*)")));
}

TEST_CASE("output format from the environment") {
  setenv("NHOPF_FORMAT", "json", 1);
  auto r = cli({"charge", "b(a)"});
  unsetenv("NHOPF_FORMAT");
  CHECK(json::parse(r.out)["charge"] == 2);
  CHECK(cli({"charge", "b(a)", "--format", "text"}).out == "2\n");
}

TEST_CASE("exit codes") {
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"stats"}).status == 2);
  CHECK(cli({"stats", "a(*)", "--format", "yaml"}).status == 2);
  CHECK(cli({"stats", "--profile", "x", "a(*)"}).status == 2);
  CHECK(cli({"stats", "--sig", "no-such-file.sig", "a(*)"}).status == 2);
  CHECK(cli({"coproduct", "--engine", "magic", "a(*)"}).status == 2);
  CHECK(cli({"realize", "--alphabet", "positions", "--J", "1", "c(*,*,*)"}).status == 1);
  auto bad = cli({"stats", "b(a(*))"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("error:") == 0);
  CHECK(cli({"phr-coproduct", "ab"}).status == 1);
  CHECK(cli({"charge", "a(*)"}).status == 1);
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"coproduct", "c(a(*),b(*,*),*) ; b(a(*),*)"};
  CHECK(cli(args).out == cli(args).out);
}

}  // TEST_SUITE
