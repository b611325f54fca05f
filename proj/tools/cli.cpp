#include "cli.hpp"

#include "nh/acceptance.hpp"
#include "nh/format.hpp"
#include "nh/nck.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#ifndef NHOPF_DATA_DIR
#define NHOPF_DATA_DIR "data"
#endif

namespace nh {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string sig_file;
  std::string profile;
  std::string format;
  std::vector<std::string> inputs;
  int L = -1;
  int J = -1;
  int L1 = 2;
  int L2 = 3;
  int n = 6;
  int r = 1;
  int s = 1;
  std::string engine = "admissible";
  std::string alphabet = "lengths";
  std::string kind = "mas";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) in.open(std::string(NHOPF_DATA_DIR) + "/" + path);
  if (!in) throw UsageError("cannot open signature file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_profile(const std::string& text) {
  std::vector<int> counts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      counts.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("--profile expects comma-separated non-negative integers, got '" + text + "'");
    }
  }
  return counts;
}

// Without --sig or --profile the signature is a:1, b:2, c:3.
Signature signature(const Options& o) {
  if (!o.sig_file.empty() && !o.profile.empty()) throw UsageError("--sig and --profile are mutually exclusive");
  if (!o.sig_file.empty()) return Signature::parse(read_file(o.sig_file));
  if (!o.profile.empty()) return Signature::from_profile(parse_profile(o.profile));
  return Signature({{"a", 1}, {"b", 2}, {"c", 3}});
}

bool want_json(const Options& o) {
  std::string f = o.format;
  if (f.empty()) {
    const char* env = std::getenv("NHOPF_FORMAT");
    f = env && *env ? env : "text";
  }
  if (f != "text" && f != "json") throw UsageError("output format must be text or json, got '" + f + "'");
  return f == "json";
}

void need_inputs(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    throw UsageError("expected " + std::to_string(n) + " input(s), got " + std::to_string(o.inputs.size()));
}

QuotientKind parse_kind(const std::string& k) {
  if (k == "mas") return QuotientKind::MAs;
  if (k == "int") return QuotientKind::Int;
  if (k == "as") return QuotientKind::As;
  throw UsageError("--kind must be mas, int or as");
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void run(const std::string& verb) {
    static const std::map<std::string, void (Runner::*)()> verbs{
        {"stats", &Runner::stats},
        {"product", &Runner::product_verb},
        {"coproduct", &Runner::coproduct_verb},
        {"antipode", &Runner::antipode_verb},
        {"hilbert", &Runner::hilbert},
        {"classify", &Runner::classify},
        {"realize", &Runner::realize_verb},
        {"theta-check", &Runner::theta_check},
        {"pos", &Runner::pos},
        {"decompose-wqsym", &Runner::decompose},
        {"trim", &Runner::trim_verb},
        {"charge", &Runner::charge_verb},
        {"untrim", &Runner::untrim_verb},
        {"nck-coproduct", &Runner::nck_verb},
        {"length-poly", &Runner::length_poly},
        {"phi", &Runner::phi},
        {"mas-coproduct", &Runner::mas},
        {"fdb-coproduct", &Runner::fdb},
        {"phr-coproduct", &Runner::phr},
        {"self-test", &Runner::self_test},
    };
    json_ = want_json(o_);
    if (verb != "fdb-coproduct" && verb != "self-test") sig_ = signature(o_);
    (this->*verbs.at(verb))();
  }

  int status = 0;

 private:
  const Options& o_;
  std::ostream& out_;
  Signature sig_;
  bool json_ = false;

  void emit(const std::string& text, const json& j) {
    if (json_)
      out_ << j.dump(2) << "\n";
    else
      out_ << text;
  }

  Forest forest(std::size_t i) const { return parse_forest(o_.inputs.at(i), sig_); }
  TrimmedForest trimmed(std::size_t i) const { return parse_forest(o_.inputs.at(i), sig_, ParseMode::Trimmed); }
  int L_for(const Forest& f) const { return o_.L >= 0 ? o_.L : degree(f) + 2; }
  int J() const { return o_.J >= 0 ? o_.J : sig_.max_arity(); }

  void emit_lincomb(const LinComb& x) { emit(lincomb_text(x, sig_), lincomb_json(x, sig_)); }
  void emit_tensor(const TensorComb& x) { emit(tensor_text(x, sig_), tensor_json(x, sig_)); }
  void emit_poly(const Polynomial& p, const ForestLikeAlphabet& A) {
    emit(polynomial_text(p, A), polynomial_json(p, A));
  }
  void emit_phrases(const PhraseTensor& x, const PhrasePrinter& print) {
    emit(phrase_tensor_text(x, print), phrase_tensor_json(x, print));
  }

  void stats() {
    need_inputs(o_, 1);
    Forest f = forest(0);
    std::string text = "degree=" + std::to_string(degree(f)) + " arity=" + std::to_string(arity(f)) + "\n";
    emit(text, {{"degree", degree(f)}, {"arity", arity(f)}, {"depth", depth(f)}, {"reduced", is_reduced(f)}});
  }

  void product_verb() {
    need_inputs(o_, 2);
    emit_lincomb(product(LinComb(forest(0)), LinComb(forest(1))));
  }

  void coproduct_verb() {
    need_inputs(o_, 1);
    Forest f = forest(0);
    if (o_.engine == "admissible") return emit_tensor(coproduct(f));
    if (o_.engine != "factorizations") throw UsageError("--engine must be admissible or factorizations");
    if (f.size() != 1 || f[0].is_leaf()) throw DomainError("the factorization engine takes a single non-leaf term");
    emit_tensor(coproduct_via_factorizations(f[0]));
  }

  void antipode_verb() {
    need_inputs(o_, 1);
    emit_lincomb(antipode(LinComb(forest(0))));
  }

  void hilbert() {
    need_inputs(o_, 0);
    if (o_.n < 0) throw UsageError("--n must be non-negative");
    auto dims = hilbert_dims(sig_, o_.n);
    std::string text;
    json j = json::array();
    for (std::size_t k = 0; k < dims.size(); ++k) {
      text += (k ? " " : "") + dims[k].str();
      j.push_back(coeff_json(dims[k]));
    }
    emit(text + "\n", j);
  }

  void classify() {
    need_inputs(o_, 0);
    Classification c = classify_profile(sig_);
    auto yn = [](bool b) { return std::string(b ? "true" : "false"); };
    emit("commutative=" + yn(c.commutative) + " cocommutative=" + yn(c.cocommutative) + "\n",
         {{"commutative", c.commutative}, {"cocommutative", c.cocommutative}});
  }

  void realize_verb() {
    need_inputs(o_, 1);
    Forest f = forest(0);
    if (o_.alphabet == "lengths") {
      auto A = alphabet_lengths(sig_, L_for(f));
      return emit_poly(realize(f, *A), *A);
    }
    if (o_.alphabet != "positions") throw UsageError("--alphabet must be positions or lengths");
    auto A = alphabet_positions(sig_, L_for(f), J());
    emit_poly(realize(f, *A), *A);
  }

  void theta_check() {
    need_inputs(o_, 1);
    Forest f = forest(0);
    auto a1 = alphabet_lengths(sig_, o_.L1);
    auto a2 = alphabet_lengths(sig_, o_.L2);
    auto sum = disjoint_sum(a1, a2);
    PolyTensor lhs = theta_split(realize(f, *sum), *sum);
    bool equal = lhs == realize_tensor(coproduct(f), *a1, *a2);
    emit(std::string(equal ? "equal" : "different") + " terms=" + std::to_string(lhs.size()) + "\n",
         {{"equal", equal}, {"terms", lhs.size()}});
    if (!equal) status = 1;
  }

  void pos() {
    need_inputs(o_, 1);
    Forest f = forest(0);
    auto A = alphabet_positions(sig_, o_.L >= 0 ? o_.L : depth(f) + degree(f), J());
    Word w = pos_word(f, *A);
    json letters = json::array();
    for (Letter l : w) letters.push_back(A->letter_name(l));
    emit(word_to_string(w, *A) + "\n", {{"word", letters}, {"weight", weight(w, *A)}});
  }

  void decompose() {
    need_inputs(o_, 1);
    WQSymComb x = wqsym_decompose(forest(0), sig_);
    emit(wqsym_text(x, sig_), wqsym_json(x, sig_));
  }

  void trim_verb() {
    need_inputs(o_, 1);
    std::string t = to_string(trim(forest(0)), sig_);
    emit(t + "\n", {{"trimmed", t}});
  }

  void charge_verb() {
    need_inputs(o_, 1);
    Int c = charge(trimmed(0), sig_);
    emit(c.str() + "\n", {{"charge", coeff_json(c)}});
  }

  void untrim_verb() {
    need_inputs(o_, 1);
    LinComb x;
    for (auto& f : untrim(trimmed(0), sig_)) x.add(std::move(f), 1);
    emit_lincomb(x);
  }

  void nck_verb() {
    need_inputs(o_, 1);
    emit_tensor(nck_coproduct(trimmed(0)));
  }

  void length_poly() {
    need_inputs(o_, 1);
    TrimmedForest t = trimmed(0);
    auto A = alphabet_lengths(sig_, L_for(t));
    emit_poly(length_polynomial(t, sig_, *A), *A);
  }

  void phi() {
    need_inputs(o_, 1);
    QuotientKind kind = parse_kind(o_.kind);
    emit_lincomb(phi_expand(parse_phrase(o_.inputs[0], kind, sig_), kind, sig_));
  }

  void mas() {
    need_inputs(o_, 1);
    Phrase x = parse_phrase(o_.inputs[0], QuotientKind::MAs, sig_);
    emit_phrases(mas_coproduct(x, sig_), [&](const Phrase& p) { return phrase_to_string(p, QuotientKind::MAs, sig_); });
  }

  void fdb() {
    need_inputs(o_, 1);
    if (o_.r < 0 || o_.s < 1) throw UsageError("--r must be non-negative and --s positive");
    int s = o_.s;
    emit_phrases(fdb_coproduct(o_.r, s, parse_fdb_phrase(o_.inputs[0], s)),
                 [s](const Phrase& p) { return fdb_phrase_to_string(p, s); });
  }

  void phr() {
    need_inputs(o_, 1);
    Phrase x = parse_phrase(o_.inputs[0], QuotientKind::Int, sig_);
    emit_phrases(phr_coproduct(x), [&](const Phrase& p) { return phrase_to_string(p, QuotientKind::Int, sig_); });
  }

  void self_test() {
    need_inputs(o_, 0);
    std::string text;
    json j = json::array();
    int failed = 0;
    for (const auto& r : run_acceptance()) {
      text += format_result(r) + "\n";
      j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      if (!r.pass) ++failed;
    }
    text += std::to_string(acceptance_count() - failed) + "/" + std::to_string(acceptance_count()) +
            " criteria passed\n";
    emit(text, j);
    if (failed) status = 1;
  }
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--sig", o.sig_file, "Signature file with 'name arity' lines");
  sub->add_option("--profile", o.profile, "Signature by profile, e.g. 0,2 for two binary generators");
  sub->add_option("--format", o.format, "text or json (default: $NHOPF_FORMAT, else text)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free operad Hopf algebras, alphabet realizations and their quotients", "nhopf"};
  app.require_subcommand(1);
  Options o;

  struct VerbSpec {
    const char* name;
    const char* help;
    const char* inputs;
  };
  const std::vector<VerbSpec> specs{
      {"stats", "Degree and arity of a forest", "FOREST"},
      {"product", "Product of two forests", "FOREST FOREST"},
      {"coproduct", "Coproduct of a forest", "FOREST"},
      {"antipode", "Antipode of a forest", "FOREST"},
      {"hilbert", "Graded dimensions up to --n", ""},
      {"classify", "Commutativity and cocommutativity of the signature", ""},
      {"realize", "Polynomial realization over an alphabet", "FOREST"},
      {"theta-check", "Compare the doubled-alphabet realization with the realized coproduct", "FOREST"},
      {"pos", "Position word of a forest", "FOREST"},
      {"decompose-wqsym", "Decomposition on the monomial basis of WQSym", "FOREST"},
      {"trim", "Trimmed forest", "FOREST"},
      {"charge", "Number of forests with the given trim", "TRIMMED"},
      {"untrim", "All forests with the given trim", "TRIMMED"},
      {"nck-coproduct", "Coproduct of a trimmed forest", "TRIMMED"},
      {"length-poly", "Length polynomial of a trimmed forest", "TRIMMED"},
      {"phi", "Sum of the forests in a quotient class (--kind mas|int|as)", "PHRASE"},
      {"mas-coproduct", "Coproduct in the multiassociative quotient", "PHRASE"},
      {"fdb-coproduct", "Deformed Faa di Bruno coproduct (--r, --s)", "PHRASE"},
      {"phr-coproduct", "Coproduct on phrases of words", "PHRASE"},
      {"self-test", "Run the acceptance suite", ""},
  };
  for (const auto& v : specs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    add_common(sub, o);
    std::string verb = v.name;
    if (*v.inputs) sub->add_option("inputs", o.inputs, v.inputs);
    if (verb == "coproduct") sub->add_option("--engine", o.engine, "admissible or factorizations");
    if (verb == "hilbert") sub->add_option("--n", o.n, "Largest degree")->capture_default_str();
    if (verb == "realize") sub->add_option("--alphabet", o.alphabet, "positions or lengths")->capture_default_str();
    if (verb == "realize" || verb == "pos" || verb == "length-poly")
      sub->add_option("--L", o.L, "Truncation (default: degree + 2; for pos, depth + degree)");
    if (verb == "realize" || verb == "pos") sub->add_option("--J", o.J, "Largest child index (default: max arity)");
    if (verb == "theta-check") {
      sub->add_option("--L1", o.L1, "Truncation of the first lengths alphabet")->capture_default_str();
      sub->add_option("--L2", o.L2, "Truncation of the second lengths alphabet")->capture_default_str();
    }
    if (verb == "phi") sub->add_option("--kind", o.kind, "mas, int or as")->capture_default_str();
    if (verb == "fdb-coproduct") {
      sub->add_option("--r", o.r, "Arity increment per generator")->capture_default_str();
      sub->add_option("--s", o.s, "Number of generators per arity")->capture_default_str();
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  try {
    Runner runner(o, out);
    runner.run(verb);
    return runner.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nh
