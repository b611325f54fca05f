#include "nh/format.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <tuple>

namespace nh {

json coeff_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Int coeff_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw DomainError("coefficient must be an integer or a decimal string");
}

namespace {

std::string coeff_str(const Int& c) { return c.str(); }

template <class Row>
std::string join_lines(const std::vector<Row>& rows, const std::function<std::string(const Row&)>& line) {
  if (rows.empty()) return "0\n";
  std::string s;
  for (const auto& r : rows) s += line(r) + "\n";
  return s;
}

json expect_array(const json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array");
  return j;
}

struct ForestRow {
  int deg;
  std::string text;
  Int c;
};

std::vector<ForestRow> forest_rows(const LinComb& x, const Signature& sig) {
  std::vector<ForestRow> rows;
  for (const auto& [f, c] : x) rows.push_back({degree(f), to_string(f, sig), c});
  std::sort(rows.begin(), rows.end(),
            [](const ForestRow& a, const ForestRow& b) { return std::tie(a.deg, a.text) < std::tie(b.deg, b.text); });
  return rows;
}

struct PairRow {
  int d1;
  std::string t1;
  int d2;
  std::string t2;
  Int c;
};

std::vector<PairRow> pair_rows(const TensorComb& x, const Signature& sig) {
  std::vector<PairRow> rows;
  for (const auto& [k, c] : x)
    rows.push_back({degree(k.first), to_string(k.first, sig), degree(k.second), to_string(k.second, sig), c});
  std::sort(rows.begin(), rows.end(), [](const PairRow& a, const PairRow& b) {
    return std::tie(a.d1, a.t1, a.d2, a.t2) < std::tie(b.d1, b.t1, b.d2, b.t2);
  });
  return rows;
}

int phrase_degree(const Phrase& x) {
  int d = 0;
  for (const auto& e : x) d += static_cast<int>(e.size());
  return d;
}

std::vector<PairRow> phrase_rows(const PhraseTensor& x, const PhrasePrinter& print) {
  std::vector<PairRow> rows;
  for (const auto& [k, c] : x)
    rows.push_back({phrase_degree(k.first), print(k.first), phrase_degree(k.second), print(k.second), c});
  std::sort(rows.begin(), rows.end(), [](const PairRow& a, const PairRow& b) {
    return std::tie(a.d1, a.t1, a.d2, a.t2) < std::tie(b.d1, b.t1, b.d2, b.t2);
  });
  return rows;
}

std::vector<std::pair<Word, Int>> word_rows(const Polynomial& p) {
  std::vector<std::pair<Word, Int>> rows(p.begin(), p.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  return rows;
}

}  // namespace

std::string lincomb_text(const LinComb& x, const Signature& sig) {
  return join_lines<ForestRow>(forest_rows(x, sig),
                               [](const ForestRow& r) { return coeff_str(r.c) + " * [" + r.text + "]"; });
}

json lincomb_json(const LinComb& x, const Signature& sig) {
  json a = json::array();
  for (const auto& r : forest_rows(x, sig)) a.push_back({{"forest", r.text}, {"coeff", coeff_json(r.c)}});
  return a;
}

LinComb lincomb_from_json(const json& j, const Signature& sig, ParseMode mode) {
  LinComb x;
  for (const auto& e : expect_array(j))
    x.add(parse_forest(e.at("forest").get<std::string>(), sig, mode), coeff_from_json(e.at("coeff")));
  return x;
}

std::string tensor_text(const TensorComb& x, const Signature& sig) {
  return join_lines<PairRow>(pair_rows(x, sig), [](const PairRow& r) {
    return coeff_str(r.c) + " * [" + r.t1 + "] (x) [" + r.t2 + "]";
  });
}

json tensor_json(const TensorComb& x, const Signature& sig) {
  json a = json::array();
  for (const auto& r : pair_rows(x, sig))
    a.push_back({{"left", r.t1}, {"right", r.t2}, {"coeff", coeff_json(r.c)}});
  return a;
}

TensorComb tensor_from_json(const json& j, const Signature& sig, ParseMode mode) {
  TensorComb x;
  for (const auto& e : expect_array(j))
    x.add({parse_forest(e.at("left").get<std::string>(), sig, mode),
           parse_forest(e.at("right").get<std::string>(), sig, mode)},
          coeff_from_json(e.at("coeff")));
  return x;
}

std::string polynomial_text(const Polynomial& p, const ForestLikeAlphabet& A) {
  return join_lines<std::pair<Word, Int>>(word_rows(p), [&](const std::pair<Word, Int>& r) {
    return coeff_str(r.second) + " * [" + word_to_string(r.first, A) + "]";
  });
}

json polynomial_json(const Polynomial& p, const ForestLikeAlphabet& A) {
  json a = json::array();
  for (const auto& [w, c] : word_rows(p)) {
    json letters = json::array();
    for (Letter l : w) letters.push_back(A.letter_name(l));
    a.push_back({{"word", letters}, {"coeff", coeff_json(c)}});
  }
  return a;
}

Polynomial polynomial_from_json(const json& j, const ForestLikeAlphabet& A) {
  Polynomial p;
  for (const auto& e : expect_array(j)) {
    Word w;
    for (const auto& l : e.at("word")) {
      auto id = A.find_letter(l.get<std::string>());
      if (!id) throw DomainError("unknown letter '" + l.get<std::string>() + "'");
      w.push_back(*id);
    }
    p.add(std::move(w), coeff_from_json(e.at("coeff")));
  }
  return p;
}

std::string phrase_tensor_text(const PhraseTensor& x, const PhrasePrinter& print) {
  return join_lines<PairRow>(phrase_rows(x, print), [](const PairRow& r) {
    return coeff_str(r.c) + " * [" + r.t1 + "] (x) [" + r.t2 + "]";
  });
}

json phrase_tensor_json(const PhraseTensor& x, const PhrasePrinter& print) {
  json a = json::array();
  for (const auto& r : phrase_rows(x, print))
    a.push_back({{"left", r.t1}, {"right", r.t2}, {"coeff", coeff_json(r.c)}});
  return a;
}

PhraseTensor phrase_tensor_from_json(const json& j, const PhraseParser& parse) {
  PhraseTensor x;
  for (const auto& e : expect_array(j))
    x.add({parse(e.at("left").get<std::string>()), parse(e.at("right").get<std::string>())},
          coeff_from_json(e.at("coeff")));
  return x;
}

std::string wqsym_text(const WQSymComb& x, const Signature& sig) {
  std::vector<std::pair<std::string, Int>> rows;
  for (const auto& [u, c] : x) rows.emplace_back(decorated_word_to_string(u, sig), c);
  return join_lines<std::pair<std::string, Int>>(rows, [](const std::pair<std::string, Int>& r) {
    return coeff_str(r.second) + " * M[" + r.first + "]";
  });
}

json wqsym_json(const WQSymComb& x, const Signature& sig) {
  json a = json::array();
  for (const auto& [u, c] : x) a.push_back({{"packed_word", decorated_word_to_string(u, sig)}, {"coeff", coeff_json(c)}});
  return a;
}

WQSymComb wqsym_from_json(const json& j, const Signature& sig) {
  WQSymComb x;
  for (const auto& e : expect_array(j))
    x.add(parse_decorated_word(e.at("packed_word").get<std::string>(), sig), coeff_from_json(e.at("coeff")));
  return x;
}

}  // namespace nh
