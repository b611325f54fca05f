#pragma once

#include "nh/combination.hpp"
#include "nh/core.hpp"
#include "nh/hopf.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nh {

using Letter = int;
using Word = std::vector<Letter>;
using Polynomial = Combination<Word>;
using WordPair = std::pair<Word, Word>;
using PolyTensor = Combination<WordPair>;

// Letters are ids 0..size()-1. Edge child indices run from 1.
class ForestLikeAlphabet {
 public:
  virtual ~ForestLikeAlphabet() = default;

  virtual int size() const = 0;
  virtual std::string letter_name(Letter a) const = 0;
  virtual std::optional<Letter> find_letter(std::string_view name) const;

  virtual bool is_root(Letter a) const = 0;
  virtual bool in_dec(int gen, Letter a) const = 0;
  virtual bool has_edge(int j, Letter a, Letter b) const = 0;

  // Roots lying in the decoration set of gen.
  virtual std::vector<Letter> root_candidates(int gen) const;
  // Letters b with a ->_j b lying in the decoration set of gen.
  virtual std::vector<Letter> child_candidates(int j, Letter a, int gen) const;
};

using AlphabetPtr = std::shared_ptr<const ForestLikeAlphabet>;

// Explicit finite alphabet.
class TableAlphabet : public ForestLikeAlphabet {
 public:
  TableAlphabet(std::vector<std::string> names, int num_gens, int max_child);

  void set_root(Letter a, bool v = true);
  void set_dec(int gen, Letter a, bool v = true);
  void set_edge(int j, Letter a, Letter b, bool v = true);

  int size() const override { return static_cast<int>(names_.size()); }
  std::string letter_name(Letter a) const override { return names_.at(a); }
  bool is_root(Letter a) const override { return root_.at(a); }
  bool in_dec(int gen, Letter a) const override;
  bool has_edge(int j, Letter a, Letter b) const override;
  int num_gens() const { return num_gens_; }
  int max_child() const { return max_child_; }

 private:
  std::vector<std::string> names_;
  int num_gens_;
  int max_child_;
  std::vector<char> root_;
  std::vector<std::vector<char>> dec_;   // [gen][letter]
  std::vector<std::vector<char>> edge_;  // [j-1][a * size + b]
};

// Truncated alphabet of positions: letters a^s_u with |u| <= L and entries in 0..J.
class PositionAlphabet : public ForestLikeAlphabet {
 public:
  PositionAlphabet(Signature sig, int L, int J);

  int size() const override { return sig_.size() * num_labels_; }
  std::string letter_name(Letter a) const override;
  std::optional<Letter> find_letter(std::string_view name) const override;
  bool is_root(Letter a) const override;
  bool in_dec(int gen, Letter a) const override { return gen_of(a) == gen; }
  bool has_edge(int j, Letter a, Letter b) const override;
  std::vector<Letter> root_candidates(int gen) const override;
  std::vector<Letter> child_candidates(int j, Letter a, int gen) const override;

  int L() const { return L_; }
  int J() const { return J_; }
  const Signature& signature() const { return sig_; }
  int gen_of(Letter a) const { return a / num_labels_; }
  std::vector<int> label_of(Letter a) const;
  std::optional<Letter> letter(int gen, const std::vector<int>& label) const;

 private:
  Signature sig_;
  int L_, J_;
  int num_labels_;
  std::vector<long> offset_;  // offset_[k] = number of labels shorter than k
};

// Truncated alphabet of lengths: letters a^s_l with 0 <= l <= L.
class LengthAlphabet : public ForestLikeAlphabet {
 public:
  LengthAlphabet(Signature sig, int L);

  int size() const override { return sig_.size() * (L_ + 1); }
  std::string letter_name(Letter a) const override;
  std::optional<Letter> find_letter(std::string_view name) const override;
  bool is_root(Letter) const override { return true; }
  bool in_dec(int gen, Letter a) const override { return gen_of(a) == gen; }
  bool has_edge(int j, Letter a, Letter b) const override;
  std::vector<Letter> root_candidates(int gen) const override;
  std::vector<Letter> child_candidates(int j, Letter a, int gen) const override;

  int L() const { return L_; }
  const Signature& signature() const { return sig_; }
  int gen_of(Letter a) const { return a / (L_ + 1); }
  int length_of(Letter a) const { return a % (L_ + 1); }
  Letter letter(int gen, int length) const;

 private:
  Signature sig_;
  int L_;
};

// Tagged union A1 ++ A2: ids of A2 are shifted by |A1|.
class SumAlphabet : public ForestLikeAlphabet {
 public:
  SumAlphabet(AlphabetPtr a1, AlphabetPtr a2);

  int size() const override { return n1_ + a2_->size(); }
  std::string letter_name(Letter a) const override;
  std::optional<Letter> find_letter(std::string_view name) const override;
  bool is_root(Letter a) const override;
  bool in_dec(int gen, Letter a) const override;
  bool has_edge(int j, Letter a, Letter b) const override;
  std::vector<Letter> root_candidates(int gen) const override;
  std::vector<Letter> child_candidates(int j, Letter a, int gen) const override;

  const ForestLikeAlphabet& first() const { return *a1_; }
  const ForestLikeAlphabet& second() const { return *a2_; }
  // 1 or 2, and the id inside that component.
  std::pair<int, Letter> component(Letter a) const;

 private:
  AlphabetPtr a1_, a2_;
  int n1_;
};

std::shared_ptr<PositionAlphabet> alphabet_positions(const Signature& sig, int L, int J);
std::shared_ptr<LengthAlphabet> alphabet_lengths(const Signature& sig, int L);
std::shared_ptr<SumAlphabet> disjoint_sum(AlphabetPtr a1, AlphabetPtr a2);
std::shared_ptr<TableAlphabet> empty_alphabet(int num_gens, int max_child);

bool compatible(const Word& w, const Forest& f, const ForestLikeAlphabet& A);

// Sum of the A-compatible words of f.
Polynomial realize(const Forest& f, const ForestLikeAlphabet& A);
Polynomial realize(const LinComb& x, const ForestLikeAlphabet& A);
// realize (x) realize on each leg.
PolyTensor realize_tensor(const TensorComb& x, const ForestLikeAlphabet& A1, const ForestLikeAlphabet& A2);

PolyTensor theta_split(const Polynomial& p, const SumAlphabet& A);

Polynomial project_lengths(const Polynomial& p, const PositionAlphabet& Ap, const LengthAlphabet& Al);

struct PositionLetter {
  int gen;
  std::vector<int> label;
  auto operator<=>(const PositionLetter&) const = default;
};

std::vector<PositionLetter> pos_letters(const Forest& f);
Word pos_word(const Forest& f, const PositionAlphabet& A);
int weight(const Word& w, const PositionAlphabet& A);
Forest leading_forest(const Polynomial& p, const PositionAlphabet& A);

std::string word_to_string(const Word& w, const ForestLikeAlphabet& A);
// Letter names separated by blanks; "" is the empty word.
Word parse_word(std::string_view text, const ForestLikeAlphabet& A);

}  // namespace nh
