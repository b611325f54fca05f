#pragma once

#include "nh/combination.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nh {

struct Generator {
  std::string name;
  int arity = 0;
};

// Ordered generator list; generator indices are positions in this list.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Generator> gens);

  // counts[k] generators of arity k, named a, b, c, ... in order.
  static Signature from_profile(const std::vector<int>& counts);
  // One "name arity" pair per line; '#' starts a comment.
  static Signature parse(std::string_view text);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& operator[](int g) const { return gens_.at(g); }
  int arity(int g) const { return gens_.at(g).arity; }
  const std::string& name(int g) const { return gens_.at(g).name; }
  std::optional<int> find(std::string_view name) const;
  int max_arity() const;
  // profile()[k] = number of generators of arity k, trailing zeros dropped.
  std::vector<int> profile() const;
  bool is_binary() const;
  bool single_char_names() const;

 private:
  std::vector<Generator> gens_;
};

// A leaf (gen < 0) or a generator node. In a full term the child count equals
// the arity; trimmed forests reuse this type with fewer children and no leaves.
struct Term {
  int gen = -1;
  std::vector<Term> children;

  static Term leaf() { return Term{}; }
  static Term node(int g, std::vector<Term> ch) { return Term{g, std::move(ch)}; }
  bool is_leaf() const { return gen < 0; }
  int degree() const;
  int arity() const;

  bool operator==(const Term& o) const;
  std::strong_ordering operator<=>(const Term& o) const;
};

using Forest = std::vector<Term>;

int degree(const Forest& f);
int arity(const Forest& f);
int depth(const Term& t);
int depth(const Forest& f);
bool is_reduced(const Forest& f);
Forest reduce(const Forest& f);

enum class ParseMode { Full, Trimmed };

Term parse_term(std::string_view text, const Signature& sig, ParseMode mode = ParseMode::Full);
Forest parse_forest(std::string_view text, const Signature& sig, ParseMode mode = ParseMode::Full);
std::string to_string(const Term& t, const Signature& sig);
std::string to_string(const Forest& f, const Signature& sig);

// Degree first, then printed text.
bool canonical_less(const Forest& a, const Forest& b, const Signature& sig);

struct NodeInfo {
  int gen = -1;
  int height = 0;
  std::vector<int> position;  // child indices from the root down
  int parent = 0;             // 0 for roots
  int child_index = 0;        // 0 for roots
  int tree = 0;               // index of the containing term
  std::vector<int> children;  // node ids of internal children, left to right
};

// Internal nodes numbered 1..Deg(f) in preorder across the whole forest.
class NodeTable {
 public:
  explicit NodeTable(const Forest& f);
  int size() const { return static_cast<int>(nodes_.size()); }
  const NodeInfo& operator[](int i) const { return nodes_.at(i - 1); }

 private:
  std::vector<NodeInfo> nodes_;
};

inline NodeTable node_table(const Forest& f) { return NodeTable(f); }

Term compose(const Term& t, const std::vector<Term>& args);
Term partial_compose(const Term& t, int i, const Term& s);

// Induced structure on a set of 1-based node ids.
Forest restrict(const Forest& f, const std::vector<int>& nodes);
Forest restrict_mask(const Forest& f, const std::vector<char>& keep);  // keep[i] for node i
// With drop_removed, removed children vanish instead of becoming leaves.
Forest restrict_nodes(const Forest& f, const std::vector<char>& keep, bool drop_removed);

struct AdmissiblePair {
  std::vector<int> upper;  // ancestor-closed
  std::vector<int> lower;  // the complement
};

std::vector<AdmissiblePair> admissible_pairs(const Forest& f);
bool is_admissible(const Forest& f, const std::vector<int>& upper);

// All terms of the given degree, ordered by printed text.
std::vector<Term> enumerate_terms(const Signature& sig, int degree);
// All reduced forests of the given degree, in canonical order.
std::vector<Forest> enumerate_forests(const Signature& sig, int degree);

}  // namespace nh
