#pragma once

#include "nh/alphabet.hpp"
#include "nh/combination.hpp"
#include "nh/core.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace nh {

struct DecoratedLetter {
  int value = 0;
  int gen = 0;
  auto operator<=>(const DecoratedLetter&) const = default;
};

using DecoratedWord = std::vector<DecoratedLetter>;
using WQSymComb = Combination<DecoratedWord>;

DecoratedWord pack(const DecoratedWord& u);
bool is_packed(const DecoratedWord& u);

// m(u): the letter a^{d}_{v} for each letter v^d.
Word monomial_of(const DecoratedWord& u, const LengthAlphabet& A);

// Sum of m(v) over decorated words v with pck(v) = u and values in 0..L.
Polynomial M_polynomial(const DecoratedWord& u, const LengthAlphabet& A);

// Packed words u of length Deg(f) whose monomial is compatible with f.
WQSymComb wqsym_decompose(const Forest& f, const Signature& sig);

std::string decorated_word_to_string(const DecoratedWord& u, const Signature& sig);
// Letters "value^name" separated by blanks.
DecoratedWord parse_decorated_word(std::string_view text, const Signature& sig);

}  // namespace nh
