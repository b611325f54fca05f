#pragma once

#include "nh/alphabet.hpp"
#include "nh/combination.hpp"
#include "nh/core.hpp"
#include "nh/hopf.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nh {

// MAs: terms with equal decoration multisets.
// Int: binary terms with equal infix readings.
// As: binary terms with equal degree, represented by the word of n copies of generator 0.
enum class QuotientKind { MAs, Int, As };

using Multiset = std::vector<int>;  // sorted generator indices
using SigWord = std::vector<int>;
using Phrase = std::vector<std::vector<int>>;
using PhraseComb = Combination<Phrase>;
using PhrasePair = std::pair<Phrase, Phrase>;
using PhraseTensor = Combination<PhrasePair>;

Multiset content(const Term& t);
SigWord infix(const Term& t, const Signature& sig);

int mas_arity(const Multiset& m, const Signature& sig);
Multiset mas_compose(const Multiset& m, int i, const Multiset& m2, const Signature& sig);
SigWord int_compose(const SigWord& u, int i, const SigWord& u2);

// Canonical representative of the class of t, and of each term of f.
std::vector<int> project(const Term& t, QuotientKind kind, const Signature& sig);
Phrase project(const Forest& f, QuotientKind kind, const Signature& sig);

// Sum of E_f over reduced forests f projecting to x.
LinComb phi_expand(const Phrase& x, QuotientKind kind, const Signature& sig);
Polynomial realize_quotient(const Phrase& x, QuotientKind kind, const Signature& sig, const ForestLikeAlphabet& A);

PhraseTensor mas_coproduct(const Phrase& x, const Signature& sig);
// Entries are count vectors of length s over s generators of arity r + 1.
PhraseTensor fdb_coproduct(int r, int s, const Phrase& x);
PhraseTensor phr_coproduct(const Phrase& x);

// Coproduct read off from Delta(phi(E_x)) at class representatives.
PhraseTensor quotient_coproduct_via_phi(const Phrase& x, QuotientKind kind, const Signature& sig);

// Exhaustive check that the canonical form respects degree, arity and partial
// composition for all compositions of total degree <= degree_max. Returns the violations.
std::vector<std::string> congruence_check(QuotientKind kind, const Signature& sig, int degree_max);

std::string phrase_to_string(const Phrase& x, QuotientKind kind, const Signature& sig);
Phrase parse_phrase(std::string_view text, QuotientKind kind, const Signature& sig);
std::string fdb_phrase_to_string(const Phrase& x, int s);
Phrase parse_fdb_phrase(std::string_view text, int s);

}  // namespace nh
