#pragma once

#include "nh/alphabet.hpp"
#include "nh/combination.hpp"
#include "nh/core.hpp"
#include "nh/hopf.hpp"
#include "nh/quotient.hpp"

#include <vector>

namespace nh {

// A forest without leaves; a node decorated by s has at most Arity(s) children.
using TrimmedForest = Forest;

bool is_trimmed(const TrimmedForest& t, const Signature& sig);
TrimmedForest trim(const Forest& f);
Int charge(const TrimmedForest& t, const Signature& sig);
// Every reduced forest whose trim is t.
std::vector<Forest> untrim(const TrimmedForest& t, const Signature& sig);

LinComb nck_product(const LinComb& x, const LinComb& y);
TensorComb nck_coproduct(const TrimmedForest& t);
TensorComb nck_coproduct(const LinComb& x);
// trim applied to both legs.
TensorComb trim_legs(const TensorComb& x);

// Realization over lengths of any forest trimming to t.
Polynomial length_polynomial(const TrimmedForest& t, const Signature& sig, const LengthAlphabet& A);

// Sum over trimmed trees t of content m of ch(t) times the length polynomial of t.
Polynomial mas_lengths_expand(const Multiset& m, const Signature& sig, const LengthAlphabet& A);

}  // namespace nh
