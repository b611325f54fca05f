#pragma once

#include "nh/combination.hpp"
#include "nh/core.hpp"

#include <utility>
#include <vector>

namespace nh {

using LinComb = Combination<Forest>;
using ForestPair = std::pair<Forest, Forest>;
using TensorComb = Combination<ForestPair>;

// E_f for the reduction of f.
LinComb basis(const Forest& f);

LinComb product(const LinComb& x, const LinComb& y);

// Sum over admissible pairs of E_{f@I1} (x) E_{f@I2}.
TensorComb coproduct(const Forest& f);
TensorComb coproduct(const LinComb& x);

// Sum over factorizations t = y(w1, ..., wk) of E_{rd y} (x) E_{rd w}.
TensorComb coproduct_via_factorizations(const Term& t);

Int counit(const LinComb& x);

// Graded recursion S(x) = -sum S(x') x'' over coproduct terms with x'' != 1.
LinComb antipode(const LinComb& x);

// (Delta (x) id) and (id (x) Delta) as maps into triple tensors.
using Triple = std::vector<Forest>;
Combination<Triple> coproduct_left(const TensorComb& x);
Combination<Triple> coproduct_right(const TensorComb& x);

std::vector<Int> term_counts(const Signature& sig, int n_max);
std::vector<Int> hilbert_dims(const Signature& sig, int n_max);

struct Classification {
  bool commutative = false;
  bool cocommutative = false;
};

Classification classify_profile(const Signature& sig);

}  // namespace nh
