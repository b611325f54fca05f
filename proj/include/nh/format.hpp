#pragma once

#include "nh/alphabet.hpp"
#include "nh/hopf.hpp"
#include "nh/quotient.hpp"
#include "nh/wqsym.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace nh {

using json = nlohmann::json;

// Integers that fit in 64 bits are JSON numbers, larger ones are strings.
json coeff_json(const Int& c);
Int coeff_from_json(const json& j);

// Text output: one "coeff * [key]" line per term, canonical order; "0" when empty.
std::string lincomb_text(const LinComb& x, const Signature& sig);
json lincomb_json(const LinComb& x, const Signature& sig);
LinComb lincomb_from_json(const json& j, const Signature& sig, ParseMode mode = ParseMode::Full);

std::string tensor_text(const TensorComb& x, const Signature& sig);
json tensor_json(const TensorComb& x, const Signature& sig);
TensorComb tensor_from_json(const json& j, const Signature& sig, ParseMode mode = ParseMode::Full);

std::string polynomial_text(const Polynomial& p, const ForestLikeAlphabet& A);
json polynomial_json(const Polynomial& p, const ForestLikeAlphabet& A);
Polynomial polynomial_from_json(const json& j, const ForestLikeAlphabet& A);

using PhrasePrinter = std::function<std::string(const Phrase&)>;
using PhraseParser = std::function<Phrase(const std::string&)>;
std::string phrase_tensor_text(const PhraseTensor& x, const PhrasePrinter& print);
json phrase_tensor_json(const PhraseTensor& x, const PhrasePrinter& print);
PhraseTensor phrase_tensor_from_json(const json& j, const PhraseParser& parse);

std::string wqsym_text(const WQSymComb& x, const Signature& sig);
json wqsym_json(const WQSymComb& x, const Signature& sig);
WQSymComb wqsym_from_json(const json& j, const Signature& sig);

}  // namespace nh
