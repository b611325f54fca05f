#pragma once

#include "nh/alphabet.hpp"
#include "nh/format.hpp"
#include "nh/hopf.hpp"
#include "nh/nck.hpp"
#include "nh/quotient.hpp"
#include "nh/wqsym.hpp"

#include <doctest.h>

namespace nhtest {

// a:1, b:2, c:3
inline nh::Signature sig_e() { return nh::Signature({{"a", 1}, {"b", 2}, {"c", 3}}); }

inline nh::Forest F(const char* s, const nh::Signature& sig = sig_e()) { return nh::parse_forest(s, sig); }
inline nh::Forest TF(const char* s, const nh::Signature& sig = sig_e()) {
  return nh::parse_forest(s, sig, nh::ParseMode::Trimmed);
}
inline nh::Term Tm(const char* s, const nh::Signature& sig = sig_e()) { return nh::parse_term(s, sig); }

inline std::vector<nh::Forest> forests_up_to(const nh::Signature& sig, int d) {
  std::vector<nh::Forest> all;
  for (int k = 0; k <= d; ++k) {
    auto fs = nh::enumerate_forests(sig, k);
    all.insert(all.end(), fs.begin(), fs.end());
  }
  return all;
}

}  // namespace nhtest
