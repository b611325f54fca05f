#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nh {

using Int = boost::multiprecision::cpp_int;

// Raised when an input violates a documented precondition.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int binomial(long n, long k);

// Finitely supported map from keys to nonzero exact integers.
template <class K>
class Combination {
 public:
  using Map = std::map<K, Int>;
  using const_iterator = typename Map::const_iterator;

  Combination() = default;
  explicit Combination(K key, Int c = 1) { add(std::move(key), std::move(c)); }

  void add(K key, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const Combination& other, const Int& scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Int coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  bool operator==(const Combination& o) const { return terms_ == o.terms_; }

  Combination operator+(const Combination& o) const {
    Combination r = *this;
    r.add(o);
    return r;
  }
  Combination operator-(const Combination& o) const {
    Combination r = *this;
    r.add(o, -1);
    return r;
  }
  Combination operator*(const Int& s) const {
    Combination r;
    r.add(*this, s);
    return r;
  }

 private:
  Map terms_;
};

template <class Seq>
Seq concat(const Seq& a, const Seq& b) {
  Seq r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Bilinear extension of concatenation.
template <class Seq>
Combination<Seq> concat_product(const Combination<Seq>& x, const Combination<Seq>& y) {
  Combination<Seq> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(concat(a, b), ca * cb);
  return r;
}

// (a (x) b)(c (x) d) = ac (x) bd
template <class Seq>
Combination<std::pair<Seq, Seq>> tensor_product(const Combination<std::pair<Seq, Seq>>& x,
                                                const Combination<std::pair<Seq, Seq>>& y) {
  Combination<std::pair<Seq, Seq>> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      r.add({concat(a.first, b.first), concat(a.second, b.second)}, ca * cb);
  return r;
}

template <class A, class B>
Combination<std::pair<B, A>> swap_legs(const Combination<std::pair<A, B>>& x) {
  Combination<std::pair<B, A>> r;
  for (const auto& [k, c] : x) r.add({k.second, k.first}, c);
  return r;
}

// m : a (x) b -> ab
template <class Seq>
Combination<Seq> multiply_legs(const Combination<std::pair<Seq, Seq>>& x) {
  Combination<Seq> r;
  for (const auto& [k, c] : x) r.add(concat(k.first, k.second), c);
  return r;
}

template <class Seq>
Combination<std::pair<Seq, Seq>> tensor(const Combination<Seq>& x, const Combination<Seq>& y) {
  Combination<std::pair<Seq, Seq>> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add({a, b}, ca * cb);
  return r;
}

}  // namespace nh
