#ifndef UEA_LINEAR_COMBINATION_HPP
#define UEA_LINEAR_COMBINATION_HPP

#include <map>
#include <utility>

#include "uea/scalar.hpp"

namespace uea {

/// Finitely supported formal sum over an ordered key type. Zero
/// coefficients are never stored; every mutation normalizes immediately.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Scalar>;
  using const_iterator = typename Terms::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& key, const Scalar& coeff) { add(key, coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(Key&& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombination& other, const Scalar& factor) {
    if (factor.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, c * factor);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Scalar& factor) {
    if (factor.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= factor;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Scalar& s) { return a *= s; }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
  LinearCombination operator-() const {
    LinearCombination out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const Terms& terms() const noexcept { return terms_; }

  /// nullptr when the key is absent (coefficient zero).
  const Scalar* find(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace uea

#endif  // UEA_LINEAR_COMBINATION_HPP
