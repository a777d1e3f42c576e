#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

namespace mnrule {

using Integer = boost::multiprecision::cpp_int;

/// A finite formal integer combination of basis elements.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. Iteration follows `Compare`.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, Integer, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  LinearCombination(std::initializer_list<std::pair<Key, Integer>> terms) {
    for (const auto& [key, coeff] : terms) add(key, coeff);
  }

  void add(const Key& key, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool contains(const Key& key) const { return terms_.count(key) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, -coeff);
    return *this;
  }
  LinearCombination& operator*=(const Integer& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scalar;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Integer& s) { return a *= s; }
  friend LinearCombination operator*(const Integer& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Integer(-1); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  /// True when every coefficient is +1 or -1.
  bool multiplicity_free() const {
    for (const auto& [key, coeff] : terms_) {
      if (coeff != 1 && coeff != -1) return false;
    }
    return true;
  }

 private:
  map_type terms_;
};

}  // namespace mnrule
