#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "sct/cyclic.hpp"
#include "sct/errors.hpp"
#include "sct/util.hpp"

namespace sct {

// Polynomials are coefficient vectors in ascending degree; all arithmetic is
// exact signed 64-bit and aborts loudly on overflow.
namespace poly {

inline std::vector<std::int64_t> trim(std::vector<std::int64_t> p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

// Exact division by a monic divisor; throws if a nonzero remainder is left.
inline std::vector<std::int64_t> divide_exact(
    std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  if (den.empty() || den.back() != 1)
    throw InternalInconsistencyError("divisor must be monic");
  if (num.size() < den.size())
    throw InternalInconsistencyError("degree of numerator too small");
  std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::int64_t c = num[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[k + i] = checked_sub(num[k + i], checked_mul(c, den[i]));
  }
  for (std::int64_t c : num)
    if (c != 0)
      throw InternalInconsistencyError("polynomial division left a remainder");
  return quot;
}

}  // namespace poly

// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
// the product of the lower cyclotomic polynomials.
inline std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidDivisorError("order must be positive");
  std::map<int, std::vector<std::int64_t>> memo;
  for (int d : divisors(n)) {
    std::vector<std::int64_t> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (int e : divisors(d))
      if (e != d) num = poly::divide_exact(std::move(num), memo.at(e));
    memo[d] = poly::trim(std::move(num));
  }
  return memo.at(n);
}

// An element of Z[zeta_n], stored as the canonical representative of degree
// < phi(n) in Z[x]/(Phi_n).
struct CyclotomicInt {
  std::vector<std::int64_t> coeffs;

  bool operator==(const CyclotomicInt& other) const {
    return coeffs == other.coeffs;
  }
  bool operator!=(const CyclotomicInt& other) const {
    return !(*this == other);
  }
  bool operator<(const CyclotomicInt& other) const {
    return coeffs < other.coeffs;
  }
  bool is_zero() const {
    for (auto c : coeffs)
      if (c) return false;
    return true;
  }
};

class CyclotomicContext {
 public:
  explicit CyclotomicContext(int n)
      : n_(n), phi_(cyclotomic_polynomial(n)) {}

  int n() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<std::int64_t>& polynomial() const { return phi_; }

  // Reduces an arbitrary-degree integer polynomial mod Phi_n.
  CyclotomicInt reduce(std::vector<std::int64_t> p) const {
    const std::size_t deg = phi_.size() - 1;
    if (p.size() < deg) p.resize(deg, 0);
    for (std::size_t k = p.size(); k-- > deg;) {
      std::int64_t c = p[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i < phi_.size(); ++i)
        p[k - deg + i] = checked_sub(p[k - deg + i], checked_mul(c, phi_[i]));
    }
    p.resize(deg);
    return CyclotomicInt{std::move(p)};
  }

  // Sum of zeta_n^e over a multiset of exponents.
  CyclotomicInt root_sum(const std::vector<int>& exponents) const {
    std::vector<std::int64_t> counts(n_, 0);
    for (int e : exponents) {
      int r = ((e % n_) + n_) % n_;
      counts[r] = checked_add(counts[r], 1);
    }
    return reduce(std::move(counts));
  }

  CyclotomicInt zero() const {
    return CyclotomicInt{std::vector<std::int64_t>(degree(), 0)};
  }

  CyclotomicInt from_integer(std::int64_t v) const {
    auto z = zero();
    z.coeffs[0] = v;
    return z;
  }

  CyclotomicInt add(const CyclotomicInt& a, const CyclotomicInt& b) const {
    CyclotomicInt r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      r.coeffs[i] = checked_add(r.coeffs[i], b.coeffs[i]);
    return r;
  }

  CyclotomicInt sub(const CyclotomicInt& a, const CyclotomicInt& b) const {
    CyclotomicInt r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      r.coeffs[i] = checked_sub(r.coeffs[i], b.coeffs[i]);
    return r;
  }

  CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b) const {
    std::vector<std::int64_t> prod(2 * degree() + 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (a.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        prod[i + j] =
            checked_add(prod[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
    }
    return reduce(std::move(prod));
  }

  // Numeric embedding at zeta_n = exp(2*pi*i/n); used only by tests to
  // cross-check the exact arithmetic.
  std::complex<double> to_complex(const CyclotomicInt& a) const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
      z += static_cast<double>(a.coeffs[k]) *
           std::polar(1.0, tau * static_cast<double>(k) / n_);
    return z;
  }

 private:
  int n_;
  std::vector<std::int64_t> phi_;
};

}  // namespace sct
