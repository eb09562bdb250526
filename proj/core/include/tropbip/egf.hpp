#pragma once

#include <cstddef>
#include <vector>

#include "tropbip/rational.hpp"

namespace tropbip {

enum class SeriesVar { X, Y };

// Truncated series  sum c(k,m,n) t^k x^m y^n / (m! n!)  in an ordinary variable
// t and two exponential variables x, y. The stored coefficient c(k,m,n) is the
// combinatorial count itself; factorials only enter through the binomial
// convolution in multiplication.
class Egf3 {
 public:
  Egf3(int k_max, int m_max, int n_max);

  int k_max() const { return k_max_; }
  int m_max() const { return m_max_; }
  int n_max() const { return n_max_; }

  const Rat& coeff(int k, int m, int n) const { return data_[index(k, m, n)]; }
  Rat& coeff(int k, int m, int n) { return data_[index(k, m, n)]; }

  static Egf3 constant(const Rat& c, int k_max, int m_max, int n_max);
  static Egf3 t(int k_max, int m_max, int n_max);
  static Egf3 var(SeriesVar v, int k_max, int m_max, int n_max);
  // exp(c * t^t_power * v)
  static Egf3 exp_linear(const Rat& c, SeriesVar v, int t_power, int k_max, int m_max,
                         int n_max);

  Egf3& operator+=(const Egf3& o);
  Egf3& operator-=(const Egf3& o);
  Egf3& operator*=(const Rat& c);
  friend Egf3 operator+(Egf3 a, const Egf3& b) { return a += b; }
  friend Egf3 operator-(Egf3 a, const Egf3& b) { return a -= b; }
  friend Egf3 operator*(Egf3 a, const Rat& c) { return a *= c; }
  friend Egf3 operator*(const Egf3& a, const Egf3& b);

  // Throws StructuralError when the constant term is zero.
  Egf3 reciprocal() const;

  // Sum over k of c(k,m,n), i.e. the series at t = 1, as a t-free series.
  Egf3 at_t_one() const;

  friend bool operator==(const Egf3&, const Egf3&) = default;

 private:
  std::size_t index(int k, int m, int n) const;
  void require_same_shape(const Egf3& o) const;

  int k_max_;
  int m_max_;
  int n_max_;
  std::vector<Rat> data_;
};

inline Egf3 series_mul(const Egf3& a, const Egf3& b) { return a * b; }
inline Egf3 series_reciprocal(const Egf3& a) { return a.reciprocal(); }

// Binomial coefficient as an exact rational (0 when k < 0 or k > n).
Rat binomial(long n, long k);
Rat factorial(long n);

}  // namespace tropbip
