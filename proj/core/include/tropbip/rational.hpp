#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tropbip {

// Exact rational number, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::signed_integral T>
  Rat(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Rat(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class v);

  // Accepts "p", "-p", "p/q"; throws StructuralError otherwise or on q = 0.
  static Rat parse(std::string_view text);

  std::string str() const;  // "p" or "p/q"
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws StructuralError on division by zero

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rat abs(const Rat& r);

// Dense row-major matrix of rationals, at least 1x1.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // 0-based access.
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rat>& entries() const { return data_; }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& g);

// Parses a comma-separated list of rationals ("1,-2,3/4").
std::vector<Rat> parse_rat_list(std::string_view text);

}  // namespace tropbip
