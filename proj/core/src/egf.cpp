#include "tropbip/egf.hpp"

#include "tropbip/errors.hpp"

namespace tropbip {

Rat factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(mpq_class(f));
}

Rat binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(mpq_class(b));
}

Egf3::Egf3(int k_max, int m_max, int n_max) : k_max_(k_max), m_max_(m_max), n_max_(n_max) {
  if (k_max < 0 || m_max < 0 || n_max < 0) throw StructuralError("negative truncation order");
  data_.assign(static_cast<std::size_t>(k_max + 1) * (m_max + 1) * (n_max + 1), Rat(0));
}

std::size_t Egf3::index(int k, int m, int n) const {
  if (k < 0 || m < 0 || n < 0 || k > k_max_ || m > m_max_ || n > n_max_) {
    throw StructuralError("series coefficient index outside truncation orders");
  }
  return (static_cast<std::size_t>(k) * (m_max_ + 1) + m) * (n_max_ + 1) + n;
}

void Egf3::require_same_shape(const Egf3& o) const {
  if (k_max_ != o.k_max_ || m_max_ != o.m_max_ || n_max_ != o.n_max_) {
    throw StructuralError("series truncation orders differ");
  }
}

Egf3 Egf3::constant(const Rat& c, int k_max, int m_max, int n_max) {
  Egf3 s(k_max, m_max, n_max);
  s.coeff(0, 0, 0) = c;
  return s;
}

Egf3 Egf3::t(int k_max, int m_max, int n_max) {
  Egf3 s(k_max, m_max, n_max);
  if (k_max >= 1) s.coeff(1, 0, 0) = Rat(1);
  return s;
}

Egf3 Egf3::var(SeriesVar v, int k_max, int m_max, int n_max) {
  Egf3 s(k_max, m_max, n_max);
  if (v == SeriesVar::X && m_max >= 1) s.coeff(0, 1, 0) = Rat(1);
  if (v == SeriesVar::Y && n_max >= 1) s.coeff(0, 0, 1) = Rat(1);
  return s;
}

Egf3 Egf3::exp_linear(const Rat& c, SeriesVar v, int t_power, int k_max, int m_max, int n_max) {
  Egf3 s(k_max, m_max, n_max);
  const int top = v == SeriesVar::X ? m_max : n_max;
  Rat power(1);
  for (int d = 0; d <= top; ++d) {
    const int k = t_power * d;
    if (k > k_max) break;
    // exp(c t^p v) = sum_d c^d t^(p d) v^d / d!; the count stored is c^d.
    if (v == SeriesVar::X) {
      s.coeff(k, d, 0) = power;
    } else {
      s.coeff(k, 0, d) = power;
    }
    power *= c;
  }
  return s;
}

Egf3& Egf3::operator+=(const Egf3& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Egf3& Egf3::operator-=(const Egf3& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Egf3& Egf3::operator*=(const Rat& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Egf3 operator*(const Egf3& a, const Egf3& b) {
  a.require_same_shape(b);
  Egf3 out(a.k_max_, a.m_max_, a.n_max_);
  for (int k1 = 0; k1 <= a.k_max_; ++k1) {
    for (int m1 = 0; m1 <= a.m_max_; ++m1) {
      for (int n1 = 0; n1 <= a.n_max_; ++n1) {
        const Rat& ca = a.coeff(k1, m1, n1);
        if (ca.is_zero()) continue;
        for (int k2 = 0; k1 + k2 <= a.k_max_; ++k2) {
          for (int m2 = 0; m1 + m2 <= a.m_max_; ++m2) {
            for (int n2 = 0; n1 + n2 <= a.n_max_; ++n2) {
              const Rat& cb = b.coeff(k2, m2, n2);
              if (cb.is_zero()) continue;
              out.coeff(k1 + k2, m1 + m2, n1 + n2) +=
                  ca * cb * binomial(m1 + m2, m1) * binomial(n1 + n2, n1);
            }
          }
        }
      }
    }
  }
  return out;
}

Egf3 Egf3::reciprocal() const {
  const Rat& a0 = coeff(0, 0, 0);
  if (a0.is_zero()) throw StructuralError("reciprocal of a series with zero constant term");
  const Rat inv = Rat(1) / a0;
  Egf3 b(k_max_, m_max_, n_max_);
  // Lexicographic order guarantees every b(k - k', m - m', n - n') on the right
  // is already known.
  for (int k = 0; k <= k_max_; ++k) {
    for (int m = 0; m <= m_max_; ++m) {
      for (int n = 0; n <= n_max_; ++n) {
        if (k == 0 && m == 0 && n == 0) {
          b.coeff(0, 0, 0) = inv;
          continue;
        }
        Rat acc;
        for (int k1 = 0; k1 <= k; ++k1) {
          for (int m1 = 0; m1 <= m; ++m1) {
            for (int n1 = 0; n1 <= n; ++n1) {
              if (k1 == 0 && m1 == 0 && n1 == 0) continue;
              const Rat& ca = coeff(k1, m1, n1);
              if (ca.is_zero()) continue;
              const Rat& cb = b.coeff(k - k1, m - m1, n - n1);
              if (cb.is_zero()) continue;
              acc += ca * cb * binomial(m, m1) * binomial(n, n1);
            }
          }
        }
        b.coeff(k, m, n) = -(acc * inv);
      }
    }
  }
  return b;
}

Egf3 Egf3::at_t_one() const {
  Egf3 out(0, m_max_, n_max_);
  for (int k = 0; k <= k_max_; ++k) {
    for (int m = 0; m <= m_max_; ++m) {
      for (int n = 0; n <= n_max_; ++n) out.coeff(0, m, n) += coeff(k, m, n);
    }
  }
  return out;
}

}  // namespace tropbip
