#include "tropbip/rational.hpp"

#include <cctype>
#include <sstream>

#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw StructuralError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  const std::string_view num = trim(text.substr(0, slash));
  if (!is_integer_text(num)) {
    throw StructuralError("malformed rational '" + std::string(text) + "'");
  }
  mpq_class q;
  q.get_num() = parse_integer(num);
  if (slash == std::string_view::npos) {
    q.get_den() = 1;
  } else {
    const std::string_view den = trim(text.substr(slash + 1));
    if (!is_integer_text(den)) {
      throw StructuralError("malformed rational '" + std::string(text) + "'");
    }
    q.get_den() = parse_integer(den);
    if (q.get_den() == 0) throw StructuralError("rational with zero denominator");
  }
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const { return v_.get_str(10); }

bool Rat::is_integer() const { return v_.get_den() == 1; }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw StructuralError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw StructuralError("matrix must be at least 1x1");
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw StructuralError("matrix must be at least 1x1");
  if (data_.size() != rows * cols) throw StructuralError("matrix entry count mismatch");
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& g) {
  os << '[';
  for (std::size_t i = 0; i < g.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < g.cols(); ++j) os << (j ? "," : "") << g(i, j);
    os << ']';
  }
  return os << ']';
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rat::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tropbip
