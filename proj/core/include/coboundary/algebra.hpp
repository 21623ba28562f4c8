#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "coboundary/error.hpp"

namespace coboundary::algebra {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// the zero polynomial is the empty map and structural equality is exact.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit from integer literals
  LaurentPoly(mpz_class constant);

  static LaurentPoly monomial(int exponent, mpz_class coefficient = 1);
  static LaurentPoly q() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, mpz_class>& terms() const { return terms_; }
  mpz_class coefficient(int exponent) const;

  // Only meaningful when nonzero.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  const mpz_class& leading_coefficient() const { return terms_.rbegin()->second; }

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Renders in descending exponent order, e.g. "q^2 + 1 + q^-2", "-2q - 3".
  std::string to_string() const;
  /// Inverse of to_string(); throws Error(ParseError).
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int exponent, const mpz_class& coefficient);

  std::map<int, mpz_class> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Quantum integer [n] = (q^n - q^-n) / (q - q^-1).
LaurentPoly q_int(int n);

/// Exact element of Q(q), kept in canonical form.
///
/// Canonical form: numerator and denominator are coprime integer Laurent
/// polynomials, the denominator is an ordinary polynomial with nonzero
/// constant term and positive leading coefficient, and the integer contents
/// of numerator and denominator share no common factor.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(LaurentPoly numerator, LaurentPoly denominator);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFunction inverse() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;
  static RationalFunction parse(std::string_view text);

 private:
  struct Raw {};
  RationalFunction(Raw, LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Dense matrix over Q(q).
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<RationalFunction>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const RationalFunction& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalFunction& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  QMatrix scaled(const RationalFunction& s) const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalFunction> data_;
};

/// Exact product; throws Error(DimensionMismatch) when inner sizes differ.
QMatrix matmul(const QMatrix& a, const QMatrix& b);

}  // namespace coboundary::algebra
