#include "coboundary/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace coboundary {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::StripViolation: return "StripViolation";
    case ErrorCode::BadPath: return "BadPath";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

namespace algebra {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(mpz_class(constant)) {}

LaurentPoly::LaurentPoly(mpz_class constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, mpz_class coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

mpz_class LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const mpz_class& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str();
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  LaurentPoly parse() {
    if (s_.empty()) fail("empty input");
    LaurentPoly out;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    out += term(sign);
    while (pos_ < s_.size()) {
      const char op = s_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      out += term(op == '-' ? -1 : 1);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "Laurent polynomial '" + s_ + "': " + why);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  LaurentPoly term(int sign) {
    mpz_class coef = 1;
    const std::string d = digits();
    if (!d.empty()) coef = mpz_class(d);
    if (peek() == '*') ++pos_;
    int exponent = 0;
    if (peek() == 'q') {
      ++pos_;
      exponent = 1;
      if (peek() == '^') {
        ++pos_;
        int esign = 1;
        if (peek() == '-') {
          esign = -1;
          ++pos_;
        }
        const std::string e = digits();
        if (e.empty()) fail("missing exponent");
        exponent = esign * std::stoi(e);
      }
    } else if (d.empty()) {
      fail("expected a term");
    }
    return LaurentPoly::monomial(exponent, sign * coef);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly q_int(int n) {
  if (n == 0) return {};
  if (n < 0) return -q_int(-n);
  LaurentPoly out;
  for (int k = 0; k < n; ++k) out += LaurentPoly::monomial(n - 1 - 2 * k);
  return out;
}

// ---------------------------------------------------------------------------
// Dense integer polynomials (ascending coefficients) used for gcd.

namespace {

using Dense = std::vector<mpz_class>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const LaurentPoly& p, int shift) {
  Dense out(static_cast<std::size_t>(p.max_exponent() - shift + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - shift)] = c;
  return out;
}

LaurentPoly from_dense(const Dense& a, int shift) {
  LaurentPoly out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out += LaurentPoly::monomial(static_cast<int>(i) + shift, a[i]);
  return out;
}

mpz_class content(const Dense& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Dense primitive(Dense a) {
  trim(a);
  if (a.empty()) return a;
  mpz_class g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Pseudo-remainder of a by b (b nonzero): lc(b)^k a = Q b + R.
Dense pseudo_rem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Dense poly_gcd(Dense a, Dense b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact division of a by b over Z (b primitive, divides a over Q).
Dense exact_div(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = a[k + db];
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) a[k + i] -= q[k] * b[i];
  }
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.terms().size() == 1) {
    // Monomial denominator c q^k: fold q^-k into the numerator, then scale.
    const auto& [k, c] = *den_.terms().begin();
    num_ = num_.shifted(-k);
    Dense n = to_dense(num_, num_.min_exponent());
    mpz_class g = content(n);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    mpz_class d = c;
    if (d < 0) g = -g;
    LaurentPoly scaled;
    for (const auto& [e, coef] : num_.terms()) {
      mpz_class v;
      mpz_divexact(v.get_mpz_t(), coef.get_mpz_t(), g.get_mpz_t());
      scaled += LaurentPoly::monomial(e, v);
    }
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    num_ = std::move(scaled);
    den_ = LaurentPoly(d);
    return;
  }

  const int dshift = den_.min_exponent();
  const int nshift = num_.min_exponent() - dshift;
  Dense n = to_dense(num_, num_.min_exponent());
  Dense d = to_dense(den_, dshift);

  Dense g = poly_gcd(n, d);
  if (g.size() > 1) {
    n = exact_div(std::move(n), g);
    d = exact_div(std::move(d), g);
  }
  mpz_class c = content(n);
  const mpz_class cd = content(d);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (d.back() < 0) c = -c;
  if (c != 1) {
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  num_ = from_dense(n, nshift);
  den_ = from_dense(d, 0);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RationalFunction(RationalFunction::Raw{}, a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one())
    return RationalFunction(RationalFunction::Raw{}, a.num_ * b.num_, a.den_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::parse(std::string_view text) {
  const auto split = text.find(")/(");
  if (split == std::string_view::npos) return RationalFunction(LaurentPoly::parse(text));
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view num = strip(text.substr(0, split));
  std::string_view den = strip(text.substr(split + 3));
  if (num.empty() || num.front() != '(' || den.empty() || den.back() != ')')
    throw Error(ErrorCode::ParseError, "rational function '" + std::string(text) + "'");
  num.remove_prefix(1);
  den.remove_suffix(1);
  return RationalFunction(LaurentPoly::parse(num), LaurentPoly::parse(den));
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// QMatrix

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<RationalFunction>& entries) {
  QMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

QMatrix QMatrix::scaled(const RationalFunction& s) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x = x * s;
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum of different shapes");
  QMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + b.scaled(-1); }

QMatrix operator*(const QMatrix& a, const QMatrix& b) { return matmul(a, b); }

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const RationalFunction& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const RationalFunction& y = b(k, j);
        if (y.is_zero()) continue;
        out(i, j) += x * y;
      }
    }
  }
  return out;
}

std::string QMatrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::size_t width = 1;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    cells[k] = data_[k].to_string();
    width = std::max(width, cells[k].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& s = cells[i * cols_ + j];
      os << s << std::string(width - s.size(), ' ') << (j + 1 < cols_ ? " | " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace algebra
}  // namespace coboundary
