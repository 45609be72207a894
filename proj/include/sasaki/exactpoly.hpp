#pragma once

// Exact univariate polynomials over Z and Q, Sturm chains, and certified
// isolation of positive real roots. Nothing in here touches floating point.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace sasaki {

using Integer = mpz_class;
using Rational = mpq_class;

namespace poly {

/// Dense polynomial, coefficient i multiplies b^i. Trailing zeros are
/// stripped on construction so the zero polynomial has no coefficients.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& leading() const { return coeffs_.back(); }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> r = a.coeffs_;
    for (auto& c : r) c = -c;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& a) {
    std::vector<Coeff> r = a.coeffs_;
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Clears denominators and divides out the content; the result has a positive
/// leading coefficient. The zero polynomial maps to itself.
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Nonnegative gcd of the coefficients.
Integer content(const IntPolynomial& p);

Rational evaluate(const IntPolynomial& p, const Rational& q);
Rational evaluate(const RatPolynomial& p, const Rational& q);

/// Sign of p(q) computed on integers only, via the homogenised numerator.
int sign_at(const IntPolynomial& p, const Rational& q);

IntPolynomial derivative(const IntPolynomial& p, unsigned order = 1);

/// p(-b).
IntPolynomial reflect(const IntPolynomial& p);

/// b^deg * p(1/b), i.e. the reversed coefficient list.
IntPolynomial reverse(const IntPolynomial& p);

struct DivRem {
  RatPolynomial quotient;
  RatPolynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
DivRem divrem(const RatPolynomial& num, const RatPolynomial& den);
DivRem divrem(const IntPolynomial& num, const IntPolynomial& den);

/// num / den when den divides num over Q and the quotient has integer
/// coefficients; throws std::domain_error otherwise.
IntPolynomial exact_quotient(const IntPolynomial& num, const IntPolynomial& den);

/// Primitive gcd over Q[x] with positive leading coefficient.
/// gcd(0, 0) is the zero polynomial.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct SquarefreeFactor {
  IntPolynomial factor;
  unsigned multiplicity;
};

/// Yun's algorithm. Factors are primitive with positive leading coefficient,
/// square-free, pairwise coprime, sorted by multiplicity; constants are
/// dropped. Throws std::domain_error on the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decompose(const IntPolynomial& p);

/// Product of the square-free factors, normalised like them.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Sign variations of the coefficient sequence, zeros skipped.
std::size_t sign_variations(const IntPolynomial& p);

/// A point of the extended real line with a rational finite part.
class ExtRational {
 public:
  ExtRational(Rational q) : value_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  ExtRational(long n) : value_(Rational(n)) {}        // NOLINT(google-explicit-constructor)
  static ExtRational neg_infinity() { return ExtRational(-1, Tag{}); }
  static ExtRational pos_infinity() { return ExtRational(1, Tag{}); }

  bool is_finite() const { return infinity_ == 0; }
  /// -1 or +1 for the infinite points, 0 otherwise.
  int infinity() const { return infinity_; }
  const Rational& value() const { return value_; }

  friend bool operator<(const ExtRational& a, const ExtRational& b);

 private:
  struct Tag {};
  ExtRational(int inf, Tag) : infinity_(inf) {}

  Rational value_{0};
  int infinity_ = 0;
};

/// Sturm chain of the square-free part of a polynomial. Counts distinct real
/// roots of the original polynomial.
class SturmChain {
 public:
  /// Pass already_squarefree when p is known to be square-free to skip the
  /// decomposition.
  explicit SturmChain(const IntPolynomial& p, bool already_squarefree = false);

  /// Number of distinct real roots in (lo, hi]. Requires lo < hi.
  std::size_t count(const ExtRational& lo, const ExtRational& hi) const;
  std::size_t variations(const ExtRational& x) const;

  const IntPolynomial& base() const { return chain_.front(); }
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Distinct real roots of p in (lo, hi]. Throws std::domain_error on the zero
/// polynomial and std::invalid_argument unless lo < hi.
std::size_t sturm_count(const IntPolynomial& p, const ExtRational& lo, const ExtRational& hi);

/// Open interval (lo, hi) with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo < q && q < hi; }
};

struct RootRecord {
  std::variant<Rational, RationalInterval> value;
  unsigned multiplicity = 1;
  bool is_rational = false;

  bool is_exact() const { return std::holds_alternative<Rational>(value); }
  const Rational& exact() const { return std::get<Rational>(value); }
  const RationalInterval& interval() const { return std::get<RationalInterval>(value); }
  /// Exact value, or the midpoint of the isolating interval.
  Rational representative() const;
};

/// Default number of decimal digits to which isolating intervals are refined.
inline constexpr unsigned kDefaultDigits = 12;

/// One record per distinct positive real root, ascending. Rational roots are
/// exact; irrational ones carry an isolating interval of width <= 10^-digits
/// whose endpoints are not roots of p.
std::vector<RootRecord> isolate_positive_roots(const IntPolynomial& p,
                                               unsigned digits = kDefaultDigits);

struct RationalRoot {
  Rational value;
  unsigned multiplicity;
};

/// All rational roots of p with exact multiplicities, ascending.
std::vector<RationalRoot> rational_roots(const IntPolynomial& p);

/// Discriminant of a3 b^3 + a2 b^2 + a1 b + a0. Throws std::invalid_argument
/// when a3 = 0.
Rational cubic_discriminant(const Rational& a3, const Rational& a2, const Rational& a1,
                            const Rational& a0);

/// The rational with the smallest denominator strictly inside (lo, hi),
/// for 0 <= lo < hi. An absent hi means +infinity.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi);

/// "num/den", always with the denominator.
std::string to_string(const Rational& q);

/// Decimal expansion truncated toward zero to the given number of digits.
std::string to_decimal(const Rational& q, unsigned digits);

std::string to_string(const IntPolynomial& p, const char* var = "b");

}  // namespace poly
}  // namespace sasaki
