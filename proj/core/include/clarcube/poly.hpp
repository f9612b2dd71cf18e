#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace clarcube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer polynomial; coefficient index equals degree. The zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  /// Builds a polynomial from per-degree counts.
  template <typename Count>
  static IntPolynomial from_counts(const std::vector<Count>& counts) {
    std::vector<BigInt> c;
    c.reserve(counts.size());
    for (const auto& n : counts) c.emplace_back(n);
    return IntPolynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  BigInt coeff(std::size_t k) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, e.g. "2x^3 + 15x^2 + 32x + 20".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Coefficients in the (x+1) basis: p(x) = sum_i b[i] (x+1)^i.
struct ShiftedCoefficients {
  std::vector<BigInt> b;
  friend bool operator==(const ShiftedCoefficients&, const ShiftedCoefficients&) = default;
};

BigInt binomial(unsigned n, unsigned k);

Rational evaluate(const IntPolynomial& p, const Rational& x);

/// s-th formal derivative; s = 0 is the identity.
IntPolynomial derivative(const IntPolynomial& p, unsigned s = 1);

ShiftedCoefficients to_shifted(const IntPolynomial& p);
IntPolynomial from_shifted(const ShiftedCoefficients& shifted);

struct RationalRoot {
  Rational value;
  /// Set when value == -(t+1)/t for an integer t >= 1.
  std::optional<BigInt> t;
};

/// All rational roots in ascending order, by the rational-root theorem.
/// Throws std::invalid_argument on the zero polynomial.
std::vector<RationalRoot> rational_roots(const IntPolynomial& p);

/// Interval on the extended real line. An empty `lo` means -infinity and an
/// empty `hi` means +infinity; infinite ends are always open.
struct RealInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool closed_lo = true;
  bool closed_hi = true;
};

/// Number of distinct real roots of p in the interval, by a Sturm sequence
/// of the square-free part. Throws std::invalid_argument on the zero
/// polynomial or when lo > hi.
std::size_t count_real_roots(const IntPolynomial& p, const RealInterval& interval);
std::size_t count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi,
                             bool closed_lo, bool closed_hi);

struct UnimodalityResult {
  bool unimodal = true;
  /// Index of the valley coefficient that breaks unimodality.
  std::optional<std::size_t> failure_index;
};

/// Weakly rising then weakly falling coefficient sequence.
UnimodalityResult is_unimodal(const IntPolynomial& p);

}  // namespace clarcube
