#include "clarcube/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clarcube {

namespace {

using RationalPoly = std::vector<Rational>;

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly to_rational(const IntPolynomial& p) {
  RationalPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

RationalPoly rational_derivative(const RationalPoly& p) {
  RationalPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long long>(k));
  trim(out);
  return out;
}

// Polynomial long division over Q; returns (quotient, remainder).
std::pair<RationalPoly, RationalPoly> divide(RationalPoly num, const RationalPoly& den) {
  if (den.empty()) throw std::invalid_argument("division by zero polynomial");
  RationalPoly quot;
  if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    const std::size_t shift = num.size() - den.size();
    const Rational factor = num.back() / den.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {std::move(quot), std::move(num)};
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational eval(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Sign at +inf (positive) or -inf (negative).
int sign_at_infinity(const RationalPoly& p, bool positive) {
  const int s = sign(p.back());
  const bool odd = (p.size() - 1) % 2 == 1;
  return (!positive && odd) ? -s : s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& squarefree) {
  std::vector<RationalPoly> chain{squarefree, rational_derivative(squarefree)};
  while (!chain.back().empty()) {
    auto rem = divide(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : rem) c = -c;
    chain.push_back(std::move(rem));
  }
  chain.pop_back();
  return chain;
}

std::size_t variations(const std::vector<RationalPoly>& chain, const std::optional<Rational>& x,
                       bool positive_infinity) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    signs.push_back(x ? sign(eval(p, *x)) : sign_at_infinity(p, positive_infinity));
  }
  return sign_changes(signs);
}

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial derivative(const IntPolynomial& p, unsigned s) {
  const auto& c = p.coeffs();
  if (c.size() <= s) return {};
  std::vector<BigInt> out(c.size() - s);
  for (std::size_t k = s; k < c.size(); ++k) {
    BigInt falling = 1;
    for (unsigned j = 0; j < s; ++j) falling *= static_cast<unsigned long long>(k - j);
    out[k - s] = c[k] * falling;
  }
  return IntPolynomial(std::move(out));
}

ShiftedCoefficients to_shifted(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  ShiftedCoefficients out;
  out.b.assign(c.size(), BigInt(0));
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t k = j; k < c.size(); ++k) {
      BigInt term = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * c[k];
      if ((k - j) % 2 == 1) term = -term;
      out.b[j] += term;
    }
  }
  while (!out.b.empty() && out.b.back() == 0) out.b.pop_back();
  return out;
}

IntPolynomial from_shifted(const ShiftedCoefficients& shifted) {
  const auto& b = shifted.b;
  std::vector<BigInt> c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = i; k < b.size(); ++k)
      c[i] += b[k] * binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
  return IntPolynomial(std::move(c));
}

std::vector<RationalRoot> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;

  std::set<Rational> roots;
  if (low > 0) roots.insert(Rational(0));
  if (low < c.size() - 1) {
    const auto nums = positive_divisors(c[low]);
    const auto dens = positive_divisors(c.back());
    for (const auto& a : nums) {
      for (const auto& b : dens) {
        for (int s : {1, -1}) {
          Rational cand(a * s, b);
          if (roots.count(cand)) continue;
          if (evaluate(p, cand) == 0) roots.insert(cand);
        }
      }
    }
  }

  std::vector<RationalRoot> out;
  for (const auto& r : roots) {
    RationalRoot root{r, std::nullopt};
    // r = -(t+1)/t  <=>  t = -1/(r+1)
    const Rational shifted = r + 1;
    if (shifted != 0) {
      const Rational t = Rational(-1) / shifted;
      if (denominator(t) == 1 && numerator(t) >= 1) root.t = numerator(t);
    }
    out.push_back(std::move(root));
  }
  return out;
}

std::size_t count_real_roots(const IntPolynomial& p, const RealInterval& iv) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) throw std::invalid_argument("count_real_roots: lo > hi");

  const RationalPoly rp = to_rational(p);
  if (rp.size() == 1) return 0;

  const RationalPoly g = gcd(rp, rational_derivative(rp));
  const RationalPoly squarefree = divide(rp, g).first;
  const auto is_root = [&](const Rational& x) { return eval(squarefree, x) == 0; };

  if (iv.lo && iv.hi && *iv.lo == *iv.hi) {
    return (iv.closed_lo && iv.closed_hi && is_root(*iv.lo)) ? 1 : 0;
  }

  const auto chain = sturm_chain(squarefree);
  // Sturm: V(a) - V(b) counts distinct roots in (a, b].
  std::size_t count = variations(chain, iv.lo, false) - variations(chain, iv.hi, true);
  if (iv.hi && is_root(*iv.hi) && !iv.closed_hi) --count;
  if (iv.lo && iv.closed_lo && is_root(*iv.lo)) ++count;
  return count;
}

std::size_t count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi,
                             bool closed_lo, bool closed_hi) {
  return count_real_roots(p, RealInterval{lo, hi, closed_lo, closed_hi});
}

UnimodalityResult is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  bool falling = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < c[i - 1]) {
      falling = true;
    } else if (c[i] > c[i - 1] && falling) {
      return {false, i - 1};
    }
  }
  return {true, std::nullopt};
}

}  // namespace clarcube
