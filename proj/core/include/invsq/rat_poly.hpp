#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace invsq {

// Exact rational: GMP keeps numerator/denominator reduced with a positive
// denominator after every arithmetic operation.
using Rat = mpq_class;

// Parses "-12", "3/4", "0.125", "-1.5e-3" exactly (no binary round-trip).
// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

// "num/den", always with an explicit denominator ("5/1", "-3/4").
std::string rat_token(const Rat& r);

// Dense univariate polynomial over Q, lowest degree first. The trailing
// coefficient is nonzero unless the polynomial is zero (empty coefficient list).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<Rat> coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, int degree);
  // (V - root)
  static RatPoly linear_root(const Rat& root);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Coefficient of V^i (zero beyond the degree).
  Rat coeff(int i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& v) const;
  double eval(double v) const;
  RatPoly derivative() const;

  // Divides by the leading coefficient. Zero stays zero.
  RatPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  RatPoly primitive() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rat& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
  friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  // Ascending "num/den" tokens separated by single spaces; "0/1" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

RatPoly scale(const RatPoly& p, const Rat& s);

// Euclidean division a = q*b + r, deg r < deg b. Throws std::domain_error if b is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Throws std::domain_error if b is zero or does not divide a.
RatPoly exact_divide(const RatPoly& a, const RatPoly& b);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// True iff a = c * b for some nonzero rational c.
bool proportional(const RatPoly& a, const RatPoly& b);

// Yun's square-free decomposition: p = lc * prod_k factors[k]^(k+1), with
// each factor monic and square-free (factors may be 1).
std::vector<RatPoly> square_free_decomposition(const RatPoly& p);

// Sturm chain p, p', -rem(p, p'), ... up to the last nonzero term.
std::vector<RatPoly> sturm_sequence(const RatPoly& p);
// Sign changes of the chain at v, zeros skipped.
int sign_variations(const std::vector<RatPoly>& chain, const Rat& v);
// Number of distinct real roots of p in (lo, hi], via the Sturm chain of
// the square-free part.
int count_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi);
// Bound B with every real root in (-B, B).
Rat cauchy_root_bound(const RatPoly& p);

struct RealRoot {
  Rat lo;  // lo <= root <= hi, hi - lo <= precision
  Rat hi;
  int multiplicity = 1;
  double approx() const;
};

// All distinct real roots of a nonzero p in ascending order with their
// multiplicities. Throws std::domain_error for the zero polynomial.
std::vector<RealRoot> real_roots(const RatPoly& p, const Rat& precision);

}  // namespace invsq
