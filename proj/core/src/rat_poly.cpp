#include "invsq/rat_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace invsq {

Rat parse_rat(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw fail();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rat num = parse_rat(s.substr(0, slash));
    const Rat den = parse_rat(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rat(num / den);
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool any_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) throw fail();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used == 0 || !std::isdigit(static_cast<unsigned char>(s.back()))) throw fail();
    i += used;
    exponent += e;
  }
  if (i != s.size()) throw fail();
  if (exponent > 100000 || exponent < -100000) throw fail();

  mpz_class mant(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rat r = exponent >= 0 ? Rat(mant * pow10) : Rat(mant, pow10);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

std::string rat_token(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_root(const Rat& root) { return RatPoly({Rat(-root), Rat(1)}); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat RatPoly::eval(const Rat& v) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

double RatPoly::eval(double v) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->get_d();
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rat(1 / leading());
}

RatPoly RatPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : c_) {
    ints.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (ints.back() < 0) g = -g;
  std::vector<Rat> out;
  for (const auto& v : ints) out.emplace_back(mpz_class(v / g));
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

RatPoly operator-(RatPoly a) { return a *= Rat(-1); }

std::string RatPoly::to_string() const {
  if (is_zero()) return "0/1";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ' ';
    out += rat_token(c_[i]);
  }
  return out;
}

RatPoly scale(const RatPoly& p, const Rat& s) { return p * s; }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {RatPoly{}, a};
  std::vector<Rat> quot(static_cast<std::size_t>(da - db) + 1, Rat(0));
  const Rat inv_lead = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    const Rat q = rem[static_cast<std::size_t>(i)] * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly exact_divide(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_divide: nonzero remainder");
  return q;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a.monic();
  RatPoly y = b.monic();
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool proportional(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading() == b * a.leading();
}

std::vector<RatPoly> square_free_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<RatPoly> factors;
  if (p.degree() == 0) return factors;
  const RatPoly f = p.monic();
  const RatPoly df = f.derivative();
  const RatPoly a0 = gcd(f, df);
  RatPoly b = exact_divide(f, a0);
  RatPoly c = exact_divide(df, a0);
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly a = gcd(b, d);
    factors.push_back(a);
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
  }
  // Drop trailing trivial factors so the last entry carries the top multiplicity.
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

}  // namespace invsq
