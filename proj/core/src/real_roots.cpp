#include <algorithm>
#include <stdexcept>

#include "invsq/rat_poly.hpp"

namespace invsq {

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and stops coefficient growth.
    chain.push_back(-(r * Rat(1 / abs(r.leading()))));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& v) {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sgn(q.eval(v));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

namespace {

RatPoly square_free_part(const RatPoly& p) { return exact_divide(p, gcd(p, p.derivative())).monic(); }

int count_with_chain(const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// Exactly one root of the square-free f in (lo, hi]; shrink to width <= precision.
RealRoot refine(const RatPoly& f, const std::vector<RatPoly>& chain, Rat lo, Rat hi, const Rat& precision) {
  if (f.eval(hi) == 0) return {hi, hi, 1};
  while (hi - lo > precision) {
    Rat mid = (lo + hi) / 2;
    if (f.eval(mid) == 0) return {mid, mid, 1};
    if (count_with_chain(chain, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi, 1};
}

void isolate(const RatPoly& f, const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi,
             int count, const Rat& precision, std::vector<RealRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(refine(f, chain, lo, hi, precision));
    return;
  }
  const Rat mid = (lo + hi) / 2;
  const int left = count_with_chain(chain, lo, mid);
  isolate(f, chain, lo, mid, left, precision, out);
  isolate(f, chain, mid, hi, count - left, precision, out);
}

}  // namespace

int count_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::domain_error("count_real_roots of the zero polynomial");
  if (p.degree() == 0 || !(lo < hi)) return 0;
  return count_with_chain(sturm_sequence(square_free_part(p)), lo, hi);
}

Rat cauchy_root_bound(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i) / p.leading())));
  return Rat(m + 1);
}

double RealRoot::approx() const { return Rat((lo + hi) / 2).get_d(); }

std::vector<RealRoot> real_roots(const RatPoly& p, const Rat& precision) {
  if (p.is_zero()) throw std::domain_error("real_roots of the zero polynomial");
  if (!(precision > 0)) throw std::invalid_argument("real_roots: precision must be positive");
  std::vector<RealRoot> roots;
  const auto factors = square_free_decomposition(p);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const RatPoly& f = factors[k];
    if (f.degree() < 1) continue;
    const auto chain = sturm_sequence(f);
    const Rat bound = cauchy_root_bound(f);
    const Rat lo = -bound;
    std::vector<RealRoot> part;
    isolate(f, chain, lo, bound, count_with_chain(chain, lo, bound), precision, part);
    for (auto& r : part) r.multiplicity = static_cast<int>(k) + 1;
    roots.insert(roots.end(), part.begin(), part.end());
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.lo + a.hi < b.lo + b.hi; });
  return roots;
}

}  // namespace invsq
