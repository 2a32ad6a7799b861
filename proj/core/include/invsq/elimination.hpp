#pragma once

#include <array>
#include <vector>

#include "invsq/configuration.hpp"
#include "invsq/genericity.hpp"
#include "invsq/geom.hpp"

namespace invsq {

// Gamma_T is treated as undefined when |k_T |y-T|^2 - 1| <= kGammaDenomEps.
inline constexpr double kGammaDenomEps = 1e-10;

// Gamma_T(y) = |y-T|^2 / (k_T |y-T|^2 - 1) - |T|^2. For any solution (X, Y)
// of the inverse-square system, |X - T|^2 = Gamma_T(Y) + |T|^2.
// Throws SingularLocus near the sphere k_T |y-T|^2 = 1.
double gamma(const Configuration& cfg, Label l, const Point3& y);

// Gamma values for every anchor of cfg (6, or 7 with G).
struct GammaVector {
  std::vector<double> values;
  double operator[](Label l) const { return values[static_cast<std::size_t>(index_of(l))]; }
};
GammaVector gamma_vector(const Configuration& cfg, const Point3& y);

inline constexpr Quadruple kDefaultFrame = {Label::A, Label::B, Label::C, Label::D};

// The X determined by y through the linear system 2(T_1 - T).X = Gamma_T(y) - Gamma_{T_1}(y),
// solved by Cramer's rule over the four anchors of `frame`.
// Throws CoplanarFrame if the frame is coplanar, SingularLocus from gamma.
Point3 recover_x(const Configuration& cfg, const Point3& y, const Quadruple& frame = kDefaultFrame);

using LabelPair = std::array<Label, 2>;

// The fifteen omitted pairs AB, AC, ..., EF; pair i leaves the quadruple used by psi.
const std::array<LabelPair, 15>& omitted_pairs();
Quadruple kept_quadruple(const LabelPair& omitted);

// Phi_T(y): 5x5 determinant with rows (Gamma values), the three coordinate
// rows and a row of ones, over the five anchors other than `omitted`.
double phi(const Configuration& cfg, Label omitted, const Point3& y);

// Psi_{T1,T2}(y): the cleared first-sphere equation over the four anchors
// kept after removing the pair. Throws CoplanarFrame or SingularLocus.
double psi(const Configuration& cfg, const LabelPair& omitted, const Point3& y);

}  // namespace invsq
