#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "invsq/geom.hpp"

namespace invsq {

enum class Label : int { A = 0, B, C, D, E, F, G };

inline constexpr std::array<Label, 6> kSixLabels = {Label::A, Label::B, Label::C,
                                                    Label::D, Label::E, Label::F};

constexpr int index_of(Label l) { return static_cast<int>(l); }
constexpr Label label_at(int i) { return static_cast<Label>(i); }
std::string_view label_name(Label l);

// Six anchors A..F, the target pair (X*, Y*) and an optional seventh anchor G.
// All points are pairwise distinct; the constructor throws
// DegenerateConfiguration otherwise. k_T is cached for every anchor.
class Configuration {
 public:
  Configuration(const std::array<Point3, 6>& anchors, const Point3& x_star, const Point3& y_star,
                std::optional<Point3> g = std::nullopt);

  const std::array<Point3, 6>& anchors() const { return anchors_; }
  const Point3& x_star() const { return x_star_; }
  const Point3& y_star() const { return y_star_; }
  const std::optional<Point3>& g() const { return g_; }
  bool has_g() const { return g_.has_value(); }

  // Throws std::out_of_range for G on a configuration without G.
  const Point3& anchor(Label l) const;

  // k_T = 1/|X* - T|^2 + 1/|Y* - T|^2.
  double k(Label l) const;

  // 6 anchors, or 7 when G is present.
  int anchor_count() const { return has_g() ? 7 : 6; }

  // Anchors, X*, Y* and G, in that order.
  std::vector<Point3> all_points() const;

  // Largest absolute coordinate over all_points().
  double scale() const { return scale_; }
  // Largest pairwise distance among the anchors.
  double diameter() const;
  Point3 centroid() const;

  Configuration with_g(const Point3& g) const { return Configuration(anchors_, x_star_, y_star_, g); }
  Configuration without_g() const { return Configuration(anchors_, x_star_, y_star_); }

 private:
  std::array<Point3, 6> anchors_;
  Point3 x_star_;
  Point3 y_star_;
  std::optional<Point3> g_;
  std::array<double, 7> k_{};
  double scale_ = 0.0;
};

// Free-function form of Configuration::k.
double k_value(const Configuration& cfg, Label l);

}  // namespace invsq
