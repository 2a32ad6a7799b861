#include "invsq/configuration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "invsq/errors.hpp"

namespace invsq {

std::string_view label_name(Label l) {
  static constexpr std::array<std::string_view, 7> names = {"A", "B", "C", "D", "E", "F", "G"};
  return names.at(static_cast<std::size_t>(index_of(l)));
}

namespace {

// Index into all_points(): A..F, X*, Y*, G.
std::string point_name(std::size_t i) {
  if (i < 6) return std::string(label_name(label_at(static_cast<int>(i))));
  if (i == 6) return "X*";
  if (i == 7) return "Y*";
  return "G";
}

double k_from(const Point3& x_star, const Point3& y_star, const Point3& t) {
  return 1.0 / dist_sq(x_star, t) + 1.0 / dist_sq(y_star, t);
}

}  // namespace

Configuration::Configuration(const std::array<Point3, 6>& anchors, const Point3& x_star,
                             const Point3& y_star, std::optional<Point3> g)
    : anchors_(anchors), x_star_(x_star), y_star_(y_star), g_(g) {
  const auto pts = all_points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) {
        throw DegenerateConfiguration("points " + point_name(i) + " and " +
                                      point_name(j) + " coincide");
      }
    }
  }
  for (int i = 0; i < anchor_count(); ++i) {
    k_[static_cast<std::size_t>(i)] = k_from(x_star_, y_star_, anchor(label_at(i)));
  }
  scale_ = coordinate_scale(pts);
}

const Point3& Configuration::anchor(Label l) const {
  if (l == Label::G) {
    if (!g_) throw std::out_of_range("configuration has no seventh anchor G");
    return *g_;
  }
  return anchors_[static_cast<std::size_t>(index_of(l))];
}

double Configuration::k(Label l) const {
  if (l == Label::G && !g_) throw std::out_of_range("configuration has no seventh anchor G");
  return k_[static_cast<std::size_t>(index_of(l))];
}

std::vector<Point3> Configuration::all_points() const {
  std::vector<Point3> pts(anchors_.begin(), anchors_.end());
  pts.push_back(x_star_);
  pts.push_back(y_star_);
  if (g_) pts.push_back(*g_);
  return pts;
}

double Configuration::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    for (std::size_t j = i + 1; j < anchors_.size(); ++j) {
      d = std::max(d, dist_sq(anchors_[i], anchors_[j]));
    }
  }
  return std::sqrt(d);
}

Point3 Configuration::centroid() const {
  Point3 c;
  for (const auto& a : anchors_) c = c + a;
  return (1.0 / 6.0) * c;
}

double k_value(const Configuration& cfg, Label l) { return cfg.k(l); }

}  // namespace invsq
