#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "invsq/configuration.hpp"
#include "invsq/solver.hpp"

namespace invsq {

// A parsed configuration file:
//
//   # name: coaxial example        (optional metadata)
//   A = 1 0 1
//   ...
//   X* = 0 0 3
//   Y* = 0 0 -2
//   G = 0.5 0.25 2                  (optional)
//
// '#' starts a comment; blank lines are ignored; labels are case-sensitive.
struct ConfigFile {
  Configuration config;
  std::string name;
  std::vector<std::string> comments;
};

// Throws ParseError (malformed line, duplicate or missing label) and
// DegenerateConfiguration (coincident points).
ConfigFile parse_config(std::string_view text);
ConfigFile load_config(const std::string& path);

// Inverse of parse_config; coordinates with 17 significant digits.
std::string print_config(const ConfigFile& file);

// %.17g: round-trips every double.
std::string format_real(double v);

// Header plus one row per solution: x1 x2 x3 y1 y2 y3 residual trivial.
std::string format_solutions_tsv(const std::vector<SolutionPair>& solutions);

// One "x y z" line per point.
std::string format_point_cloud(const std::vector<Point3>& points);

}  // namespace invsq
