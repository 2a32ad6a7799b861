#include "invsq/config_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "invsq/errors.hpp"

namespace invsq {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::array<std::string_view, 9> kLabels = {"A", "B", "C", "D", "E", "F", "G", "X*", "Y*"};

}  // namespace

ConfigFile parse_config(std::string_view text) {
  static const std::regex line_re(
      R"(^(\S+)\s*=\s*(\S+)\s+(\S+)\s+(\S+)$)");
  static const std::regex number_re(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");

  std::map<std::string, Point3> seen;
  std::string name;
  std::vector<std::string> comments;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view body = raw;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      const std::string_view comment = trim(raw.substr(hash + 1));
      if (comment.rfind("name:", 0) == 0) {
        name = std::string(trim(comment.substr(5)));
      } else if (!comment.empty()) {
        comments.emplace_back(comment);
      }
      body = raw.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;

    const std::string line(body);
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) {
      throw ParseError(line_no, "expected 'LABEL = x y z', got '" + line + "'");
    }
    const std::string label = m[1];
    if (std::find(kLabels.begin(), kLabels.end(), label) == kLabels.end()) {
      throw ParseError(line_no, "unknown label '" + label + "'");
    }
    std::array<double, 3> xyz{};
    for (int i = 0; i < 3; ++i) {
      const std::string tok = m[static_cast<std::size_t>(i) + 2];
      if (!std::regex_match(tok, number_re)) {
        throw ParseError(line_no, "malformed coordinate '" + tok + "'");
      }
      xyz[static_cast<std::size_t>(i)] = std::strtod(tok.c_str(), nullptr);
      if (!std::isfinite(xyz[static_cast<std::size_t>(i)])) {
        throw ParseError(line_no, "coordinate out of range '" + tok + "'");
      }
    }
    if (seen.contains(label)) throw ParseError(line_no, "duplicate label '" + label + "'");
    seen.emplace(label, Point3(xyz[0], xyz[1], xyz[2]));
  }

  for (std::string_view l : kLabels) {
    if (l != "G" && !seen.contains(std::string(l))) {
      throw ParseError(0, "missing label '" + std::string(l) + "'");
    }
  }
  std::array<Point3, 6> anchors;
  for (int i = 0; i < 6; ++i) anchors[static_cast<std::size_t>(i)] = seen.at(std::string(kLabels[static_cast<std::size_t>(i)]));
  std::optional<Point3> g;
  if (auto it = seen.find("G"); it != seen.end()) g = it->second;
  return ConfigFile{Configuration(anchors, seen.at("X*"), seen.at("Y*"), g), name, comments};
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string point_fields(const Point3& p, char sep) {
  return format_real(p.x) + sep + format_real(p.y) + sep + format_real(p.z);
}

}  // namespace

std::string print_config(const ConfigFile& file) {
  std::string out;
  if (!file.name.empty()) out += "# name: " + file.name + "\n";
  for (const auto& c : file.comments) out += "# " + c + "\n";
  const Configuration& cfg = file.config;
  for (int i = 0; i < 6; ++i) {
    out += std::string(label_name(label_at(i))) + " = " + point_fields(cfg.anchors()[static_cast<std::size_t>(i)], ' ') + "\n";
  }
  out += "X* = " + point_fields(cfg.x_star(), ' ') + "\n";
  out += "Y* = " + point_fields(cfg.y_star(), ' ') + "\n";
  if (cfg.has_g()) out += "G = " + point_fields(*cfg.g(), ' ') + "\n";
  return out;
}

std::string format_solutions_tsv(const std::vector<SolutionPair>& solutions) {
  std::string out = "x1\tx2\tx3\ty1\ty2\ty3\tresidual\ttrivial\n";
  for (const auto& s : solutions) {
    out += point_fields(s.x, '\t') + '\t' + point_fields(s.y, '\t') + '\t' + format_real(s.residual_norm) + '\t' +
           (s.is_trivial ? "1" : "0") + "\n";
  }
  return out;
}

std::string format_point_cloud(const std::vector<Point3>& points) {
  std::string out;
  for (const auto& p : points) out += point_fields(p, ' ') + "\n";
  return out;
}

}  // namespace invsq
