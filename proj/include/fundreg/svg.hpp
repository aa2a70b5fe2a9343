#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fundreg/tilespace.hpp"

namespace fundreg {

/// "#rrggbb" derived from an FNV-1a hash of the label; no randomness.
std::string palette_color(std::string_view label);

/// Minimal SVG writer in plane coordinates (y up). Output is a pure function of
/// the sequence of calls.
class SvgDocument {
 public:
  explicit SvgDocument(double scale = 80.0) : scale_(scale) {}

  void polygon(std::span<const PlanePoint> corners, std::string_view fill, std::string_view stroke = "#333333");
  void segment(const PlanePoint& a, const PlanePoint& b, std::string_view stroke, double width = 2.0,
               bool dashed = false);
  /// `count` chevrons at the midpoint of a -> b, pointing along the edge.
  void arrows(const PlanePoint& a, const PlanePoint& b, int count, std::string_view stroke = "#000000");
  void hollow_dot(const PlanePoint& at);
  void label(const PlanePoint& at, std::string_view text, double size = 10.0);

  std::string str(std::string_view title = {}) const;

 private:
  struct XY {
    double x, y;
  };
  XY to_screen(const PlanePoint& p);
  void track(double x, double y);

  double scale_;
  std::vector<std::string> items_;
  bool has_bounds_ = false;
  double min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
};

/// A subset of X drawn through the covering map in one colour.
struct ColoredPiece {
  AtomSet atoms;
  std::string label;
};

/// Faces become filled triangles, edges thick segments, coloured per label.
std::string render_pieces(std::span<const ColoredPiece> pieces, std::string_view title = {});

}  // namespace fundreg
