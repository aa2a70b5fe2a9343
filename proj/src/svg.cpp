#include "fundreg/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdint>

namespace fundreg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::string hex_byte(double v) {
  const int b = std::clamp(static_cast<int>(std::lround(v * 255.0)), 0, 255);
  char buf[3];
  std::snprintf(buf, sizeof buf, "%02x", b);
  return buf;
}

}  // namespace

std::string palette_color(std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  const double hue = static_cast<double>(h % 360);
  const double sat = 0.55 + 0.1 * static_cast<double>((h >> 16) % 4) / 3.0;
  const double light = 0.45 + 0.15 * static_cast<double>((h >> 24) % 3) / 2.0;
  // HSL -> RGB
  const double c = (1.0 - std::fabs(2.0 * light - 1.0)) * sat;
  const double hp = hue / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  std::array<double, 3> rgb{};
  if (hp < 1) rgb = {c, x, 0};
  else if (hp < 2) rgb = {x, c, 0};
  else if (hp < 3) rgb = {0, c, x};
  else if (hp < 4) rgb = {0, x, c};
  else if (hp < 5) rgb = {x, 0, c};
  else rgb = {c, 0, x};
  const double m = light - c / 2.0;
  return "#" + hex_byte(rgb[0] + m) + hex_byte(rgb[1] + m) + hex_byte(rgb[2] + m);
}

SvgDocument::XY SvgDocument::to_screen(const PlanePoint& p) {
  const XY s{to_double(p.first) * scale_, -to_double(p.second) * scale_};
  track(s.x, s.y);
  return s;
}

void SvgDocument::track(double x, double y) {
  if (!has_bounds_) {
    min_x_ = max_x_ = x;
    min_y_ = max_y_ = y;
    has_bounds_ = true;
    return;
  }
  min_x_ = std::min(min_x_, x);
  max_x_ = std::max(max_x_, x);
  min_y_ = std::min(min_y_, y);
  max_y_ = std::max(max_y_, y);
}

void SvgDocument::polygon(std::span<const PlanePoint> corners, std::string_view fill, std::string_view stroke) {
  std::string pts;
  for (const auto& p : corners) {
    const auto s = to_screen(p);
    if (!pts.empty()) pts += ' ';
    pts += fmt(s.x) + "," + fmt(s.y);
  }
  items_.push_back("<polygon points=\"" + pts + "\" fill=\"" + std::string(fill) + "\" fill-opacity=\"0.8\" stroke=\"" +
                   std::string(stroke) + "\" stroke-width=\"0.5\"/>");
}

void SvgDocument::segment(const PlanePoint& a, const PlanePoint& b, std::string_view stroke, double width,
                          bool dashed) {
  const auto s = to_screen(a);
  const auto t = to_screen(b);
  items_.push_back("<line x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(s.y) + "\" x2=\"" + fmt(t.x) + "\" y2=\"" + fmt(t.y) +
                   "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + fmt(width) + "\"" +
                   (dashed ? " stroke-dasharray=\"4,3\"" : "") + "/>");
}

void SvgDocument::arrows(const PlanePoint& a, const PlanePoint& b, int count, std::string_view stroke) {
  const auto s = to_screen(a);
  const auto t = to_screen(b);
  const double dx = t.x - s.x, dy = t.y - s.y;
  const double len = std::hypot(dx, dy);
  if (len == 0 || count <= 0) return;
  const double ux = dx / len, uy = dy / len;
  const double size = 5.0, gap = 4.0;
  for (int k = 0; k < count; ++k) {
    const double offset = (k - (count - 1) / 2.0) * gap;
    const double cx = (s.x + t.x) / 2 + ux * offset, cy = (s.y + t.y) / 2 + uy * offset;
    const double bx = cx - ux * size, by = cy - uy * size;
    items_.push_back("<polyline points=\"" + fmt(bx - uy * size) + "," + fmt(by + ux * size) + " " + fmt(cx) + "," +
                     fmt(cy) + " " + fmt(bx + uy * size) + "," + fmt(by - ux * size) + "\" fill=\"none\" stroke=\"" +
                     std::string(stroke) + "\" stroke-width=\"1.2\"/>");
  }
}

void SvgDocument::hollow_dot(const PlanePoint& at) {
  const auto s = to_screen(at);
  items_.push_back("<circle cx=\"" + fmt(s.x) + "\" cy=\"" + fmt(s.y) +
                   "\" r=\"3.00\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.00\"/>");
}

void SvgDocument::label(const PlanePoint& at, std::string_view text, double size) {
  const auto s = to_screen(at);
  items_.push_back("<text x=\"" + fmt(s.x) + "\" y=\"" + fmt(s.y) + "\" font-family=\"monospace\" font-size=\"" +
                   fmt(size) + "\" text-anchor=\"middle\">" + std::string(text) + "</text>");
}

std::string SvgDocument::str(std::string_view title) const {
  const double pad = 20.0;
  const double x0 = (has_bounds_ ? min_x_ : 0) - pad, y0 = (has_bounds_ ? min_y_ : 0) - pad;
  const double w = (has_bounds_ ? max_x_ - min_x_ : 0) + 2 * pad, h = (has_bounds_ ? max_y_ - min_y_ : 0) + 2 * pad;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(x0) + " " + fmt(y0) + " " + fmt(w) + " " +
         fmt(h) + "\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) + "\">\n";
  if (!title.empty()) out += "<title>" + std::string(title) + "</title>\n";
  for (const auto& item : items_) out += item + "\n";
  out += "</svg>\n";
  return out;
}

std::string render_pieces(std::span<const ColoredPiece> pieces, std::string_view title) {
  SvgDocument doc;
  // Faces first so edges stay visible on top.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& piece : pieces) {
      const std::string color = palette_color(piece.label);
      for (const auto& atom : piece.atoms) {
        const auto at = [&](int x, int y) { return covering_map(atom.room, Rational(x), Rational(y)); };
        if (pass == 0 && is_face(atom.kind)) {
          const std::array<PlanePoint, 3> tri =
              atom.kind == AtomKind::UpperFace ? std::array{at(0, 0), at(1, 1), at(0, 1)}
                                               : std::array{at(0, 0), at(1, 0), at(1, 1)};
          doc.polygon(tri, color);
        } else if (pass == 1 && !is_face(atom.kind)) {
          switch (atom.kind) {
            case AtomKind::Diagonal: doc.segment(at(0, 0), at(1, 1), color); break;
            case AtomKind::LeftWall: doc.segment(at(0, 0), at(0, 1), color); break;
            case AtomKind::BottomWall: doc.segment(at(0, 0), at(1, 0), color); break;
            default: break;
          }
        }
      }
    }
  }
  return doc.str(title);
}

}  // namespace fundreg
