#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace forge {

// Minimal deterministic SVG writer: integer geometry, fixed attribute order,
// elements emitted in insertion order, so identical scenes serialize to
// identical bytes on every platform.
class SvgCanvas {
 public:
  SvgCanvas(int width, int height, std::string_view background = "#ffffff");

  void rect(int x, int y, int w, int h, std::string_view fill,
            std::string_view stroke = "", int stroke_width = 0);
  void line(int x1, int y1, int x2, int y2, std::string_view stroke, int width);
  void circle(int cx, int cy, int r, std::string_view fill,
              std::string_view stroke = "", int stroke_width = 0);
  void text(int x, int y, std::string_view s, int size, std::string_view fill = "#000000",
            std::string_view anchor = "middle", bool bold = false);
  void polygon(const std::vector<std::pair<int, int>>& pts, std::string_view fill,
               std::string_view stroke = "", int stroke_width = 0);

  std::string finish() const;

  int width() const { return width_; }
  int height() const { return height_; }

 private:
  int width_, height_;
  std::string body_;
};

// Shared style table: every task image uses the same cell geometry.
constexpr int kCell = 48;        // grid cell size in svg units
constexpr int kThickBorder = 4;  // region borders (aquarium, kakuro cages)
constexpr int kThinLine = 1;
constexpr int kMargin = 24;

std::string xml_escape(std::string_view s);

}  // namespace forge
