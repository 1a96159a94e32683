#include "taskforge/svg.hpp"

namespace forge {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

SvgCanvas::SvgCanvas(int width, int height, std::string_view background)
    : width_(width), height_(height) {
  rect(0, 0, width, height, background);
}

void SvgCanvas::rect(int x, int y, int w, int h, std::string_view fill,
                     std::string_view stroke, int stroke_width) {
  body_ += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" fill=\"" +
           std::string(fill) + "\"";
  if (!stroke.empty()) {
    body_ += " stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
             std::to_string(stroke_width) + "\"";
  }
  body_ += "/>\n";
}

void SvgCanvas::line(int x1, int y1, int x2, int y2, std::string_view stroke, int width) {
  body_ += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"" +
           std::string(stroke) + "\" stroke-width=\"" + std::to_string(width) +
           "\" stroke-linecap=\"square\"/>\n";
}

void SvgCanvas::circle(int cx, int cy, int r, std::string_view fill, std::string_view stroke,
                       int stroke_width) {
  body_ += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) + "\" r=\"" +
           std::to_string(r) + "\" fill=\"" + std::string(fill) + "\"";
  if (!stroke.empty()) {
    body_ += " stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
             std::to_string(stroke_width) + "\"";
  }
  body_ += "/>\n";
}

void SvgCanvas::text(int x, int y, std::string_view s, int size, std::string_view fill,
                     std::string_view anchor, bool bold) {
  body_ += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" font-family=\"monospace\" font-size=\"" + std::to_string(size) + "\" fill=\"" +
           std::string(fill) + "\" text-anchor=\"" + std::string(anchor) + "\"";
  if (bold) body_ += " font-weight=\"bold\"";
  body_ += ">" + xml_escape(s) + "</text>\n";
}

void SvgCanvas::polygon(const std::vector<std::pair<int, int>>& pts, std::string_view fill,
                        std::string_view stroke, int stroke_width) {
  body_ += "<polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ += ' ';
    body_ += std::to_string(pts[i].first) + "," + std::to_string(pts[i].second);
  }
  body_ += "\" fill=\"" + std::string(fill) + "\"";
  if (!stroke.empty()) {
    body_ += " stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
             std::to_string(stroke_width) + "\"";
  }
  body_ += "/>\n";
}

std::string SvgCanvas::finish() const {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
         "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " +
         std::to_string(width_) + " " + std::to_string(height_) + "\">\n" + body_ + "</svg>\n";
}

}  // namespace forge
