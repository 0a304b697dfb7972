#pragma once

#include <string>
#include <vector>

namespace flexarm {
namespace svg {

struct Series {
  std::string label;
  std::vector<double> x, y;
  std::string color = "#1f6fb2";
};

struct Panel {
  std::string title;
  std::string y_label;
  std::vector<Series> series;
};

/// Renders stacked line-plot panels sharing the x axis as one self-contained
/// SVG document (inline styles, no external references). Long series are
/// decimated to keep the output bounded.
std::string render_panels(const std::vector<Panel>& panels,
                          const std::string& x_label, int width = 960,
                          int panel_height = 190);

}  // namespace svg
}  // namespace flexarm
