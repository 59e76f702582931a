#pragma once

// Minimal SVG writer for report plots.

#include <sstream>
#include <string>
#include <string_view>

namespace dfjss::svg {

class Document {
public:
    Document(double width, double height);

    void rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke = "none");
    void line(double x1, double y1, double x2, double y2, std::string_view stroke = "#000", double width = 1.0);
    void text(double x, double y, std::string_view content, double size = 11, std::string_view anchor = "start",
              std::string_view fill = "#000");
    void polyline(std::string_view points, std::string_view stroke, double width = 1.5);

    std::string str() const;

private:
    double width_, height_;
    std::ostringstream body_;
};

std::string escape(std::string_view s);
// Sequential colour from white (0) to dark blue (1).
std::string heat_colour(double t);
// Categorical palette entry.
std::string palette(std::size_t i);

}  // namespace dfjss::svg
