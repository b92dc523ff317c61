#pragma once

#include "chebtrot/io.hpp"

#include <string>
#include <vector>

namespace chebtrot {

struct PlotSpec {
    std::string title;
    std::string x;               // column name
    std::vector<std::string> y;  // one series per column
    std::string group;           // optional: split the first y column by this column's values
    bool log_x = false;
    bool log_y = false;
};

// Minimal self-contained line plot. Depends only on the CSV content and the spec,
// so re-rendering the same file gives the same bytes.
std::string render_svg(const ParsedCsv& csv, const PlotSpec& spec);

}  // namespace chebtrot
