#pragma once

#include <memory>
#include <string>
#include <vector>

namespace paracalc {

// A single global coordinate chart; tensors reference it by shared pointer
// and are compared chart-wise by content.
struct Chart {
    std::string name;
    std::vector<std::string> coords;

    int dim() const { return int(coords.size()); }
    int index_of(const std::string& c) const {
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i] == c) return int(i);
        return -1;
    }
};

using ChartPtr = std::shared_ptr<const Chart>;

// Validates dimension >= 1, identifier-shaped unique names, and that no
// coordinate shadows a basis token (d, dx-style composites, sin/cos/exp).
ChartPtr make_chart(const std::string& name, const std::vector<std::string>& coords);

bool same_chart(const ChartPtr& a, const ChartPtr& b);
void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what);

struct ProductChart {
    ChartPtr chart;
    std::string time_coord; // "t", or "t1", "t2", ... on collision
    bool renamed = false;
};

// M x R: appends the line coordinate to the chart.
ProductChart product_with_line(const ChartPtr& m);

} // namespace paracalc
