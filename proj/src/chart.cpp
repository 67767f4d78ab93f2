#include "paracalc/chart.hpp"

#include <cctype>
#include <set>

#include "paracalc/errors.hpp"

namespace paracalc {

ChartPtr make_chart(const std::string& name, const std::vector<std::string>& coords) {
    if (coords.empty()) throw DimensionError("chart '" + name + "' needs at least one coordinate");
    std::set<std::string> seen;
    for (const auto& c : coords) {
        if (c.empty() || (!std::isalpha((unsigned char)c[0]) && c[0] != '_'))
            throw Error("bad coordinate name '" + c + "' in chart '" + name + "'");
        for (char ch : c)
            if (!std::isalnum((unsigned char)ch) && ch != '_')
                throw Error("bad coordinate name '" + c + "' in chart '" + name + "'");
        if (c == "d" || c == "sin" || c == "cos" || c == "exp")
            throw Error("coordinate name '" + c + "' is reserved");
        if (!seen.insert(c).second)
            throw Error("duplicate coordinate '" + c + "' in chart '" + name + "'");
    }
    // A coordinate named d<other-coordinate> would be ambiguous with the
    // basis tokens of the structure DSL.
    for (const auto& c : coords)
        for (const auto& o : coords)
            if (c == "d" + o)
                throw Error("coordinate '" + c + "' collides with basis token d" + o);
    auto ch = std::make_shared<Chart>();
    ch->name = name;
    ch->coords = coords;
    return ch;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->coords == b->coords;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what) {
    if (!same_chart(a, b))
        throw ChartMismatchError(std::string(what) + ": operands live on different charts ('" +
                                 (a ? a->name : "?") + "' vs '" + (b ? b->name : "?") + "')");
}

ProductChart product_with_line(const ChartPtr& m) {
    std::string t = "t";
    bool renamed = false;
    int suffix = 0;
    while (m->index_of(t) >= 0) {
        renamed = true;
        t = "t" + std::to_string(++suffix);
        if (suffix > 32) throw Error("cannot pick a line coordinate name");
    }
    auto coords = m->coords;
    coords.push_back(t);
    return ProductChart{make_chart(m->name + "xR", coords), t, renamed};
}

} // namespace paracalc
