#include <algorithm>

#include "matchtoric/toric.hpp"

namespace matchtoric {

PointConfiguration::PointConfiguration(int dim, std::vector<std::vector<int>> pts)
    : ambient_dim(dim), points(std::move(pts)) {
    if (dim < 0) throw invalid_input("ambient dimension must be >= 0");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw invalid_input("point dimension mismatch");
        for (int c : p)
            if (c < 0) throw invalid_input("points must have nonnegative coordinates");
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] == points[i - 1]) throw invalid_input("points must be distinct");
}

long long PointConfiguration::point_degree(int i) const {
    long long s = 0;
    for (int c : points[i - 1]) s = checked_add(s, c);
    return s;
}

PointConfiguration config_from_masks(const std::vector<std::uint64_t>& masks, int ambient_dim) {
    std::vector<std::vector<int>> pts;
    pts.reserve(masks.size());
    for (std::uint64_t m : masks) {
        std::vector<int> p(ambient_dim, 0);
        for (int c = 0; c < ambient_dim; ++c) p[c] = (m >> c) & 1;
        pts.push_back(std::move(p));
    }
    return PointConfiguration(ambient_dim, std::move(pts));
}

PointConfiguration lattice_points(const SimpleGraph& g, SubsetKind kind) {
    int ambient = kind == SubsetKind::stable_sets ? g.d : g.n();
    return config_from_masks(enumerate_subsets(g, kind), ambient);
}

}  // namespace matchtoric
