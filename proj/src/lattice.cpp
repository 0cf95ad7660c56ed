#include <algorithm>
#include <cstdlib>

#include "matchtoric/toric.hpp"

namespace matchtoric {

// Integer row reduction of the homogenized point matrix with a unimodular
// transformation; the transformation rows matching zero rows span the kernel.
std::vector<std::vector<long long>> lattice_kernel_basis(const PointConfiguration& a) {
    int n = a.n(), d = a.ambient_dim;
    if (n == 0) return {};
    std::vector<std::vector<long long>> p(n, std::vector<long long>(d + 1, 0));
    std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < d; ++c) p[i][c] = a.points[i][c];
        p[i][d] = 1;
        u[i][i] = 1;
    }
    auto sub_mult = [&](std::vector<long long>& x, const std::vector<long long>& y,
                        long long q) {
        for (std::size_t c = 0; c < x.size(); ++c)
            x[c] = checked_sub(x[c], checked_mul(q, y[c]));
    };
    int row = 0;
    for (int col = 0; col <= d && row < n; ++col) {
        for (;;) {
            int best = -1;
            for (int r = row; r < n; ++r)
                if (p[r][col] != 0 &&
                    (best == -1 || std::llabs(p[r][col]) < std::llabs(p[best][col])))
                    best = r;
            if (best == -1) break;
            std::swap(p[row], p[best]);
            std::swap(u[row], u[best]);
            bool others = false;
            for (int r = row + 1; r < n; ++r) {
                if (p[r][col] == 0) continue;
                long long q = p[r][col] / p[row][col];
                if (q != 0) {
                    sub_mult(p[r], p[row], q);
                    sub_mult(u[r], u[row], q);
                }
                if (p[r][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (p[row][col] != 0) {
            if (p[row][col] < 0) {
                for (auto& x : p[row]) x = -x;
                for (auto& x : u[row]) x = -x;
            }
            ++row;
        }
    }
    std::vector<std::vector<long long>> kernel;
    for (int r = row; r < n; ++r) {
        for (int c = 0; c <= d; ++c)
            if (p[r][c] != 0) throw std::logic_error("kernel extraction failed");
        auto v = u[r];
        for (long long x : v)
            if (x != 0) {
                if (x < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace matchtoric
