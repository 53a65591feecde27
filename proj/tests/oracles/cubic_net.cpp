#include "cubic_net.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace oracle {

const std::array<std::array<int, 2>, 10>& monomial_exponents() {
    static const std::array<std::array<int, 2>, 10> e{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1},
                                                       {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}};
    return e;
}

Cubic random_cubic(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    Cubic c;
    for (auto& v : c) v = {n(rng), n(rng)};
    return c;
}

namespace {

// d[a][b] = d^{a+b} f / dx^a dy^b at (x, y), for a + b <= 3.
using Derivs = std::array<std::array<cd, 4>, 4>;

Derivs derivatives(const Cubic& f, cd x, cd y) {
    Derivs d{};
    const auto& ex = monomial_exponents();
    auto falling = [](int n, int k) {
        int r = 1;
        for (int i = 0; i < k; ++i) r *= n - i;
        return r;
    };
    for (std::size_t m = 0; m < ex.size(); ++m) {
        auto [i, j] = ex[m];
        for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= j; ++b)
                d[a][b] += f[m] * double(falling(i, a) * falling(j, b)) * std::pow(x, i - a) * std::pow(y, j - b);
    }
    return d;
}

using System = std::function<void(const std::vector<cd>& z, std::vector<cd>& f, std::vector<std::vector<cd>>& jac)>;

// Solves J dz = -f by Gaussian elimination with partial pivoting; false when singular.
bool newton_step(std::vector<std::vector<cd>> a, std::vector<cd> b, std::vector<cd>& dz, double* min_pivot) {
    const std::size_t n = b.size();
    double smallest = INFINITY;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        smallest = std::min(smallest, std::abs(a[p][c]));
        if (std::abs(a[p][c]) == 0) return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            cd f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    dz.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        cd s = -b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * dz[k];
        dz[i] = s / a[i][i];
    }
    if (min_pivot) *min_pivot = smallest;
    return true;
}

double norm(const std::vector<cd>& v) {
    double s = 0;
    for (auto c : v) s += std::norm(c);
    return std::sqrt(s);
}

RootSearchResult search(const System& sys, std::size_t n, const RootSearchOptions& opt) {
    RootSearchResult out;
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> logscale(-1.0, 1.5);
    std::vector<cd> f(n), dz;
    std::vector<std::vector<cd>> jac(n, std::vector<cd>(n));
    int quiet = 0;
    while (out.batches < opt.max_batches && quiet < opt.stable_batches) {
        std::size_t before = out.roots.size();
        for (int s = 0; s < opt.batch; ++s) {
            ++out.starts;
            double scale = std::pow(10.0, logscale(rng));
            std::vector<cd> z(n);
            for (auto& c : z) c = cd(g(rng), g(rng)) * scale;
            bool converged = false;
            for (int it = 0; it < opt.max_iterations; ++it) {
                sys(z, f, jac);
                if (!newton_step(jac, f, dz, nullptr)) break;
                double step = norm(dz), size = norm(z);
                if (!std::isfinite(step) || size > 1e8) break;
                if (step > 1 + size) {  // damp long steps
                    for (auto& c : dz) c *= (1 + size) / step;
                }
                for (std::size_t i = 0; i < n; ++i) z[i] += dz[i];
                if (step < 1e-12 * (1 + size)) {
                    converged = true;
                    break;
                }
            }
            if (!converged) continue;
            sys(z, f, jac);
            double pivot = 0;
            if (norm(f) > 1e-8 * (1 + std::pow(norm(z), 4))) continue;
            if (!newton_step(jac, f, dz, &pivot) || pivot < 1e-8) continue;  // singular root
            bool fresh = true;
            for (const auto& r : out.roots) {
                std::vector<cd> d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = r[i] - z[i];
                if (norm(d) < 1e-6 * (1 + norm(z))) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) out.roots.push_back(z);
        }
        ++out.batches;
        quiet = out.roots.size() == before ? quiet + 1 : 0;
    }
    out.stabilized = quiet >= opt.stable_batches;
    return out;
}

}  // namespace

RootSearchResult singular_members_of_pencil(const Cubic& f0, const Cubic& f1, const RootSearchOptions& opt) {
    System sys = [&](const std::vector<cd>& z, std::vector<cd>& f, std::vector<std::vector<cd>>& j) {
        Derivs a = derivatives(f0, z[0], z[1]), b = derivatives(f1, z[0], z[1]);
        cd t = z[2];
        auto gd = [&](int p, int q) { return a[p][q] + t * b[p][q]; };
        f = {gd(0, 0), gd(1, 0), gd(0, 1)};
        j = {{gd(1, 0), gd(0, 1), b[0][0]}, {gd(2, 0), gd(1, 1), b[1][0]}, {gd(1, 1), gd(0, 2), b[0][1]}};
    };
    return search(sys, 3, opt);
}

RootSearchResult cuspidal_members_of_net(const Cubic& f0, const Cubic& f1, const Cubic& f2,
                                         const RootSearchOptions& opt) {
    System sys = [&](const std::vector<cd>& z, std::vector<cd>& f, std::vector<std::vector<cd>>& j) {
        Derivs a = derivatives(f0, z[0], z[1]), b = derivatives(f1, z[0], z[1]), c = derivatives(f2, z[0], z[1]);
        auto gd = [&](int p, int q) { return a[p][q] + z[2] * b[p][q] + z[3] * c[p][q]; };
        cd gxx = gd(2, 0), gxy = gd(1, 1), gyy = gd(0, 2);
        f = {gd(0, 0), gd(1, 0), gd(0, 1), gxx * gyy - gxy * gxy};
        auto hess_dx = gd(3, 0) * gyy + gxx * gd(1, 2) - 2.0 * gxy * gd(2, 1);
        auto hess_dy = gd(2, 1) * gyy + gxx * gd(0, 3) - 2.0 * gxy * gd(1, 2);
        auto hess_dl = [&](const Derivs& h) { return h[2][0] * gyy + gxx * h[0][2] - 2.0 * gxy * h[1][1]; };
        j = {{gd(1, 0), gd(0, 1), b[0][0], c[0][0]},
             {gd(2, 0), gd(1, 1), b[1][0], c[1][0]},
             {gd(1, 1), gd(0, 2), b[0][1], c[0][1]},
             {hess_dx, hess_dy, hess_dl(b), hess_dl(c)}};
    };
    return search(sys, 4, opt);
}

}  // namespace oracle
