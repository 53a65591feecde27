#include "tropcount/count.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tropcount/errors.hpp"
#include "tropcount/linalg.hpp"
#include "tropcount/log.hpp"
#include "tropcount/simplex.hpp"

namespace tropcount {

std::size_t marked_point_count(const LatticePolygon& polygon, AdmissibilityMode mode) {
    if (mode == AdmissibilityMode::Nodal) return lattice_points(polygon).boundary.size() - 1;
    return static_cast<std::size_t>(problem_parameters(polygon).points);
}

Integer weight(const PlaneTropicalCurve& c, const OrientedForest& forest, AdmissibilityMode mode) {
    Integer w = 1;
    for (const auto& cell : c.dual().cells())
        if (cell.size() == 3) w *= normalized_area(cell);
    if (mode == AdmissibilityMode::OneCusp) {
        if (!forest.sigma) throw InternalError("weight: cusp curve without sigma edges");
        LatticeSegment s1 = c.dual().segment(forest.sigma->first);
        LatticeSegment s2 = c.dual().segment(forest.sigma->second);
        Int det = cross(s1.vector(), s2.vector());
        w *= det < 0 ? -det : det;
    }
    return w;
}

namespace {

LatticePoint off_line_vertex(const LatticePolygon& cell, LatticePoint a, LatticePoint b) {
    for (const auto& v : cell.vertices())
        if (orient(a, b, v) != 0) return v;
    throw InternalError("cell without a vertex off its own edge");
}

Rational rdot(LatticePoint u, const RationalPoint& p) { return p.x * u.x + p.y * u.y; }

// g . t + offset . x > 0, where x is the marked point (offset zero for convexity rows)
struct Inequality {
    std::vector<Rational> g;
    std::vector<double> gd;
    LatticePoint offset;
};

std::vector<double> to_double(const std::vector<Rational>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
    return out;
}

// The lifts inducing S, nu = K t with nu(first vertex) = 0, and the linear
// data of the incidence problem.
struct SubdivisionData {
    Subdivision sub;
    std::size_t dim = 0;
    std::vector<std::vector<Rational>> basis;  // per vertex: row of K
    std::vector<std::vector<Rational>> edge_row;  // per edge: K_a - K_b
    std::vector<LatticePoint> edge_rhs;           // per edge: a - b
    std::vector<Inequality> convexity;
    std::vector<std::vector<Inequality>> interior;  // per edge, one per adjacent cell
    GammaGraph gamma;

    explicit SubdivisionData(Subdivision s) : sub(std::move(s)), gamma(gamma_graph(sub)) {
        const std::size_t nv = sub.vertices().size();
        RationalMatrix eq = coplanarity_system(sub);
        std::vector<Rational> pin(nv);
        pin[0] = 1;
        eq.append_row(pin);
        auto kernel = nullspace(eq);
        dim = kernel.size();
        basis.assign(nv, std::vector<Rational>(dim));
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t v = 0; v < nv; ++v) basis[v][j] = kernel[j][v];

        auto diff = [&](std::size_t u, std::size_t v) {
            std::vector<Rational> out(dim);
            for (std::size_t j = 0; j < dim; ++j) out[j] = basis[u][j] - basis[v][j];
            return out;
        };
        for (const auto& e : sub.edges()) {
            LatticePoint a = sub.vertex(e.a), b = sub.vertex(e.b);
            edge_row.push_back(diff(e.a, e.b));
            edge_rhs.push_back(a - b);
            std::vector<Inequality> sides;
            for (int ci : e.cells) {
                if (ci < 0) continue;
                LatticePoint c = off_line_vertex(sub.cells()[ci], a, b);
                auto g = diff(sub.vertex_index(c), e.a);
                sides.push_back({g, to_double(g), a - c});
            }
            interior.push_back(std::move(sides));
        }
        RationalMatrix fold = folding_system(sub);
        for (std::size_t i = 0; i < fold.rows(); ++i) {
            std::vector<Rational> g(dim);
            auto row = fold.row(i);
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t v = 0; v < nv; ++v) g[j] += row[v] * basis[v][j];
            convexity.push_back({g, to_double(g), {0, 0}});
        }
    }

    LiftingFunction lift(const std::vector<Rational>& t) const {
        LiftingFunction nu;
        for (std::size_t v = 0; v < basis.size(); ++v) nu.values[sub.vertex(v)] = dot(basis[v], t);
        return nu.normalized();
    }

    // Exact strict check of every inequality at t; throws on a tie.
    bool strictly_satisfied(const std::vector<Rational>& t, const MarkedConfiguration& marks,
                            const PointAssignment& assignment) const {
        auto check = [&](const Inequality& q, const RationalPoint* x) {
            Rational v = dot(q.g, t);
            if (x) v += rdot(q.offset, *x);
            if (v == 0) throw NonGenericConfiguration("incidence inequality holds with equality on " + to_string(sub));
            return v > 0;
        };
        for (const auto& q : convexity)
            if (!check(q, nullptr)) return false;
        for (std::size_t i = 0; i < assignment.size(); ++i)
            for (const auto& q : interior[assignment[i]])
                if (!check(q, &marks.points[i])) return false;
        return true;
    }
};

struct Search {
    const SubdivisionData& data;
    const MarkedConfiguration& marks;
    AdmissibilityMode mode;
    std::vector<SolvedCurve>& out;

    const std::size_t r = data.dim;
    PointAssignment assignment;
    std::vector<bool> used = std::vector<bool>(data.sub.edges().size(), false);
    long lp_calls = 0;

    Search(const SubdivisionData& d, const MarkedConfiguration& m, AdmissibilityMode md, std::vector<SolvedCurve>& o)
        : data(d), marks(m), mode(md), out(o) {}

    // Every component of the graph minus the marked edges still needs a free end.
    bool components_have_free_ends() const {
        const auto& g = data.gamma;
        std::vector<std::size_t> parent(g.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t e = 0; e < g.ends.size(); ++e) {
            if (used[e]) continue;
            parent[find(g.ends[e].first)] = find(g.ends[e].second);
        }
        std::vector<bool> leaf(g.size(), false);
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g.is_leaf[i]) leaf[find(i)] = true;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!g.is_leaf[i] && !leaf[find(i)]) return false;
        return true;
    }

    // t = t0 + sum_j z_j N[j]
    void recurse(const std::vector<Rational>& t0, const std::vector<std::vector<Rational>>& N) {
        const std::size_t k = assignment.size();
        if (k == marks.size()) {
            leaf(t0);
            return;
        }
        const RationalPoint& x = marks.points[k];
        for (std::size_t e = 0; e < used.size(); ++e) {
            if (used[e]) continue;
            used[e] = true;
            if (components_have_free_ends()) {
                assignment.push_back(e);
                extend(t0, N, e, x);
                assignment.pop_back();
            }
            used[e] = false;
        }
    }

    void extend(const std::vector<Rational>& t0, const std::vector<std::vector<Rational>>& N, std::size_t e,
                const RationalPoint& x) {
        const auto& w = data.edge_row[e];
        Rational beta = rdot(data.edge_rhs[e], x) - dot(w, t0);
        std::vector<Rational> wn(N.size());
        std::size_t pivot = N.size();
        for (std::size_t j = 0; j < N.size(); ++j) {
            wn[j] = dot(w, N[j]);
            if (pivot == N.size() && wn[j] != 0) pivot = j;
        }
        if (pivot == N.size()) {
            if (beta == 0)
                throw NonGenericConfiguration("marked point " + std::to_string(assignment.size() - 1) +
                                              " satisfies a dependent incidence condition on " + to_string(data.sub));
            return;
        }
        std::vector<Rational> t1 = t0;
        Rational scale = beta / wn[pivot];
        for (std::size_t i = 0; i < r; ++i) t1[i] += N[pivot][i] * scale;
        std::vector<std::vector<Rational>> N1;
        N1.reserve(N.size() - 1);
        for (std::size_t j = 0; j < N.size(); ++j) {
            if (j == pivot) continue;
            std::vector<Rational> col = N[j];
            if (wn[j] != 0) {
                Rational f = wn[j] / wn[pivot];
                for (std::size_t i = 0; i < r; ++i) col[i] -= N[pivot][i] * f;
            }
            N1.push_back(std::move(col));
        }
        if (assignment.size() < marks.size() && !N1.empty() && !feasible(t1, N1)) return;
        recurse(t1, N1);
    }

    // Floating-point relaxation; only prunes when clearly infeasible.
    bool feasible(const std::vector<Rational>& t0, const std::vector<std::vector<Rational>>& N) {
        ++lp_calls;
        std::vector<double> td = to_double(t0);
        std::vector<std::vector<double>> Nd;
        for (const auto& col : N) Nd.push_back(to_double(col));
        std::vector<std::vector<double>> A;
        std::vector<double> b;
        auto add = [&](const Inequality& q, const RationalPoint* x) {
            std::vector<double> row(Nd.size());
            for (std::size_t j = 0; j < Nd.size(); ++j) {
                double s = 0;
                for (std::size_t i = 0; i < r; ++i) s += q.gd[i] * Nd[j][i];
                row[j] = s;
            }
            double c = 0;
            for (std::size_t i = 0; i < r; ++i) c += q.gd[i] * td[i];
            if (x) c += q.offset.x * x->x.get_d() + q.offset.y * x->y.get_d();
            A.push_back(std::move(row));
            b.push_back(-c);
        };
        for (const auto& q : data.convexity) add(q, nullptr);
        for (std::size_t i = 0; i < assignment.size(); ++i)
            for (const auto& q : data.interior[assignment[i]]) add(q, &marks.points[i]);
        MarginResult<double> res = maximize_margin<double>(A, b);
        return res.margin > -1e-9;
    }

    void leaf(const std::vector<Rational>& t) {
        if (!data.strictly_satisfied(t, marks, assignment)) return;
        PlaneTropicalCurve curve(data.sub, data.lift(t));
        OrientedForest forest;
        try {
            forest = orient(curve, marks, mode);
        } catch (const ViolatedStructure& err) {
            throw NonGenericConfiguration(std::string("orientation failed: ") + err.what() + " on " +
                                          to_string(data.sub));
        }
        if (forest.mark_edge != assignment) throw InternalError("marked points moved off their assigned edges");
        Integer w = weight(curve, forest, mode);
        out.push_back({std::move(curve), assignment, std::move(forest), w});
    }
};

}  // namespace

std::optional<LiftingFunction> solve_positions(const Subdivision& s, const MarkedConfiguration& marks,
                                               const PointAssignment& assignment) {
    SubdivisionData data(s);
    if (assignment.size() != marks.size())
        throw std::invalid_argument("solve_positions: assignment size differs from the number of points");
    if (assignment.size() != data.dim)
        throw NonGenericConfiguration("solve_positions: " + std::to_string(assignment.size()) +
                                      " conditions for a family of dimension " + std::to_string(data.dim));
    std::vector<bool> seen(s.edges().size(), false);
    RationalMatrix m(0, data.dim);
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        std::size_t e = assignment.at(i);
        if (e >= seen.size() || seen[e]) throw std::invalid_argument("solve_positions: assignment not injective");
        seen[e] = true;
        m.append_row(data.edge_row[e]);
        rhs.push_back(rdot(data.edge_rhs[e], marks.points[i]));
    }
    auto t = solve_unique(m, rhs);
    if (!t) throw NonGenericConfiguration("solve_positions: singular incidence system on " + to_string(s));
    if (!data.strictly_satisfied(*t, marks, assignment)) return std::nullopt;
    return data.lift(*t);
}

struct CurveCounter::Impl {
    LatticePolygon polygon;
    AdmissibilityMode mode;
    std::size_t points;
    std::vector<Subdivision> subdivisions;
    std::vector<SubdivisionData> data;
};

CurveCounter::CurveCounter(const LatticePolygon& polygon, AdmissibilityMode mode, const CountOptions& options) {
    std::size_t points = marked_point_count(polygon, mode);
    auto subs = enumerate_admissible_subdivisions(polygon, mode, static_cast<long>(points), options.enumeration);
    impl_ = std::make_unique<Impl>(Impl{polygon, mode, points, subs, {}});
    for (const auto& s : subs) impl_->data.emplace_back(s);
    log(LogLevel::Info, "counter: " + std::to_string(subs.size()) + " admissible subdivisions, " +
                            std::to_string(points) + " points");
}

CurveCounter::~CurveCounter() = default;
CurveCounter::CurveCounter(CurveCounter&&) noexcept = default;
CurveCounter& CurveCounter::operator=(CurveCounter&&) noexcept = default;

const LatticePolygon& CurveCounter::polygon() const { return impl_->polygon; }
AdmissibilityMode CurveCounter::mode() const { return impl_->mode; }
std::size_t CurveCounter::point_count() const { return impl_->points; }
const std::vector<Subdivision>& CurveCounter::subdivisions() const { return impl_->subdivisions; }

CountResult CurveCounter::count(const MarkedConfiguration& marks) const {
    if (marks.size() != impl_->points)
        throw std::invalid_argument("expected " + std::to_string(impl_->points) + " marked points, got " +
                                    std::to_string(marks.size()));
    CountResult result{impl_->mode, impl_->polygon, marks, {}, 0};
    long lp_calls = 0;
    for (const auto& d : impl_->data) {
        Search search(d, marks, impl_->mode, result.curves);
        std::vector<std::vector<Rational>> N(d.dim, std::vector<Rational>(d.dim));
        for (std::size_t j = 0; j < d.dim; ++j) N[j][j] = 1;
        search.recurse(std::vector<Rational>(d.dim), N);
        lp_calls += search.lp_calls;
    }
    std::sort(result.curves.begin(), result.curves.end(), [](const SolvedCurve& a, const SolvedCurve& b) {
        if (a.subdivision() != b.subdivision()) return a.subdivision() < b.subdivision();
        return a.assignment < b.assignment;
    });
    for (const auto& c : result.curves) result.total += c.weight;
    log(LogLevel::Info, "count: " + std::to_string(result.curves.size()) + " curves, total " +
                            result.total.get_str() + ", " + std::to_string(lp_calls) + " relaxations");
    return result;
}

CountResult enumerate_curves(const LatticePolygon& polygon, const MarkedConfiguration& marks, AdmissibilityMode mode,
                             const CountOptions& options) {
    return CurveCounter(polygon, mode, options).count(marks);
}

Integer kontsevich_oracle(int d) {
    if (d < 1) throw std::invalid_argument("kontsevich_oracle: degree must be positive");
    std::vector<Integer> n(d + 1, 0);
    n[1] = 1;
    auto binom = [](long a, long b) {
        Integer out;
        if (b < 0 || b > a) return Integer(0);
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return out;
    };
    for (long k = 2; k <= d; ++k) {
        Integer sum = 0;
        for (long a = 1; a < k; ++a) {
            long b = k - a;
            sum += n[a] * n[b] * a * a * b * (b * binom(3 * k - 4, 3 * a - 2) - a * binom(3 * k - 4, 3 * a - 1));
        }
        n[k] = sum;
    }
    return n[d];
}

MarkedConfiguration random_configuration(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den_dist(100000, 999999);
    std::vector<RationalPoint> pts;
    while (pts.size() < count) {
        auto coord = [&] {
            long den = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(-1000 * den, 1000 * den);
            Rational v(num_dist(rng), den);
            v.canonicalize();
            return v;
        };
        RationalPoint p{coord(), coord()};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return MarkedConfiguration(std::move(pts));
}

GenericSample random_generic_configuration(const CurveCounter& counter, std::uint64_t seed, int max_retries) {
    std::mt19937_64 seeder(seed);
    std::string last;
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        MarkedConfiguration marks = random_configuration(counter.point_count(), seeder());
        try {
            return {counter.count(marks), attempt};
        } catch (const NonGenericConfiguration& err) {
            last = err.what();
            log(LogLevel::Info, "re-sampling after: " + last);
        }
    }
    throw NonGenericConfiguration("no generic configuration after " + std::to_string(max_retries) +
                                  " attempts; last failure: " + last);
}

GenericSample random_generic_configuration(const LatticePolygon& polygon, AdmissibilityMode mode, std::uint64_t seed,
                                           int max_retries) {
    return random_generic_configuration(CurveCounter(polygon, mode), seed, max_retries);
}

}  // namespace tropcount
