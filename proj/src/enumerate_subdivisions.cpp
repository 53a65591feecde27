#include <algorithm>
#include <set>

#include "tropcount/errors.hpp"
#include "tropcount/subdivision.hpp"

namespace tropcount {

namespace {

using Edge = std::pair<LatticePoint, LatticePoint>;

class ShapeSearch {
public:
    ShapeSearch(const LatticePolygon& polygon, AdmissibilityMode mode, const EnumerationOptions& options)
        : polygon_(polygon), mode_(mode), options_(options) {
        LatticePointSet lp = lattice_points(polygon);
        points_ = lp.all();
        std::sort(points_.begin(), points_.end());
        used_.assign(points_.size(), false);
        for (const auto& b : lp.boundary) used_[index(b)] = true;
        // open edges keep the uncovered region on their left
        for (std::size_t i = 0; i < polygon.size(); ++i) {
            LatticePoint a = polygon.vertex(i), b = polygon.vertex(i + 1);
            Int len = integer_length(LatticeSegment(a, b));
            LatticePoint step = primitive(b - a);
            for (Int k = 0; k < len; ++k) front_.insert({a + step * k, a + step * (k + 1)});
        }
    }

    std::vector<Subdivision> run() {
        recurse();
        std::sort(results_.begin(), results_.end());
        results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
        return std::move(results_);
    }

private:
    std::size_t index(LatticePoint p) const {
        return static_cast<std::size_t>(std::lower_bound(points_.begin(), points_.end(), p) - points_.begin());
    }

    bool fits(const std::vector<LatticePoint>& verts) const {
        LatticePolygon cand(verts);
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (used_[i] && cand.contains(points_[i]) && !cand.has_vertex(points_[i])) return false;
        }
        for (const auto& c : cells_) {
            for (const auto& v : verts)
                if (c.contains(v) && !c.has_vertex(v)) return false;
            if (interiors_overlap(c, cand)) return false;
        }
        return true;
    }

    void place(const std::vector<LatticePoint>& verts, bool quad) {
        LatticePolygon cell(verts);
        std::vector<std::size_t> fresh;
        for (const auto& v : verts) {
            std::size_t i = index(v);
            if (!used_[i]) {
                used_[i] = true;
                fresh.push_back(i);
            }
        }
        std::vector<Edge> removed, added;
        for (std::size_t k = 0; k < cell.size(); ++k) {
            Edge e{cell.vertex(k), cell.vertex(k + 1)};
            auto it = front_.find(e);
            if (it != front_.end()) {
                front_.erase(it);
                removed.push_back(e);
            } else {
                Edge back{e.second, e.first};
                front_.insert(back);
                added.push_back(back);
            }
        }
        cells_.push_back(cell);
        if (quad) quad_placed_ = true;

        recurse();

        if (quad) quad_placed_ = false;
        cells_.pop_back();
        for (const auto& e : added) front_.erase(e);
        for (const auto& e : removed) front_.insert(e);
        for (auto i : fresh) used_[i] = false;
    }

    void recurse() {
        if (front_.empty()) {
            if (mode_ == AdmissibilityMode::OneCusp && !quad_placed_) return;
            results_.emplace_back(polygon_, cells_);
            return;
        }
        if (cells_.size() >= options_.max_cells)
            throw ResourceLimit("subdivision enumeration exceeded " + std::to_string(options_.max_cells) + " cells");

        const auto [a, b] = *front_.begin();
        // triangles
        for (const auto& c : points_) {
            if (orient(a, b, c) <= 0) continue;
            std::vector<LatticePoint> tri{a, b, c};
            if (fits(tri)) place(tri, false);
        }
        // parallelograms
        for (const auto& d : points_) {
            if (orient(a, b, d) <= 0) continue;
            LatticePoint c = b + (d - a);
            if (!polygon_.contains(c)) continue;
            std::vector<LatticePoint> par{a, b, c, d};
            if (fits(par)) place(par, false);
        }
        if (mode_ != AdmissibilityMode::OneCusp || quad_placed_) return;
        // generic quadrilaterals a, b, c, d counterclockwise
        for (const auto& c : points_) {
            if (orient(a, b, c) <= 0) continue;
            for (const auto& d : points_) {
                if (orient(b, c, d) <= 0 || orient(c, d, a) <= 0 || orient(d, a, b) <= 0) continue;
                if (cross(b - a, c - d) == 0 || cross(c - b, d - a) == 0) continue;
                std::vector<LatticePoint> quad{a, b, c, d};
                if (fits(quad)) place(quad, true);
            }
        }
    }

    const LatticePolygon& polygon_;
    AdmissibilityMode mode_;
    EnumerationOptions options_;
    std::vector<LatticePoint> points_;
    std::vector<bool> used_;
    std::set<Edge> front_;
    std::vector<LatticePolygon> cells_;
    bool quad_placed_ = false;
    std::vector<Subdivision> results_;
};

}  // namespace

std::vector<Subdivision> enumerate_subdivision_shapes(const LatticePolygon& polygon, AdmissibilityMode mode,
                                                      const EnumerationOptions& options) {
    return ShapeSearch(polygon, mode, options).run();
}

std::vector<Subdivision> enumerate_admissible_subdivisions(const LatticePolygon& polygon, AdmissibilityMode mode,
                                                           long rank, const EnumerationOptions& options) {
    std::vector<Subdivision> out;
    for (auto& s : enumerate_subdivision_shapes(polygon, mode, options)) {
        if (!admissible(s, mode)) continue;
        if (rank_report(s).rank != rank) continue;
        if (!is_regular(s)) continue;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace tropcount
