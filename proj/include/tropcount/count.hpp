#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tropcount/lattice.hpp"
#include "tropcount/rational.hpp"
#include "tropcount/subdivision.hpp"
#include "tropcount/tropical_curve.hpp"

namespace tropcount {

/// Marked point i lies on the curve edge dual to subdivision edge assignment[i].
using PointAssignment = std::vector<std::size_t>;

struct SolvedCurve {
    PlaneTropicalCurve curve;  // carries the subdivision and its lift
    PointAssignment assignment;
    OrientedForest forest;
    Integer weight;

    const Subdivision& subdivision() const { return curve.dual(); }
    const LiftingFunction& lift() const { return curve.lift(); }
};

struct CountResult {
    AdmissibilityMode mode;
    LatticePolygon polygon;
    MarkedConfiguration configuration;
    std::vector<SolvedCurve> curves;  // sorted by subdivision, then assignment
    Integer total;
};

/// Number of marked points: |boundary lattice points| - 1 for rational nodal
/// curves, |lattice points| - n - 3 for one cusp (throws InvalidProblem when n < 0).
std::size_t marked_point_count(const LatticePolygon& polygon, AdmissibilityMode mode);

/// Lift through the marked points with the given assignment, normalized to
/// vanish at the least vertex; nullopt when a strict inequality fails (the
/// lift does not induce S or a point misses the interior of its edge).
/// Throws NonGenericConfiguration when the system is singular or an
/// inequality holds with equality.
std::optional<LiftingFunction> solve_positions(const Subdivision& s, const MarkedConfiguration& marks,
                                               const PointAssignment& assignment);

/// Product of the normalized areas of the triangles, times |det(sigma', sigma'')|
/// in cusp mode.
Integer weight(const PlaneTropicalCurve& c, const OrientedForest& forest, AdmissibilityMode mode);

struct CountOptions {
    EnumerationOptions enumeration;
};

/// Precomputes the admissible subdivisions of a polygon once and counts curves
/// through any number of configurations.
class CurveCounter {
public:
    CurveCounter(const LatticePolygon& polygon, AdmissibilityMode mode, const CountOptions& options = {});
    ~CurveCounter();
    CurveCounter(CurveCounter&&) noexcept;
    CurveCounter& operator=(CurveCounter&&) noexcept;

    const LatticePolygon& polygon() const;
    AdmissibilityMode mode() const;
    std::size_t point_count() const;
    const std::vector<Subdivision>& subdivisions() const;

    /// Throws std::invalid_argument on a wrong number of points and
    /// NonGenericConfiguration on any degenerate incidence.
    CountResult count(const MarkedConfiguration& marks) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

CountResult enumerate_curves(const LatticePolygon& polygon, const MarkedConfiguration& marks,
                             AdmissibilityMode mode, const CountOptions& options = {});

/// Number of rational plane curves of degree d through 3d - 1 points.
Integer kontsevich_oracle(int d);

/// Uniform random rational points with large denominators.
MarkedConfiguration random_configuration(std::size_t count, std::uint64_t seed);

struct GenericSample {
    CountResult result;
    int attempts = 0;
};

/// Draws configurations until one counts without a genericity failure.
/// Throws NonGenericConfiguration after max_retries failures.
GenericSample random_generic_configuration(const CurveCounter& counter, std::uint64_t seed, int max_retries = 32);
GenericSample random_generic_configuration(const LatticePolygon& polygon, AdmissibilityMode mode, std::uint64_t seed,
                                           int max_retries = 32);

}  // namespace tropcount
