#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tropcount/count.hpp"

namespace tropcount {

struct CriterionRecord {
    std::string criterion;  // e.g. "nodal-oracle"
    std::string instance;   // e.g. "d=3"
    bool passed = false;
    std::string detail;
};

struct AcceptanceReport {
    std::string suite;
    std::vector<CriterionRecord> records;
    double seconds = 0;

    bool passed() const;
};

struct AcceptanceOptions {
    std::uint64_t first_seed = 1;
    int seeds = 5;                // configurations per polygon for invariance
    int quad_instances = 50;
    std::uint64_t quad_seed = 2024;
};

/// nodal-oracle, cusp-invariance, quad-oracle, rank-audit, structural, obstruction
const std::vector<std::string>& acceptance_suites();

/// The two cuspidal test polygons: "degree-3" and "Q" = conv{(0,0),(2,0),(2,1),(0,2)}.
LatticePolygon cusp_test_polygon(const std::string& name);

/// Runs suites and caches the counts it computes, so the structural suite
/// reuses curves generated by the counting suites.
class AcceptanceSession {
public:
    explicit AcceptanceSession(AcceptanceOptions options = {});
    ~AcceptanceSession();

    /// Throws std::invalid_argument for an unknown suite name.
    AcceptanceReport run(const std::string& suite);

    /// Counts through seeds first_seed .. first_seed + seeds - 1, computed on demand.
    const std::vector<CountResult>& cusp_results(const std::string& polygon);
    const CountResult& nodal_result(int degree);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

AcceptanceReport run_acceptance(const std::string& suite, const AcceptanceOptions& options = {});

}  // namespace tropcount
