// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include "../oracles/cubic_net.hpp"
#include "tropcount/acceptance.hpp"
#include "tropcount/errors.hpp"

using namespace tropcount;

namespace {

constexpr int kNets = 3;

struct Line {
    std::string name;
    bool passed;
    std::vector<std::string> details;
};

Line from_report(const std::string& name, const AcceptanceReport& rep) {
    Line l{name, rep.passed(), {}};
    for (const auto& r : rep.records)
        l.details.push_back(std::string(r.passed ? "ok   " : "FAIL ") + r.instance + ": " + r.detail);
    return l;
}

Line literature_crosscheck(AcceptanceSession& session) {
    Line l{"Cuspidal literature cross-check (net-of-cubics oracle)", true, {}};
    std::set<std::size_t> counts;
    for (int net = 0; net < kNets; ++net) {
        oracle::RootSearchOptions opt;
        opt.seed = 1000 + net;
        std::uint64_t base = 7919 * (net + 1);
        auto r = oracle::cuspidal_members_of_net(oracle::random_cubic(base), oracle::random_cubic(base + 1),
                                                 oracle::random_cubic(base + 2), opt);
        l.details.push_back("net " + std::to_string(net + 1) + ": " + std::to_string(r.roots.size()) +
                            " cuspidal members after " + std::to_string(r.starts) + " starts" +
                            (r.stabilized ? "" : " (not stabilized)"));
        if (!r.stabilized) l.passed = false;
        counts.insert(r.roots.size());
    }
    if (counts.size() != 1) {
        l.passed = false;
        l.details.push_back("oracle counts disagree between nets");
        return l;
    }
    const Integer oracle_count = static_cast<unsigned long>(*counts.begin());
    const auto& results = session.cusp_results("degree-3");
    if (results.empty()) l.passed = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        bool eq = results[i].total == oracle_count;
        l.details.push_back(std::string(eq ? "ok   " : "FAIL ") + "configuration " + std::to_string(i + 1) +
                            ": tropical total " + results[i].total.get_str() + " vs oracle " +
                            oracle_count.get_str());
        l.passed = l.passed && eq;
    }
    return l;
}

}  // namespace

int main() {
    AcceptanceSession session;
    std::vector<Line> lines;
    auto guarded = [&](const std::string& name, auto&& f) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            lines.push_back(f());
        } catch (const std::exception& err) {
            lines.push_back({name, false, {std::string("exception: ") + err.what()}});
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const Line& l = lines.back();
        std::printf("[%s] %s (%.1f s)\n", l.passed ? "PASS" : "FAIL", l.name.c_str(), secs);
        for (const auto& d : l.details) std::printf("       %s\n", d.c_str());
        std::fflush(stdout);
    };

    guarded("Nodal oracle equivalence", [&] { return from_report("Nodal oracle equivalence", session.run("nodal-oracle")); });
    guarded("Cuspidal invariance", [&] { return from_report("Cuspidal invariance", session.run("cusp-invariance")); });
    guarded("Cuspidal literature cross-check (net-of-cubics oracle)", [&] { return literature_crosscheck(session); });
    guarded("Quadrilateral formula vs oracle", [&] { return from_report("Quadrilateral formula vs oracle", session.run("quad-oracle")); });
    guarded("Rank audit", [&] { return from_report("Rank audit", session.run("rank-audit")); });
    guarded("Structural invariant suite", [&] { return from_report("Structural invariant suite", session.run("structural")); });
    guarded("Obstruction certificates", [&] { return from_report("Obstruction certificates", session.run("obstruction")); });

    int failed = 0;
    for (const auto& l : lines) failed += !l.passed;
    std::printf("%zu criteria, %d passed, %d failed\n", lines.size(), static_cast<int>(lines.size()) - failed, failed);
    return failed ? 1 : 0;
}
