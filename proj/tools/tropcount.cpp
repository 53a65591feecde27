#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tropcount/acceptance.hpp"
#include "tropcount/count.hpp"
#include "tropcount/errors.hpp"
#include "tropcount/io.hpp"
#include "tropcount/svg.hpp"

namespace fs = std::filesystem;
using namespace tropcount;

namespace {

enum Exit { Ok = 0, Failure = 1, BadProblem = 2, NotGeneric = 3, BadInput = 4, TooLarge = 5 };

struct RunConfig {
    std::string polygon;
    std::string mode = "nodal";
    std::optional<std::string> points;
    std::uint64_t seed = 1;
    std::string svg_dir;
    std::string json_file;
    std::size_t max_cells = 64;
    int max_retries = 32;
};

int run_count(const RunConfig& cfg) {
    LatticePolygon polygon = polygon_from_json(read_json_file(cfg.polygon));
    AdmissibilityMode mode = parse_mode(cfg.mode);
    CountOptions options;
    options.enumeration.max_cells = cfg.max_cells;

    CurveCounter counter(polygon, mode, options);
    std::cout << "polygon: " << to_string(polygon) << "\n";
    std::cout << "mode: " << to_string(mode) << "\n";
    std::cout << "admissible subdivisions: " << counter.subdivisions().size() << "\n";

    auto sample = [&]() -> CountResult {
        if (cfg.points) {
            MarkedConfiguration marks = configuration_from_json(read_json_file(*cfg.points));
            if (marks.size() != counter.point_count())
                throw InvalidProblem("expected " + std::to_string(counter.point_count()) + " marked points, got " +
                                     std::to_string(marks.size()));
            std::cout << "points: " << marks.size() << " from " << *cfg.points << "\n";
            return counter.count(marks);
        }
        GenericSample g = random_generic_configuration(counter, cfg.seed, cfg.max_retries);
        std::cout << "points: " << counter.point_count() << " (seed " << cfg.seed << ", attempt " << g.attempts
                  << ")\n";
        return std::move(g.result);
    };
    CountResult result = sample();
    std::cout << "curves: " << result.curves.size() << "\n";

    if (!cfg.json_file.empty()) write_text_file(cfg.json_file, to_json(result).dump(2) + "\n");
    if (!cfg.svg_dir.empty()) {
        for (std::size_t i = 0; i < result.curves.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "curve_%03zu.svg", i);
            write_text_file(fs::path(cfg.svg_dir) / name, render_svg(result.curves[i].curve, result.configuration));
        }
    }
    std::cout << result.total.get_str() << std::endl;
    return Ok;
}

int run_accept(const std::string& suite, const std::string& json_file) {
    std::vector<std::string> suites;
    if (suite == "all") suites = acceptance_suites();
    else suites.push_back(suite);
    AcceptanceSession session;
    Json all = Json::array();
    bool ok = true;
    for (const auto& name : suites) {
        AcceptanceReport rep = session.run(name);
        for (const auto& r : rep.records)
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.criterion << " [" << r.instance << "] " << r.detail
                      << "\n";
        ok = ok && rep.passed();
        all.push_back(to_json(rep));
    }
    std::cout.flush();
    if (!json_file.empty()) write_text_file(json_file, all.dump(2) + "\n");
    return ok ? Ok : Failure;
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const InvalidProblem& err) {
        std::cerr << "invalid problem: " << err.what() << "\n";
        return BadProblem;
    } catch (const NonGenericConfiguration& err) {
        std::cerr << "non-generic configuration: " << err.what() << "\n";
        return NotGeneric;
    } catch (const IoError& err) {
        std::cerr << "i/o error: " << err.what() << "\n";
        return BadInput;
    } catch (const SchemaError& err) {
        std::cerr << "schema error: " << err.what() << "\n";
        return BadInput;
    } catch (const ResourceLimit& err) {
        std::cerr << "resource limit: " << err.what() << "\n";
        return TooLarge;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return Failure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count tropical curves with prescribed singularities through points"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto* count = app.add_subcommand("count", "count curves through a point configuration");
    count->add_option("--polygon", cfg.polygon, "polygon JSON file")->required();
    count->add_option("--mode", cfg.mode, "nodal or cusp")->check(CLI::IsMember({"nodal", "cusp"}));
    auto* points = count->add_option("--points", cfg.points, "marked points JSON file");
    auto* seed = count->add_option("--seed", cfg.seed, "seed for a random generic configuration (default 1)");
    points->excludes(seed);
    count->add_option("--emit-svg", cfg.svg_dir, "directory for one SVG per curve");
    count->add_option("--emit-json", cfg.json_file, "write the count result as JSON");
    count->add_option("--max-cells", cfg.max_cells, "ceiling on cells per subdivision")->check(CLI::PositiveNumber);
    count->add_option("--max-retries", cfg.max_retries, "re-sampling attempts")->check(CLI::PositiveNumber);

    std::string suite, report;
    auto* accept = app.add_subcommand("accept", "run an acceptance suite");
    std::vector<std::string> names = acceptance_suites();
    names.push_back("all");
    accept->add_option("--suite", suite, "suite name or all")->required()->check(CLI::IsMember(names));
    accept->add_option("--json", report, "write the report as JSON");

    CLI11_PARSE(app, argc, argv);
    if (count->parsed()) return guarded([&] { return run_count(cfg); });
    return guarded([&] { return run_accept(suite, report); });
}
