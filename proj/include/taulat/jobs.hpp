#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "taulat/recurrences.hpp"
#include "taulat/sampling.hpp"

namespace taulat::jobs {

using nlohmann::json;

// Element description from a config file: either an n x k homogeneous
// coordinate matrix or a k x k affine (big-cell) matrix, optionally flagged
// symmetric (which is validated).
struct ElementSpec {
    enum class Kind { homogeneous, affine };
    Kind kind = Kind::homogeneous;
    int k = 0;
    int n = 0; // 2k for affine
    Matrix matrix;
    bool symmetric = false;
    std::string name; // fixture name when one was used

    GrassmannianElement grassmannian() const;
    LagrangianElement lagrangian() const; // requires affine + symmetric
    bool is_affine_symmetric() const { return kind == Kind::affine && symmetric; }
};

struct JobConfig {
    int schema_version = 1;
    std::string mode = "verify";
    std::optional<ElementSpec> element;
    std::map<int, Rational> x_params;
    std::map<int, Rational> y_params;
    std::vector<Rational> abc;        // octahedron spacings (a, b, c)
    std::vector<Rational> base_time;  // t_0; zeros when empty
    int truncation = 0;               // 0: derived from the element
    std::vector<std::string> suites;  // empty: all
    std::uint64_t seed = 1;
    std::map<std::string, int> sweeps;
    std::string recurrence = "octahedron";
    int steps = 1;
    int window_radius = 2;
    std::vector<LatticePoint> lattice_points; // tau-eval extras
    bool flip_even_times = false;
    std::map<OctahedronGrid::Site, Rational> octahedron_seed; // raw-seed propagation

    static JobConfig from_json(const json& j);
    static json fixture_element(const std::string& name); // element-spec JSON by name
};

struct CheckRecord {
    std::string check;
    std::string digest;   // hash of the check inputs
    std::string residual; // explicit "p/q"; "0/1" means pass for residual checks
    bool pass = false;
    long timing = 0;      // deterministic work units (exact evaluations)
};

struct Report {
    int schema_version = 1;
    std::string mode;
    std::uint64_t seed = 0;
    bool green = true;
    std::vector<CheckRecord> checks;
    json extra; // value dumps, evaluated rationals

    json to_json() const;
    // Sorts records by (check, digest) and recomputes green.
    void finalize();
};

extern const std::vector<std::string> kAllSuites;

// Worker cap from the TAULAT_WORKERS environment variable (>= 1).
int worker_count();

Report run_verify(const JobConfig& config);
Report run_propagate(const JobConfig& config);
Report run_tau_eval(const JobConfig& config);

} // namespace taulat::jobs
