#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "quenchcrit/dicke.hpp"
#include "quenchcrit/lmg.hpp"

namespace quenchcrit::sweep {

enum class Model { Dicke, Lmg };

struct Axis {
    std::string name;  // one of the model's parameter names
    double start = 0.0;
    double stop = 0.0;
    int count = 0;  // >= 2
};

struct SweepGrid {
    Axis axis1;
    std::optional<Axis> axis2;
    std::vector<std::pair<std::string, double>> fixed;
};

enum class Task { Phase, Work, Heat, Jarzynski };

enum class RecordStatus { Ok, DegenerateSaddle, Error };

/// One grid point. Numeric outputs are NaN unless their task was requested
/// and the point evaluated cleanly (status == Ok).
struct SweepRecord {
    // resolved inputs
    double epsilon = 1.0, omega = 1.0, gamma = 0.0;  // dicke
    double chi = 0.0;                                // lmg
    double temperature = 0.0;
    int n = 0;

    std::string phase;  // NP/SP or PP/FP
    double order_param = 0.0;
    double avg_work_per_particle = 0.0;
    double specific_heat = 0.0;         // finite-difference beta^2 d2 lnZ / N
    double specific_heat_closed = 0.0;  // closed form (dicke heat task only)
    double jarzynski = 0.0;
    RecordStatus status = RecordStatus::Ok;
};

/// Parallel map over the grid in row-major axis order (axis1 outer). Output
/// order and content are independent of the worker count; per-point
/// failures land in the record status instead of aborting the sweep.
/// threads <= 0 picks the hardware concurrency.
std::vector<SweepRecord> run_sweep(Model model, const SweepGrid& grid, QuenchSpec quench,
                                   const std::set<Task>& tasks, int threads = 0);

/// Deterministic CSV emission:
///   # quenchcrit v1, model=<m>, delta=<d>
///   <column header row>
///   <records>
/// Floats are shortest round-trip decimals, comma separated, \n endings.
void write_csv(std::ostream& os, Model model, QuenchSpec quench,
               const std::vector<SweepRecord>& records, const std::set<Task>& tasks);

struct JarzynskiRow {
    char point = 'A';
    double gamma = 0.0;
    double temperature = 0.0;
    double ratio = 0.0;
};

/// The six-point verification table (eps = omega = 1, delta = 1e-4, N = 100):
/// A(0.2,8) B(0.8,6.8) C(1.4,5.6) D(2,4.4) E(2.6,3.2) F(3.2,2).
std::vector<JarzynskiRow> jarzynski_table();

struct OracleCompareRow {
    int n = 0;
    double exact_work_per_particle = 0.0;
    double analytic_work_per_particle = 0.0;
    double gap = 0.0;
    RecordStatus status = RecordStatus::Ok;
    std::string error;
};

struct OracleCompareReport {
    std::vector<OracleCompareRow> rows;
    std::optional<bool> gap_non_increasing;  // absent for a single size
};

/// Exact-vs-analytic first moment per particle over ascending sizes; for
/// the cavity model the boson cutoff is chosen adaptively (tol 1e-8).
OracleCompareReport oracle_compare(const std::variant<dicke::DickeParams, lmg::LmgParams>& params,
                                   QuenchSpec quench, const std::vector<int>& sizes);

void write_oracle_compare_csv(std::ostream& os, Model model, QuenchSpec quench,
                              const OracleCompareReport& report);

/// Shortest round-trip decimal for a double (CSV cell format).
std::string format_double(double v);

} // namespace quenchcrit::sweep
