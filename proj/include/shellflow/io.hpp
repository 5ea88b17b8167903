#pragma once

#include "shellflow/grid.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellflow {

enum class RunMode {
    mms_convergence,
    mms_tcr,
    mms_mach_sweep,
    thermal1,
    thermal2,
    custom,
};

const char* mode_name(RunMode m);
RunMode mode_from_name(const std::string& s); // throws ConfigError

/// Raised by parse_config / parse_config_file; messages carry the
/// offending line number where one applies.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Run description shared by the CLI and the built-in drivers.  Key names
/// in the config file match the field names below.
struct RunConfig {
    RunMode mode = RunMode::custom;
    std::vector<int> grids = {12, 24, 48}; // ladder for convergence modes
    int n = 24;                            // cubic grid for single runs
    double tau = 0.0;                      // 0 = mode default
    std::vector<double> tau_ladder;        // required for mms_tcr (3 values)
    int k_iters = 2;
    double mach = 1e-2;                    // manufactured-flow Mach number
    double t_end = 0.0;                    // 0 = mode default
    std::string out_dir = ".";
    int snapshot_every = 0;                // steps between slices; 0 = final only
    int threads = 1;

    void validate() const; // throws ConfigError
};

/// Parses "key=value" lines; '#' starts a comment; blank lines ignored.
/// Unknown keys, unparsable values and mode/field mismatches raise
/// ConfigError with the line number.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// A 2D scalar slice with its axis coordinates.  values are row-major:
/// values[a * n2 + b] belongs to (coord1[a], coord2[b]) with the second
/// coordinate fastest.
struct SliceData {
    std::string variable;
    double time = 0.0;
    int n1 = 0, n2 = 0;
    std::vector<double> coord1, coord2;
    std::vector<double> values;
};

/// Delimiter-separated text: header lines (grid extents, time, variable),
/// then one "coord1 coord2 value" row per entry in a bit-stable order.
void write_slice(const SliceData& s, const std::string& path);
SliceData read_slice(const std::string& path);

/// Full 3D state in a self-describing structured-points text format:
/// dimensions, origin and spacings in spherical coordinates, then one
/// flattened array per variable with its staggering tag.  Values use 17
/// significant digits, so a read-back is bit-lossless.
void write_structured_snapshot(const FieldSet& U, const MacGrid& grid,
                               const std::string& path);
FieldSet read_structured_snapshot(const std::string& path, MacGrid& grid_out);

/// Plain numeric table with a caption and column names; the on-disk format
/// round-trips through read_table.
struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string format_table(const Table& t);
void write_table(const Table& t, const std::string& path);
Table read_table(const std::string& path);

} // namespace shellflow
