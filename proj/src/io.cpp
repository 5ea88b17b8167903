#include "shellflow/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace shellflow {

namespace {

[[noreturn]] void fail_io(const std::string& what, const std::string& path) {
    throw std::runtime_error(what + ": " + path);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail_line(int line_no, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line_no) + ": " + msg);
}

double parse_double(const std::string& v, int line_no, const std::string& key) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        fail_line(line_no, "cannot parse value '" + v + "' for " + key);
    }
    if (pos != v.size())
        fail_line(line_no, "cannot parse value '" + v + "' for " + key);
    return x;
}

int parse_int(const std::string& v, int line_no, const std::string& key) {
    std::size_t pos = 0;
    long x = 0;
    try {
        x = std::stol(v, &pos);
    } catch (const std::exception&) {
        fail_line(line_no, "cannot parse value '" + v + "' for " + key);
    }
    if (pos != v.size())
        fail_line(line_no, "cannot parse value '" + v + "' for " + key);
    return static_cast<int>(x);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

} // namespace

const char* mode_name(RunMode m) {
    switch (m) {
    case RunMode::mms_convergence: return "mms_convergence";
    case RunMode::mms_tcr: return "mms_tcr";
    case RunMode::mms_mach_sweep: return "mms_mach_sweep";
    case RunMode::thermal1: return "thermal1";
    case RunMode::thermal2: return "thermal2";
    default: return "custom";
    }
}

RunMode mode_from_name(const std::string& s) {
    for (RunMode m : {RunMode::mms_convergence, RunMode::mms_tcr,
                      RunMode::mms_mach_sweep, RunMode::thermal1,
                      RunMode::thermal2, RunMode::custom})
        if (s == mode_name(m)) return m;
    throw ConfigError("unknown mode '" + s +
                      "' (expected mms_convergence, mms_tcr, mms_mach_sweep, "
                      "thermal1, thermal2 or custom)");
}

void RunConfig::validate() const {
    if (!tau_ladder.empty() && tau_ladder.size() != 3)
        throw ConfigError("tau_ladder must list exactly three step sizes");
    for (double t : tau_ladder)
        if (!(t > 0.0)) throw ConfigError("tau_ladder entries must be > 0");
    if (mode == RunMode::mms_tcr && tau_ladder.empty())
        throw ConfigError(
            "mode mms_tcr requires tau_ladder with three step sizes, "
            "e.g. tau_ladder=2e-3,1e-3,5e-4");
    if (grids.empty()) throw ConfigError("grids must not be empty");
    for (int g : grids)
        if (g < 2) throw ConfigError("grids entries must be >= 2");
    if (n < 2) throw ConfigError("n must be >= 2");
    if (tau < 0.0) throw ConfigError("tau must be > 0");
    if (k_iters < 1) throw ConfigError("k_iters must be >= 1");
    if (!(mach > 0.0)) throw ConfigError("mach must be > 0");
    if (t_end < 0.0) throw ConfigError("t_end must be >= 0");
    if (snapshot_every < 0) throw ConfigError("snapshot_every must be >= 0");
    if (threads < 1) throw ConfigError("threads must be >= 1");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    bool mode_seen = false;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail_line(line_no, "expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail_line(line_no, "empty key");
        if (value.empty()) fail_line(line_no, "empty value for " + key);

        if (key == "mode") {
            try {
                cfg.mode = mode_from_name(value);
            } catch (const ConfigError& e) {
                fail_line(line_no, e.what());
            }
            mode_seen = true;
        } else if (key == "grids") {
            cfg.grids.clear();
            for (const std::string& item : split_list(value))
                cfg.grids.push_back(parse_int(item, line_no, key));
        } else if (key == "n") {
            cfg.n = parse_int(value, line_no, key);
        } else if (key == "tau") {
            cfg.tau = parse_double(value, line_no, key);
            if (!(cfg.tau > 0.0)) fail_line(line_no, "tau must be > 0");
        } else if (key == "tau_ladder") {
            cfg.tau_ladder.clear();
            for (const std::string& item : split_list(value))
                cfg.tau_ladder.push_back(parse_double(item, line_no, key));
        } else if (key == "k_iters") {
            cfg.k_iters = parse_int(value, line_no, key);
        } else if (key == "mach") {
            cfg.mach = parse_double(value, line_no, key);
        } else if (key == "u0") {
            // Velocity scale relative to the reference sound speed 100 m/s.
            cfg.mach = parse_double(value, line_no, key) / 100.0;
        } else if (key == "t_end") {
            cfg.t_end = parse_double(value, line_no, key);
        } else if (key == "out_dir") {
            cfg.out_dir = value;
        } else if (key == "snapshot_every") {
            cfg.snapshot_every = parse_int(value, line_no, key);
        } else if (key == "threads") {
            cfg.threads = parse_int(value, line_no, key);
        } else {
            fail_line(line_no, "unknown key '" + key + "'");
        }
    }
    if (!mode_seen) throw ConfigError("missing required key 'mode'");
    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void write_slice(const SliceData& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail_io("cannot open slice file for writing", path);
    out << "# slice variable=" << s.variable << " time=" << fmt17(s.time)
        << "\n# grid " << s.n1 << " " << s.n2
        << "\n# columns coord1 coord2 value\n";
    for (int a = 0; a < s.n1; ++a)
        for (int b = 0; b < s.n2; ++b)
            out << fmt17(s.coord1[a]) << " " << fmt17(s.coord2[b]) << " "
                << fmt17(s.values[static_cast<std::size_t>(a) * s.n2 + b])
                << "\n";
    if (!out) fail_io("write failed for slice file", path);
}

SliceData read_slice(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_io("cannot open slice file", path);
    SliceData s;
    std::string line;
    // Header line 1: variable and time.
    if (!std::getline(in, line)) fail_io("truncated slice file", path);
    {
        const auto v = line.find("variable=");
        const auto t = line.find(" time=");
        if (v == std::string::npos || t == std::string::npos)
            fail_io("malformed slice header", path);
        s.variable = line.substr(v + 9, t - (v + 9));
        s.time = std::stod(line.substr(t + 6));
    }
    if (!std::getline(in, line)) fail_io("truncated slice file", path);
    if (std::sscanf(line.c_str(), "# grid %d %d", &s.n1, &s.n2) != 2)
        fail_io("malformed slice grid line", path);
    std::getline(in, line); // columns comment
    s.coord1.resize(s.n1);
    s.coord2.resize(s.n2);
    s.values.resize(static_cast<std::size_t>(s.n1) * s.n2);
    for (int a = 0; a < s.n1; ++a)
        for (int b = 0; b < s.n2; ++b) {
            double c1, c2, v;
            if (!(in >> c1 >> c2 >> v)) fail_io("truncated slice data", path);
            s.coord1[a] = c1;
            s.coord2[b] = c2;
            s.values[static_cast<std::size_t>(a) * s.n2 + b] = v;
        }
    return s;
}

namespace {

struct VarDesc {
    const char* name;
    const char* stagger;
    StaggeredLocation loc;
};

constexpr VarDesc kVars[kNumVars] = {
    {"p", "center", StaggeredLocation::center},
    {"u_r", "r_face", StaggeredLocation::r_face},
    {"u_theta", "theta_face", StaggeredLocation::theta_face},
    {"u_phi", "phi_face", StaggeredLocation::phi_face},
    {"T", "center", StaggeredLocation::center},
};

} // namespace

void write_structured_snapshot(const FieldSet& U, const MacGrid& grid,
                               const std::string& path) {
    std::ofstream out(path);
    if (!out) fail_io("cannot open snapshot file for writing", path);
    out << "shellflow structured-points 1\n"
        << "# spherical coordinates (r, theta, phi); Cartesian conversion:\n"
        << "# x = r sin(theta) cos(phi), y = r sin(theta) sin(phi),\n"
        << "# z = r cos(theta)\n"
        << "dimensions " << grid.nr << " " << grid.ntheta << " " << grid.nphi
        << "\n"
        << "origin " << fmt17(grid.sector.r1) << " "
        << fmt17(grid.sector.theta1) << " " << fmt17(grid.sector.phi1) << "\n"
        << "spacing " << fmt17(grid.dr) << " " << fmt17(grid.dtheta) << " "
        << fmt17(grid.dphi) << "\n";
    for (int v = 0; v < kNumVars; ++v) {
        int nx, ny, nz;
        grid.extents(kVars[v].loc, nx, ny, nz);
        out << "field " << kVars[v].name << " stagger=" << kVars[v].stagger
            << " " << nx << " " << ny << " " << nz << "\n";
        const Field3& f = U.component(v);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k)
                    out << fmt17(f(i, j, k)) << "\n";
    }
    if (!out) fail_io("write failed for snapshot file", path);
}

FieldSet read_structured_snapshot(const std::string& path, MacGrid& grid_out) {
    std::ifstream in(path);
    if (!in) fail_io("cannot open snapshot file", path);
    std::string line;
    if (!std::getline(in, line) || line != "shellflow structured-points 1")
        fail_io("unrecognized snapshot format", path);
    int nr = 0, nt = 0, np = 0;
    double r1 = 0, th1 = 0, ph1 = 0, dr = 0, dth = 0, dph = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        if (std::sscanf(line.c_str(), "dimensions %d %d %d", &nr, &nt, &np) ==
            3)
            continue;
        if (std::sscanf(line.c_str(), "origin %lf %lf %lf", &r1, &th1, &ph1) ==
            3)
            continue;
        if (std::sscanf(line.c_str(), "spacing %lf %lf %lf", &dr, &dth,
                        &dph) == 3)
            break;
    }
    if (nr < 1 || dr <= 0.0) fail_io("malformed snapshot header", path);
    ShellSector sector;
    sector.r1 = r1;
    sector.r2 = r1 + nr * dr;
    sector.theta1 = th1;
    sector.theta2 = th1 + nt * dth;
    sector.phi1 = ph1;
    sector.phi2 = ph1 + np * dph;
    grid_out = build_grid(sector, nr, nt, np);
    FieldSet U(grid_out);
    for (int v = 0; v < kNumVars; ++v) {
        if (!std::getline(in, line)) fail_io("truncated snapshot file", path);
        char name[16], stag[24];
        int nx, ny, nz;
        if (std::sscanf(line.c_str(), "field %15s stagger=%23s %d %d %d",
                        name, stag, &nx, &ny, &nz) != 5 ||
            std::string(name) != kVars[v].name)
            fail_io("malformed snapshot field header", path);
        Field3& f = U.component(v);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k)
                    if (!(in >> f(i, j, k)))
                        fail_io("truncated snapshot data", path);
        std::getline(in, line); // consume the trailing newline
    }
    return U;
}

std::string format_table(const Table& t) {
    std::ostringstream out;
    out << "# " << t.title << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? " " : "") << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? " " : "") << fmt17(row[c]);
        out << "\n";
    }
    return out.str();
}

void write_table(const Table& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail_io("cannot open table file for writing", path);
    out << format_table(t);
    if (!out) fail_io("write failed for table file", path);
}

Table read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_io("cannot open table file", path);
    Table t;
    std::string line;
    if (!std::getline(in, line) || line.size() < 2 || line[0] != '#')
        fail_io("malformed table title", path);
    t.title = trim(line.substr(1));
    if (!std::getline(in, line)) fail_io("truncated table file", path);
    {
        std::stringstream ss(line);
        std::string col;
        while (ss >> col) t.columns.push_back(col);
    }
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::vector<double> row;
        double v;
        while (ss >> v) row.push_back(v);
        if (row.size() != t.columns.size())
            fail_io("table row width mismatch", path);
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace shellflow
