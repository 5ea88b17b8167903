#include "shellflow/cases.hpp"
#include "shellflow/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace shellflow;

namespace {

std::string tmp_path(const char* name) {
    return std::string("io_test_") + name;
}

std::string file_text(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("config parsing: valid file") {
    const RunConfig cfg = parse_config("# bubble benchmark\n"
                                       "mode=thermal2\n"
                                       "n=50\n"
                                       "tau=0.25  # seconds\n"
                                       "t_end=100\n"
                                       "threads=4\n"
                                       "out_dir=results\n");
    CHECK(cfg.mode == RunMode::thermal2);
    CHECK(cfg.n == 50);
    CHECK(cfg.tau == doctest::Approx(0.25));
    CHECK(cfg.t_end == doctest::Approx(100.0));
    CHECK(cfg.threads == 4);
    CHECK(cfg.out_dir == "results");
}

TEST_CASE("config parsing: errors carry line numbers and key names") {
    CHECK_THROWS_WITH_AS(parse_config("mode=custom\ntau=-1\n"),
                         "line 2: tau must be > 0", ConfigError);
    try {
        parse_config("mode=custom\n\nfoo=3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("foo") != std::string::npos);
    }
    try {
        parse_config("mode=custom\ntau=abc\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("n=4\n"), ConfigError); // missing mode
    CHECK_THROWS_AS(parse_config("mode=warp_drive\n"), ConfigError);
}

TEST_CASE("config parsing: tcr mode requires the step-size ladder") {
    try {
        parse_config("mode=mms_tcr\nn=24\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("tau_ladder") != std::string::npos);
        CHECK(msg.find("2e-3") != std::string::npos);
        CHECK(msg.find("1e-3") != std::string::npos);
        CHECK(msg.find("5e-4") != std::string::npos);
    }
    const RunConfig cfg =
        parse_config("mode=mms_tcr\ntau_ladder=2e-3,1e-3,5e-4\n");
    REQUIRE(cfg.tau_ladder.size() == 3);
    CHECK(cfg.tau_ladder[0] == doctest::Approx(2e-3));
    CHECK(cfg.tau_ladder[2] == doctest::Approx(5e-4));
}

TEST_CASE("slice writing: constant field and exact round trip") {
    SliceData s;
    s.variable = "T";
    s.time = 1.5;
    s.n1 = 2;
    s.n2 = 2;
    s.coord1 = {1.0, 2.0};
    s.coord2 = {0.25, 0.5};
    s.values = {7.0, 7.0, 7.0, 7.0};
    const std::string path = tmp_path("slice.txt");
    write_slice(s, path);

    // Header plus exactly 4 data rows, all with the constant value.
    const std::string text = file_text(path);
    int data_rows = 0;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty() && line[0] != '#') {
            ++data_rows;
            CHECK(line.substr(line.rfind(' ') + 1) == "7");
        }
    CHECK(data_rows == 4);

    const SliceData r = read_slice(path);
    CHECK(r.variable == "T");
    CHECK(r.time == 1.5);
    CHECK(r.n1 == 2);
    CHECK(r.n2 == 2);
    CHECK(r.coord1 == s.coord1);
    CHECK(r.coord2 == s.coord2);
    CHECK(r.values == s.values);
    std::remove(path.c_str());
}

TEST_CASE("initial bubble slice peaks at the configured amplitude") {
    const CaseSpec c = build_thermal2();
    const MacGrid grid = build_grid(c.sector, 25, 25, 25);
    const FieldSet U = initial_state(c, grid);
    const CaseSlice s = midplane_slice(U, c, grid, 0, 0.0);
    double vmax = 0.0;
    for (double v : s.values) vmax = std::max(vmax, v);
    CHECK(vmax == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("structured snapshot: lossless round trip with staggering tags") {
    const CaseSpec c = build_thermal2();
    const MacGrid grid = build_grid(c.sector, 6, 5, 4);
    FieldSet U = discrete_hydrostatic_state(c, grid);
    // Make the velocity arrays non-trivial for the round-trip check.
    U.u_r(2, 1, 3) = 1.2345678901234567e-3;
    U.u_theta(0, 5, 0) = -9.87e2;
    U.u_phi(5, 4, 4) = 3.0e-17;

    const std::string path = tmp_path("snapshot.txt");
    write_structured_snapshot(U, grid, path);

    const std::string text = file_text(path);
    CHECK(text.find("stagger=center") != std::string::npos);
    CHECK(text.find("stagger=r_face") != std::string::npos);
    CHECK(text.find("stagger=theta_face") != std::string::npos);
    CHECK(text.find("stagger=phi_face") != std::string::npos);

    MacGrid g2;
    const FieldSet R = read_structured_snapshot(path, g2);
    CHECK(g2.nr == grid.nr);
    CHECK(g2.dr == doctest::Approx(grid.dr));
    for (int v = 0; v < kNumVars; ++v) {
        int nx, ny, nz;
        grid.extents(var_location(v), nx, ny, nz);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k)
                    CHECK(R.component(v)(i, j, k) ==
                          U.component(v)(i, j, k));
    }
    // Hydrostatic state: the stored velocity arrays are zero apart from
    // the three entries poked above.
    int nonzero = 0;
    for (int v : {kVarUr, kVarUtheta, kVarUphi}) {
        int nx, ny, nz;
        grid.extents(var_location(v), nx, ny, nz);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k)
                    if (R.component(v)(i, j, k) != 0.0) ++nonzero;
    }
    CHECK(nonzero == 3);
    std::remove(path.c_str());
}

TEST_CASE("table round trip") {
    Table t;
    t.title = "pressure fluctuation vs Mach number";
    t.columns = {"n", "M0", "max_dp"};
    t.rows = {{24, 1e-2, 4.0e-4}, {24, 1e-3, 4.1e-6}, {24, 1e-4, 4.3e-8}};
    const std::string path = tmp_path("table.txt");
    write_table(t, path);
    const Table r = read_table(path);
    CHECK(r.title == t.title);
    CHECK(r.columns == t.columns);
    REQUIRE(r.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            CHECK(r.rows[i][j] == t.rows[i][j]);
    std::remove(path.c_str());
}
