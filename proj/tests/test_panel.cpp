#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "core/errors.hpp"
#include "core/panel.hpp"
#include "test_util.hpp"

using namespace sdd;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("csv load: plain numeric file, rows are time") {
    testutil::TempDir dir("panel");
    write_file(dir.file("a.csv"), "1.5,2\n-3,4e-1\n5,6\n");
    const TimeSeriesPanel p = load_panel_csv(dir.file("a.csv"));
    CHECK(p.n() == 3);
    CHECK(p.p() == 2);
    CHECK(p.data(0, 0) == 1.5);
    CHECK(p.data(1, 1) == 0.4);
    CHECK(p.channel_names[0] == "ch1");
}

TEST_CASE("csv load: rows are channels transposes") {
    testutil::TempDir dir("panel");
    write_file(dir.file("a.csv"), "1,2\n3,4\n5,6\n");
    const TimeSeriesPanel p = load_panel_csv(dir.file("a.csv"), true);
    CHECK(p.n() == 2);
    CHECK(p.p() == 3);
    CHECK(p.data(0, 2) == 5);
    CHECK(p.data(1, 0) == 2);
}

TEST_CASE("csv load: header row of channel names is detected") {
    testutil::TempDir dir("panel");
    write_file(dir.file("a.csv"), "left,right\n1,2\n3,4\n");
    const TimeSeriesPanel p = load_panel_csv(dir.file("a.csv"));
    CHECK(p.n() == 2);
    CHECK(p.channel_names[0] == "left");
    CHECK(p.channel_names[1] == "right");
}

TEST_CASE("csv load errors") {
    testutil::TempDir dir("panel");

    write_file(dir.file("bad_cell.csv"), "1,2\n3,oops\n");
    CHECK_THROWS_AS(load_panel_csv(dir.file("bad_cell.csv")), ParseError);
    try {
        load_panel_csv(dir.file("bad_cell.csv"));
    } catch (const ParseError& e) {
        CHECK(e.row() == 2);
        CHECK(e.col() == 2);
    }

    write_file(dir.file("ragged.csv"), "1,2\n3\n");
    CHECK_THROWS_AS(load_panel_csv(dir.file("ragged.csv")), StructureError);

    write_file(dir.file("missing.csv"), "1,2\n3,\n");
    CHECK_THROWS_AS(load_panel_csv(dir.file("missing.csv")), ParseError);

    write_file(dir.file("short.csv"), "1,2\n");
    CHECK_THROWS_AS(load_panel_csv(dir.file("short.csv")), ArgumentError);

    CHECK_THROWS_AS(load_panel_csv(dir.file("absent.csv")), IoError);
}

TEST_CASE("csv round trip preserves values exactly") {
    testutil::TempDir dir("panel");
    Rng rng(11);
    TimeSeriesPanel p;
    p.data.resize(17, 5);
    for (Eigen::Index i = 0; i < p.n(); ++i)
        for (Eigen::Index j = 0; j < 5; ++j) p.data(i, j) = rng.normal() * std::pow(10.0, rng.uniform(-8, 8));
    p.channel_names = {"a", "b", "c", "d", "e"};

    save_panel_csv(p, dir.file("round.csv"));
    const TimeSeriesPanel q = load_panel_csv(dir.file("round.csv"));
    REQUIRE(q.n() == p.n());
    REQUIRE(q.p() == p.p());
    CHECK((q.data - p.data).cwiseAbs().maxCoeff() == 0.0);
    CHECK(q.channel_names == p.channel_names);

    save_panel_csv(q, dir.file("round2.csv"));
    const TimeSeriesPanel r = load_panel_csv(dir.file("round2.csv"));
    CHECK((r.data - p.data).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("demean zeroes column means and is idempotent") {
    Rng rng(5);
    TimeSeriesPanel p;
    p.data.resize(200, 4);
    for (Eigen::Index i = 0; i < 200; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) p.data(i, j) = rng.normal() + 3.0 * (j + 1);

    const TimeSeriesPanel d = demean(p);
    for (Eigen::Index j = 0; j < 4; ++j) {
        const double sd = std::sqrt(d.data.col(j).squaredNorm() / 199.0);
        CHECK(std::abs(d.data.col(j).mean()) <= 1e-12 * std::max(sd, 1.0));
    }

    const TimeSeriesPanel dd = demean(d);
    CHECK((dd.data - d.data).cwiseAbs().maxCoeff() <= 1e-12 * d.data.cwiseAbs().maxCoeff());
}

TEST_CASE("segment selects [start, end) and validates bounds") {
    TimeSeriesPanel p;
    p.data.resize(10, 2);
    for (Eigen::Index i = 0; i < 10; ++i) {
        p.data(i, 0) = static_cast<double>(i);
        p.data(i, 1) = static_cast<double>(-i);
    }
    p.channel_names = {"x", "y"};

    const TimeSeriesPanel s = segment(p, 3, 7);
    CHECK(s.n() == 4);
    CHECK(s.data(0, 0) == 3.0);
    CHECK(s.data(3, 0) == 6.0);

    CHECK_THROWS_AS(segment(p, -1, 5), BoundsError);
    CHECK_THROWS_AS(segment(p, 0, 11), BoundsError);
    CHECK_THROWS_AS(segment(p, 4, 4), BoundsError);
    CHECK_THROWS_AS(segment(p, 7, 3), BoundsError);
}

TEST_CASE("complex csv round trip") {
    testutil::TempDir dir("panel");
    Rng rng(3);
    const ComplexMatrix m = testutil::random_complex(4, rng);
    save_complex_csv(m, dir.file("c.csv"));
    const ComplexMatrix back = load_complex_csv(dir.file("c.csv"));
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}
