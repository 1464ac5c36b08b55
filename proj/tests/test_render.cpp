#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bst/bstriangle.hpp"
#include "bst/render.hpp"
#include "bst/suites.hpp"

using namespace bst;

namespace {

SweepConfig small_config()
{
    SweepConfig cfg;
    cfg.max_n = 8;
    cfg.min_index = -4;
    cfg.max_index = 4;
    cfg.primes_to = 7;
    cfg.truncation = 1;
    return cfg;
}

Int cell_or_zero(const TableGrid& grid, std::size_t i, std::size_t j)
{
    const auto& c = grid.cells[i][j];
    return c ? *c : Int(0);
}

}  // namespace

TEST_CASE("parsers for names")
{
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK_FALSE(parse_format("xml").has_value());
    CHECK(parse_table_kind("tandem") == TableKind::tandem);
    CHECK_FALSE(parse_table_kind("nosuch").has_value());
    CHECK(parse_suite_kind("egf") == SuiteKind::egf);
    CHECK_FALSE(parse_suite_kind("").has_value());
}

TEST_CASE("table construction matches the underlying functions")
{
    const auto cfg = small_config();
    const auto a = make_table(TableKind::a, cfg);
    REQUIRE(a.row_labels.size() == 9);
    REQUIRE(a.col_labels.size() == 9);
    for (std::size_t i = 0; i < a.row_labels.size(); ++i)
        for (std::size_t j = 0; j < a.col_labels.size(); ++j)
            CHECK(cell_or_zero(a, i, j) ==
                  bs_first(a.row_labels[i], a.col_labels[j]));

    const auto b = make_table(TableKind::b, cfg);
    CHECK(b.row_labels.front() == 1);  // second kind starts at n = 1
    CHECK(cell_or_zero(b, 6, 2) == bs_second(7, 3));

    SweepConfig bad = cfg;
    bad.min_index = 3;
    bad.max_index = -3;
    CHECK_THROWS_AS(make_table(TableKind::tandem, bad), std::invalid_argument);
}

TEST_CASE("tandem voids are blank in pretty and zero in csv/json")
{
    const auto cfg = small_config();
    const auto grid = make_table(TableKind::tandem, cfg);
    // (n,k) = (-4,-2) has k > n: void
    std::size_t i = 0, j = 2;
    REQUIRE(grid.row_labels[i] == -4);
    REQUIRE(grid.col_labels[j] == -2);
    CHECK_FALSE(grid.cells[i][j].has_value());

    const auto pretty = render_table(grid, OutputFormat::pretty);
    CHECK(pretty.find("n\\k") != std::string::npos);

    const auto csv = render_table(grid, OutputFormat::csv);
    const auto reparsed = parse_table_csv(csv);
    CHECK(reparsed.row_labels == grid.row_labels);
    CHECK(reparsed.col_labels == grid.col_labels);
    CHECK(*reparsed.cells[i][j] == 0);
}

TEST_CASE("csv and json round-trip exactly")
{
    const auto cfg = small_config();
    for (TableKind kind : {TableKind::a, TableKind::b, TableKind::tandem,
                           TableKind::ainv, TableKind::cycle,
                           TableKind::partition}) {
        const auto grid = make_table(kind, cfg);

        const auto from_csv = parse_table_csv(render_table(grid, OutputFormat::csv));
        const auto from_json =
            parse_table_json(render_table(grid, OutputFormat::json));
        CHECK(from_json.kind == grid.kind);
        for (const auto* re : {&from_csv, &from_json}) {
            REQUIRE(re->row_labels == grid.row_labels);
            REQUIRE(re->col_labels == grid.col_labels);
            for (std::size_t i = 0; i < grid.cells.size(); ++i)
                for (std::size_t j = 0; j < grid.cells[i].size(); ++j)
                    CHECK(*re->cells[i][j] == cell_or_zero(grid, i, j));
        }
    }
}

TEST_CASE("rendering is deterministic")
{
    const auto cfg = small_config();
    const auto grid = make_table(TableKind::tandem, cfg);
    for (OutputFormat f :
         {OutputFormat::pretty, OutputFormat::csv, OutputFormat::json})
        CHECK(render_table(grid, f) == render_table(make_table(TableKind::tandem, cfg), f));
}

TEST_CASE("polynomial rendering")
{
    const Polynomial p(std::vector<Rat>{make_rat(-1, 24), make_rat(1, 8)});
    CHECK(render_polynomial(p, OutputFormat::pretty) == "[-1/24, 1/8]\n");
    CHECK(render_polynomial(p, OutputFormat::csv) == "-1/24,1/8\n");
    const auto json = render_polynomial(p, OutputFormat::json);
    CHECK(json.find("\"-1/24\"") != std::string::npos);
    CHECK(json.find("\"1/8\"") != std::string::npos);
}

TEST_CASE("every suite passes on a small configuration")
{
    const auto cfg = small_config();
    for (SuiteKind suite : {SuiteKind::identities, SuiteKind::triangles,
                            SuiteKind::duality, SuiteKind::egf,
                            SuiteKind::congruences}) {
        const auto results = run_suite(suite, cfg);
        CHECK_FALSE(results.empty());
        for (const auto& r : results)
            CHECK(r.pass);
    }
    // the combined suite is the concatenation, in order
    const auto all = run_suite(SuiteKind::all, cfg);
    std::size_t total = 0;
    for (SuiteKind suite : {SuiteKind::identities, SuiteKind::triangles,
                            SuiteKind::duality, SuiteKind::egf,
                            SuiteKind::congruences})
        total += run_suite(suite, cfg).size();
    CHECK(all.size() == total);
}

TEST_CASE("claim rendering formats")
{
    ClaimResult r{"recst1", "n=4 m=0", true, "lhs=24 rhs=24"};
    CHECK(render_claim(r, OutputFormat::csv) == "recst1,n=4 m=0,pass");
    const auto json = render_claim(r, OutputFormat::json);
    CHECK(json.find("\"recst1\"") != std::string::npos);
    CHECK(json.find("true") != std::string::npos);
    const auto pretty = render_claim(r, OutputFormat::pretty);
    CHECK(pretty.find("PASS") != std::string::npos);
}
