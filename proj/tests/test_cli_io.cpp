#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cxm/csv.hpp"

using namespace cxm;

TEST_CASE("csv reading") {
    std::istringstream in(
        "a, b ,c\n"
        "\n"
        "1,\"two, still one cell\",3\r\n"
        "4,\"escaped \"\" quote\",6\n");
    const auto rows = read_csv(in);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
    CHECK(rows[1][1] == "two, still one cell");
    CHECK(rows[2][1] == "escaped \" quote");
    CHECK(rows[2][2] == "6");
}

TEST_CASE("unterminated quotes are reported with their position") {
    std::istringstream in("a,b\n1,\"oops\n");
    try {
        read_csv(in);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.row == 2);
    }
}

TEST_CASE("numeric cells") {
    CHECK(parse_number("1.5", 1, 1) == doctest::Approx(1.5));
    CHECK(parse_number("-3e2", 1, 1) == doctest::Approx(-300.0));
    for (const char* bad : {"", "abc", "1.5x", "--2"}) {
        try {
            parse_number(bad, 7, 3);
            FAIL("expected parse_error for: " << bad);
        } catch (const parse_error& e) {
            CHECK(e.row == 7);
            CHECK(e.col == 3);
        }
    }
}

TEST_CASE("number formatting round-trips and is stable") {
    for (double v : {0.0, 1.0, -1.5, 0.1, 1e-9, 123456789.0, 2.0 / 3.0}) {
        const auto s = format_number(v);
        CHECK(parse_number(s, 1, 1) == doctest::Approx(v).epsilon(1e-11));
        CHECK(format_number(v) == s);
    }
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(3.0) == "3");
}

TEST_CASE("csv writing quotes only when needed") {
    std::ostringstream out;
    write_csv_row(out, {"plain", "with,comma", "with\"quote", "0.5"});
    CHECK(out.str() == "plain,\"with,comma\",\"with\"\"quote\",0.5\n");

    // write -> read round-trip
    std::ostringstream buf;
    write_csv_row(buf, {"a", "b,c", "d\"e"});
    write_csv_row(buf, {"1", "2", "3"});
    std::istringstream back(buf.str());
    const auto rows = read_csv(back);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
    CHECK(rows[1] == std::vector<std::string>{"1", "2", "3"});
}
