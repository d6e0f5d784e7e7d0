#include <cstdio>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "cssx/errors.hpp"
#include "cssx/generate.hpp"
#include "cssx/io.hpp"
#include "test_util.hpp"

using namespace cssx;

TEST_SUITE("io") {

TEST_CASE("matrix market array files are column-major") {
    std::string mm =
        "%%MatrixMarket matrix array real general\n"
        "% a comment line\n"
        "2 2\n"
        "1\n2\n3\n4\n";
    DenseMatrix a = parse_matrix(mm, MatrixFormat::matrix_market);
    CHECK(a(0, 0) == 1.0);
    CHECK(a(1, 0) == 2.0);
    CHECK(a(0, 1) == 3.0);
    CHECK(a(1, 1) == 4.0);
}

TEST_CASE("matrix market coordinate duplicates are summed") {
    std::string mm =
        "%%MatrixMarket matrix coordinate real general\n"
        "2 3 4\n"
        "1 1 1.5\n"
        "1 1 2.5\n"
        "2 3 -1.0\n"
        "1 2 0.25\n";
    DenseMatrix a = parse_matrix(mm, MatrixFormat::matrix_market);
    CHECK(a(0, 0) == 4.0);
    CHECK(a(0, 1) == 0.25);
    CHECK(a(1, 2) == -1.0);
    CHECK(a(1, 0) == 0.0);
}

TEST_CASE("csv rows parse into a dense matrix") {
    DenseMatrix a = parse_matrix("3,0,0\n0,2,0\n0,0,1\n", MatrixFormat::csv);
    CHECK(a.rows() == 3);
    CHECK(a.cols() == 3);
    CHECK(a(0, 0) == 3.0);
    CHECK(a(1, 1) == 2.0);
    CHECK(a(2, 2) == 1.0);
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_matrix("%%MatrixMarket tensor real\n1 1\n1\n",
                                 MatrixFormat::matrix_market),
                    ParseError);
    try {
        parse_matrix("1,2\n3,4,5\n", MatrixFormat::csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_matrix("1,abc\n", MatrixFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_matrix("", MatrixFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_matrix("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n",
                                 MatrixFormat::matrix_market),
                    ParseError);
}

TEST_CASE("non-finite entries are rejected") {
    CHECK_THROWS_AS(parse_matrix("1,nan\n2,3\n", MatrixFormat::csv), NonFiniteError);
    CHECK_THROWS_AS(parse_matrix("1,inf\n2,3\n", MatrixFormat::csv), NonFiniteError);
}

TEST_CASE("csv writer round-trips exactly") {
    DenseMatrix a = gaussian_matrix(6, 5, 77);
    auto path = std::filesystem::temp_directory_path() / "cssx_io_roundtrip.csv";
    write_csv(path.string(), a);
    DenseMatrix b = read_matrix(path.string(), MatrixFormat::csv);
    CHECK(cssx::testutil::max_abs_diff(a, b) == 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("missing file raises a toolkit error") {
    CHECK_THROWS_AS(read_matrix("/nonexistent/cssx.csv", MatrixFormat::csv), Error);
}

}  // TEST_SUITE
