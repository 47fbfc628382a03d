#include "doctest.h"

#include "pidpair/matrix_io.hpp"
#include "pidpair/random.hpp"

using namespace pidpair;

using IM = Matrix<Integer>;
using PM = Matrix<Polynomial>;

namespace {

template <EuclideanRing R>
Matrix<R> parse_as(const std::string& text) {
    return parse_entries<R>(read_raw_matrix(text, "in"));
}

void check_error(const std::string& text, std::size_t line, std::size_t column, const std::string& fragment) {
    try {
        auto raw = read_raw_matrix(text, "in");
        if (raw.ring == RingKind::Integer)
            parse_entries<Integer>(raw);
        else
            parse_entries<Polynomial>(raw);
        FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
        CHECK(e.line == line);
        CHECK(e.column == column);
        CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        CHECK(std::string(e.what()).rfind("in:" + std::to_string(line) + ":" + std::to_string(column) + ": ", 0) == 0);
    }
}

} // namespace

TEST_CASE("reads integer matrices") {
    CHECK(parse_as<Integer>("int 2 2\n2 0\n0 3\n") == IM{{2, 0}, {0, 3}});
    // layout is free, comments run to end of line
    CHECK(parse_as<Integer>("# header comment\nint 2 3 # trailing\n1 2\n3 -4 5 +6\n") == IM{{1, 2, 3}, {-4, 5, 6}});
    CHECK(parse_as<Integer>("int 0 0\n") == IM(0, 0));
    CHECK(parse_as<Integer>("int 3 0") == IM(3, 0));
    auto big = parse_as<Integer>("int 1 1\n-123456789012345678901234567890\n");
    CHECK(big(0, 0).to_string() == "-123456789012345678901234567890");
}

TEST_CASE("reads polynomial matrices") {
    auto m = parse_as<Polynomial>("polyq 1 3\npoly[0,1] poly[1/2, -3/4]  7/3\n");
    CHECK(m(0, 0) == Polynomial::monomial(1, 1));
    CHECK(m(0, 1) == Polynomial(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-3, 4)}));
    CHECK(m(0, 2) == Polynomial(mpq_class(7, 3)));
    CHECK(parse_as<Polynomial>("polyq 1 1 poly[]")(0, 0).is_zero());
    // trailing zero coefficients are dropped
    CHECK(parse_as<Polynomial>("polyq 1 1 poly[1,0,0]")(0, 0) == Polynomial(1));
}

TEST_CASE("formats as it reads") {
    CHECK(format_matrix(IM{{2, 0}, {0, -3}}) == "int 2 2\n2 0\n0 -3\n");
    CHECK(format_matrix(IM(2, 0)) == "int 2 0\n\n\n");
    PM p{{Polynomial(std::vector<mpq_class>{mpq_class(2, 4), 0, mpq_class(-6, 3)}), Polynomial()}};
    CHECK(format_matrix(p) == "polyq 1 2\npoly[1/2,0,-2] poly[]\n");
    CHECK(format_list(std::vector<Integer>{1, 6}) == "1 6");
    CHECK(format_list(std::vector<Integer>{}) == "");
}

TEST_CASE("parse errors carry line and column") {
    check_error("", 1, 1, "missing header");
    check_error("# only a comment\n", 2, 1, "missing header");
    check_error("real 1 1\n1\n", 1, 1, "unknown ring 'real'");
    check_error("int x 1\n1\n", 1, 5, "expected row count");
    check_error("int 1 -1\n1\n", 1, 7, "expected column count");
    check_error("int 1\n", 2, 1, "missing column count");
    check_error("int 2 2\n1 2\n3 x\n", 3, 3, "expected an integer, got 'x'");
    check_error("int 2 2\n1 2\n3\n", 4, 1, "expected 4 entries, found 3");
    check_error("int 1 1\n1 2\n", 2, 3, "extra entry '2'");
    check_error("int 1 1\n1.5\n", 2, 1, "expected an integer");
    check_error("polyq 1 1\npoly[1,2\n", 2, 1, "unterminated");
    check_error("polyq 1 2\n1/0 1\n", 2, 1, "zero denominator");
    check_error("polyq 1 1\n  poly[1,,2]\n", 2, 3, "empty coefficient");
    check_error("polyq 1 1\npoly[1,]\n", 2, 1, "trailing comma");
}

TEST_CASE("reading a missing file is a parse error") {
    CHECK_THROWS_AS(read_raw_matrix_file("/nonexistent/matrix.txt"), ParseError);
}

namespace {

Polynomial random_rational_poly(Rng& rng) {
    const long deg = draw(rng, -1, 3);
    std::vector<mpq_class> c;
    for (long k = 0; k <= deg; ++k) {
        mpq_class q(draw(rng, -50, 50), static_cast<unsigned long>(draw(rng, 1, 12)));
        q.canonicalize();
        c.push_back(q);
    }
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("printed matrices re-parse to equal matrices") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        auto rows = static_cast<std::size_t>(draw(rng, 0, 4));
        auto cols = static_cast<std::size_t>(draw(rng, 0, 4));
        IM a = random_matrix<Integer>(rng, rows, cols, {1000000, 0});
        if (rows > 0 && cols > 0)
            a(0, 0) = a(0, 0) * Integer::parse("99999999999999999999");
        CHECK(parse_as<Integer>(format_matrix(a)) == a);

        PM p(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                p(i, j) = random_rational_poly(rng);
        CHECK(parse_as<Polynomial>(format_matrix(p)) == p);
    }
}
