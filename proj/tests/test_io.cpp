#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "nullfd/io.hpp"

using namespace nullfd;
using namespace nullfd::testing;

TEST_CASE("csv reading with empty fields as markers") {
    std::istringstream in(
        "professor,chair,department\n"
        "Joe,,Mathematics\n"
        "Joe,Jill,Computer Science\n"
        "Bill,Arthur,Mathematics\n");
    Relation r = read_csv(in);
    REQUIRE(r.size() == 3);
    CHECK(r.schema().attributes() ==
          std::vector<std::string>{"professor", "chair", "department"});
    CHECK(r.tuples()[0].cells[1].null);
    CHECK(r.tuples()[1].cells[1].value == "Jill");
}

TEST_CASE("custom null token frees the empty string") {
    std::istringstream in(
        "A,B\n"
        "NULL,\n");
    Relation r = read_csv(in, {"NULL"});
    REQUIRE(r.size() == 1);
    CHECK(r.tuples()[0].cells[0].null);
    CHECK(r.tuples()[0].cells[1].present());
    CHECK(r.tuples()[0].cells[1].value.empty());
}

TEST_CASE("quoted fields and embedded quotes") {
    std::istringstream in(
        "A,B\n"
        "\"x,y\",\"say \"\"hi\"\"\"\n");
    Relation r = read_csv(in);
    REQUIRE(r.size() == 1);
    CHECK(r.tuples()[0].cells[0].value == "x,y");
    CHECK(r.tuples()[0].cells[1].value == "say \"hi\"");
}

TEST_CASE("csv arity errors carry line numbers") {
    std::istringstream in(
        "A,B\n"
        "1,2\n"
        "3\n");
    try {
        read_csv(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("csv round-trips through write and read") {
    Relation r = make_table1();
    std::ostringstream out;
    write_csv(out, r);
    std::istringstream in(out.str());
    Relation back = read_csv(in);
    REQUIRE(back.size() == r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        CHECK(identity_key(r.schema(), r.tuples()[i], r.schema().attr_set()) ==
              identity_key(back.schema(), back.tuples()[i], back.schema().attr_set()));
}

TEST_CASE("awkward values survive the csv writer") {
    Relation r{Schema({"A", "B"})};
    r.add_row({Value{"a,\"b\",c"}, std::nullopt});
    std::ostringstream out;
    write_csv(out, r);
    std::istringstream in(out.str());
    Relation back = read_csv(in);
    REQUIRE(back.size() == 1);
    CHECK(back.tuples()[0].cells[0].value == "a,\"b\",c");
    CHECK(back.tuples()[0].cells[1].null);
}

TEST_CASE("single records parse like csv rows") {
    auto row = parse_csv_record("Joe,,Mathematics", {});
    REQUIRE(row.size() == 3);
    CHECK(row[0] == Value{"Joe"});
    CHECK_FALSE(row[1].has_value());
}

TEST_CASE("fd spec files") {
    std::istringstream in(
        "E,D -> A\n"
        "A -> F\n"
        "A,B -> F\n");
    FdSpec spec = parse_fd_spec(in);
    CHECK(spec.fds.size() == 3);
    CHECK(spec.fds.fds()[0] == FD{{"E", "D"}, {"A"}});
    CHECK_FALSE(spec.nullable.has_value());
}

TEST_CASE("fd spec comments and nullable directive") {
    std::istringstream in(
        "# which columns may hold markers\n"
        "nullable: chair, income\n"
        "\n"
        "professor -> chair\n");
    FdSpec spec = parse_fd_spec(in);
    CHECK(spec.fds.size() == 1);
    REQUIRE(spec.nullable.has_value());
    CHECK(*spec.nullable == AttrSet{"chair", "income"});
}

TEST_CASE("empty fd spec parses to an empty set") {
    std::istringstream in("");
    FdSpec spec = parse_fd_spec(in);
    CHECK(spec.fds.empty());
}

TEST_CASE("fd spec syntax errors carry line numbers") {
    std::istringstream in(
        "A -> B\n"
        "A ->\n");
    try {
        parse_fd_spec(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}
