#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "qshor/circuit.hpp"
#include "qshor/netlist.hpp"

using namespace qshor;

TEST_CASE("append validates wire operands") {
    Circuit c(3);
    CHECK_THROWS_AS(c.append(Gate::x(3)), std::out_of_range);
    CHECK_THROWS_AS(c.append(Gate::x(-1)), std::out_of_range);
    CHECK_THROWS_AS(c.append(Gate::cx(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::ccx(0, 2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::cswap(1, 0, 1)), std::invalid_argument);
    c.append(Gate::ccx(0, 1, 2));
    CHECK(c.gates().size() == 1);
    CHECK_THROWS_AS(Circuit(0), std::invalid_argument);
}

TEST_CASE("register bookkeeping") {
    Circuit c(4);
    c.add_register("A", {0, 1});
    CHECK_THROWS_AS(c.add_register("A", {2, 3}), std::invalid_argument);  // duplicate name
    CHECK_THROWS_AS(c.add_register("B", {1, 2}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(c.add_register("B", {4}), std::out_of_range);         // out of range
    CHECK_THROWS_AS(c.add_register("", {3}), std::invalid_argument);
    c.add_register("B", {2, 3});
    REQUIRE(c.find_register("B") != nullptr);
    CHECK(c.find_register("B")->wires == std::vector<int>{2, 3});
    CHECK(c.find_register("missing") == nullptr);
}

TEST_CASE("inverted reverses and is an involution") {
    Circuit c(3);
    c.append(Gate::h(0));
    c.append(Gate::cphase(2, 0, 1));
    c.append(Gate::ccx(0, 1, 2));
    Circuit inv = c.inverted();
    REQUIRE(inv.gates().size() == 3);
    CHECK(inv.gates()[0] == Gate::ccx(0, 1, 2));
    CHECK(inv.gates()[1] == Gate::cphase(2, 0, 1, true));  // sign flipped
    CHECK(inv.gates()[2] == Gate::h(0));
    Circuit twice = inv.inverted();
    REQUIRE(twice.gates().size() == c.gates().size());
    for (std::size_t i = 0; i < c.gates().size(); ++i) CHECK(twice.gates()[i] == c.gates()[i]);
}

TEST_CASE("compose concatenates and merges registers") {
    Circuit a(3);
    a.add_register("A", {0});
    a.append(Gate::x(0));
    Circuit b(3);
    b.add_register("A", {1});  // name clash: a's A wins
    b.add_register("B", {2});  // clean, carried over
    b.add_register("C", {0});  // wire clash with merged A: dropped
    b.append(Gate::x(1));
    Circuit ab = compose(a, b);
    CHECK(ab.gates().size() == 2);
    CHECK(ab.find_register("A")->wires == std::vector<int>{0});
    CHECK(ab.find_register("B")->wires == std::vector<int>{2});
    CHECK(ab.find_register("C") == nullptr);
    Circuit wide(4);
    CHECK_THROWS_AS(compose(a, wide), std::invalid_argument);
}

TEST_CASE("resources counts and greedy depth") {
    Circuit c(4);
    c.append(Gate::x(0));
    c.append(Gate::x(1));        // parallel with the first
    c.append(Gate::cx(0, 1));    // layer 2
    c.append(Gate::ccx(0, 1, 2));
    c.append(Gate::h(3));        // fits in layer 1
    c.append(Gate::cphase(1, 2, 3));
    c.append(Gate::cphase(3, 2, 3, true));
    ResourceReport r = c.resources();
    CHECK(r.total == 7);
    CHECK(r.counts.at("x") == 2);
    CHECK(r.counts.at("cx") == 1);
    CHECK(r.counts.at("ccx") == 1);
    CHECK(r.counts.at("h") == 1);
    CHECK(r.counts.at("cp") == 1);
    CHECK(r.counts.at("icp") == 1);
    // layers: {x0,x1,h3} {cx01} {ccx012} {cp23} {icp23}
    CHECK(r.depth == 5);
    CHECK(Circuit(5).resources().total == 0);
    CHECK(Circuit(5).resources().depth == 0);
}

TEST_CASE("netlist round trip is exact and deterministic") {
    Circuit c(5);
    c.add_register("A", {0, 1});
    c.add_register("flag", {4});
    c.append(Gate::x(0));
    c.append(Gate::cx(0, 1));
    c.append(Gate::ccx(0, 1, 2));
    c.append(Gate::swap(2, 3));
    c.append(Gate::cswap(0, 2, 3));
    c.append(Gate::h(4));
    c.append(Gate::cphase(3, 0, 4));
    c.append(Gate::cphase(2, 1, 4, true));
    std::string text = to_netlist(c);
    CHECK(text == to_netlist(c));  // byte-for-byte deterministic
    Circuit back = parse_netlist(text);
    CHECK(back.width() == c.width());
    REQUIRE(back.gates().size() == c.gates().size());
    for (std::size_t i = 0; i < c.gates().size(); ++i) CHECK(back.gates()[i] == c.gates()[i]);
    REQUIRE(back.registers().size() == 2);
    CHECK(back.find_register("A")->wires == std::vector<int>{0, 1});
    CHECK(back.find_register("flag")->wires == std::vector<int>{4});
    CHECK(to_netlist(back) == text);
}

TEST_CASE("netlist text shape") {
    Circuit c(2);
    c.append(Gate::cphase(3, 0, 1, true));
    std::string text = to_netlist(c);
    CHECK(text.rfind("qnet 1 2\n", 0) == 0);
    CHECK(text.find("icp 3 0 1\n") != std::string::npos);
    CHECK(gate_line(Gate::ccx(4, 2, 0)) == "ccx 4 2 0");
    CHECK(gate_line(Gate::cphase(2, 0, 1)) == "cp 2 0 1");
}

TEST_CASE("parser accepts comments and blank lines") {
    Circuit c = parse_netlist("# header comment\nqnet 1 3\n\nreg A 0 1\nx 0  # trailing\ncx 0 2\n");
    CHECK(c.width() == 3);
    CHECK(c.gates().size() == 2);
    CHECK(c.find_register("A") != nullptr);
}

TEST_CASE("parser reports line numbers on malformed input") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_netlist(text);
            FAIL("expected NetlistError for: " << text);
        } catch (const NetlistError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails_with("qnot 1 2\nx 0\n", "line 1");
    fails_with("qnet 2 2\nx 0\n", "line 1");
    fails_with("qnet 1 2\nfoo 0\n", "foo");
    fails_with("qnet 1 2\nfoo 0\n", "line 2");
    fails_with("qnet 1 2\nx 5\n", "line 2");
    fails_with("qnet 1 2\ncx 0\n", "line 2");
    fails_with("qnet 1 2\ncp 0 0 1\n", "line 2");  // k must be >= 1
    fails_with("qnet 1 2\nx zebra\n", "zebra");
    fails_with("x 0\n", "line 1");  // missing header
}
