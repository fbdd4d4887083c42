#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "kneser/certio.hpp"
#include "kneser/lemma.hpp"
#include "kneser/verify.hpp"

using namespace kneser;
using namespace std::chrono_literals;

namespace {

CachingProvider& provider() {
    static CachingProvider p("./no-such-dir", 60s);
    return p;
}

std::vector<std::string> strings(const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.str());
    return out;
}

// equality of cyclic sequences up to rotation and reflection
bool cyclic_equal(const std::vector<Vertex>& a, std::vector<std::string> b) {
    if (a.size() != b.size()) return false;
    std::vector<std::string> s = strings(a);
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t off = 0; off < s.size(); ++off) {
            bool match = true;
            for (std::size_t i = 0; i < s.size() && match; ++i)
                match = s[(off + i) % s.size()] == b[i];
            if (match) return true;
        }
        std::reverse(s.begin(), s.end());
    }
    return false;
}

}  // namespace

TEST_CASE("special paths") {
    CHECK(strings(make_special_path(SpecialPathKind::D, 4, 1)) ==
          std::vector<std::string>{"0001", "0011", "0010"});
    CHECK(strings(make_special_path(SpecialPathKind::A, 5, 1)) ==
          std::vector<std::string>{"00011", "00111", "01111"});
    CHECK(make_special_path(SpecialPathKind::B, 5, 2).empty());
    CHECK(strings(make_special_path(SpecialPathKind::B, 6, 2)) ==
          std::vector<std::string>{"001110"});
    CHECK_THROWS_AS(make_special_path(SpecialPathKind::D, 4, 2), std::invalid_argument);
}

TEST_CASE("base case: k=1 hexagon plus singleton paths") {
    LemmaStructure s = build_base_a(1, provider());
    CHECK(cyclic_equal(s.cycle, {"001", "011", "010", "110", "100", "101"}));
    CHECK(s.paths.size() == 3);
    for (const auto& [start, p] : s.paths) {
        CHECK(p.size() == 1);
        CHECK(start.level() == 2);
    }
    CHECK(verify_lemma_structure(s).ok);
}

TEST_CASE("base case: k=2 has a 20-cycle and 10 singleton paths") {
    LemmaStructure s = build_base_a(2, provider());
    CHECK(s.cycle.size() == 20);
    CHECK(s.paths.size() == 10);
    CHECK(verify_lemma_structure(s).ok);
}

TEST_CASE("k=1 construction matches the hand execution for n=4") {
    LemmaStructure s = build_k1(4);
    CHECK(cyclic_equal(s.cycle,
                       {"0010", "0011", "0001", "0101", "0100", "1100", "1000", "1010"}));
    REQUIRE(s.paths.size() == 4);
    CHECK(strings(s.paths.at(Vertex::parse("0011"))) == std::vector<std::string>{"0011", "0111"});
    CHECK(strings(s.paths.at(Vertex::parse("0101"))) == std::vector<std::string>{"0101", "1101"});
    CHECK(strings(s.paths.at(Vertex::parse("1100"))) == std::vector<std::string>{"1100", "1110"});
    CHECK(strings(s.paths.at(Vertex::parse("1010"))) == std::vector<std::string>{"1010", "1011"});
    CHECK(verify_lemma_structure(s).ok);
}

TEST_CASE("k=1 construction verifies for a range of n") {
    for (int n = 4; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(verify_lemma_structure(build_k1(n)).ok);
    }
    CHECK_THROWS_AS(build_k1(3), std::invalid_argument);
}

TEST_CASE("X/Y partition for the (6,2) step") {
    LemmaStructure sub_k = build(5, 2, provider());
    LemmaStructure sub_km1 = build(5, 1, provider());
    XYPartition xy = compute_xy_partition(sub_k, sub_km1);

    std::set<std::string> x, y;
    for (const auto& v : xy.x) x.insert(v.str());
    for (const auto& v : xy.y) y.insert(v.str());
    CHECK(x == std::set<std::string>{"01101", "10011", "11010", "11100"});
    CHECK(y == std::set<std::string>{"01011", "10101", "10110", "11001"});

    for (const auto& [from, to] : xy.terminal_edges) {
        CHECK(to != make_a(5, 4));
        CHECK(to != make_b(5, 3));
    }
}

TEST_CASE("inductive step at (6,2)") {
    LemmaStructure s =
        build_step_c(6, 2, build(5, 2, provider()), build(5, 1, provider()));
    CHECK(s.cycle.size() == 30);
    CHECK(s.paths.size() == 15);
    CHECK(verify_lemma_structure(s).ok);
}

TEST_CASE("build dispatches and verifies across the small grid") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 2 * k + 1; n <= 9; ++n) {
            CAPTURE(n);
            CAPTURE(k);
            LemmaStructure s = build(n, k, provider());
            CHECK(s.cycle.size() == 2 * binomial(n, k));
            CHECK(s.paths.size() == binomial(n, k));
            CHECK(verify_lemma_structure(s).ok);
        }
}

TEST_CASE("the mandated path at a(n,k+1) is A(n,k)") {
    LemmaStructure s = build(7, 2, provider());
    CHECK(s.paths.at(make_a(7, 3)) == make_special_path(SpecialPathKind::A, 7, 2));
}

TEST_CASE("build is deterministic") {
    LemmaStructure a = build(7, 2, provider());
    LemmaStructure b = build(7, 2, provider());
    CHECK(a.cycle == b.cycle);
    CHECK(a.paths == b.paths);
}

TEST_CASE("build rejects bad parameters") {
    CHECK_THROWS_AS(build(4, 2, provider()), std::invalid_argument);
    CHECK_THROWS_AS(build(5, 0, provider()), std::invalid_argument);
}

TEST_CASE("dump/parse round-trip") {
    LemmaStructure s = build(6, 2, provider());
    std::stringstream buf;
    dump_lemma(buf, s);
    std::string bytes = buf.str();
    CHECK(bytes.substr(0, 10) == "LEMMA 6 2\n");

    std::istringstream in(bytes);
    LemmaStructure back = parse_lemma(in);
    CHECK(back.n == 6);
    CHECK(back.cycle == s.cycle);
    CHECK(back.paths == s.paths);

    std::stringstream buf2;
    dump_lemma(buf2, back);
    CHECK(buf2.str() == bytes);
}

TEST_CASE("parse_lemma rejects malformed input") {
    std::istringstream a("LEMMA x 2\n");
    CHECK_THROWS_AS(parse_lemma(a), ParseError);
    std::istringstream b("LEMMA 4 1\nCYCLE\n0001\n00011\n");
    CHECK_THROWS_AS(parse_lemma(b), ParseError);
    std::istringstream c("LEMMA 4 1\n0001\n");
    CHECK_THROWS_AS(parse_lemma(c), ParseError);
}
