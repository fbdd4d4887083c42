#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "kneser/derive.hpp"
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

TEST_CASE("bipartite Hamilton cycle of H(3,1) is the hexagon itself") {
    HCycleCertificate c = bipartite_hamilton(3, 1, provider());
    CHECK(cyclic_equal(c.order, {"001", "011", "010", "110", "100", "101"}));
    CHECK(verify_certificate(c).ok);
}

TEST_CASE("bipartite Hamilton cycle of H(4,1) matches the hand execution") {
    HCycleCertificate c = bipartite_hamilton(4, 1, provider());
    CHECK(cyclic_equal(c.order,
                       {"0010", "0111", "0001", "1101", "0100", "1110", "1000", "1011"}));
    CHECK(verify_certificate(c).ok);
}

TEST_CASE("bipartite Hamilton cycle of H(6,2) covers both sides") {
    HCycleCertificate c = bipartite_hamilton(6, 2, provider());
    CHECK(c.order.size() == 30);
    CHECK(c.total == 30);
    VerificationReport rep = verify_certificate(c);
    CHECK(rep.ok);
    CHECK(rep.stats.level_counts.at(2) == 15);
    CHECK(rep.stats.level_counts.at(4) == 15);
    // alternate sides, support difference n-2k
    for (std::size_t i = 0; i < c.order.size(); ++i) {
        const Vertex& u = c.order[i];
        const Vertex& v = c.order[(i + 1) % c.order.size()];
        CHECK(std::abs(u.level() - v.level()) == 2);
    }
}

TEST_CASE("Kneser cycle for k=1 is the full rotation") {
    HCycleCertificate c = kneser_cycle(5, 1, provider());
    CHECK(strings(c.order) ==
          std::vector<std::string>{"10000", "01000", "00100", "00010", "00001"});
    CHECK(verify_certificate(c).ok);
    CHECK(c.visited == c.total);
}

TEST_CASE("Kneser cycle in the Petersen graph matches the hand execution") {
    HCycleCertificate c = kneser_cycle(5, 2, provider());
    CHECK(cyclic_equal(c.order, {"00101", "11000", "00011", "10100", "01001", "00110",
                                 "10001", "01010"}));
    CHECK(c.order.size() == 8);
    CHECK(c.total == 10);
    CHECK(verify_certificate(c).ok);
}

TEST_CASE("Kneser cycle lengths and exact fractions") {
    HCycleCertificate c = kneser_cycle(7, 3, provider());
    CHECK(c.order.size() == 30);
    CHECK(c.total == 35);
    CHECK(verify_certificate(c).ok);
    CHECK(coverage_fraction(7, 3) == Fraction{6, 7});
    CHECK(coverage_fraction(5, 2) == Fraction{4, 5});
    CHECK(coverage_fraction(9, 4) == Fraction{8, 9});
    CHECK(coverage_fraction(8, 2) == Fraction{1, 2});
    CHECK(coverage_fraction(6, 1) == Fraction{1, 1});
    CHECK_THROWS_AS(coverage_fraction(4, 2), std::invalid_argument);
}

TEST_CASE("qnk cycle covers the smaller level") {
    HCycleCertificate c = qnk_cycle(4, 1, provider());
    CHECK(c.order.size() == 8);
    VerificationReport rep = verify_certificate(c);
    CHECK(rep.ok);
    CHECK(rep.stats.level_counts.at(1) == 4);

    HCycleCertificate top = qnk_cycle(4, 2, provider());
    CHECK(verify_certificate(top).ok);
    VerificationReport rep2 = verify_certificate(top);
    CHECK(rep2.stats.level_counts.at(3) == 4);

    // complement duality
    REQUIRE(top.order.size() == c.order.size());
    for (std::size_t i = 0; i < c.order.size(); ++i)
        CHECK(top.order[i] == complement(c.order[i]));
}

TEST_CASE("qnk cycle at the middle visits both levels completely") {
    HCycleCertificate c = qnk_cycle(5, 2, provider());
    VerificationReport rep = verify_certificate(c);
    CHECK(rep.ok);
    CHECK(rep.stats.level_counts.at(2) == 10);
    CHECK(rep.stats.level_counts.at(3) == 10);
}

TEST_CASE("qnk rejects out-of-range k") {
    CHECK_THROWS_AS(qnk_cycle(4, 3, provider()), std::invalid_argument);
    CHECK_THROWS_AS(qnk_cycle(4, 0, provider()), std::invalid_argument);
}

TEST_CASE("interleaving invariants of the bipartite cycle") {
    HCycleCertificate c = bipartite_hamilton(7, 2, provider());
    CHECK(verify_certificate(c).ok);
    std::set<Vertex> low, high;
    for (std::size_t i = 0; i < c.order.size(); ++i) {
        if (i % 2 == 0) {
            CHECK(c.order[i].level() == 2);
            low.insert(c.order[i]);
        } else {
            CHECK(c.order[i].level() == 5);
            high.insert(c.order[i]);
        }
    }
    CHECK(low.size() == binomial(7, 2));
    CHECK(high.size() == binomial(7, 2));
}
