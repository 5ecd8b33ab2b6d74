#include "support.hpp"

#include "abp/beatty.hpp"

#include <doctest.h>

#include <set>

using namespace abp;
using testing_support::c;
using testing_support::density;
using testing_support::throws_kind;

namespace {

std::vector<std::string> test_densities()
{
    return {"1/phi", "1/phi^3", "1/phi^4", "1/phi^2", "1/tribonacci", "1/tribonacci^2", "1/tribonacci^3",
            "sqrt(2)/4", "sqrt(3)/6", "sqrt(2)-1", "sqrt(5)-2", "1/(2*phi^2)"};
}

} // namespace

TEST_CASE("density validation")
{
    CHECK(throws_kind([] { density("1/2"); }, ErrorKind::DensityError));
    CHECK(throws_kind([] { density("phi"); }, ErrorKind::DensityError));
    CHECK(throws_kind([] { density("0 - 1/phi"); }, ErrorKind::DensityError));
    CHECK_NOTHROW(density("1/phi"));
}

TEST_CASE("term examples")
{
    BeattySequence a(density("1/phi^3")), b(density("1/phi^4"));
    CHECK(a.term(5) == 21);
    CHECK(b.term(2) == 13);
    CHECK(a.term(0) == 0);
    CHECK(BeattySequence(density("1/tribonacci")).term(0) == 0);
    CHECK(a.reciprocal() * a.density().value() == c("1"));
}

TEST_CASE("contains examples")
{
    BeattySequence a(density("1/phi^3"));
    CHECK(a.contains(4));
    CHECK_FALSE(a.contains(5));
    CHECK_FALSE(BeattySequence(density("1/phi")).contains(2));
}

TEST_CASE("count examples")
{
    CHECK(BeattySequence(density("1/phi^3")).count(12) == 3);
    CHECK(BeattySequence(density("1/phi")).count(13) == 8);
    CHECK(BeattySequence(density("1/phi")).count(0) == 0);
}

TEST_CASE("gap examples")
{
    BeattySequence a(density("1/phi^3"));
    CHECK(a.gap(4) == 5);
    CHECK(a.gap(1) == 4);
    CHECK(BeattySequence(density("1/phi")).gap(1) == 2);
}

TEST_CASE("successor gap class examples")
{
    BeattySequence g(density("1/phi"));
    CHECK(g.successor_gap_class(1) == GapClass::GapK1);
    CHECK(g.successor_gap_class(3) == GapClass::GapK);
    CHECK(g.successor_gap_class(2) == GapClass::NotMember);
}

TEST_CASE("disjointness witness examples")
{
    auto w = disjointness_witness(density("1/phi^3"), density("1/phi^4"));
    REQUIRE(w);
    CHECK(w->r == 3);
    CHECK(w->s == 2);
    CHECK_FALSE(disjointness_witness(density("1/phi^2"), density("1/phi^2")));
    CHECK_FALSE(disjointness_witness(density("1/tribonacci^3"), density("1/tribonacci^2")));
}

TEST_CASE("counting identity defect examples")
{
    auto t = testing_support::golden_table1();
    CHECK(counting_identity_defect(t.alpha(), t.beta(), t.gamma(), 13) == 0);
    CHECK(counting_identity_defect(t.alpha(), t.beta(), t.gamma(), 19) == 1);
    CHECK(throws_kind(
        [] { counting_identity_defect(density("1/phi^3"), density("1/phi^4"), density("1/phi^2"), 5); },
        ErrorKind::DensityError));
}

TEST_CASE("term, contains and count are consistent with enumeration")
{
    for (const auto& text : test_densities()) {
        CAPTURE(text);
        BeattySequence s(density(text));
        std::set<std::int64_t> terms;
        std::int64_t prev = 0;
        for (std::int64_t n = 1;; ++n) {
            const std::int64_t v = s.term(n);
            REQUIRE(v > prev);
            REQUIRE(s.contains(v));
            REQUIRE(s.count(v) == n);
            prev = v;
            terms.insert(v);
            if (v > 10000)
                break;
        }
        std::int64_t running = 0;
        for (std::int64_t m = 1; m <= 10000; ++m) {
            const bool in = terms.count(m) > 0;
            running += in;
            REQUIRE(s.contains(m) == in);
            REQUIRE(s.count(m) == running);
        }
    }
}

TEST_CASE("gaps take two values and follow the gap criterion")
{
    for (const auto& text : test_densities()) {
        CAPTURE(text);
        BeattySequence s(density(text));
        const std::int64_t k = s.min_gap();
        for (std::int64_t n = 1; n <= 10000; ++n) {
            const std::int64_t g = s.gap(n);
            REQUIRE((g == k || g == k + 1));
            const std::int64_t m = s.term(n);
            REQUIRE(s.successor_gap_class(m) == (g == k ? GapClass::GapK : GapClass::GapK1));
        }
        for (std::int64_t m = 1; m <= 2000; ++m)
            if (!s.contains(m))
                REQUIRE(s.successor_gap_class(m) == GapClass::NotMember);
    }
}

TEST_CASE("disjointness witness matches a finite intersection search")
{
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"1/phi^3", "1/phi^4"}, {"1/phi^2", "1/phi^2"},         {"1/tribonacci^3", "1/tribonacci^2"},
        {"1/phi", "1/(2*phi^2)"}, {"sqrt(2)/4", "sqrt(3)/6"}, {"sqrt(2)-1", "sqrt(5)-2"},
        {"1/phi^2", "1/phi^3"}};
    for (const auto& [x, y] : pairs) {
        CAPTURE(x);
        CAPTURE(y);
        Density a = density(x), b = density(y);
        auto w = disjointness_witness(a, b);
        if (w)
            CHECK(Rational(w->r) * a.value() + Rational(w->s) * b.value() == c("1"));
        BeattySequence sa(a), sb(b);
        std::int64_t common = 0;
        for (std::int64_t n = 1; sa.term(n) <= 100000 && !common; ++n)
            if (sb.contains(sa.term(n)))
                common = sa.term(n);
        CHECK(w.has_value() == (common == 0));
    }
}

TEST_CASE("counting identity holds on valid triples")
{
    for (const auto& t : {testing_support::golden_table1(), testing_support::tribonacci_table2(),
                          testing_support::golden_equal(), testing_support::sqrt_pair(),
                          testing_support::witness_triple()}) {
        BeattySequence a(t.alpha()), b(t.beta()), g(t.gamma());
        for (std::int64_t m = 1; m <= 10000; ++m) {
            const int d = counting_identity_defect(t.alpha(), t.beta(), t.gamma(), m);
            REQUIRE(a.count(m) + b.count(m) + g.count(m) == m - d);
        }
    }
}

TEST_CASE("fractional part at m")
{
    BeattySequence a(density("1/phi^3"));
    CHECK(a.frac_at(13) == c("14/phi^3").frac());
}
