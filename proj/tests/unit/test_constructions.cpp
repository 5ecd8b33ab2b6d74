#include "support.hpp"

#include "abp/constructions.hpp"
#include "abp/kernels.hpp"

#include <doctest.h>

using namespace abp;
using testing_support::density;
using testing_support::throws_kind;
using testing_support::triple;

namespace {

std::vector<std::int64_t> terms(const SequenceSource& s, std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i <= n; ++i)
        out.push_back(s.term(i));
    return out;
}

std::vector<std::int64_t> errors(const AlmostBeattyPartition& p, SequenceRole role, std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (const auto& r : perturbations(p, role, n))
        out.push_back(r.error);
    return out;
}

using V = std::vector<std::int64_t>;

} // namespace

TEST_CASE("density triple validation")
{
    CHECK(throws_kind([] { triple("1/phi^3", "1/phi^4", "1/phi^2"); }, ErrorKind::DensityError));
    CHECK(throws_kind([] { triple("1/phi", "1/phi^2", "0"); }, ErrorKind::DensityError));
    CHECK_NOTHROW(triple("1/phi^3", "1/phi^4"));
}

TEST_CASE("first exact construction reproduces the golden table")
{
    auto p = build_theorem1(testing_support::golden_table1());
    CHECK(terms(*p.member(SequenceRole::ExactAlpha).sequence, 15) ==
          V{4, 8, 12, 16, 21, 25, 29, 33, 38, 42, 46, 50, 55, 59, 63});
    CHECK(terms(*p.member(SequenceRole::ExactBeta).sequence, 15) ==
          V{6, 13, 20, 27, 34, 41, 47, 54, 61, 68, 75, 82, 89, 95, 102});
    CHECK(terms(*p.member(SequenceRole::AlmostGamma).reference, 15) ==
          V{1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19, 21, 22, 24});
    CHECK(terms(*p.member(SequenceRole::AlmostGamma).sequence, 15) ==
          V{1, 2, 3, 5, 7, 9, 10, 11, 14, 15, 17, 18, 19, 22, 23});
    const V e = errors(p, SequenceRole::AlmostGamma, 15);
    CHECK(e == V{0, 1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 2, 0, 1});
    CHECK(*std::max_element(e.begin(), e.end()) == 2);
    CHECK(std::max_element(e.begin(), e.end()) - e.begin() + 1 == 13);
    CHECK(p.error_range(SequenceRole::AlmostGamma) == ErrorRange{0, 2});
    CHECK(throws_kind([] { build_theorem1(testing_support::tribonacci_table2()); }, ErrorKind::NotDisjoint));
}

TEST_CASE("error bound of the first construction")
{
    CHECK(theorem1_error_bound(density("1/phi^3"), density("1/phi^4")) == 2);
    CHECK(theorem1_error_bound(density("1/phi"), density("1/(2*phi^2)")) == 3);
    CHECK(theorem1_error_bound(density("1/phi"), density("1/phi^5")) == 3);
    CHECK(theorem1_error_bound(density("sqrt(2)/4"), density("sqrt(3)/6")) == 2);
    CHECK(theorem1_error_bound(density("1/tribonacci^3"), density("1/tribonacci^2")) == 2);
    CHECK(theorem2_error_bound(density("1/phi^2")) == 2);
}

TEST_CASE("first two-almost construction")
{
    auto p = build_theorem2(testing_support::golden_equal());
    CHECK(terms(*p.member(SequenceRole::AlmostBeta).sequence, 3) == V{1, 4, 6});
    CHECK(terms(*p.member(SequenceRole::AlmostBeta).reference, 3) == V{2, 5, 7});
    const auto& g = p.member(SequenceRole::AlmostGamma);
    CHECK(g.sequence->term(1) == 3);
    CHECK(g.reference->term(1) == 4);
    CHECK(perturbations(p, SequenceRole::AlmostGamma, 1).front().error == 1);
    CHECK(p.error_range(SequenceRole::AlmostBeta) == ErrorRange{0, 2});

    CHECK_NOTHROW(build_theorem2(triple("1/phi^2", "1/phi^3")));
    CHECK(throws_kind([] { build_theorem2(triple("1/phi^3", "1/phi^2", "1/phi^2")); }, ErrorKind::RatioRational));
    CHECK(throws_kind([] { build_theorem2(triple("sqrt(2)/4", "1/2 - sqrt(2)/8", "1/2 - sqrt(2)/8")); },
                      ErrorKind::RatioRational));
}

TEST_CASE("second two-almost construction reproduces the tribonacci table")
{
    auto p = build_theorem3(testing_support::tribonacci_table2());
    CHECK(terms(*p.member(SequenceRole::ExactAlpha).sequence, 15) ==
          V{6, 12, 18, 24, 31, 37, 43, 49, 56, 62, 68, 74, 80, 87, 93});
    CHECK(terms(*p.member(SequenceRole::AlmostBeta).reference, 15) ==
          V{3, 6, 10, 13, 16, 20, 23, 27, 30, 33, 37, 40, 43, 47, 50});
    CHECK(terms(*p.member(SequenceRole::AlmostBeta).sequence, 15) ==
          V{3, 5, 10, 13, 16, 20, 23, 27, 30, 33, 36, 40, 42, 47, 50});
    CHECK(errors(p, SequenceRole::AlmostBeta, 15) == V{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0});
    CHECK(errors(p, SequenceRole::AlmostGamma, 15) == V{0, 1, 1, 0, 1, 2, 1, 0, 1, 1, 1, 1, 1, 0, 1});
    CHECK(terms(*p.member(SequenceRole::AlmostGamma).sequence, 8) == V{1, 2, 4, 7, 8, 9, 11, 14});
    CHECK(throws_kind([] { build_theorem3(triple("1/phi", "1/phi^3", "1/phi^4")); }, ErrorKind::GammaNotLargest));
}

TEST_CASE("equal-density construction")
{
    auto p = build_theorem4(testing_support::golden_equal());
    CHECK(terms(*p.member(SequenceRole::AlmostBeta).sequence, 5) == V{1, 4, 6, 9, 12});
    CHECK(terms(*p.member(SequenceRole::AlmostBeta).reference, 5) == V{2, 5, 7, 10, 13});
    const auto& g = p.member(SequenceRole::AlmostGamma);
    CHECK(terms(*g.sequence, 2) == V{3, 8});
    CHECK(terms(*g.reference, 2) == V{4, 8});
    for (auto e : errors(p, SequenceRole::AlmostBeta, 2000))
        REQUIRE(e == 1);
    CHECK(throws_kind([] { build_theorem4(testing_support::golden_table1()); }, ErrorKind::DensitiesNotEqual));
}

TEST_CASE("perturbations reject exact roles")
{
    auto p = build_theorem1(testing_support::golden_table1());
    CHECK(throws_kind([&] { perturbations(p, SequenceRole::ExactAlpha, 3); }, ErrorKind::RoleNotPresent));
    CHECK(throws_kind([&] { perturbations(p, SequenceRole::AlmostBeta, 3); }, ErrorKind::RoleNotPresent));
    CHECK(throws_kind([&] { (void)p.member(SequenceRole::AlmostBeta); }, ErrorKind::RoleNotPresent));
}

TEST_CASE("closed-form counts match enumeration for every member")
{
    for (Construction k : {Construction::Thm2, Construction::Thm3, Construction::Thm4}) {
        for (const auto& t : {testing_support::golden_equal(), testing_support::tribonacci_table2()}) {
            AlmostBeattyPartition p = [&] {
                try {
                    return build(k, t);
                } catch (const Error&) {
                    return build(Construction::Thm2, t);
                }
            }();
            for (const auto& m : p.members()) {
                std::int64_t n = 0;
                for (std::int64_t v = 1; v <= 5000; ++v) {
                    const bool in = m.sequence->contains(v);
                    n += in;
                    REQUIRE(m.sequence->count(v) == n);
                    if (in)
                        REQUIRE(m.sequence->term(n) == v);
                }
            }
        }
    }
}

TEST_CASE("monotone interleaving of the complement")
{
    auto p3 = build_theorem3(testing_support::tribonacci_table2());
    const auto& g3 = p3.member(SequenceRole::AlmostGamma);
    g3.sequence->for_each_index(1, 100000, [&](std::int64_t n, std::int64_t v) {
        REQUIRE(g3.reference->term(n - 1) <= v);
        REQUIRE(v <= g3.reference->term(n));
    });
    auto p3b = build_theorem3(testing_support::sqrt_pair());
    const auto& g3b = p3b.member(SequenceRole::AlmostGamma);
    g3b.sequence->for_each_index(1, 100000, [&](std::int64_t n, std::int64_t v) {
        REQUIRE(g3b.reference->term(n - 1) <= v);
        REQUIRE(v <= g3b.reference->term(n));
    });
    auto p4 = build_theorem4(testing_support::golden_equal());
    const auto& g4 = p4.member(SequenceRole::AlmostGamma);
    g4.sequence->for_each_index(1, 100000, [&](std::int64_t n, std::int64_t v) {
        REQUIRE(g4.reference->term(n) - 1 <= v);
        REQUIRE(v <= g4.reference->term(n));
    });
}

TEST_CASE("second construction coincides with the first on disjoint triples")
{
    auto t = testing_support::golden_table1();
    auto p1 = build_theorem1(t), p3 = build_theorem3(t);
    // with B_alpha and B_beta disjoint, b~ = b
    for (std::int64_t n = 1; n <= 10000; ++n) {
        REQUIRE(p3.member(SequenceRole::AlmostBeta).sequence->term(n) ==
                p1.member(SequenceRole::ExactBeta).sequence->term(n));
        REQUIRE(p3.member(SequenceRole::AlmostGamma).sequence->term(n) ==
                p1.member(SequenceRole::AlmostGamma).sequence->term(n));
    }
}

TEST_CASE("first construction attains its error bound")
{
    for (const auto& t : {testing_support::golden_table1(), triple("1/phi", "1/(2*phi^2)")}) {
        auto p = build_theorem1(t);
        const auto bound = theorem1_error_bound(t.alpha(), t.beta());
        auto stats = kernels::error_stats_parallel(p, SequenceRole::AlmostGamma, 1000000);
        CAPTURE(bound);
        CHECK(stats.ok());
        CHECK(stats.max_error == bound);
        CHECK(stats.first_bound_at > 0);
    }
}

TEST_CASE("role and construction names")
{
    CHECK(to_string(SequenceRole::AlmostGamma) == "AlmostGamma");
    CHECK(to_string(Construction::Thm3) == "thm3");
}
