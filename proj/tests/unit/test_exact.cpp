#include "support.hpp"

#include "abp/exact/const_expr.hpp"
#include "abp/exact/factor.hpp"
#include "abp/exact/fixed_point.hpp"
#include "abp/exact/number_field.hpp"

#include "decimal_oracle.hpp"
#include <doctest.h>

#include <random>

using namespace abp;
using namespace abp::exact;
using testing_support::c;
using testing_support::throws_kind;

namespace {

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-60, 60), den(1, 25);
    std::vector<Rational> coeffs;
    for (int i = 0; i < f->degree(); ++i)
        coeffs.push_back(make_rational(num(rng), den(rng)));
    if (coeffs.size() > 1 && coeffs[1] == 0)
        coeffs[1] = 1;
    return FieldElement(f, coeffs);
}

std::vector<FieldPtr> supported_fields()
{
    return {golden_field(), tribonacci_field(), c("sqrt(2)+sqrt(3)").field()};
}

} // namespace

TEST_CASE("parse_constant examples")
{
    FieldElement a = c("1/phi^3");
    CHECK(a.field()->min_poly() == Polynomial{-1, -1, 1});
    CHECK(to_decimal(a) == "0.2360679775");

    FieldElement one = c("1/2 + 1/2");
    CHECK(one.is_rational());
    CHECK(one.rational_part() == 1);

    FieldElement tau = c("root(x^3 - x^2 - x - 1, [1.8, 1.9])");
    CHECK(tau.degree() == 3);
    CHECK(to_decimal(tau, 8) == "1.8392868");
    CHECK(tau == c("tribonacci"));
}

TEST_CASE("parse_constant errors")
{
    CHECK(throws_kind([] { c("1/phi^"); }, ErrorKind::ParseError));
    CHECK(throws_kind([] { c("2 * (phi"); }, ErrorKind::ParseError));
    CHECK(throws_kind([] { c("pi"); }, ErrorKind::ParseError));
    CHECK(throws_kind([] { c("root(x^2 - 2, [-2, 2])"); }, ErrorKind::NotIsolating));
    CHECK(throws_kind([] { c("root(x^2 - 2, [2, 3])"); }, ErrorKind::NotIsolating));
    CHECK(throws_kind([] { c("sqrt(1 - phi)"); }, ErrorKind::DomainError));
    CHECK(throws_kind([] { c("sqrt(2)+sqrt(3)+sqrt(5)+sqrt(7)"); }, ErrorKind::FieldTooLarge));
    CHECK(throws_kind([] { c("1/(phi - phi)"); }, ErrorKind::DomainError));
    // reducible input is factored; the root is still well defined
    FieldElement r = c("root(x^3 - 2*x, [1, 2])");
    CHECK(r * r == c("2"));
    CHECK(r.degree() == 2);
}

TEST_CASE("parse errors report a column")
{
    try {
        c("1 + * 2");
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("column 5") != std::string::npos);
    }
}

TEST_CASE("named constant identities")
{
    FieldElement phi = c("phi");
    CHECK((phi * phi - phi - Rational(1)).is_zero());
    FieldElement t = c("tribonacci");
    CHECK(t.inverse() + t.pow(-2) + t.pow(-3) == c("1"));
    CHECK(c("phi + sqrt(5)").degree() == 2);
    CHECK(c("sqrt(2) + sqrt(3)").field()->min_poly() == Polynomial{1, 0, -10, 0, 1});
}

TEST_CASE("sign examples")
{
    CHECK(c("0").sign() == 0);
    CHECK(c("phi - 8/5").sign() == 1);
    CHECK(c("2/phi^3 + 1/phi^4 - 1").sign() == -1);
    CHECK(c("3/phi^3 + 2/phi^4 - 1").sign() == 0);
}

TEST_CASE("floor and frac examples")
{
    CHECK(c("phi^3").floor() == 4);
    CHECK(c("7/2").floor() == 3);
    CHECK(c("13*phi^3").floor() == 55);
    CHECK(c("phi").frac() == c("phi - 1"));
    CHECK(c("5").frac().is_zero());
    CHECK(to_decimal(c("14/phi^3").frac(), 6) == "0.304952");
    CHECK(c("0 - 1/2").floor() == -1);
    CHECK(c("0 - phi").floor() == -2);
    CHECK(throws_kind([] { c("-phi"); }, ErrorKind::ParseError));
}

TEST_CASE("delta examples")
{
    CHECK(delta(c("3/10"), c("3/10")) == 0);
    CHECK(delta(c("14/phi^3").frac(), c("14/phi^4").frac()) == 0);
    CHECK(delta(c("20/phi^3").frac(), c("20/phi^4").frac()) == 1);
    CHECK(delta(c("1/2"), c("1/2")) == 1);
    CHECK(throws_kind([] { delta(c("1"), c("0")); }, ErrorKind::DomainError));
    CHECK(throws_kind([] { delta(c("0 - 1/3"), c("0")); }, ErrorKind::DomainError));
}

TEST_CASE("floor and fractional identities on random elements")
{
    std::mt19937_64 rng(20240601);
    for (const auto& f : supported_fields()) {
        CAPTURE(f->describe());
        for (int i = 0; i < 1000; ++i) {
            FieldElement x = random_element(f, rng), y = random_element(f, rng);
            const int d_sum = delta(x.frac(), y.frac());
            const int d_diff = delta((x - y).frac(), y.frac());
            REQUIRE((x + y).floor() == x.floor() + y.floor() + d_sum);
            REQUIRE((x - y).floor() == x.floor() - y.floor() - d_diff);
            REQUIRE((x + y).frac() == x.frac() + y.frac() - Rational(d_sum));
            REQUIRE((x - y).frac() == x.frac() - y.frac() + Rational(d_diff));
        }
    }
}

TEST_CASE("floor agrees with a 200-digit decimal evaluation")
{
    std::mt19937_64 rng(77);
    for (const auto& f : supported_fields()) {
        CAPTURE(f->describe());
        const auto theta = decimal_oracle::generator(*f);
        for (int i = 0; i < 1000; ++i) {
            FieldElement x = random_element(f, rng);
            if (i % 3 == 0)
                x = x * x * x; // larger magnitudes and coefficients
            REQUIRE(x.floor() == decimal_oracle::floor(x, theta));
        }
    }
}

TEST_CASE("equality agrees with sign of the difference")
{
    std::mt19937_64 rng(5);
    for (const auto& f : supported_fields()) {
        for (int i = 0; i < 200; ++i) {
            FieldElement x = random_element(f, rng), y = random_element(f, rng);
            FieldElement z = (x * y) / y;
            CHECK(z == x);
            CHECK((z - x).sign() == 0);
            CHECK((x == y) == ((x - y).sign() == 0));
            CHECK((x < y) != (y < x));
        }
    }
}

TEST_CASE("inverse and powers")
{
    FieldElement t = c("tribonacci");
    CHECK(t * t.inverse() == c("1"));
    CHECK(t.pow(5) == t * t * t * t * t);
    CHECK(t.pow(0) == c("1"));
    CHECK(c("(1 + sqrt(2))^3") == c("7 + 5*sqrt(2)"));
}

TEST_CASE("compositum and unify")
{
    std::vector<FieldElement> xs{c("sqrt(2)"), c("sqrt(3)"), c("1/2")};
    unify(xs);
    CHECK(xs[0].field() == xs[1].field());
    CHECK(xs[0].field() == xs[2].field());
    CHECK(xs[0] * xs[0] == c("2").in_field(xs[0].field()));
    CHECK(xs[1] * xs[1] == c("3").in_field(xs[0].field()));
    CHECK(to_decimal(xs[0] + xs[1]) == "3.146264370");

    auto ys = parse_constants({"phi", "tribonacci"});
    CHECK(ys[0].degree() == 6);
    CHECK(ys[0] * ys[0] - ys[0] == c("1").in_field(ys[0].field()));
    CHECK(to_decimal(ys[1]) == "1.839286755");
    CHECK(throws_kind([] { parse_constants({"phi", "tribonacci"}, 4); }, ErrorKind::FieldTooLarge));
}

TEST_CASE("linear independence with one")
{
    auto t = parse_constants({"sqrt(2)/4", "sqrt(3)/6"});
    CHECK(linearly_independent_with_one(t));
    auto g = parse_constants({"1/phi^3", "1/phi^4"});
    CHECK_FALSE(linearly_independent_with_one(g));
}

TEST_CASE("minimal polynomial of an element")
{
    CHECK(minimal_polynomial(c("1/phi^3")) == Polynomial{-1, 4, 1});
    CHECK(minimal_polynomial(c("sqrt(2)+sqrt(3)")) == Polynomial{1, 0, -10, 0, 1});
    CHECK(minimal_polynomial(c("3/7")) == Polynomial{-3, 7});
}

TEST_CASE("decimal rendering")
{
    CHECK(to_decimal(c("1/3")) == "0.3333333333");
    CHECK(to_decimal(c("2/3")) == "0.6666666667");
    CHECK(to_decimal(c("1")) == "1.000000000");
    CHECK(to_decimal(c("phi^40")) == "228826127.0");
}

TEST_CASE("fixed-point basis agrees with the exact path")
{
    FieldElement a = c("1/tribonacci^3"), b = c("1/tribonacci^2");
    FixedPointBasis basis({a, b});
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> coef(-2000000, 2000000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t x = coef(rng), y = coef(rng), k = coef(rng);
        CHECK(basis.floor({x, y}, k) == basis.floor_exact({x, y}, k));
        CHECK(basis.sign({x, y}, k) == basis.sign_exact({x, y}, k));
    }
    CHECK(basis.sign({3, 2}, -1) == basis.sign_exact({3, 2}, -1));
}
