#include <doctest.h>

#include "pseudotri/errors.hpp"
#include "pseudotri/json_io.hpp"
#include "pseudotri/laurent.hpp"

#include <random>

using namespace ptri;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s, xyz); }

LaurentPoly random_poly(std::mt19937& rng, int nv, int terms, int lo, int hi)
{
    std::uniform_int_distribution<int> e(lo, hi), c(-5, 5);
    LaurentPoly f(nv);
    for (int k = 0; k < terms; ++k) {
        Exps x(nv);
        for (int& v : x)
            v = e(rng);
        f.add_term(x, c(rng));
    }
    return f;
}

} // namespace

TEST_CASE("add and mul")
{
    LaurentPoly x = LaurentPoly::variable(3, 0);
    CHECK((x - x).is_zero());
    CHECK(L("x^-1") * x == LaurentPoly::constant(3, 1));
    CHECK(L("(z+1)") * L("x+y") == L("x + y + x*z + y*z"));
    CHECK_THROWS_AS(LaurentPoly::variable(2, 0) + LaurentPoly::variable(3, 0), InvalidInput);
}

TEST_CASE("exact division")
{
    CHECK(div_exact(L("x+y+x*z+y*z"), L("z+1")) == L("x+y"));
    CHECK(div_exact(L("x^2*y + 3*z"), L("x*z")) == L("x*z^-1*y + 3*x^-1"));
    LaurentPoly f = L("x*y + z + 1");
    CHECK(div_exact(f.pow(2), div_exact(f, L("x*z")) * L("x*z")) == f);
    CHECK_THROWS_AS(div_exact(L("x + 1"), L("y + 1")), NotDivisible);
    CHECK_THROWS_AS(div_exact(L("x^2 + 1"), L("x + 1")), NotDivisible);
    CHECK_THROWS_AS(div_exact(L("2*x"), L("3")), NotDivisible);
    CHECK_THROWS_AS(div_exact(L("x"), L("0")), InvalidInput);
    CHECK(div_exact(L("0"), L("x + 1")).is_zero());
}

TEST_CASE("denominator vector")
{
    CHECK(L("(x+y)/z").denominator_vector() == std::vector<int>{0, 0, 1});
    CHECK(L("(x+y)*(z+1)/(x*y*z)").denominator_vector() == std::vector<int>{1, 1, 1});
    CHECK(L("x").denominator_vector() == std::vector<int>{0, 0, 0});
    CHECK(L("x").is_monomial());
    CHECK_FALSE(L("x+1").is_monomial());
    CHECK_THROWS_AS(L("0").denominator_vector(), InvalidInput);
}

TEST_CASE("text forms")
{
    CHECK(L("1 - 3*z + x^2/y").to_string(xyz) == "x^2*y^-1 - 3*z + 1");
    CHECK(L("(x+y)/z").to_fraction(xyz) == "(x + y)/z");
    CHECK(L("(x+y+x*z+y*z)/(x*y*z)").to_fraction(xyz) == "(x*z + y*z + x + y)/(x*y*z)");
    CHECK(L("1/x").to_fraction(xyz) == "1/x");
    CHECK(L("-x").to_string(xyz) == "-x");
    CHECK(L("0").to_string(xyz) == "0");
    CHECK(L("-(x - 2)^3").to_string(xyz) == "-x^3 + 6*x^2 - 12*x + 8");
    CHECK_THROWS_AS(L("x +"), InvalidInput);
    CHECK_THROWS_AS(L("w"), InvalidInput);
    CHECK_THROWS_AS(L("(x"), InvalidInput);
}

TEST_CASE("ring laws on random inputs")
{
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        LaurentPoly f = random_poly(rng, 3, 4, -2, 2), g = random_poly(rng, 3, 3, -2, 2),
                    h = random_poly(rng, 3, 3, -2, 2);
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE(f + g == g + f);
        if (!f.is_zero()) {
            REQUIRE(div_exact(g * f, f) == g);
            REQUIRE(f * div_exact(g * f, f) == g * f);
        }
    }
}

TEST_CASE("round trips")
{
    std::mt19937 rng(11);
    for (int it = 0; it < 100; ++it) {
        LaurentPoly f = random_poly(rng, 3, 5, -3, 3);
        REQUIRE(LaurentPoly::parse(f.to_string(xyz), xyz) == f);
        REQUIRE(LaurentPoly::parse(f.to_fraction(xyz), xyz) == f);
        REQUIRE(laurent_from_json(to_json(f, xyz), xyz) == f);
    }
}

TEST_CASE("big coefficients")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(1, 1000), v(0, 2);
    LaurentPoly f = LaurentPoly::constant(3, 1);
    std::vector<std::pair<mpz_class, mpz_class>> factors;
    std::vector<int> which;
    for (int k = 0; k < 40; ++k) {
        mpz_class a = c(rng), b = c(rng);
        int i = v(rng);
        f = f * (LaurentPoly::monomial({i == 0, i == 1, i == 2}, a) + LaurentPoly::constant(3, b));
        factors.emplace_back(a, b);
        which.push_back(i);
    }
    bool wide = false;
    for (const auto& [e, k] : f.terms())
        wide = wide || !k.fits_slong_p();
    CHECK(wide);
    for (int pt = 0; pt < 5; ++pt) {
        std::vector<mpq_class> at{mpq_class(pt + 2), mpq_class(-pt - 1), mpq_class(3, pt + 1)};
        mpq_class want = 1;
        for (std::size_t k = 0; k < factors.size(); ++k)
            want *= factors[k].first * at[which[k]] + factors[k].second;
        CHECK(f.evaluate(at) == want);
    }
}
