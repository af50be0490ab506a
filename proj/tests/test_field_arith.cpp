/*
   Copyright 2026 The charp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charp/gen_random.hpp"
#include "charp/kp.hpp"
#include "charp/rational.hpp"
#include "test_support.hpp"

using namespace charp;
using namespace charp::test;

TEST_CASE("F_q arithmetic over prime fields") {
    auto cfg = make_config(5, 1, {"x"});
    CHECK(cfg->add(3, 4) == 2);
    CHECK(cfg->mul(3, 4) == 2);
    CHECK(cfg->inv(2) == 3);
    CHECK(cfg->pth_root(2) == 2);  // Frobenius is the identity on F_p
    CHECK(cfg->pow(2, 4) == 1);
}

TEST_CASE("F_q arithmetic over extension fields") {
    auto cfg = make_config(2, 2, {"x"});  // F_4
    // g = code 2 satisfies g^2 = g + 1 over the Conway modulus x^2+x+1.
    FqElem g = 2;
    CHECK(cfg->mul(g, g) == cfg->add(g, 1));
    CHECK(cfg->mul(g, cfg->inv(g)) == 1);
    for (FqElem a = 0; a < 4; ++a) {
        FqElem r = cfg->pth_root(a);
        CHECK(cfg->mul(r, r) == a);
    }

    auto f9 = make_config(3, 2, {"x"});
    for (FqElem a = 1; a < 9; ++a) {
        CHECK(f9->mul(a, f9->inv(a)) == 1);
        CHECK(f9->pow(a, 8) == 1);
        FqElem r = f9->pth_root(a);
        CHECK(f9->pow(r, 3) == a);
    }
}

TEST_CASE("unsupported configurations are rejected") {
    CHECK_THROWS_AS(make_config(4, 1, {"x"}), ConfigError);
    CHECK_THROWS_AS(make_config(2, 7, {"x"}), ConfigError);  // q = 128 > 64
    CHECK_THROWS_AS(make_config(11, 2, {"x"}), ConfigError);
    CHECK_THROWS_AS(make_config(2, 1, {"x", "x"}), ConfigError);
}

TEST_CASE("polynomial arithmetic and canonical order") {
    auto cfg = make_config(3, 1, {"x", "y"});
    auto x = Polynomial::variable(cfg, "x");
    auto y = Polynomial::variable(cfg, "y");
    auto f = x * x + y.scaled(2);
    auto g = x * x - y;
    CHECK(f == g);  // 2y = -y mod 3
    CHECK(f.leading_exponents() == ExpVec{2, 0});
    CHECK((x * y + y * x).leading_coeff() == 2);
    CHECK((f - f).is_zero());
    auto prod = (x + y) * (x + y) * (x + y);
    CHECK(prod == x * x * x + y * y * y);  // freshman's dream at p = 3
}

TEST_CASE("polynomial gcd") {
    auto cfg = make_config(2, 1, {"x", "y"});
    auto x = Polynomial::variable(cfg, "x");
    auto y = Polynomial::variable(cfg, "y");
    auto one = Polynomial(cfg, FqElem(1));
    auto a = (x + y) * (x * y + one);
    auto b = (x + y) * x;
    CHECK(Polynomial::gcd(a, b) == x + y);
    CHECK(Polynomial::gcd(x, y).is_one());
    auto c = (x * y + x + one) * (x * y + x + one) * (y + one);
    auto d = (x * y + x + one) * (y * y + y);
    auto g = Polynomial::gcd(c, d);
    CHECK(g == (x * y + x + one) * (y + one));
}

TEST_CASE("rational normalization decides functional equality") {
    auto cfg = make_config(2, 1, {"x", "y"});
    auto x = rf_var(cfg, "x");
    auto y = rf_var(cfg, "y");
    auto f = (x * x - y * y) / (x + y);  // = x + y in char 2... careful
    // (x^2 + y^2)/(x + y) = (x + y)^2/(x + y) = x + y over F_2.
    CHECK(f == x + y);
    auto g = (x / y) + (y / x);
    CHECK(g == (x * x + y * y) / (x * y));
    CHECK(g.denominator().leading_coeff() == 1);
}

TEST_CASE("partial derivatives: spec examples") {
    auto f3 = make_config(3, 1, {"x"});
    auto x3 = rf_var(f3, "x");
    CHECK(partial_derivative(x3 * x3 * x3, "x").is_zero());

    auto f2 = make_config(2, 1, {"x", "y"});
    auto x = rf_var(f2, "x");
    auto y = rf_var(f2, "y");
    CHECK(partial_derivative(x * y, "x") == y);

    auto f5 = make_config(5, 1, {"x"});
    auto x5 = rf_var(f5, "x");
    auto d = partial_derivative(x5.inverse(), "x");
    CHECK(d == rf_const(f5, 4) / (x5 * x5));

    CHECK_THROWS_AS(partial_derivative(x * y, "z"), ConfigError);
}

TEST_CASE("p-th powers and roots: spec examples") {
    auto f2 = make_config(2, 1, {"x", "y"});
    auto x = rf_var(f2, "x");
    auto y = rf_var(f2, "y");
    CHECK(pth_root(x * x * y * y * y * y) == x * y * y);
    CHECK(pth_root((x * x + y * y) / (y * y)) == (x + y) / y);

    auto f3 = make_config(3, 1, {"x"});
    CHECK_FALSE(is_pth_power(rf_var(f3, "x")));
    try {
        pth_root(rf_var(f3, "x"));
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.witness() == "x");
    }
}

TEST_CASE("frobenius_scalar: spec examples") {
    auto f2 = make_config(2, 1, {"x", "y"});
    auto x = rf_var(f2, "x");
    auto y = rf_var(f2, "y");
    CHECK(frobenius_scalar(x + y) == x * x + y * y);
    CHECK(frobenius_scalar(rf_const(f2, 1)) == rf_const(f2, 1));

    auto f3 = make_config(3, 1, {"x"});
    auto x3 = rf_var(f3, "x");
    auto two = rf_const(f3, 2);
    CHECK(frobenius_scalar(two / x3) == two / (x3 * x3 * x3));
}

TEST_CASE("kp_expand: spec examples") {
    auto f2 = make_config(2, 1, {"x"});
    auto x = rf_var(f2, "x");

    auto e1 = kp_expand(x);
    REQUIRE(e1.coords.size() == 1);
    CHECK(e1.coords.at(MultiIndex{1}) == rf_const(f2, 1));

    auto e2 = kp_expand(x + x * x);
    REQUIRE(e2.coords.size() == 2);
    CHECK(e2.coords.at(MultiIndex{0}) == x);
    CHECK(e2.coords.at(MultiIndex{1}) == rf_const(f2, 1));

    auto e3 = kp_expand(x.inverse());
    REQUIRE(e3.coords.size() == 1);
    CHECK(e3.coords.at(MultiIndex{1}) == x.inverse());
}

TEST_CASE("kp_expand: membership failure over sub-bases") {
    auto cfg = make_config(2, 1, {"x", "y"});
    auto y = rf_var(cfg, "y");
    std::vector<Polynomial> basis{Polynomial::variable(cfg, "x")};
    CHECK_THROWS_AS(kp_expand(y, basis), MembershipError);
    // x*y^2 = (y)^2 * x does lie in K^p(x).
    auto f = rf_var(cfg, "x") * y * y;
    auto e = kp_expand(f, basis);
    CHECK(e.reassemble() == f);
}

TEST_CASE("kp_expand rejects dependent bases") {
    auto cfg = make_config(2, 1, {"x", "y"});
    std::vector<Polynomial> bad{
        Polynomial::variable(cfg, "x"),
        Polynomial::variable(cfg, "x") *
            Polynomial::variable(cfg, "y").pow(2)};
    CHECK_THROWS_AS(kp_expand(rf_var(cfg, "x"), bad), PreconditionError);
}

TEST_CASE("property: pth_root and kp_expand round-trips") {
    for (std::uint32_t p : {2u, 3u}) {
        auto cfg = make_config(p, 1, {"x", "y", "z"});
        Rng rng(2026u + p);
        for (int trial = 0; trial < 250; ++trial) {
            auto f = random_rational(rng, cfg, 4, 3);
            CHECK(pth_root(frobenius_scalar(f)) == f);
            auto kc = kp_expand(f);
            CHECK(kc.reassemble() == f);
            bool pow = ::charp::is_pth_power(f);
            bool only_zero_index =
                kc.coords.size() <= 1 &&
                (kc.coords.empty() ||
                 kc.coords.begin()->first == MultiIndex{0, 0, 0});
            CHECK(pow == only_zero_index);
            bool all_partials_zero = true;
            for (std::size_t v = 0; v < 3; ++v)
                if (!partial_derivative(f, v).is_zero())
                    all_partials_zero = false;
            CHECK(pow == all_partials_zero);
        }
    }
}

TEST_CASE("property: Leibniz rule for partial derivatives") {
    auto cfg = make_config(3, 1, {"x", "y"});
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_rational(rng, cfg, 3, 2);
        auto g = random_rational(rng, cfg, 3, 2);
        for (std::size_t v = 0; v < 2; ++v) {
            auto lhs = partial_derivative(f * g, v);
            auto rhs = f * partial_derivative(g, v) +
                       g * partial_derivative(f, v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("canonical representation equality vs cross-multiplication") {
    auto cfg = make_config(2, 1, {"x", "y"});
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_rational(rng, cfg, 3, 2);
        auto g = random_rational(rng, cfg, 3, 2);
        bool cross = (f.numerator() * g.denominator() ==
                      g.numerator() * f.denominator());
        CHECK(cross == (f == g));
    }
}
