#include <doctest.h>

#include "koszul/algebra.hpp"
#include "koszul/sampling.hpp"

using namespace koszul;

namespace {

const chart B3 = base_chart(3);

expression gen(const chart& c, generator g) { return expression::from_generator(c, g); }

}  // namespace

TEST_CASE("normalization sorts odd factors with the Koszul sign") {
    // xi2 * xi1 -> -xi1 xi2
    expression e = expression::make(B3, {raw_term{rational(1), {}, {gen_xi(2), gen_xi(1)}}});
    expression expect =
        expression::make(B3, {raw_term{rational(-1), {}, {gen_xi(1), gen_xi(2)}}});
    CHECK(e == expect);
}

TEST_CASE("normalization kills odd squares") {
    expression e = expression::make(B3, {raw_term{rational(1), {}, {gen_xi(1), gen_xi(1)}}});
    CHECK(e.is_zero());
}

TEST_CASE("normalization combines like terms") {
    expression e = expression::make(
        B3, {raw_term{rational(2), {{gen_x(1), 1}}, {gen_xi(1)}},
             raw_term{rational(3), {{gen_x(1), 1}}, {gen_xi(1)}}});
    expression expect =
        expression::make(B3, {raw_term{rational(5), {{gen_x(1), 1}}, {gen_xi(1)}}});
    CHECK(e == expect);
}

TEST_CASE("normalization rejects generators outside the chart") {
    CHECK_THROWS_AS(expression::make(B3, {raw_term{rational(1), {{gen_x(4), 1}}, {}}}),
                    chart_error);
    CHECK_THROWS_AS(expression::make(B3, {raw_term{rational(1), {{gen_p(1), 1}}, {}}}),
                    chart_error);
}

TEST_CASE("addition has inverses and does not reorder commuting factors") {
    expression x1 = gen(B3, gen_x(1));
    CHECK((x1 + (-x1)).is_zero());

    expression xi1 = gen(B3, gen_xi(1));
    expression xi2 = gen(B3, gen_xi(2));
    CHECK((xi1 + xi2) == (xi2 + xi1));

    // even and odd factors commute: (x1 xi1) + (xi1 x1) = 2 x1 xi1
    expression a = x1 * xi1;
    expression b = xi1 * x1;
    CHECK((a + b) == rational(2) * (x1 * xi1));
}

TEST_CASE("multiplication is graded commutative") {
    expression xi1 = gen(B3, gen_xi(1));
    expression xi2 = gen(B3, gen_xi(2));
    CHECK((xi1 * xi2) == -(xi2 * xi1));
    CHECK((xi1 * xi1).is_zero());

    // (2 x1 + xi1 xi2) * xi1 = 2 x1 xi1  (the cubic term has a repeated xi1)
    expression x1 = gen(B3, gen_x(1));
    expression lhs = (rational(2) * x1 + xi1 * xi2) * xi1;
    CHECK(lhs == rational(2) * (x1 * xi1));
}

TEST_CASE("left partial derivatives") {
    expression xi1 = gen(B3, gen_xi(1));
    expression xi2 = gen(B3, gen_xi(2));
    expression x1 = gen(B3, gen_x(1));

    CHECK(partial(gen_xi(1), xi1 * xi2) == xi2);
    CHECK(partial(gen_xi(2), xi1 * xi2) == -xi1);
    CHECK(partial(gen_x(1), x1 * x1 * xi1) == rational(2) * (x1 * xi1));
    CHECK(partial(gen_x(2), x1).is_zero());
}

TEST_CASE("parity classification") {
    expression x1 = gen(B3, gen_x(1));
    expression xi1 = gen(B3, gen_xi(1));
    expression xi2 = gen(B3, gen_xi(2));

    CHECK(parity_of(x1 * xi1 * xi2) == parity::even);
    CHECK(parity_of(xi1) == parity::odd);
    CHECK(!parity_of(x1 + xi1).has_value());
    CHECK(parity_of(expression::zero(B3)) == parity::even);
}

TEST_CASE("substitution") {
    const chart D1 = doubled_chart(1);
    expression pt1 = expression::from_generator(D1, gen_pt(1));
    expression x1d = expression::from_generator(D1, gen_x(1));
    CHECK(substitute(pt1 * x1d, gen_pt(1), expression::zero(D1)).is_zero());

    expression xi1 = gen(B3, gen_xi(1));
    expression xi2 = gen(B3, gen_xi(2));
    CHECK(substitute(xi1 * xi2, gen_xi(2), xi1).is_zero());

    const chart D2 = doubled_chart(2);
    expression x1 = expression::from_generator(D2, gen_x(1));
    expression xt1 = expression::from_generator(D2, gen_xt(1));
    expression f = x1 * expression::from_generator(D2, gen_xi(1));
    expression g = substitute(f, gen_x(1), x1 + xt1);
    CHECK(g == (x1 + xt1) * expression::from_generator(D2, gen_xi(1)));

    CHECK_THROWS_AS(substitute(f, gen_x(1), expression::from_generator(D2, gen_xi(2))),
                    parity_error);
}

TEST_CASE("normalization is idempotent on random raw terms") {
    splitmix64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<raw_term> raws;
        int nterms = rng.range(1, 4);
        for (int t = 0; t < nterms; ++t) {
            raw_term r;
            r.coeff = rational(rng.range(-4, 4));
            int ne = rng.range(0, 2);
            for (int k = 0; k < ne; ++k)
                r.even_factors.push_back({gen_x(rng.range(1, 3)), rng.range(1, 2)});
            int no = rng.range(0, 3);
            for (int k = 0; k < no; ++k)
                r.odd_factors.push_back(rng.below(2) ? gen_xi(rng.range(1, 3))
                                                     : gen_xis(rng.range(1, 3)));
            raws.push_back(std::move(r));
        }
        expression once = expression::make(B3, raws);
        // feed the normal form back through make
        std::vector<raw_term> again;
        for (const monomial& m : once.terms()) again.push_back({m.coeff, m.even, m.odd});
        CHECK(expression::make(B3, again) == once);
    }
}

TEST_CASE("multiplication is graded commutative and associative on samples") {
    splitmix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        expression a = random_monomial(B3, 2, rng);
        expression b = random_monomial(B3, 2, rng);
        expression c = random_monomial(B3, 2, rng);
        auto pa = parity_of(a), pb = parity_of(b);
        REQUIRE(pa.has_value());
        REQUIRE(pb.has_value());
        int sign = (*pa == parity::odd && *pb == parity::odd) ? -1 : 1;
        CHECK(a * b == rational(sign) * (b * a));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("odd elements square to zero") {
    splitmix64 rng(99);
    int seen_odd = 0;
    for (int trial = 0; trial < 100; ++trial) {
        expression a = random_monomial(B3, 2, rng);
        expression b = random_monomial(B3, 2, rng);
        expression sum = a + b;
        if (parity_of(sum) == parity::odd && !sum.is_zero()) {
            ++seen_odd;
            CHECK((sum * sum).is_zero());
        }
    }
    CHECK(seen_odd > 10);
}

TEST_CASE("double odd derivative vanishes") {
    splitmix64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        expression a = random_monomial(B3, 2, rng);
        for (int i = 1; i <= 3; ++i) {
            CHECK(partial(gen_xi(i), partial(gen_xi(i), a)).is_zero());
            CHECK(partial(gen_xis(i), partial(gen_xis(i), a)).is_zero());
        }
    }
}

TEST_CASE("graded Leibniz rule for left partials") {
    splitmix64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        expression a = random_monomial(B3, 2, rng);
        expression b = random_monomial(B3, 2, rng);
        auto pa = parity_of(a);
        REQUIRE(pa.has_value());
        for (generator g : {gen_x(1), gen_xi(1), gen_xis(2)}) {
            int sign = (family_parity(g.fam) == parity::odd && *pa == parity::odd) ? -1 : 1;
            expression lhs = partial(g, a * b);
            expression rhs = partial(g, a) * b + rational(sign) * (a * partial(g, b));
            CHECK(lhs == rhs);
        }
    }
}
