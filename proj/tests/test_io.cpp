#include <doctest.h>

#include "koszul/io.hpp"
#include "koszul/sampling.hpp"
#include "koszul/structures.hpp"

using namespace koszul;

namespace {

expression gen(const chart& c, generator g) { return expression::from_generator(c, g); }

expression random_expression(const chart& c, splitmix64& rng) {
    expression out(c);
    int nterms = rng.range(0, 4);
    for (int t = 0; t < nterms; ++t) out += random_monomial(c, 3, rng);
    return out;
}

}  // namespace

TEST_CASE("parsing the structure Hamiltonian shape") {
    const chart c = base_chart(2);
    expression e = parse_expression("x1*xs_1 - 1/2*xi1*xi2*xis_1", c);
    expression expect = gen(c, gen_x(1)) * gen(c, gen_xs(1)) -
                        rational(1, 2) * (gen(c, gen_xi(1)) * gen(c, gen_xi(2)) *
                                          gen(c, gen_xis(1)));
    CHECK(e == expect);
}

TEST_CASE("parsing normalizes as it reads") {
    const chart c = base_chart(2);
    CHECK(parse_expression("xi1*xi1", c).is_zero());
    expression e = parse_expression("xi2*xi1", c);
    CHECK(e == -(gen(c, gen_xi(1)) * gen(c, gen_xi(2))));
    CHECK(print_expression(e) == "-1*xi1*xi2");
}

TEST_CASE("grammar shapes") {
    const chart c = doubled_chart(2);
    CHECK(parse_expression("2*x1 + 3*x2^2", c) ==
          rational(2) * gen(c, gen_x(1)) + rational(3) * pow(gen(c, gen_x(2)), 2));
    CHECK(parse_expression("-x1", c) == -gen(c, gen_x(1)));
    CHECK(parse_expression("x1*(x2 + xt_1)", c) ==
          gen(c, gen_x(1)) * (gen(c, gen_x(2)) + gen(c, gen_xt(1))));
    CHECK(parse_expression("5/10", c) == expression::constant(c, rational(1, 2)));
    CHECK(parse_expression("x1 - x1", c).is_zero());
    // '*' binds tighter than '+'
    CHECK(parse_expression("x1 + x2*xt_2", c) ==
          gen(c, gen_x(1)) + gen(c, gen_x(2)) * gen(c, gen_xt(2)));
}

TEST_CASE("parse errors carry position and reason") {
    const chart c = base_chart(2);
    CHECK_THROWS_AS(parse_expression("x1 + ", c), parse_error);
    CHECK_THROWS_AS(parse_expression("y1", c), parse_error);
    CHECK_THROWS_AS(parse_expression("x3", c), parse_error);      // index out of range
    CHECK_THROWS_AS(parse_expression("xi1^2", c), parse_error);   // exponent on odd
    CHECK_THROWS_AS(parse_expression("p1", c), parse_error);      // wrong chart mode
    CHECK_THROWS_AS(parse_expression("x1 x2", c), parse_error);   // missing operator
    CHECK_THROWS_AS(parse_expression("1/0", c), parse_error);

    try {
        parse_expression("x1 +\n qq", c);
        FAIL("expected parse_error");
    } catch (const parse_error& pe) {
        CHECK(pe.line == 2);
        CHECK(pe.column == 2);
    }
}

TEST_CASE("canonical printing") {
    const chart c = doubled_chart(1);
    CHECK(print_expression(expression::zero(c)) == "0");
    expression mu = gen(c, gen_xi(1)) * gen(c, gen_p(1)) +
                    gen(c, gen_xis(1)) * gen(c, gen_pt(1));
    CHECK(print_expression(mu) == "p1*xi1 + pt_1*xis_1");

    const chart b = base_chart(2);
    expression e = rational(-1, 2) * gen(b, gen_x(1)) + pow(gen(b, gen_x(2)), 3) +
                   expression::constant(b, rational(7));
    CHECK(print_expression(e) == "7 - 1/2*x1 + x2^3");
}

TEST_CASE("print then parse is the identity on normal forms") {
    splitmix64 rng(110011);
    for (const chart& c : {base_chart(1), base_chart(3), doubled_chart(2)}) {
        for (int trial = 0; trial < 300; ++trial) {
            expression e = random_expression(c, rng);
            CHECK(parse_expression(print_expression(e), c) == e);
        }
    }
}

TEST_CASE("parse then print canonicalizes messy input") {
    const chart c = base_chart(3);
    CHECK(print_expression(parse_expression("xi3*xi1*x1 + x1*xi1*xi3", c)) == "0");
    CHECK(print_expression(parse_expression("x2*x1 + x1*x2", c)) == "2*x1*x2");
    CHECK(print_expression(parse_expression("(x1 + x2)*(x1 - x2)", c)) == "x1^2 - x2^2");
}

static const char* so3_file = R"(# so(3) Lie-Poisson structure over R^3
dim = 3
a[1][1] = 1
a[2][2] = 1
a[3][3] = 1
astar[1][2] = x3
astar[2][1] = -x3
astar[1][3] = -x2
astar[3][1] = x2
astar[2][3] = x1
astar[3][2] = -x1
Q[3][1][2] = 1
Q[3][2][1] = -1
Q[2][1][3] = -1
Q[2][3][1] = 1
Q[1][2][3] = 1
Q[1][3][2] = -1
)";

TEST_CASE("structure files rebuild the so(3) bialgebroid") {
    structure_file sf = parse_structure(so3_file);
    CHECK(sf.dim() == 3);
    CHECK(sf.has_algebroid());
    CHECK(sf.has_dual());
    CHECK(!sf.has_flux());
    CHECK(!sf.has_section());

    lie_bialgebroid parsed = sf.to_bialgebroid();
    lie_bialgebroid built = so3_bialgebroid();
    CHECK(bialgebroid_hamiltonian(parsed) == bialgebroid_hamiltonian(built));
    CHECK(check_bialgebroid(parsed).pass);
}

TEST_CASE("structure files validate invariants") {
    CHECK_THROWS_AS(parse_structure("dim = 2\nf[1][1][2] = x1\n"), data_error);
    CHECK_THROWS_AS(parse_structure("dim = 2\nH[1][2][1] = x1\n"), data_error);
    CHECK_THROWS_AS(parse_structure("dim = 2\na[1][3] = 1\n"), parse_error);
    CHECK_THROWS_AS(parse_structure("dim = 2\nb[1][1] = 1\n"), parse_error);
    CHECK_THROWS_AS(parse_structure("dim = 2\na[1][1] = 1\na[1][1] = 2\n"), parse_error);
    CHECK_THROWS_AS(parse_structure("a[1][1] = 1\n"), parse_error);  // dim first
    CHECK_THROWS_AS(parse_structure("dim = 2\na[1][1] = qq5\n"), parse_error);

    // consistent two-sided skew data is accepted
    structure_file ok = parse_structure("dim = 2\nf[1][1][2] = x1\nf[1][2][1] = -x1\n");
    lie_bialgebroid b = ok.to_bialgebroid();
    CHECK(b.primal.structure(1, 1, 2) == gen(base_chart(2), gen_x(1)));
    CHECK(b.primal.structure(1, 2, 1) == -gen(base_chart(2), gen_x(1)));
}

TEST_CASE("empty arrays give zero structure") {
    structure_file sf = parse_structure("dim = 2\n");
    lie_bialgebroid b = sf.to_bialgebroid();
    CHECK(bialgebroid_hamiltonian(b).is_zero());
    flux_data f = sf.to_flux();
    CHECK(f.h(1, 2, 2).is_zero());
}

TEST_CASE("section files parse on the doubled chart") {
    structure_file sf = parse_structure("dim = 2\nX[1] = x1*xt_2\neta[2] = xt_1 + 3\n");
    CHECK(sf.has_section());
    double_section s = sf.to_section();
    const chart c = doubled_chart(2);
    CHECK(s.vec[0] == gen(c, gen_x(1)) * gen(c, gen_xt(2)));
    CHECK(s.vec[1].is_zero());
    CHECK(s.form[1] == gen(c, gen_xt(1)) + expression::constant(c, rational(3)));

    // structure entries reject doubled generators, sections accept them
    CHECK_THROWS_AS(parse_structure("dim = 2\na[1][1] = xt_1\n"), parse_error);
}

TEST_CASE("flux files accept any orientation") {
    structure_file sf = parse_structure("dim = 3\nH[3][2][1] = x1\n");
    flux_data f = sf.to_flux();
    const chart c = base_chart(3);
    CHECK(f.h(1, 2, 3) == -gen(c, gen_x(1)));
    CHECK(f.h(3, 2, 1) == gen(c, gen_x(1)));
}
