// Acceptance suite: one line per criterion, every identity checked with
// exact rational arithmetic (a criterion passes only on residuals that are
// identically zero, or exactly nonzero for negative controls).

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "koszul/checks.hpp"

using namespace koszul;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass,
               const std::string& detail = "") {
    std::cout << "ACCEPTANCE " << number << " " << name << ": "
              << (pass ? "PASS" : "FAIL");
    if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string first_failure(const verification_report& report) {
    for (const check_result& c : report.checks)
        if (!c.pass) {
            std::string out = c.name;
            if (c.residual) out += " residual=" + print_expression(*c.residual);
            return out;
        }
    return "";
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    // 1. Derived C-bracket equals the component formula: d = 2, degree <= 2,
    //    20 seeded pairs, under 10 seconds.
    {
        auto start = clock::now();
        verification_report r = check_cbracket_equivalence({2, 2, 20, 20240041});
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        bool pass = r.all_pass() && seconds < 10.0;
        criterion(1, "cbracket-derived-equals-components", pass,
                  r.all_pass() ? "runtime " + std::to_string(seconds) + "s over budget"
                               : first_failure(r));
    }

    // 2. Structural rows: vector-vector has no form part, form-form no
    //    vector part, and the d = 1 hand example is exact.
    {
        verification_report r = check_cbracket_rows({2, 2, 10, 20240042});
        criterion(2, "cbracket-structural-rows", r.all_pass(), first_failure(r));
    }

    // 3. Strong constraint identity with 20 seeded pairs up to d = 3 plus
    //    the two point checks.
    {
        verification_report r = check_strong_constraint({3, 2, 20, 20240043});
        criterion(3, "strong-constraint-identity", r.all_pass(), first_failure(r));
    }

    // 4. Half projection reproduces the classical Courant bracket on 10
    //    seeded xt-independent pairs at d = 2.
    {
        verification_report r = check_projection({2, 2, 10, 20240044});
        criterion(4, "projection-to-classical-courant", r.all_pass(), first_failure(r));
    }

    // 5. Bialgebroid controls with the Jacobiator oracle.
    {
        verification_report r = check_bialgebroid_controls();
        criterion(5, "bialgebroid-controls", r.all_pass(), first_failure(r));
    }

    // 6. Five Courant axioms on 10 seeded triples for so(3), and the
    //    corrupted-f axiom-1 negative control.
    {
        verification_report r = check_courant_controls({3, 2, 10, 20240046});
        criterion(6, "courant-axioms", r.all_pass(), first_failure(r));
    }

    // 7. Graded Poisson laws on 500 seeded homogeneous triples per chart
    //    mode plus the full conjugation tables.
    {
        verification_report r = check_poisson_laws({3, 3, 500, 20240047});
        criterion(7, "graded-poisson-laws", r.all_pass(), first_failure(r));
    }

    // 8. Generalized Lie derivative closure on 10 seeded x-only samples,
    //    d = 2.
    {
        verification_report r = check_gen_lie_closure({2, 2, 10, 20240048});
        criterion(8, "generalized-lie-closure", r.all_pass(), first_failure(r));
    }

    // 9. Generalized metric compatibility for 10 random (G, B) with d <= 3,
    //    and eta squaring to the identity.
    {
        verification_report r = check_metric_suite({3, 2, 10, 20240049});
        criterion(9, "generalized-metric-compatibility", r.all_pass(), first_failure(r));
    }

    // 10. Proto-bialgebroid flux controls.
    {
        verification_report r = check_proto_suite();
        criterion(10, "proto-bialgebroid-controls", r.all_pass(), first_failure(r));
    }

    // 11. Grammar round trip on 1000 seeded expressions and golden
    //     canonical prints.
    {
        verification_report r = check_roundtrip({3, 3, 1000, 20240051});
        criterion(11, "expression-grammar-roundtrip", r.all_pass(), first_failure(r));
    }

    if (failures == 0) {
        std::cout << "all acceptance criteria pass\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
