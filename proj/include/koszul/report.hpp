#pragma once

// Structured pass/fail results for identity checks. A check passes exactly
// when its residual expression is zero; failed checks carry the residual.

#include <optional>
#include <string>
#include <vector>

#include "koszul/algebra.hpp"

namespace koszul {

struct check_result {
    std::string name;
    bool pass = false;
    std::optional<expression> residual;  // set when nonzero
    double seconds = 0.0;

    static check_result from_residual(std::string name, const expression& r) {
        check_result out;
        out.name = std::move(name);
        out.pass = r.is_zero();
        if (!out.pass) out.residual = r;
        return out;
    }

    static check_result passed(std::string name) {
        check_result out;
        out.name = std::move(name);
        out.pass = true;
        return out;
    }

    static check_result failed(std::string name, const expression& r) {
        check_result out;
        out.name = std::move(name);
        out.pass = false;
        out.residual = r;
        return out;
    }
};

struct verification_report {
    std::vector<check_result> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(check_result c) { checks.push_back(std::move(c)); }

    void merge(const verification_report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace koszul
