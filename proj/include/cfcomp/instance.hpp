#pragma once

#include "cfcomp/cfinite.hpp"
#include "cfcomp/name.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cfc {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// One scalar as written in the file. The verbatim token is kept so that
// serialization reproduces the input exactly.
struct ScalarSpec {
    std::string text;
    bool is_constant = false; // pi, e, sqrt2, sqrt3, sqrt5
    bool bare_number = false; // appeared as a JSON integer, not a string
    Rat value;                // meaningful when !is_constant

    RealName name() const;
    bool operator==(const ScalarSpec&) const = default;
};

struct NumberSpec {
    ScalarSpec re;
    std::optional<ScalarSpec> im;

    bool is_rational() const {
        return !re.is_constant && (!im || !im->is_constant);
    }
    QQi exact() const; // requires is_rational()
    ComplexName name() const;
    bool operator==(const NumberSpec&) const = default;
};

// One problem block. Either classic form (coefficients + initial) or root
// form (roots with multiplicities + initial); root form requires rational
// entries and is the only form the forging commands accept.
struct ProblemSpec {
    long order = 0;
    bool roots_form = false;
    std::vector<NumberSpec> coefficients;
    std::vector<std::pair<NumberSpec, long>> roots;
    std::vector<NumberSpec> initial;

    CauchyProblem to_cauchy() const;
    ExactProblem to_exact() const; // requires roots_form and rational entries
    bool operator==(const ProblemSpec&) const = default;
};

struct InstanceDoc {
    ProblemSpec lhs, rhs;
    bool operator==(const InstanceDoc&) const = default;
};

InstanceDoc parse_instance(const std::string& text);
InstanceDoc load_instance(const std::string& path);
std::string serialize_instance(const InstanceDoc& doc);

} // namespace cfc
