#include "cfcomp/instance.hpp"

#include "cfcomp/charpoly.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace cfc {

using nlohmann::json;

namespace {

const char* kConstants[] = {"pi", "e", "sqrt2", "sqrt3", "sqrt5"};

bool is_constant_token(const std::string& s) {
    for (const char* c : kConstants)
        if (s == c) return true;
    return false;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

ScalarSpec parse_scalar(const json& j, const std::string& where) {
    ScalarSpec out;
    if (j.is_number_integer()) {
        out.bare_number = true;
        out.text = std::to_string(j.get<long long>());
        out.value = rat_from_string(out.text);
        return out;
    }
    if (j.is_number())
        fail(where, "binary float literals are not accepted; write the value "
                    "as a quoted decimal or rational string");
    if (!j.is_string()) fail(where, "expected a number token");
    out.text = j.get<std::string>();
    if (is_constant_token(out.text)) {
        out.is_constant = true;
        return out;
    }
    try {
        out.value = rat_from_string(out.text);
    } catch (const std::exception& e) {
        fail(where, "unreadable number '" + out.text + "' (" + e.what() + ")");
    }
    return out;
}

NumberSpec parse_number(const json& j, const std::string& where) {
    NumberSpec out;
    if (j.is_object()) {
        if (!j.contains("re")) fail(where, "complex entry needs \"re\"");
        out.re = parse_scalar(j.at("re"), where + ".re");
        if (j.contains("im")) out.im = parse_scalar(j.at("im"), where + ".im");
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "re" && it.key() != "im")
                fail(where, "unknown key '" + it.key() + "'");
        return out;
    }
    out.re = parse_scalar(j, where);
    return out;
}

json scalar_to_json(const ScalarSpec& s) {
    if (s.bare_number) return json(std::stoll(s.text));
    return json(s.text);
}

json number_to_json(const NumberSpec& n) {
    if (!n.im) return scalar_to_json(n.re);
    json j;
    j["re"] = scalar_to_json(n.re);
    j["im"] = scalar_to_json(*n.im);
    return j;
}

ProblemSpec parse_block(const json& j, const std::string& where) {
    ProblemSpec out;
    if (!j.is_object()) fail(where, "problem block must be an object");
    if (j.contains("roots")) {
        out.roots_form = true;
        if (j.contains("coefficients"))
            fail(where, "give either \"roots\" or \"coefficients\", not both");
        const json& rts = j.at("roots");
        if (!rts.is_array()) fail(where, "\"roots\" must be an array");
        long total = 0;
        for (size_t k = 0; k < rts.size(); ++k) {
            std::string rw = where + ".roots[" + std::to_string(k) + "]";
            const json& r = rts[k];
            long mult = 1;
            NumberSpec num;
            if (r.is_object() && r.contains("mult")) {
                if (!r.at("mult").is_number_integer() || r.at("mult").get<long>() < 1)
                    fail(rw, "\"mult\" must be a positive integer");
                mult = r.at("mult").get<long>();
                json stripped = r;
                stripped.erase("mult");
                num = parse_number(stripped, rw);
            } else {
                num = parse_number(r, rw);
            }
            if (!num.is_rational())
                fail(rw, "root entries must be exact rationals");
            total += mult;
            out.roots.emplace_back(std::move(num), mult);
        }
        out.order = total;
        if (j.contains("order") && j.at("order").get<long>() != total)
            fail(where, "declared order disagrees with root multiplicities");
    } else {
        if (!j.contains("order")) fail(where, "missing \"order\"");
        if (!j.at("order").is_number_integer() || j.at("order").get<long>() < 0)
            fail(where, "\"order\" must be a nonnegative integer");
        out.order = j.at("order").get<long>();
        const json& cs = j.contains("coefficients") ? j.at("coefficients") : json::array();
        if (!cs.is_array()) fail(where, "\"coefficients\" must be an array");
        if (static_cast<long>(cs.size()) != out.order)
            fail(where + ".coefficients", "expected " + std::to_string(out.order) +
                                              " entries, found " + std::to_string(cs.size()));
        for (size_t k = 0; k < cs.size(); ++k)
            out.coefficients.push_back(
                parse_number(cs[k], where + ".coefficients[" + std::to_string(k) + "]"));
    }
    const json& in = j.contains("initial") ? j.at("initial") : json::array();
    if (!in.is_array()) fail(where, "\"initial\" must be an array");
    if (static_cast<long>(in.size()) != out.order)
        fail(where + ".initial", "expected " + std::to_string(out.order) +
                                     " entries, found " + std::to_string(in.size()));
    for (size_t k = 0; k < in.size(); ++k)
        out.initial.push_back(
            parse_number(in[k], where + ".initial[" + std::to_string(k) + "]"));
    return out;
}

json block_to_json(const ProblemSpec& b) {
    json j;
    j["order"] = b.order;
    if (b.roots_form) {
        json rts = json::array();
        for (const auto& [num, mult] : b.roots) {
            if (mult == 1) {
                rts.push_back(number_to_json(num));
            } else {
                json r;
                r["re"] = scalar_to_json(num.re);
                if (num.im) r["im"] = scalar_to_json(*num.im);
                r["mult"] = mult;
                rts.push_back(r);
            }
        }
        j["roots"] = rts;
    } else {
        json cs = json::array();
        for (const auto& c : b.coefficients) cs.push_back(number_to_json(c));
        j["coefficients"] = cs;
    }
    json in = json::array();
    for (const auto& u : b.initial) in.push_back(number_to_json(u));
    j["initial"] = in;
    return j;
}

} // namespace

RealName ScalarSpec::name() const {
    if (is_constant) return RealName::of_constant(text);
    return RealName::of_rational(value);
}

QQi NumberSpec::exact() const {
    if (!is_rational()) throw ParseError("named constants have no exact rational value");
    return QQi(re.value, im ? im->value : Rat(0));
}

ComplexName NumberSpec::name() const {
    if (!im) return ComplexName::of_real(re.name());
    ComplexName out{re.name(), im->name(), false};
    if (!im->is_constant && im->value.is_zero()) out.exactly_real = true;
    return out;
}

CauchyProblem ProblemSpec::to_cauchy() const {
    CauchyProblem out;
    if (roots_form) {
        ExactProblem e = to_exact();
        return e.to_cauchy();
    }
    for (const auto& c : coefficients) out.c.push_back(c.name());
    for (const auto& u : initial) out.u.push_back(u.name());
    for (const auto& z : out.c)
        if (!z.exactly_real) out.real = false;
    for (const auto& z : out.u)
        if (!z.exactly_real) out.real = false;
    return out;
}

ExactProblem ProblemSpec::to_exact() const {
    if (!roots_form)
        throw ParseError("this command needs the block in root form "
                         "(\"roots\": [...])");
    ExactProblem out;
    for (const auto& [num, mult] : roots)
        for (long k = 0; k < mult; ++k) out.roots.push_back(num.exact());
    for (const auto& u : initial) {
        if (!u.is_rational())
            throw ParseError("root-form blocks need rational initial values");
        out.u.push_back(u.exact());
    }
    return out;
}

InstanceDoc parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    InstanceDoc doc;
    if (j.contains("lhs") && j.contains("rhs")) {
        doc.lhs = parse_block(j.at("lhs"), "lhs");
        doc.rhs = parse_block(j.at("rhs"), "rhs");
    } else if (j.contains("lhs")) {
        doc.lhs = parse_block(j.at("lhs"), "lhs");
    } else {
        throw ParseError("expected \"lhs\" (and usually \"rhs\") problem blocks");
    }
    return doc;
}

InstanceDoc load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_instance(ss.str());
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_instance(const InstanceDoc& doc) {
    json j;
    j["lhs"] = block_to_json(doc.lhs);
    j["rhs"] = block_to_json(doc.rhs);
    return j.dump(2) + "\n";
}

} // namespace cfc
