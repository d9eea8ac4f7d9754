#include "cfcomp/corpus.hpp"
#include "cfcomp/decide.hpp"
#include "cfcomp/forge.hpp"
#include "cfcomp/instance.hpp"
#include "cfcomp/vandermonde.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace cfc;
using nlohmann::json;

namespace {

// Exit codes: 0 true, 1 false, 2 exhausted, 3 usage/parse error, 4 runtime
// failure (precision, internal).
constexpr int kExitParse = 3;
constexpr int kExitRuntime = 4;

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

std::string ball_str(const ComplexBall& b) {
    char buf[128];
    if (b.im.is_zero())
        std::snprintf(buf, sizeof buf, "%.12g ± %.3g", b.re.to_double(),
                      b.rad.to_double());
    else
        std::snprintf(buf, sizeof buf, "%.12g %+.12gi ± %.3g", b.re.to_double(),
                      b.im.to_double(), b.rad.to_double());
    return buf;
}

json ball_json(const ComplexBall& b) {
    return json{{"re", b.re.to_double()}, {"im", b.im.to_double()},
                {"rad", b.rad.to_double()}};
}

const char* kleenean_str(Kleenean k) {
    switch (k) {
    case Kleenean::True: return "true";
    case Kleenean::False: return "false";
    default: return "unknown";
    }
}

void write_trace(const std::string& path, const Verdict& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open trace file " + path);
    for (const auto& it : v.trace) {
        json j;
        j["N"] = it.N;
        j["M"] = it.M;
        json roots = json::array();
        for (const auto& b : it.lam) roots.push_back(ball_json(b));
        j["roots"] = roots;
        j["m1"] = it.m1_set;
        j["m2"] = it.m2_set;
        j["r"] = it.r_set;
        j["mr1"] = it.mr1_set;
        j["mr2"] = it.mr2_set;
        j["c"] = it.c_set;
        j["c_pos"] = kleenean_str(it.c_pos);
        j["d_pos"] = kleenean_str(it.d_pos);
        json signs = json::array();
        for (const auto& b : it.sign_list) signs.push_back(ball_json(b));
        j["signs"] = signs;
        json defect = json::array();
        for (const auto& b : it.defect) defect.push_back(ball_json(b));
        j["defect"] = defect;
        j["fired"] = it.fired;
        out << j.dump() << "\n";
    }
}

int verdict_exit(const Verdict& v) {
    switch (v.outcome) {
    case Outcome::True: return 0;
    case Outcome::False: return 1;
    default: return 2;
    }
}

ProblemSpec spec_from_exact(const ExactProblem& p) {
    ProblemSpec out;
    out.roots_form = true;
    out.order = p.order();
    for (size_t i = 0; i < p.roots.size();) {
        size_t j = i;
        while (j < p.roots.size() && p.roots[j] == p.roots[i]) ++j;
        NumberSpec num;
        num.re = ScalarSpec{rat_to_string(p.roots[i].re), false, false, p.roots[i].re};
        if (!p.roots[i].im.is_zero())
            num.im = ScalarSpec{rat_to_string(p.roots[i].im), false, false, p.roots[i].im};
        out.roots.emplace_back(std::move(num), static_cast<long>(j - i));
        i = j;
    }
    for (const auto& u : p.u) {
        NumberSpec num;
        num.re = ScalarSpec{rat_to_string(u.re), false, false, u.re};
        if (!u.im.is_zero()) num.im = ScalarSpec{rat_to_string(u.im), false, false, u.im};
        out.initial.push_back(std::move(num));
    }
    return out;
}

struct DecideArgs {
    std::string file;
    long fuel = 40;
    long max_prec = 1L << 20;
    std::string trace_path;
};

int run_decide(bool equality, const DecideArgs& a) {
    InstanceDoc doc = load_instance(a.file);
    CauchyProblem p = doc.lhs.to_cauchy();
    CauchyProblem q = doc.rhs.to_cauchy();
    EngineOptions opt;
    opt.max_precision = a.max_prec;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = equality ? decide_equality(p, q, a.fuel, opt)
                         : decide_ultimate_inequality(p, q, a.fuel, opt);
    double ms = ms_since(t0);
    std::printf("verdict: %s\n", to_string(v.outcome));
    std::printf("fuel used: %ld of %ld\n", v.fuel_used, a.fuel);
    std::printf("final precision: %ld bits\n", v.final_precision);
    if (!v.fired.empty()) std::printf("halting rule: %s\n", v.fired.c_str());
    std::printf("wall time: %.1f ms\n", ms);
    if (!a.trace_path.empty()) write_trace(a.trace_path, v);
    return verdict_exit(v);
}

int run_roots(const std::string& file, long pbits) {
    InstanceDoc doc = load_instance(file);
    CauchyProblem p = doc.lhs.to_cauchy();
    if (p.order() == 0) return 0;
    long cprec = std::max<long>(2 * pbits + 96, 128);
    try {
        ScopedPrec amb(cprec + 32);
        CharPoly cp{coefficient_balls(p, cprec)};
        RootList rl = find_roots(cp, pbits);
        for (const auto& r : rl.roots) std::printf("%s\n", ball_str(r.ball).c_str());
    } catch (const PrecisionExhausted& e) {
        std::fprintf(stderr,
                     "error: %s\nroot certification failed at radius 2^-%ld; "
                     "retry with -p %ld\n",
                     e.what(), pbits, 2 * pbits);
        return kExitRuntime;
    }
    return 0;
}

int run_coeff(const std::string& file, long m1, long pbits) {
    InstanceDoc doc = load_instance(file);
    CauchyProblem p = doc.lhs.to_cauchy();
    long n = p.order();
    if (m1 < 1 || m1 > n) {
        std::fprintf(stderr, "error: --m1 must be in 1..%ld\n", n);
        return kExitParse;
    }
    long cprec = std::max<long>(2 * pbits + 96, 128);
    try {
        ScopedPrec amb(cprec + 32);
        CharPoly cp{coefficient_balls(p, cprec)};
        RootList rl = find_roots(cp, pbits);
        std::vector<int> order(rl.roots.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return rl.roots[b].ball.re < rl.roots[a].ball.re;
        });
        // Treat the top ball as a root of multiplicity m1: skip its next
        // m1-1 copies and keep the rest as simple points.
        std::vector<ComplexBall> pts;
        pts.push_back(rl.roots[order[0]].ball);
        for (size_t i = static_cast<size_t>(m1); i < order.size(); ++i)
            pts.push_back(rl.roots[order[i]].ball);
        std::vector<ComplexBall> u = initial_balls(p, cprec);
        ComplexBall g = g_value<ComplexBall>(n, m1, pts, u);
        // Same parity the engine applies: positive leading coefficient iff
        // (-1)^(n - m1) G is positive.
        bool flip = ((n + m1) % 2) == 1;
        ComplexBall adj = flip ? ComplexBall{} - g : g;
        std::printf("G = %s\n", ball_str(g).c_str());
        std::printf("sign-adjusted leading value = %s\n", ball_str(adj).c_str());
    } catch (const PrecisionExhausted& e) {
        std::fprintf(stderr, "error: %s\nretry with -p %ld\n", e.what(), 2 * pbits);
        return kExitRuntime;
    }
    return 0;
}

int run_forge(const std::string& file, const std::string& eps_text) {
    InstanceDoc doc = load_instance(file);
    ExactProblem p = doc.lhs.to_exact();
    ExactProblem q = doc.rhs.to_exact();
    Rat eps = rat_from_string(eps_text);
    ForgeResult r = forge_equal(p, q, eps);
    InstanceDoc out;
    out.lhs = spec_from_exact(r.p_out);
    out.rhs = spec_from_exact(r.q_out);
    std::cout << serialize_instance(out);
    std::fprintf(stderr, "matched roots: %ld (padded %ld)\n", r.matched, r.padded);
    std::fprintf(stderr, "eta in [%.6g, %.6g]\n", r.budget.eta_lb.to_double(),
                 r.budget.eta_ub.to_double());
    std::fprintf(stderr, "value move bounds: lhs %.6g, rhs %.6g\n",
                 r.budget.value_bound_p.convert_to<double>(),
                 r.budget.value_bound_q.convert_to<double>());
    return 0;
}

int run_bench(const std::string& family, const std::string& krange, long fuel) {
    auto dots = krange.find("..");
    if (dots == std::string::npos) {
        std::fprintf(stderr, "error: --k wants a range like 1..16\n");
        return kExitParse;
    }
    long a = std::stol(krange.substr(0, dots));
    long b = std::stol(krange.substr(dots + 2));
    std::printf("k,iterations,precision,wall_ms,status\n");
    for (long k = a; k <= b; ++k) {
        CauchyProblem p, q;
        if (family == "shared-dominant") {
            LabeledInstance inst = make_scaling_instance(k);
            p = inst.p.to_cauchy();
            q = inst.q.to_cauchy();
        } else if (family == "boundary-shared-coeff" || family == "boundary-equal" ||
                   family == "boundary-complex") {
            BoundaryKind kind = family == "boundary-shared-coeff"
                                    ? BoundaryKind::SharedDominantCoefficient
                                : family == "boundary-equal" ? BoundaryKind::IdenticallyEqual
                                                             : BoundaryKind::ZeroComplexCoefficient;
            BoundaryFamily fam = make_boundary_family(kind, k);
            p = fam.p.to_cauchy();
            q = fam.q.to_cauchy();
        } else {
            std::fprintf(stderr,
                         "error: unknown family '%s' (try shared-dominant, "
                         "boundary-shared-coeff, boundary-equal, boundary-complex)\n",
                         family.c_str());
            return kExitParse;
        }
        auto t0 = std::chrono::steady_clock::now();
        Verdict v = decide_ultimate_inequality(p, q, fuel);
        double ms = ms_since(t0);
        std::printf("%ld,%ld,%ld,%.1f,%s\n", k, v.fuel_used, v.final_precision, ms,
                    to_string(v.outcome));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified comparison of solutions of constant-coefficient linear ODEs"};
    app.require_subcommand(1);

    DecideArgs dargs;
    auto* dec = app.add_subcommand("decide", "run a decision procedure on an instance file");
    dec->require_subcommand(1);
    auto add_common = [&](CLI::App* s) {
        s->add_option("file", dargs.file, "instance file (JSON)")->required();
        s->add_option("--fuel", dargs.fuel, "outer iteration budget");
        s->add_option("--max-prec", dargs.max_prec, "working precision cap in bits");
        s->add_option("--trace", dargs.trace_path, "write per-iteration records (JSON lines)");
    };
    auto* ui = dec->add_subcommand("ultimate-ineq", "does lhs >= rhs hold for all large t?");
    add_common(ui);
    auto* eq = dec->add_subcommand("equality", "certify that lhs and rhs differ");
    add_common(eq);

    std::string rfile;
    long rbits = 16;
    auto* rt = app.add_subcommand("roots", "certified root enclosures of the lhs block");
    rt->add_option("file", rfile, "instance file (JSON)")->required();
    rt->add_option("-p,--precision", rbits, "radius target 2^-p");

    std::string cfile;
    long m1 = 1, cbits = 24;
    auto* cf = app.add_subcommand("coeff", "dominant leading-coefficient functional of lhs");
    cf->add_option("file", cfile, "instance file (JSON)")->required();
    cf->add_option("--m1", m1, "assumed dominant multiplicity")->required();
    cf->add_option("-p,--precision", cbits, "root radius target 2^-p");

    std::string ffile, feps;
    auto* fg = app.add_subcommand("forge", "controlled perturbation forging");
    auto* fge = fg->add_subcommand("equal", "forge an exactly-equal nearby pair");
    fge->add_option("file", ffile, "instance file with root-form blocks")->required();
    fge->add_option("--eps", feps, "perturbation budget, rational")->required();
    fg->require_subcommand(1);

    std::string family = "shared-dominant", krange;
    long bfuel = 40;
    auto* bn = app.add_subcommand("bench", "family scaling runs, CSV on stdout");
    bn->add_option("--family", family, "instance family");
    bn->add_option("--k", krange, "k range, e.g. 1..16")->required();
    bn->add_option("--fuel", bfuel, "outer iteration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (ui->parsed()) return run_decide(false, dargs);
        if (eq->parsed()) return run_decide(true, dargs);
        if (rt->parsed()) return run_roots(rfile, rbits);
        if (cf->parsed()) return run_coeff(cfile, m1, cbits);
        if (fge->parsed()) return run_forge(ffile, feps);
        if (bn->parsed()) return run_bench(family, krange, bfuel);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const HypothesisViolated& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return kExitParse;
}
