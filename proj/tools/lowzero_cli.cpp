#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lowzero/lowzero.hpp>
#include <lowzero/verify.hpp>

using namespace lowzero;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

using Value = std::variant<double, long long, bool, std::string>;

struct Report {
    std::vector<std::pair<std::string, Value>> fields;

    void add(std::string k, double v) { fields.emplace_back(std::move(k), v); }
    void add(std::string k, int v) { fields.emplace_back(std::move(k), static_cast<long long>(v)); }
    void add(std::string k, bool v) { fields.emplace_back(std::move(k), v); }
    void add(std::string k, std::string v) { fields.emplace_back(std::move(k), std::move(v)); }
    void add(std::string k, const char* v) { fields.emplace_back(std::move(k), std::string(v)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            json j = json::object();
            for (const auto& [k, v] : fields) {
                std::visit([&](const auto& x) {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, double>)
                        j[k] = std::isfinite(x) ? json(x) : json(nullptr);
                    else
                        j[k] = x;
                }, v);
            }
            os << j.dump(2) << '\n';
            return;
        }
        os << "key,value\n";
        for (const auto& [k, v] : fields) {
            os << k << ',';
            std::visit([&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, double>)
                    os << num(x);
                else if constexpr (std::is_same_v<T, bool>)
                    os << (x ? "true" : "false");
                else
                    os << x;
            }, v);
            os << '\n';
        }
    }
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) throw UsageError("write failed");
    }

private:
    std::ofstream file_;
};

Symmetry symmetry_arg(const std::string& s) {
    try {
        return parse_symmetry(s);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

struct Common {
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--out", c.out, "output path (default: standard output)");
}

// ---------------------------------------------------------------------------

int run_bound(const std::string& sym, double nu_max, bool oracle_check, int trunc, const Common& c) {
    const Symmetry g = symmetry_arg(sym);
    const auto t = theorem1({g, nu_max});
    Report rep;
    rep.add("symmetry", to_string(g));
    rep.add("nu_max", nu_max);
    rep.add("bound", t.bound);
    rep.add("branch", to_string(t.detail.branch));
    rep.add("lambda", t.detail.lambda);
    rep.add("m_tilde", t.detail.m_tilde);
    rep.add("R", t.detail.R);
    rep.add("nudged", t.detail.nudged);
    if (t.detail.branch == Branch::equation_branch) rep.add("richardson_gap", t.richardson_gap);
    if (t.detail.nudged) std::cerr << "warning: degenerate support, R nudged to " << num(t.detail.R) << '\n';
    if (t.detail.sp_hypothesis_flag) {
        const auto sp = sp_hypothesis_check(reconstruct(g, t.detail.R));
        rep.add("sp_hypothesis_flag", true);
        rep.add("sp_tail_integral", sp.tail_integral);
    }
    if (oracle_check) {
        const double R = t.detail.R;
        const double oracle = std::sqrt(minimize(g, R, trunc) / (16.0 * R * R));
        rep.add("oracle_trunc", trunc);
        rep.add("oracle_bound", oracle);
        rep.add("oracle_gap", std::abs(oracle - std::sqrt(t.detail.m_tilde)));
    }
    Output o(c.out);
    rep.write(o.stream(), c.format);
    o.finish();
    return 0;
}

int run_family(int r, const std::string& restriction, int k, const Common& c) {
    FamilySpec f;
    f.r = r;
    f.weight_k = k;
    if (restriction == "none")
        f.restriction = Restriction::none;
    else if (restriction == "plus" || restriction == "+")
        f.restriction = Restriction::plus;
    else if (restriction == "minus" || restriction == "-")
        f.restriction = Restriction::minus;
    else
        throw UsageError("restriction must be none, plus or minus");
    FamilyParams p;
    try {
        p = family_params(f);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const auto t = theorem1({p.w_star, p.nu_max});
    Report rep;
    rep.add("r", r);
    rep.add("restriction", restriction);
    rep.add("k", k);
    rep.add("nu_max", p.nu_max);
    rep.add("rho_max", p.rho_max);
    rep.add("sigma", p.sigma);
    rep.add("w", to_string(p.w));
    rep.add("w_star", to_string(p.w_star));
    rep.add("bound", t.bound);
    rep.add("branch", to_string(t.detail.branch));
    Output o(c.out);
    rep.write(o.stream(), c.format);
    o.finish();
    return 0;
}

int run_proportion(const std::string& family, int r, CLI::Option* sign_opt, int sign, double beta, const Common& c) {
    Theorem3Result t;
    int sigma;
    double R;
    if (family == "Hr") {
        if (sign_opt->count() > 0) throw UsageError("--sign applies only to --family Hrpm");
        if (r < 1) throw UsageError("r must be >= 1");
        sigma = r % 2 == 1 ? 1 : -1;
        R = 1.0 / (2.0 * r * r);
        t = theorem3_Hr(r, beta);
    } else if (family == "Hrpm") {
        if (r < 1 || r % 2 == 0) throw UsageError("--family Hrpm needs odd r");
        if (sign_opt->count() == 0) throw UsageError("--family Hrpm needs --sign +1 or -1");
        if (sign != 1 && sign != -1) throw UsageError("--sign must be +1 or -1");
        sigma = sign;
        R = 1.0 / (4.0 * r * (r + 2));
        t = theorem3_Hrpm(r, sigma, beta);
    } else {
        throw UsageError("family must be Hr or Hrpm");
    }
    Report rep;
    rep.add("family", family);
    rep.add("r", r);
    rep.add("sigma", sigma);
    rep.add("R", R);
    rep.add("beta", beta);
    rep.add("threshold", t.threshold);
    const bool clears = beta >= t.threshold;
    rep.add("clears_threshold", clears);
    if (clears)
        rep.add("lower_bound", t.lower_bound);
    else
        rep.add("lower_bound", "not applicable (below threshold)");
    Output o(c.out);
    rep.write(o.stream(), c.format);
    o.finish();
    return 0;
}

int run_curve(const std::string& sym, double from, double to, int steps, const Common& c) {
    const Symmetry g = symmetry_arg(sym);
    if (!(from < to)) throw UsageError("--nu-from must be below --nu-to");
    if (from <= 0.0) throw UsageError("--nu-from must be positive");
    if (steps < 2) throw UsageError("--steps must be >= 2");
    Output o(c.out);
    auto& os = o.stream();
    json rows = json::array();
    if (c.format == "csv") os << "nu_max,bound,branch\n";
    for (int i = 0; i < steps; ++i) {
        const double nu = i + 1 == steps ? to : from + (to - from) * i / (steps - 1);
        const auto t = theorem1({g, nu});
        if (c.format == "csv")
            os << num(nu) << ',' << num(t.bound) << ',' << to_string(t.detail.branch) << '\n';
        else
            rows.push_back({{"nu_max", nu}, {"bound", t.bound}, {"branch", to_string(t.detail.branch)}});
    }
    if (c.format == "json") os << rows.dump(2) << '\n';
    o.finish();
    return 0;
}

int run_testfn(const std::string& sym, double R, int samples, const Common& c) {
    const Symmetry g = symmetry_arg(sym);
    if (!(R > 0.0)) throw UsageError("--R must be positive");
    if (samples < 2) throw UsageError("--samples must be >= 2");
    const auto rec = reconstruct(g, R);
    const auto pts = rec.h.sample(-rec.h.R - 0.1, rec.h.R + 0.1, samples);
    Output o(c.out);
    auto& os = o.stream();
    if (c.format == "csv") {
        os << "u,h\n";
        for (auto [u, v] : pts) os << num(u) << ',' << num(v) << '\n';
    } else {
        json rows = json::array();
        for (auto [u, v] : pts) rows.push_back({{"u", u}, {"h", v}});
        os << rows.dump(2) << '\n';
    }
    o.finish();

    const auto r = residuals(rec);
    std::cerr << "symmetry " << to_string(g) << "  R " << num(rec.h.R) << "  lambda " << num(rec.h.lambda)
              << "  branch " << to_string(rec.bound.branch) << '\n'
              << "  delayed-ode residual (rel)   " << num(r.ode_rel) << '\n'
              << "  volterra residual (rel)      " << num(r.volterra_rel) << '\n'
              << "  compatibility residual (rel) " << num(r.compatibility_rel) << '\n'
              << "  rayleigh gap (rel)           " << num(r.rayleigh_rel) << '\n'
              << "  max jump (rel)               " << num(r.max_jump_rel) << '\n'
              << "  k recovered                  " << num(r.k_recovered) << '\n';
    if (rec.bound.sp_hypothesis_flag)
        std::cerr << "  sp hypothesis flagged; tail integral " << num(sp_hypothesis_check(rec).tail_integral) << '\n';
    return 0;
}

int run_verify(int grid, int trunc, const Common& c) {
    if (grid < 1) throw UsageError("--grid-size must be >= 1");
    if (trunc < 1) throw UsageError("--trunc must be >= 1");
    const auto cases = run_verification(grid, trunc);
    json arr = json::array();
    int failed = 0;
    for (const auto& cs : cases) {
        failed += !cs.pass;
        arr.push_back({{"name", cs.name},
                       {"expected", cs.expected},
                       {"got", std::isfinite(cs.got) ? json(cs.got) : json(nullptr)},
                       {"tol", cs.tol},
                       {"pass", cs.pass}});
    }
    json summary = {{"grid_size", grid},
                    {"trunc", trunc},
                    {"total", cases.size()},
                    {"failed", failed},
                    {"pass", failed == 0},
                    {"cases", arr}};
    Output o(c.out);
    o.stream() << summary.dump(2) << '\n';
    o.finish();
    for (const auto& cs : cases)
        if (!cs.pass) std::cerr << "FAIL " << cs.name << ": expected " << num(cs.expected) << ", got " << num(cs.got) << '\n';
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lowest-zero bounds for symmetry types of L-function families"};
    app.require_subcommand(1);

    Common cb, cf, cp, cc, ct, cv;

    std::string b_sym;
    double b_nu = 0;
    bool b_oracle = false;
    int b_trunc = 400;
    auto* bound = app.add_subcommand("bound", "Lowest-zero bound for a symmetry type and support");
    bound->add_option("--symmetry", b_sym, "U, O, Sp, SO+ or SO-")->required();
    bound->add_option("--nu-max", b_nu, "maximal Fourier support")->required();
    bound->add_flag("--oracle-check", b_oracle, "compare against the Rayleigh-quotient oracle");
    bound->add_option("--trunc", b_trunc, "oracle truncation")->check(CLI::PositiveNumber);
    add_common(bound, cb);

    int f_r = 1, f_k = 2;
    std::string f_res = "none";
    auto* family = app.add_subcommand("family", "Bound for a symmetric-power family");
    family->add_option("--r", f_r, "symmetric-power order")->required();
    family->add_option("--restriction", f_res, "none, plus or minus");
    family->add_option("--k", f_k, "weight");
    add_common(family, cf);

    std::string p_family;
    int p_r = 1, p_sign = 0;
    double p_beta = 0;
    auto* prop = app.add_subcommand("proportion", "Proportion lower bound for a symmetric-power family");
    prop->add_option("--family", p_family, "Hr or Hrpm")->required();
    prop->add_option("--r", p_r, "symmetric-power order")->required();
    auto* sign_opt = prop->add_option("--sign", p_sign, "sign of the functional equation (+1 or -1)");
    prop->add_option("--beta", p_beta, "first-zero height")->required();
    add_common(prop, cp);

    std::string c_sym;
    double c_from = 0, c_to = 0;
    int c_steps = 100;
    auto* curve = app.add_subcommand("curve", "Bound curve over a range of nu_max");
    curve->add_option("--symmetry", c_sym, "U, O, Sp, SO+ or SO-")->required();
    curve->add_option("--nu-from", c_from)->required();
    curve->add_option("--nu-to", c_to)->required();
    curve->add_option("--steps", c_steps);
    add_common(curve, cc);

    std::string t_sym;
    double t_R = 0;
    int t_samples = 401;
    auto* testfn = app.add_subcommand("testfn", "Sample the optimal test function");
    testfn->add_option("--symmetry", t_sym, "U, O, Sp, SO+ or SO-")->required();
    testfn->add_option("--R", t_R, "support half-width")->required();
    testfn->add_option("--samples", t_samples);
    add_common(testfn, ct);

    int v_grid = 12, v_trunc = 400;
    auto* verify = app.add_subcommand("verify", "Run the cross-validation matrix");
    verify->add_option("--grid-size", v_grid);
    verify->add_option("--trunc", v_trunc);
    verify->add_option("-o,--out", cv.out, "output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bound) return run_bound(b_sym, b_nu, b_oracle, b_trunc, cb);
        if (*family) return run_family(f_r, f_res, f_k, cf);
        if (*prop) return run_proportion(p_family, p_r, sign_opt, p_sign, p_beta, cp);
        if (*curve) return run_curve(c_sym, c_from, c_to, c_steps, cc);
        if (*testfn) return run_testfn(t_sym, t_R, t_samples, ct);
        if (*verify) return run_verify(v_grid, v_trunc, cv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
