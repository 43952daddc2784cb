#include "quatcf/cli.hpp"

#include "quatcf/error.hpp"
#include "quatcf/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

namespace quatcf {

namespace {

struct Config {
    std::string p = "3", q = "2";
    std::string elem;
    std::size_t max_steps = 64;
    std::size_t bit_budget = 65536;
    std::string epsilon = "1/18446744073709551616";
    std::size_t steps = 20;
    std::string output = "json";
};

Integer parse_prime(const std::string& s, const char* name)
{
    Rational r = parse_rational(s);
    if (r.get_den() != 1 || !is_prime(r.get_num()))
        throw Error(ErrorCode::BadParameters, std::string(name) + " must be a prime, got " + s);
    return r.get_num();
}

Rational parse_epsilon(const std::string& s)
{
    Rational e = parse_rational(s);
    if (e <= 0)
        throw Error(ErrorCode::BadParameters, "epsilon must be positive");
    return e;
}

struct Setting {
    Integer p, q;
    Order order;
    SpecialType type;
};

Setting setting(const Config& cfg)
{
    Integer p = parse_prime(cfg.p, "--p"), q = parse_prime(cfg.q, "--q");
    Order order = maximal_order_pq(p, q);
    SpecialType type(order, p);
    return {p, q, order, type};
}

Quat element(const Config& cfg)
{
    if (cfg.elem.empty())
        throw Error(ErrorCode::ParseError, "--elem is required");
    return Quat::parse(cfg.elem);
}

std::size_t identity_prefix(const CFExpansion& exp)
{
    if (exp.status == CFStatus::Periodic)
        return exp.preperiod + 3 * exp.period;
    return exp.partial.size();
}

Json cmd_algebra(const Config& cfg) { return to_json(setting(cfg).order); }

Json cmd_expand(const Config& cfg)
{
    Setting s = setting(cfg);
    Quat x = element(cfg);
    const Algebra& alg = s.type.algebra();
    CFExpansion exp = expand(x, FloorFunction(s.type), {cfg.max_steps, cfg.bit_budget});
    ConvergentTable table = convergents(exp.quotients(identity_prefix(exp)), alg, x);
    Json out = to_json(exp);
    out["element"] = x.to_string();
    out["identities"] = to_json(verify_identities(x, exp, table, alg));
    return out;
}

Json cmd_verify(const Config& cfg)
{
    Setting s = setting(cfg);
    Quat x = element(cfg);
    const Algebra& alg = s.type.algebra();
    Rational eps = parse_epsilon(cfg.epsilon);
    CFExpansion exp = expand(x, FloorFunction(s.type), {cfg.max_steps, cfg.bit_budget});
    std::size_t n = identity_prefix(exp);
    ConvergentTable table = convergents(exp.quotients(n), alg, x);
    IdentityReport rep = verify_identities(x, exp, table, alg);
    GrowthBoundReport gb = growth_bound_check(table, alg, eps);

    Json profile = Json::array();
    for (const auto& w : convergence_profile(x, exp, n, alg))
        profile.push_back(w.to_string());
    Json out;
    out["element"] = x.to_string();
    out["status"] = to_string(exp.status);
    out["identities"] = to_json(rep);
    out["convergence_profile"] = profile;
    out["growth_bound"] = {{"c", to_json(gb.c)}, {"checked", gb.holds.size()}, {"passed", gb.all_passed()}};
    out["all_passed"] = rep.all_passed() && gb.all_passed();
    return out;
}

Json cmd_certify(const Config& cfg)
{
    Setting s = setting(cfg);
    Quat a = element(cfg);
    Rational eps = parse_epsilon(cfg.epsilon);
    PeriodicPoly poly = build_periodic_cf_polynomial({a}, s.type, eps);
    MuCertificate cert = certify_no_root(poly, s.type, eps);
    std::vector<Quat> roots = subfield_roots(a, s.type.algebra());
    if (cert.verdict == Verdict::Certified && !roots.empty())
        throw Error(ErrorCode::MismatchError, "certified polynomial has the root " + roots.front().to_string());
    Json rj = Json::array();
    for (const auto& r : roots)
        rj.push_back(r.to_string());
    return {{"polynomial", to_json(poly.poly)},
            {"quotient", a.to_string()},
            {"verdict", to_string(cert.verdict)},
            {"mu", to_json(cert.mu)},
            {"oracle_roots", rj}};
}

Json cmd_height(const Config& cfg)
{
    Setting s = setting(cfg);
    return to_json(height(element(cfg), s.order, parse_epsilon(cfg.epsilon)));
}

Json cmd_counterexample(const Config& cfg)
{
    return to_json(counterexample_trace(parse_prime(cfg.p, "--p"), parse_prime(cfg.q, "--q"), cfg.steps));
}

void print(const Json& j, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

int exit_code(ErrorCode c)
{
    switch (c) {
    case ErrorCode::AdmissibilityFailure:
        return 3;
    case ErrorCode::MismatchError:
        return 4;
    default:
        return 2;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    if (const char* env = std::getenv("QUATCF_MAX_STEPS")) {
        try {
            cfg.max_steps = std::stoul(env);
        } catch (const std::exception&) {
            err << "invalid QUATCF_MAX_STEPS: " << env << '\n';
            return 2;
        }
    }

    CLI::App app{"p-adic continued fractions over quaternion algebras", "quatcf"};
    app.require_subcommand(1);
    auto add_pq = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "ramified prime used for the expansion")->required();
        sub->add_option("--q", cfg.q, "second ramified prime")->required();
        sub->add_option("--output", cfg.output)->check(CLI::IsMember({"json", "text"}));
    };
    auto add_elem = [&](CLI::App* sub) {
        sub->add_option("--elem", cfg.elem, "x0,x1,x2,x3 in the basis 1, i, j, ij")->required();
        sub->add_option("--epsilon", cfg.epsilon, "width of certified intervals");
    };
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--max-steps", cfg.max_steps);
        sub->add_option("--bit-budget", cfg.bit_budget);
    };

    auto* algebra = app.add_subcommand("algebra", "algebra ramified at {p, q} and its maximal order");
    add_pq(algebra);
    auto* expand_cmd = app.add_subcommand("expand", "continued fraction expansion with identity report");
    add_pq(expand_cmd);
    add_elem(expand_cmd);
    add_limits(expand_cmd);
    auto* verify = app.add_subcommand("verify", "identity suite and convergence profile for an element");
    add_pq(verify);
    add_elem(verify);
    add_limits(verify);
    auto* certify = app.add_subcommand("certify", "certify that X^2 - aX - 1 has no root in B");
    add_pq(certify);
    add_elem(certify);
    auto* height_cmd = app.add_subcommand("height", "adelic height of an element");
    add_pq(height_cmd);
    add_elem(height_cmd);
    auto* counter = app.add_subcommand("counterexample", "trace of alpha_0 = (1/q)(i + ij/p)");
    add_pq(counter);
    counter->add_option("--steps", cfg.steps);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        Json result;
        if (algebra->parsed())
            result = cmd_algebra(cfg);
        else if (expand_cmd->parsed())
            result = cmd_expand(cfg);
        else if (verify->parsed())
            result = cmd_verify(cfg);
        else if (certify->parsed())
            result = cmd_certify(cfg);
        else if (height_cmd->parsed())
            result = cmd_height(cfg);
        else
            result = cmd_counterexample(cfg);
        print(result, cfg.output, out);
        return 0;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace quatcf
