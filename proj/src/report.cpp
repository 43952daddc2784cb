#include "quatcf/report.hpp"

namespace quatcf {

namespace {

Json quat_list(const std::vector<Quat>& xs)
{
    Json out = Json::array();
    for (const auto& x : xs)
        out.push_back(x.to_string());
    return out;
}

std::string to_string(Truncation t)
{
    switch (t) {
    case Truncation::MaxSteps:
        return "max_steps";
    case Truncation::SizeBudget:
        return "size_budget";
    default:
        return "none";
    }
}

}  // namespace

Json to_json(const RatInterval& x) { return Json::array({to_string(x.lo()), to_string(x.hi())}); }

Json to_json(const IdentityReport& rep)
{
    Json out = Json::object();
    for (const auto& c : rep.checks) {
        Json j = {{"passed", c.passed}, {"checked", c.checked}};
        j["first_failure"] = c.first_failure ? Json(*c.first_failure) : Json(nullptr);
        if (!c.witness.empty())
            j["witness"] = c.witness;
        out[c.name] = j;
    }
    return out;
}

Json to_json(const CFExpansion& exp)
{
    Json out;
    out["floor"] = exp.floor_kind;
    out["p"] = to_string(exp.p);
    out["status"] = to_string(exp.status);
    out["truncation"] = to_string(exp.truncation);
    out["partial_quotients"] = quat_list(exp.partial);
    out["complete_quotients"] = quat_list(exp.complete);
    Json vals = Json::array();
    for (const auto& w : exp.valuations)
        vals.push_back(w.to_string());
    out["valuations"] = vals;
    if (exp.status == CFStatus::Periodic) {
        out["preperiod"] = exp.preperiod;
        out["period"] = exp.period;
    }
    return out;
}

Json to_json(const HeightReport& rep)
{
    Json places = Json::object();
    for (const auto& pn : rep.finite)
        places[to_string(pn.prime)] = pn.to_string();
    return {{"finite_places", places}, {"infinity", to_json(rep.infinity)}, {"height", to_json(rep.height)}};
}

Json to_json(const QuadPoly& poly)
{
    return {{"P", poly.P.to_string()}, {"Q1", poly.Q1.to_string()}, {"Q2", poly.Q2.to_string()},
            {"S", poly.S.to_string()}};
}

Json to_json(const CounterexampleTrace& tr)
{
    Json steps = Json::array();
    for (const auto& s : tr.steps)
        steps.push_back({{"n", s.n},
                         {"k1", to_string(s.k1)},
                         {"k2", to_string(s.k2)},
                         {"r", s.r},
                         {"v", to_string(s.v)},
                         {"w", to_string(s.w)},
                         {"alpha", s.alpha.to_string()},
                         {"quotient", s.quotient.to_string()}});
    Json out = {{"p", to_string(tr.p)}, {"q", to_string(tr.q)}, {"status", to_string(tr.status)}, {"steps", steps}};
    if (tr.status == CFStatus::Periodic) {
        out["preperiod"] = tr.preperiod;
        out["period"] = tr.period;
    }
    return out;
}

Json to_json(const Order& order)
{
    const Algebra& alg = order.algebra();
    Json places = Json::array();
    for (const auto& p : alg.ramified_primes())
        places.push_back(to_string(p));
    if (alg.ramified_at_infinity())
        places.push_back("inf");
    std::vector<Quat> basis(order.basis().begin(), order.basis().end());
    return {{"a", to_string(alg.a())},
            {"b", to_string(alg.b())},
            {"discriminant", to_string(alg.discriminant())},
            {"ramified_places", places},
            {"maximal_order_basis", quat_list(basis)}};
}

}  // namespace quatcf
