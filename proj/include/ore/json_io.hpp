#ifndef ORE_JSON_IO_HPP_
#define ORE_JSON_IO_HPP_

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "ore/driver.hpp"

namespace ore {

using json = nlohmann::json;

/* Big integers travel as decimal strings; plain JSON numbers are
 * accepted on input when they fit. */
inline Integer integer_from_json(json const & j)
{
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

inline json integers_to_json(std::vector<Integer> const & v)
{
    json a = json::array();
    for (auto const & x : v)
        a.push_back(to_decimal(x));
    return a;
}

inline std::vector<Integer> integers_from_json(json const & j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a list of integers");
    std::vector<Integer> v;
    for (auto const & x : j)
        v.push_back(integer_from_json(x));
    return v;
}

struct InputDocument {
    IntPoly f;
    RunOptions::Mode mode = RunOptions::Mode::from_disc;
    Integer N = 0;
    std::vector<Integer> hints;
};

inline InputDocument input_from_json(json const & j)
{
    InputDocument d;
    if (j.is_array()) {
        d.f = make_intpoly(integers_from_json(j));
        return d;
    }
    if (!j.is_object() || !j.contains("f"))
        throw std::invalid_argument("input document needs an \"f\" field");
    d.f = make_intpoly(integers_from_json(j.at("f")));
    std::string const mode = j.value("mode", std::string(j.contains("N") ? "N" : "disc"));
    if (mode == "disc") {
        d.mode = RunOptions::Mode::from_disc;
    } else if (mode == "N") {
        d.mode = RunOptions::Mode::explicit_modulus;
        if (!j.contains("N"))
            throw std::invalid_argument("mode \"N\" needs an \"N\" field");
        d.N = integer_from_json(j.at("N"));
    } else {
        throw std::invalid_argument("unknown mode \"" + mode + "\"");
    }
    if (j.contains("hints"))
        d.hints = integers_from_json(j.at("hints"));
    return d;
}

/* A hints file is either a bare list or {"hints": [...]}. */
inline std::vector<Integer> hints_from_json(json const & j)
{
    if (j.is_object())
        return integers_from_json(j.at("hints"));
    return integers_from_json(j);
}

inline json to_json(ModuleBasis const & mb)
{
    json rows = json::array();
    for (std::size_t i = 0; i < mb.matrix.rows(); ++i)
        rows.push_back(integers_to_json(mb.matrix.row(i)));
    return {{"denominator", to_decimal(mb.denominator)}, {"rows", rows}};
}

inline ModuleBasis module_from_json(json const & j)
{
    IntMatrix m;
    for (auto const & r : j.at("rows"))
        m.append_row(integers_from_json(r));
    return ModuleBasis{integer_from_json(j.at("denominator")), std::move(m)};
}

inline json to_json(PrincipalPolygon const & p)
{
    json v = json::array();
    for (auto const & [x, y] : p.vertices)
        v.push_back({x, y});
    json sides = json::array();
    for (auto const & s : p.sides)
        sides.push_back({{"slope", "-" + std::to_string(s.h) + "/" + std::to_string(s.e)}, {"length", s.length}, {"degree", s.degree()}});
    return {{"length", p.length}, {"vertices", v}, {"sides", sides}};
}

inline json to_json(RegularityReport const & r)
{
    json fs = json::array();
    for (auto const & fr : r.factors) {
        json res = json::array();
        for (std::size_t s = 0; s < fr.residuals.size(); ++s) {
            json coeffs = json::array();
            for (auto const & c : fr.residuals[s].poly.coeffs())
                coeffs.push_back(integers_to_json(c.coeffs()));
            res.push_back({{"coefficients", coeffs}, {"squarefree", static_cast<bool>(fr.residual_squarefree[s])}});
        }
        fs.push_back({{"g", integers_to_json(fr.g.coeffs())},
                      {"multiplicity", fr.multiplicity},
                      {"polygon", to_json(fr.polygon)},
                      {"residuals", res}});
    }
    json out = {{"regular", r.regular}, {"all_slopes_integral", r.all_slopes_integral()}, {"factors", fs}};
    if (r.obstruction)
        out["obstruction"] = {{"factor", r.obstruction->factor}, {"side", r.obstruction->side}, {"description", r.obstruction->description}};
    return out;
}

inline json to_json(BasisCandidate const & c)
{
    json els = json::array();
    for (auto const & e : c.elements)
        els.push_back({{"numerator", integers_to_json(e.numerator.coeffs())},
                       {"denominator", to_decimal(pow(c.modulus, e.exponent))},
                       {"ijk", {e.i, e.j, e.k}}});
    return {{"elements", els}, {"modulus_squarefree", to_string(c.modulus_squarefree)}, {"all_slopes_integral", c.all_slopes_integral}, {"valid", c.valid()}};
}

/* Output document. Nothing time- or schedule-dependent goes in, so
 * equal inputs give equal bytes. */
inline json to_json(RunReport const & r)
{
    json sp = json::object();
    for (auto const & [p, e] : r.small_primes)
        sp[std::to_string(p)] = e;

    auto events = r.events;
    std::stable_sort(events.begin(), events.end(), [](Event const & a, Event const & b) {
        return std::tie(a.modulus, a.type, a.detail) < std::tie(b.modulus, b.type, b.detail);
    });
    json log = json::array();
    for (auto const & e : events)
        log.push_back({{"modulus", to_decimal(e.modulus)}, {"type", e.type}, {"detail", e.detail}});

    json moduli = json::array();
    json bases = json::array();
    for (auto const & e : r.moduli) {
        moduli.push_back({{"base", to_decimal(e.base)}, {"exponent", e.exponent}, {"state", to_string(e.state)}, {"squarefree", to_string(e.squarefree)}});
        json b = {{"modulus", to_decimal(e.base)}};
        if (e.report) {
            b["regularity"] = to_json(*e.report);
            if (e.report->regular)
                b["index_exponent"] = index_exponent(*e.report);
        }
        if (e.candidate)
            b["candidate"] = to_json(*e.candidate);
        if (e.module)
            b["module"] = to_json(*e.module);
        bases.push_back(std::move(b));
    }

    json out = {{"status", to_string(r.status)},
                {"f", integers_to_json(r.f.coeffs())},
                {"N", to_decimal(r.N)},
                {"small_primes", sp},
                {"moduli_log", log},
                {"moduli", moduli},
                {"bases", bases}};
    if (r.discriminant)
        out["discriminant"] = to_decimal(*r.discriminant);
    out["patched"] = r.patched ? to_json(*r.patched) : json(nullptr);
    if (r.obstruction)
        out["obstruction"] = {{"modulus", to_decimal(r.obstruction->modulus)},
                              {"factor", r.obstruction->where.factor},
                              {"side", r.obstruction->where.side},
                              {"description", r.obstruction->where.description}};
    else
        out["obstruction"] = nullptr;
    return out;
}

} // namespace ore

#endif /* ORE_JSON_IO_HPP_ */
