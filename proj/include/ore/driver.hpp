#ifndef ORE_DRIVER_HPP_
#define ORE_DRIVER_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ore/basis.hpp"
#include "ore/matrix.hpp"
#include "ore/newton.hpp"

namespace ore {

/* (-1)^{n(n-1)/2} Res(f, f') for monic f, via the Sylvester matrix. */
inline Integer discriminant(IntPoly const & f)
{
    long const n = f.degree();
    if (n < 2 || !f.is_monic())
        throw std::invalid_argument("discriminant needs a monic polynomial of degree >= 2");
    IntPoly const df = f.derivative();
    long const m = n - 1;
    std::size_t const size = static_cast<std::size_t>(n + m);
    IntMatrix s(size, size);
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i)
            s(r, r + n - i) = f.coeff(i);
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i)
            s(m + r, r + m - i) = df.coeff(i);
    Integer res = determinant(std::move(s));
    return (n * (n - 1) / 2) % 2 ? Integer(-res) : res;
}

struct StrippedDiscriminant {
    std::map<long, unsigned> small_part;
    Integer N;
};

/* Remove every prime p <= n from |D|. */
inline StrippedDiscriminant strip_small_primes(Integer const & d, long n)
{
    if (d == 0)
        throw std::invalid_argument("strip_small_primes: zero discriminant");
    StrippedDiscriminant out;
    out.N = abs(d);
    for (long p = 2; p <= n; ++p) {
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0)
                prime = false;
        if (!prime)
            continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(out.N.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(out.N.get_mpz_t(), out.N.get_mpz_t(), static_cast<unsigned long>(p));
            ++e;
        }
        if (e)
            out.small_part[p] = e;
    }
    return out;
}

using BaseList = std::vector<std::pair<Integer, unsigned long>>;

inline unsigned long multiplicity_of(Integer const & c, Integer n)
{
    unsigned long k = 0;
    while (divides(c, n)) {
        n = divexact(n, c);
        ++k;
    }
    return k;
}

/* Pairwise coprime c_1..c_r, all > 1, such that every input element
 * is a product of powers of the c_i. */
inline std::vector<Integer> coprime_base(std::vector<Integer> xs)
{
    std::erase_if(xs, [](Integer const & x) { return x == 1; });
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < xs.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
                Integer g = gcd(xs[i], xs[j]);
                if (g == 1)
                    continue;
                changed = true;
                if (xs[i] == xs[j]) {
                    xs.erase(xs.begin() + static_cast<long>(j));
                    break;
                }
                Integer a = divexact(xs[i], g), b = divexact(xs[j], g);
                xs.erase(xs.begin() + static_cast<long>(j));
                xs.erase(xs.begin() + static_cast<long>(i));
                for (auto * v : {&g, &a, &b})
                    if (*v != 1)
                        xs.push_back(*v);
            }
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

/* Refine the modulus prod base^exp with the knowledge of a divisor d
 * of one of the bases: coprime base, then maximal perfect roots. */
inline BaseList coprime_refine(BaseList const & current, Integer const & d)
{
    std::vector<Integer> xs;
    for (auto const & [b, e] : current)
        xs.push_back(b);
    if (d > 1)
        xs.push_back(d);
    std::map<Integer, unsigned long> acc;
    for (auto const & c : coprime_base(xs)) {
        unsigned long e = 0;
        for (auto const & [b, k] : current)
            e += k * multiplicity_of(c, b);
        if (e == 0)
            throw InternalInconsistency("coprime base element " + to_decimal(c) + " divides no base");
        auto [r, k] = perfect_root(c);
        acc[r] += e * k;
    }
    BaseList out(acc.begin(), acc.end());
    Integer before = 1, after = 1;
    for (auto const & [b, e] : current)
        before *= pow(b, e);
    for (auto const & [b, e] : out)
        after *= pow(b, e);
    if (before != after)
        throw InternalInconsistency("coprime refinement changed the modulus");
    return out;
}

inline BaseList coprime_refine(std::vector<Integer> const & current, Integer const & d)
{
    BaseList l;
    for (auto const & b : current)
        l.emplace_back(b, 1);
    return coprime_refine(l, d);
}

/* Integer factorization at desk scale: trial division, then
 * Pollard-Brent under an iteration budget. */
namespace detail {

inline std::optional<Integer> pollard_brent(Integer const & n, unsigned long c0, unsigned long & budget)
{
    if (mpz_even_p(n.get_mpz_t()))
        return Integer(2);
    Integer y = 2, c = c0, g = 1, q = 1, x, ys;
    unsigned long r = 1;
    unsigned long const m = 128;
    auto step = [&](Integer & v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long const lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                step(y);
                q = q * abs(x - y);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            g = gcd(q, n);
            k += lim;
            if (budget <= lim)
                return std::nullopt;
            budget -= lim;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    if (g == n)
        return std::nullopt;
    return g;
}

/* Adds the prime factorization of n (times mult) into out; false when
 * the budget ran out on some composite cofactor. */
inline bool factor_into(Integer n, unsigned long mult, std::map<Integer, unsigned long> & out, unsigned long & budget)
{
    if (n == 1)
        return true;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return true;
    }
    auto [r, k] = perfect_root(n);
    if (k > 1)
        return factor_into(r, mult * k, out, budget);
    for (unsigned long p = 2; p < 4096; ++p) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p))
            continue;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        out[Integer(p)] += mult * e;
        return factor_into(n, mult, out, budget);
    }
    for (unsigned long c = 1; c < 20; ++c) {
        auto d = pollard_brent(n, c, budget);
        if (d) {
            Integer const other = divexact(n, *d);
            auto base = coprime_base({*d, other});
            for (auto const & b : base)
                if (!factor_into(b, mult * multiplicity_of(b, n), out, budget))
                    return false;
            return true;
        }
        if (budget == 0 || budget < 128)
            return false;
    }
    return false;
}

} // namespace detail

struct SquarefreeFactorization {
    BaseList parts; /* (s_j, e_j), s_j squarefree and pairwise coprime */
    bool complete = true;
    Integer unfactored = 1; /* cofactor left when incomplete */
};

/* Hints are integers asserted squarefree. The checks that can be done
 * cheaply are done here. */
inline void validate_hints(std::vector<Integer> const & hints)
{
    for (std::size_t i = 0; i < hints.size(); ++i) {
        auto const & h = hints[i];
        if (h <= 1)
            throw std::invalid_argument("hint " + to_decimal(h) + " is not > 1");
        if (perfect_root(h).second > 1)
            throw std::invalid_argument("hint " + to_decimal(h) + " is a perfect power");
        for (unsigned long p = 2; p < 10000; ++p)
            if (mpz_divisible_ui_p(h.get_mpz_t(), p * p))
                throw std::invalid_argument("hint " + to_decimal(h) + " is divisible by " + std::to_string(p) + "^2");
        for (std::size_t j = 0; j < i; ++j)
            if (gcd(h, hints[j]) != 1)
                throw std::invalid_argument("hints " + to_decimal(hints[j]) + " and " + to_decimal(h) + " are not coprime");
    }
}

constexpr unsigned long default_factor_budget = 1ul << 21;

inline SquarefreeFactorization squarefree_factor_int(Integer const & m, std::vector<Integer> const & hints = {}, unsigned long budget = default_factor_budget)
{
    if (m <= 1)
        throw std::invalid_argument("squarefree_factor_int needs m > 1");
    SquarefreeFactorization out;
    std::vector<Integer> xs{m};
    for (auto const & h : hints)
        if (Integer g = gcd(h, m); g > 1)
            xs.push_back(g);
    std::map<unsigned long, Integer> by_exp;
    std::map<Integer, unsigned long> primes;
    for (auto const & c : coprime_base(xs)) {
        unsigned long const e = multiplicity_of(c, m);
        bool const hinted = std::any_of(hints.begin(), hints.end(), [&](Integer const & h) { return divides(c, h); });
        if (hinted) {
            out.parts.emplace_back(c, e);
            continue;
        }
        if (!detail::factor_into(c, e, primes, budget)) {
            out.complete = false;
            out.unfactored *= c;
        }
    }
    if (!out.complete) {
        out.parts.clear();
        return out;
    }
    for (auto const & [p, e] : primes) {
        auto it = by_exp.find(e);
        if (it == by_exp.end())
            by_exp.emplace(e, p);
        else
            it->second *= p;
    }
    for (auto const & [e, s] : by_exp)
        out.parts.emplace_back(s, e);
    std::sort(out.parts.begin(), out.parts.end());
    Integer check = 1;
    for (auto const & [s, e] : out.parts)
        check *= pow(s, e);
    if (check != m)
        throw InternalInconsistency("squarefree factorization does not multiply back to m");
    return out;
}

/* Module sum M_1 + ... + M_k + Z[theta] over the common denominator. */
inline ModuleBasis patch_bases(std::vector<std::pair<Integer, ModuleBasis>> const & parts, std::size_t n)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].second.degree() != n)
            throw std::invalid_argument("patch_bases: part of the wrong degree");
        for (std::size_t j = 0; j < i; ++j)
            if (gcd(parts[i].first, parts[j].first) != 1)
                throw std::invalid_argument("patch_bases: moduli are not pairwise coprime");
    }
    Integer d = 1;
    for (auto const & [m, mb] : parts)
        d *= mb.denominator;
    IntMatrix rows(0, 0);
    for (auto const & [m, mb] : parts) {
        Integer const scale = divexact(d, mb.denominator);
        for (std::size_t i = 0; i < n; ++i) {
            auto r = mb.matrix.row(i);
            for (auto & x : r)
                x *= scale;
            rows.append_row(r);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> r(n, 0);
        r[i] = d;
        rows.append_row(r);
    }
    return normalize_module(d, std::move(rows));
}

enum class EntryState { pending, based, unfactored, not_regular };

inline char const * to_string(EntryState s)
{
    switch (s) {
    case EntryState::pending:
        return "pending";
    case EntryState::based:
        return "based";
    case EntryState::unfactored:
        return "unfactored";
    default:
        return "not_regular";
    }
}

struct Event {
    Integer modulus;
    std::string type;
    std::string detail;

    friend bool operator==(Event const &, Event const &) = default;
};

struct ModulusEntry {
    Integer base;
    unsigned long exponent = 1;
    EntryState state = EntryState::pending;
    Tristate squarefree = Tristate::unknown;
    std::optional<RegularityReport> report;
    std::optional<BasisCandidate> candidate;
    std::optional<ModuleBasis> module;
};

enum class RunStatus { ok, not_regular, unfactored };

inline char const * to_string(RunStatus s)
{
    switch (s) {
    case RunStatus::ok:
        return "ok";
    case RunStatus::not_regular:
        return "not_regular";
    default:
        return "unfactored";
    }
}

struct RunOptions {
    enum class Mode { from_disc, explicit_modulus } mode = Mode::from_disc;
    Integer modulus = 0;
    std::vector<Integer> hints;
    unsigned jobs = 1;
    unsigned long factor_budget = default_factor_budget;
    bool verify = true;
    std::function<void(Event const &)> on_event;
    std::function<void(std::vector<ModulusEntry> const &)> on_refine; /* after each refinement */
};

struct RunObstruction {
    Integer modulus;
    Obstruction where;
};

struct RunReport {
    IntPoly f;
    std::optional<Integer> discriminant;
    std::map<long, unsigned> small_primes;
    Integer N;
    std::vector<Event> events;
    std::vector<ModulusEntry> moduli;
    std::optional<ModuleBasis> patched;
    RunStatus status = RunStatus::ok;
    std::optional<RunObstruction> obstruction;
    double seconds = 0;

    std::vector<Integer> bases() const
    {
        std::vector<Integer> b;
        for (auto const & e : moduli)
            b.push_back(e.base);
        return b;
    }
    ModulusEntry const * entry(Integer const & base) const
    {
        for (auto const & e : moduli)
            if (e.base == base)
                return &e;
        return nullptr;
    }
};

/* Outcome of one pass at a single modulus. */
struct ModulusOutcome {
    struct Split {
        Integer d;
    };
    struct Done {
        RegularityReport report;
    };
    struct NotRegular {
        RegularityReport report;
    };
    std::variant<Split, Done, NotRegular> what;
    std::vector<Event> events;
};

namespace detail {

/* Replace the factor of dec that h divides by h and its cofactor. */
inline void split_factor(SquarefreeDecomposition & dec, Modulus const & ctx, std::vector<Integer> const & h_coeffs, std::vector<Event> & log)
{
    ModPoly const h(ctx, h_coeffs);
    if (h.degree() < 1 || !h.is_monic())
        throw InternalInconsistency("factor hook did not return a monic polynomial of positive degree");
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        auto const & g = dec.factors[i].g;
        if (g.degree() <= h.degree())
            continue;
        auto [q, r] = quotrem(g, h);
        if (!r.is_zero())
            continue;
        unsigned const l = dec.factors[i].multiplicity;
        log.push_back({ctx->modulus(), "factor_of_g", format_poly(g) + " = " + format_poly(h) + " * " + format_poly(q)});
        dec.factors[i] = {h, l};
        dec.factors.insert(dec.factors.begin() + static_cast<long>(i) + 1, {q, l});
        return;
    }
    throw InternalInconsistency("factor " + format_poly(h) + " divides no squarefree factor");
}

} // namespace detail

/* sfd0, then the regularity analysis, at modulus m. A divisor of m
 * from any hook ends the pass; a factor of some g_i refines the
 * decomposition in place. */
inline ModulusOutcome process_modulus(IntPoly const & f, Integer const & m, bool small_primes_stripped)
{
    ModulusOutcome out;
    auto const ctx = make_modulus(m, static_cast<unsigned>(f.degree()), small_primes_stripped);
    auto split = [&](Integer const & d) {
        out.events.push_back({m, "divisor", to_decimal(d)});
        out.what = ModulusOutcome::Split{d};
        return out;
    };
    auto dec = sfd0(reduce(f, ctx));
    if (dec.is_divisor())
        return split(dec.divisor().d);
    if (dec.is_factor())
        throw InternalInconsistency("sfd0 returned a polynomial factor hook");
    SquarefreeDecomposition d = std::move(*dec);
    for (std::size_t rounds = 0;; ++rounds) {
        if (rounds > static_cast<std::size_t>(f.degree()))
            throw InternalInconsistency("too many factor refinements at one modulus");
        auto rep = regularity_report(f, ctx, d);
        if (rep.is_divisor())
            return split(rep.divisor().d);
        if (rep.is_factor()) {
            auto const & h = rep.factor().h;
            /* the two parts must stay coprime */
            ModPoly const hp(ctx, h);
            for (auto const & part : d.factors) {
                auto [q, r] = quotrem(part.g, hp);
                if (!r.is_zero() || part.g.degree() <= hp.degree())
                    continue;
                auto c = gcd0(hp, q);
                if (c.is_divisor())
                    return split(c.divisor().d);
                if (!c->is_one())
                    throw InternalInconsistency("split factors of a squarefree g are not coprime");
                break;
            }
            detail::split_factor(d, ctx, h, out.events);
            continue;
        }
        if (!rep->regular) {
            out.events.push_back({m, "not_regular", rep->obstruction->description});
            out.what = ModulusOutcome::NotRegular{std::move(*rep)};
        } else {
            out.what = ModulusOutcome::Done{std::move(*rep)};
        }
        return out;
    }
}

namespace detail {

inline Integer product_of(std::vector<ModulusEntry> const & es)
{
    Integer p = 1;
    for (auto const & e : es)
        p *= pow(e.base, e.exponent);
    return p;
}

inline void check_worklist(std::vector<ModulusEntry> const & es, Integer const & n)
{
    if (product_of(es) != n)
        throw InternalInconsistency("worklist no longer multiplies to N");
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gcd(es[i].base, es[j].base) != 1)
                throw InternalInconsistency("worklist bases " + to_decimal(es[j].base) + " and " + to_decimal(es[i].base) + " are not coprime");
}

} // namespace detail

/* The patched module contains Z[theta], each row is integral, and
 * its index over Z[theta] involves only primes dividing N. */
inline bool patched_is_sane(ModuleBasis const & mb, IntPoly const & f, Integer const & n)
{
    if (!module_is_integral(mb, f))
        return false;
    Rational const idx = mb.index_over_power_basis();
    if (idx.get_den() != 1)
        return false;
    Integer r = idx.get_num();
    for (Integer g = gcd(r, n); g != 1; g = gcd(r, n))
        r = divexact(r, g);
    return r == 1;
}

inline RunReport run(IntPoly const & f, RunOptions const & opt = {})
{
    auto const t0 = std::chrono::steady_clock::now();
    if (f.degree() < 2 || !f.is_monic())
        throw std::invalid_argument("f must be monic of degree >= 2");
    validate_hints(opt.hints);
    std::size_t const n = static_cast<std::size_t>(f.degree());

    RunReport rep;
    rep.f = f;
    bool stripped = false;
    if (opt.mode == RunOptions::Mode::from_disc) {
        rep.discriminant = discriminant(f);
        if (*rep.discriminant == 0)
            throw std::domain_error("f has a repeated root; its discriminant is zero");
        auto s = strip_small_primes(*rep.discriminant, f.degree());
        rep.small_primes = std::move(s.small_part);
        rep.N = std::move(s.N);
        stripped = true;
    } else {
        if (opt.modulus < 1)
            throw std::invalid_argument("explicit modulus must be positive");
        rep.N = opt.modulus;
    }

    auto emit = [&](Event e) {
        if (opt.on_event)
            opt.on_event(e);
        rep.events.push_back(std::move(e));
    };

    std::vector<ModulusEntry> es;
    if (rep.N > 1)
        es.push_back({rep.N, 1, EntryState::pending, cheap_squarefree_status(rep.N), {}, {}, {}});

    struct Replacement {
        BaseList parts;
        Tristate inherited;
        std::string why;
    };
    std::map<std::size_t, Replacement> replacements;
    auto apply_replacements = [&] {
        if (replacements.empty())
            return;
        std::vector<ModulusEntry> next;
        for (std::size_t i = 0; i < es.size(); ++i) {
            auto it = replacements.find(i);
            if (it == replacements.end()) {
                next.push_back(std::move(es[i]));
                continue;
            }
            std::string detail;
            for (auto const & [b, k] : it->second.parts) {
                Tristate sq = it->second.inherited == Tristate::yes ? Tristate::yes : cheap_squarefree_status(b);
                next.push_back({b, es[i].exponent * k, EntryState::pending, sq, {}, {}, {}});
                detail += (detail.empty() ? "" : " ") + to_decimal(b) + "^" + std::to_string(es[i].exponent * k);
            }
            emit({es[i].base, it->second.why, detail});
        }
        std::sort(next.begin(), next.end(), [](auto const & a, auto const & b) { return a.base < b.base; });
        es = std::move(next);
        replacements.clear();
        detail::check_worklist(es, rep.N);
        if (opt.on_refine)
            opt.on_refine(es);
    };

    bool abort = false;
    while (!abort) {
        std::vector<std::size_t> todo;
        for (std::size_t i = 0; i < es.size(); ++i)
            if (es[i].state == EntryState::pending)
                todo.push_back(i);
        if (todo.empty())
            break;

        std::vector<ModulusOutcome> outcomes(todo.size());
        if (opt.jobs > 1 && todo.size() > 1) {
            for (std::size_t lo = 0; lo < todo.size(); lo += opt.jobs) {
                std::vector<std::future<ModulusOutcome>> fs;
                std::size_t const hi = std::min(todo.size(), lo + opt.jobs);
                for (std::size_t t = lo; t < hi; ++t)
                    fs.push_back(std::async(std::launch::async, process_modulus, std::cref(f), std::cref(es[todo[t]].base), stripped));
                for (std::size_t t = lo; t < hi; ++t)
                    outcomes[t] = fs[t - lo].get();
            }
        } else {
            for (std::size_t t = 0; t < todo.size(); ++t)
                outcomes[t] = process_modulus(f, es[todo[t]].base, stripped);
        }

        for (std::size_t t = 0; t < todo.size(); ++t) {
            std::size_t const idx = todo[t];
            auto & oc = outcomes[t];
            for (auto & ev : oc.events)
                emit(std::move(ev));
            if (auto * s = std::get_if<ModulusOutcome::Split>(&oc.what)) {
                replacements[idx] = {coprime_refine(BaseList{{es[idx].base, 1}}, s->d), es[idx].squarefree, "refine"};
                continue;
            }
            if (auto * nr = std::get_if<ModulusOutcome::NotRegular>(&oc.what)) {
                es[idx].state = EntryState::not_regular;
                rep.obstruction = RunObstruction{es[idx].base, *nr->report.obstruction};
                es[idx].report = std::move(nr->report);
                abort = true;
                continue;
            }
            auto & done = std::get<ModulusOutcome::Done>(oc.what);
            auto & entry = es[idx];
            BasisCandidate cand = basis_candidate(done.report, entry.squarefree);
            if (!cand.valid()) {
                emit({entry.base, "invalid_candidate", std::string("slopes not all integral, modulus squarefree: ") + to_string(entry.squarefree)});
                auto sq = squarefree_factor_int(entry.base, opt.hints, opt.factor_budget);
                if (!sq.complete) {
                    entry.state = EntryState::unfactored;
                    entry.report = std::move(done.report);
                    emit({entry.base, "unfactored", to_decimal(sq.unfactored)});
                    continue;
                }
                if (sq.parts.size() == 1 && sq.parts[0].second == 1) {
                    entry.squarefree = Tristate::yes;
                    cand.modulus_squarefree = Tristate::yes;
                    emit({entry.base, "squarefree", "certified"});
                } else {
                    replacements[idx] = {sq.parts, Tristate::yes, "squarefree_split"};
                    continue;
                }
            }
            if (opt.verify && !numerators_unimodular(cand, n))
                throw InternalInconsistency("numerator determinant is not coprime to " + to_decimal(entry.base));
            entry.module = to_module_basis(cand, f);
            entry.candidate = std::move(cand);
            entry.report = std::move(done.report);
            entry.state = EntryState::based;
            emit({entry.base, "based", "index exponent " + std::to_string(index_exponent(*entry.report))});
        }
        apply_replacements();
    }

    rep.moduli = std::move(es);
    bool const any_unfactored = std::any_of(rep.moduli.begin(), rep.moduli.end(), [](auto const & e) { return e.state == EntryState::unfactored; });
    if (abort) {
        rep.status = RunStatus::not_regular;
    } else if (any_unfactored) {
        rep.status = RunStatus::unfactored;
    } else {
        std::vector<std::pair<Integer, ModuleBasis>> parts;
        for (auto const & e : rep.moduli)
            parts.emplace_back(e.base, *e.module);
        rep.patched = patch_bases(parts, n);
        if (opt.verify && !patched_is_sane(*rep.patched, f, rep.N))
            throw InternalInconsistency("patched basis failed its integrality or index check");
        rep.status = RunStatus::ok;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace ore

#endif /* ORE_DRIVER_HPP_ */
