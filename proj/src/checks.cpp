#include "klein/checks.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "klein/algebra.hpp"
#include "klein/group.hpp"
#include "klein/localfield.hpp"
#include "klein/representations.hpp"
#include "klein/spectrum.hpp"
#include "klein/topology.hpp"

namespace klein {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult from_identity(const IdentityCheck& c)
{
    CheckResult r;
    r.id = c.id;
    r.claim = c.claim;
    r.status = c.pass ? CheckStatus::pass : CheckStatus::fail;
    r.cases = c.cases;
    if (!c.pass) r.witness = {{"case", c.witness}};
    return r;
}

CheckResult from_cocycle(std::string id, std::string claim, const CocycleReport& rep)
{
    CheckResult r;
    r.id = std::move(id);
    r.claim = std::move(claim);
    r.cases = rep.triples_checked;
    r.status = rep.pass() ? CheckStatus::pass : CheckStatus::fail;
    if (!rep.pass()) r.witness = {{"case", rep.describe()}};
    return r;
}

// Runs one batch of checks, timing it and turning an exception into a failed
// check named `id`.
template <class Fn>
void batch(SuiteReport& suite, const std::string& id, Fn&& fn)
{
    const auto start = Clock::now();
    std::vector<CheckResult> out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        CheckResult r;
        r.id = id;
        r.claim = "batch completes without error";
        r.status = CheckStatus::fail;
        r.witness = {{"error", e.what()}};
        out = {r};
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (auto& r : out) {
        r.elapsed_ms = ms;
        suite.checks.push_back(std::move(r));
    }
    suite.elapsed_ms += ms;
}

std::vector<CheckResult> convert(const std::vector<IdentityCheck>& checks, const std::string& suffix = "")
{
    std::vector<CheckResult> out;
    for (const auto& c : checks) {
        out.push_back(from_identity(c));
        out.back().id += suffix;
    }
    return out;
}

std::mt19937_64 suite_rng(const RunConfig& cfg, std::uint64_t salt)
{
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

Cyclotomic random_unit_gaussian(std::mt19937_64& rng, bool avoid_signs)
{
    for (;;) {
        const Cyclotomic c = random_gaussian(rng);
        if (!avoid_signs || (!(c == Cyclotomic(1)) && !(c == Cyclotomic(-1)))) return c;
    }
}

bool same_set(std::vector<BCharacter> a, std::vector<BCharacter> b)
{
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        const auto it = std::find(b.begin(), b.end(), x);
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

nlohmann::ordered_json config_json(const RunConfig& c)
{
    return {{"window", c.window},
            {"q", c.q_list},
            {"census_n", c.census_n},
            {"seed", c.seed},
            {"samples",
             {{"coboundaries", c.coboundary_samples},
              {"modules", c.module_samples},
              {"coordinates", c.coordinate_samples},
              {"free", c.free_samples},
              {"topology", c.topology_samples}}},
            {"valuation_bound", c.valuation_bound}};
}

}  // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "?";
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    throw PreconditionError("unknown format '" + s + "' (expected text or json)");
}

void RunConfig::validate() const
{
    if (window < 1 || window > 6) throw PreconditionError("window must lie in [1, 6], got " + std::to_string(window));
    if (q_list.empty()) throw PreconditionError("at least one q is required");
    for (long long q : q_list) ResidueData{q};
    if (census_n.empty()) throw PreconditionError("at least one census modulus is required");
    for (int n : census_n) {
        if (n % 2) throw PreconditionError("census modulus " + std::to_string(n) + " is odd: the cocycle does not descend");
        if (n < 2 || n > 12) throw PreconditionError("census modulus must lie in [2, 12], got " + std::to_string(n));
    }
    for (int s : {coboundary_samples, module_samples, coordinate_samples, free_samples, topology_samples})
        if (s < 1) throw PreconditionError("sample counts must be positive");
    if (valuation_bound < 0 || valuation_bound > 4) throw PreconditionError("valuation bound must lie in [0, 4]");
}

bool SuiteReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::pass; });
}

bool RunReport::pass() const
{
    return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.pass(); });
}

std::size_t RunReport::count(CheckStatus s) const
{
    std::size_t n = 0;
    for (const auto& suite : suites)
        for (const auto& c : suite.checks) n += c.status == s;
    return n;
}

nlohmann::ordered_json RunReport::to_json() const
{
    auto ms = [&](double v) -> nlohmann::ordered_json { return config.timings ? nlohmann::ordered_json(v) : nullptr; };
    nlohmann::ordered_json suites_json = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"id", c.id},
                              {"claim", c.claim},
                              {"status", to_string(c.status)},
                              {"cases", c.cases},
                              {"witness", c.witness},
                              {"elapsed", ms(c.elapsed_ms)}});
        suites_json.push_back({{"name", s.name}, {"pass", s.pass()}, {"elapsed", ms(s.elapsed_ms)}, {"checks", checks}});
    }
    return {{"config", config_json(config)},
            {"suites", suites_json},
            {"summary",
             {{"checks", count(CheckStatus::pass) + count(CheckStatus::fail) + count(CheckStatus::skipped)},
              {"passed", count(CheckStatus::pass)},
              {"failed", count(CheckStatus::fail)},
              {"skipped", count(CheckStatus::skipped)},
              {"pass", pass()}}}};
}

std::string RunReport::to_text() const
{
    std::ostringstream os;
    for (const auto& s : suites) {
        os << "== " << s.name << (s.pass() ? "" : "  [FAILED]");
        if (config.timings) os << "  (" << static_cast<long long>(s.elapsed_ms) << " ms)";
        os << "\n";
        for (const auto& c : s.checks) {
            os << (c.status == CheckStatus::pass ? "  PASS  " : c.status == CheckStatus::fail ? "  FAIL  " : "  SKIP  ") << c.id
               << "  [" << c.cases << "]  " << c.claim << "\n";
            if (!c.witness.is_null()) os << "        witness: " << c.witness.dump() << "\n";
        }
    }
    os << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail) << " failed, " << count(CheckStatus::skipped)
       << " skipped\n";
    return os.str();
}

SuiteReport cocycle_suite(const RunConfig& cfg)
{
    SuiteReport suite{"cocycle", {}, 0};
    auto rng = suite_rng(cfg, 1);
    const Cocycle mu = Cocycle::mu_t();

    batch(suite, "cocycle.mu-t.identity", [&] {
        return std::vector<CheckResult>{
            from_cocycle("cocycle.mu-t.identity", "mu_T is normalized and satisfies the 2-cocycle identity on the window",
                         check_cocycle_identity(mu, cfg.window)),
            from_cocycle("cocycle.trivial.identity", "the trivial cocycle passes the same sweep",
                         check_cocycle_identity(Cocycle::trivial(), cfg.window))};
    });
    batch(suite, "cocycle.mu-t.values", [&] {
        std::vector<IdentityCheck> out;
        out.push_back(run_identity_check("cocycle.mu-t.bicharacter", "b(s, Y) = -1 and b(X, Y) = 1 for mu_T", [&](auto check) {
            check(commutator_bicharacter(mu, kGenS, kGenY) == Phase::minus_one(), "b(s,Y)");
            check(commutator_bicharacter(mu, kGenX, kGenY) == Phase::one(), "b(X,Y)");
            check(commutator_bicharacter(Cocycle::trivial(), kGenS, kGenY) == Phase::one(), "trivial b(s,Y)");
        }));
        out.push_back(run_identity_check("cocycle.mu-t.class", "mu_T is not a coboundary; the trivial cocycle is",
                                         [&](auto check) {
                                             check(cohomology_class_indicator(mu) == CohomologyClass::nontrivial, "mu_T");
                                             check(cohomology_class_indicator(Cocycle::trivial()) == CohomologyClass::trivial,
                                                   "trivial");
                                         }));
        out.push_back(run_identity_check(
            "cocycle.mu-t.restrictions", "mu_T = 1 on <X, s> and on <Y>", [&](auto check) {
                for (const auto& g : window_elements(cfg.window))
                    for (const auto& h : window_elements(cfg.window)) {
                        if (g.n == 0 && h.n == 0) check(mu(g, h) == Phase::one(), g.to_string() + "," + h.to_string());
                        if (g.m == 0 && g.eps == 0 && h.m == 0 && h.eps == 0)
                            check(mu(g, h) == Phase::one(), g.to_string() + "," + h.to_string());
                    }
            }));
        return convert(out);
    });
    batch(suite, "cocycle.coboundary.invariance", [&] {
        const int w = std::min(cfg.window, 2);
        std::vector<IdentityCheck> out;
        out.push_back(run_identity_check(
            "cocycle.coboundary.invariance", "b(s, Y) and the class of mu_T survive random coboundaries", [&](auto check) {
                for (int k = 0; k < cfg.coboundary_samples; ++k) {
                    const Cocycle c = apply_coboundary(mu, random_cochain(rng, cfg.window));
                    const std::string tag = "coboundary #" + std::to_string(k);
                    check(commutator_bicharacter(c, kGenS, kGenY) == Phase::minus_one(), tag + " b(s,Y)");
                    check(cohomology_class_indicator(c) == CohomologyClass::nontrivial, tag + " class");
                    const CocycleReport rep = check_cocycle_identity(c, w);
                    check(rep.pass(), tag + " identity: " + rep.describe());
                }
            }));
        return convert(out);
    });
    batch(suite, "cocycle.quotient", [&] {
        std::vector<CheckResult> out;
        for (int n : cfg.census_n)
            out.push_back(from_cocycle("cocycle.quotient.n" + std::to_string(n),
                                       "mu_T descends to the quotient of modulus " + std::to_string(n) +
                                           " and is a 2-cocycle there",
                                       check_cocycle_identity_quotient(mu, n)));
        out.push_back(from_identity(run_identity_check("cocycle.quotient.odd-rejected",
                                                       "odd moduli are rejected: the sign (-1)^(eps n) does not descend",
                                                       [&](auto check) {
                                                           bool threw = false;
                                                           try {
                                                               quotient_project(kGenY, 3);
                                                           } catch (const PreconditionError&) {
                                                               threw = true;
                                                           }
                                                           check(threw, "N = 3 accepted");
                                                       })));
        return out;
    });
    return suite;
}

SuiteReport algebra_suite(const RunConfig& cfg)
{
    SuiteReport suite{"algebra", {}, 0};
    for (Flavor f : {Flavor::twisted, Flavor::untwisted})
        batch(suite, "algebra." + to_string(f), [&] {
            std::vector<CheckResult> out;
            for (const auto& rel : verify_presentation(f).relations) {
                CheckResult r;
                r.id = "algebra." + to_string(f) + "." + rel.name;
                r.claim = rel.relation + " in the " + to_string(f) + " algebra";
                r.cases = 1;
                r.status = rel.holds ? CheckStatus::pass : CheckStatus::fail;
                if (!rel.holds) r.witness = {{"residual", rel.residual}};
                out.push_back(std::move(r));
            }
            return out;
        });
    batch(suite, "algebra.finite-dimension", [&] {
        return convert({run_identity_check("algebra.finite-dimension", "the quotient of modulus N has 2 N^2 basis elements",
                                           [&](auto check) {
                                               for (int n : cfg.census_n)
                                                   check(finite_dimension(n) == 2LL * n * n &&
                                                             quotient_elements(n).size() == 2u * n * n,
                                                         "N = " + std::to_string(n));
                                           })});
    });
    return suite;
}

SuiteReport module_suite(const RunConfig& cfg)
{
    SuiteReport suite{"module", {}, 0};
    auto rng = suite_rng(cfg, 3);

    for (Flavor f : {Flavor::twisted, Flavor::untwisted}) {
        const std::string p = "module." + to_string(f);
        batch(suite, p, [&] {
            const bool tw = f == Flavor::twisted;
            struct Sample {
                Cyclotomic w, z;
                Representation rep;
            };
            std::vector<Sample> samples;
            for (int k = 0; k < cfg.module_samples; ++k) {
                const Cyclotomic w = random_unit_gaussian(rng, false);
                const Cyclotomic z = random_unit_gaussian(rng, !tw);
                samples.push_back({w, z, tw ? make_twisted_simple(w, z) : make_untwisted_simple(w, z)});
            }
            auto make = [&](const Cyclotomic& w, const Cyclotomic& z) {
                return tw ? make_twisted_simple(w, z) : make_untwisted_simple(w, z);
            };
            auto tag = [](const Sample& s) { return "(w, z) = (" + s.w.to_string() + ", " + s.z.to_string() + ")"; };
            std::vector<IdentityCheck> out;
            out.push_back(run_identity_check(p + ".relations", "M(w, z) satisfies the defining relations", [&](auto check) {
                for (const auto& s : samples) check(relations_hold(s.rep), tag(s));
            }));
            out.push_back(run_identity_check(p + ".commutant", "End(M(w, z)) is one-dimensional", [&](auto check) {
                for (const auto& s : samples) check(commutant_dimension(s.rep) == 1, tag(s));
            }));
            out.push_back(run_identity_check(p + ".restriction", "M(w, z) restricted to B is the orbit of (w, z)",
                                             [&](auto check) {
                                                 for (const auto& s : samples) {
                                                     const BCharacter chi{s.w, s.z};
                                                     const std::vector<BCharacter> orbit{chi, partner_character(f, chi)};
                                                     check(same_set(restrict_to_B(s.rep), orbit) && !(orbit[0] == orbit[1]),
                                                           tag(s));
                                                 }
                                             }));
            out.push_back(run_identity_check(p + ".partner", "M(w, z) is isomorphic to the module of the partner character",
                                             [&](auto check) {
                                                 for (const auto& s : samples) {
                                                     const BCharacter q = partner_character(f, {s.w, s.z});
                                                     check(find_intertwiner(s.rep, make(q.w, q.z)).has_value(), tag(s));
                                                 }
                                             }));
            out.push_back(run_identity_check(p + ".distinct-orbit", "modules from disjoint orbits are not isomorphic",
                                             [&](auto check) {
                                                 for (const auto& s : samples) {
                                                     const auto other = tw ? make(s.w, s.z * Cyclotomic(2))
                                                                           : make(s.w * Cyclotomic(2), s.z);
                                                     check(!find_intertwiner(s.rep, other).has_value(), tag(s));
                                                 }
                                             }));
            out.push_back(run_identity_check(p + ".induced", "A (x)_B chi is isomorphic to M(w, z)", [&](auto check) {
                for (const auto& s : samples)
                    check(find_intertwiner(induce_from_character(f, {s.w, s.z}), s.rep).has_value(), tag(s));
            }));
            return convert(out);
        });
    }

    batch(suite, "module.one-dimensional", [&] {
        std::vector<IdentityCheck> out;
        const auto tw = solve_one_dimensional(Flavor::twisted);
        const auto un = solve_one_dimensional(Flavor::untwisted);
        const std::vector<Cyclotomic> candidates{Cyclotomic(1),      Cyclotomic(-1), Cyclotomic::i(), -Cyclotomic::i(),
                                                 Cyclotomic(2),      Cyclotomic(Rational(1, 2)),
                                                 Cyclotomic::gaussian(1, 1)};
        out.push_back(run_identity_check("module.one-dimensional.twisted", "the twisted algebra has no one-dimensional modules",
                                         [&](auto check) {
                                             check(!tw.satisfiable, "solver reports a solution");
                                             check(!tw.witness_equation.empty(), "no witness equation");
                                             for (const auto& s : candidates)
                                                 for (const auto& x : candidates)
                                                     for (const auto& y : candidates)
                                                         check(!tw.admits(s, x, y), "admits " + s.to_string() + "," +
                                                                                        x.to_string() + "," + y.to_string());
                                         }));
        out.push_back(run_identity_check(
            "module.one-dimensional.untwisted", "untwisted one-dimensional modules are exactly (w, delta, eps)",
            [&](auto check) {
                check(un.satisfiable, "solver reports no solution");
                for (const auto& s : candidates)
                    for (const auto& x : candidates)
                        for (const auto& y : candidates) {
                            const bool expected = (s == Cyclotomic(1) || s == Cyclotomic(-1)) &&
                                                  (x == Cyclotomic(1) || x == Cyclotomic(-1));
                            check(un.admits(s, x, y) == expected, s.to_string() + "," + x.to_string() + "," + y.to_string());
                        }
                for (const auto& w : candidates)
                    for (int delta : {1, -1})
                        for (int eps : {1, -1})
                            check(relations_hold(make_untwisted_character(w, delta, eps)), "character " + w.to_string());
            }));
        out.push_back(run_identity_check("module.untwisted.reducible", "M(w, +-1) is rejected as reducible", [&](auto check) {
            for (int z : {1, -1}) {
                bool threw = false;
                try {
                    make_untwisted_simple(Cyclotomic(3), Cyclotomic(z));
                } catch (const PreconditionError&) {
                    threw = true;
                }
                check(threw, "z = " + std::to_string(z));
            }
        }));
        return convert(out);
    });

    for (int n : cfg.census_n)
        for (Flavor f : {Flavor::twisted, Flavor::untwisted}) {
            const std::string id = "module.census." + to_string(f) + ".n" + std::to_string(n);
            batch(suite, id, [&] {
                const CensusReport rep = finite_census(n, f);
                // Independent count: N^2 characters; the untwisted involution
                // fixes the 2N with z = +-1, each giving two characters.
                std::map<int, int> expected;
                if (f == Flavor::twisted)
                    expected[2] = n * n / 2;
                else {
                    expected[1] = 4 * n;
                    if (n > 2) expected[2] = (n * n - 2 * n) / 2;
                }
                CheckResult r;
                r.id = id;
                r.claim = "simple modules of the quotient of modulus " + std::to_string(n) + ": " + rep.summary();
                r.cases = rep.simples();
                const bool ok = rep.pass() && rep.count_by_dimension == expected && rep.sum_of_squares == 2LL * n * n;
                r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                if (!ok) {
                    r.witness = {{"summary", rep.summary()}};
                    if (!rep.failures.empty()) r.witness["failures"] = rep.failures;
                }
                return std::vector<CheckResult>{r};
            });
        }
    return suite;
}

SuiteReport localfield_suite(const RunConfig& cfg)
{
    SuiteReport suite{"localfield", {}, 0};
    for (long long q : cfg.q_list) {
        const std::string suffix = ".q" + std::to_string(q);
        batch(suite, "localfield" + suffix, [&] {
            const ResidueData k(q);
            std::vector<IdentityCheck> all;
            for (auto part : {verify_eta_identities(k, cfg.valuation_bound), verify_weyl_twist(k, cfg.valuation_bound),
                              verify_chi4(k, cfg.valuation_bound), verify_character_orders(k, cfg.valuation_bound)})
                all.insert(all.end(), part.begin(), part.end());
            return convert(all, suffix);
        });
    }
    return suite;
}

SuiteReport coordinate_suite(const RunConfig& cfg)
{
    SuiteReport suite{"coordinates", {}, 0};
    auto rng = suite_rng(cfg, 5);
    batch(suite, "coords", [&] { return convert(verify_coordinates(rng, cfg.coordinate_samples, cfg.free_samples)); });
    batch(suite, "coords.compare", [&] {
        auto out = comparison_map_check(rng, cfg.coordinate_samples);
        // The depth-zero twist must not depend on the residue field.
        for (long long q : cfg.q_list)
            out.push_back(run_identity_check("coords.compare.q" + std::to_string(q),
                                             "depth-zero twist coordinate is -i for q = " + std::to_string(q),
                                             [&](auto check) {
                                                 const auto d = depth_zero_datum(q);
                                                 check(d.twist == -Cyclotomic::i(), d.twist.to_string());
                                             }));
        return convert(out);
    });
    return suite;
}

SuiteReport topology_suite(const RunConfig& cfg)
{
    SuiteReport suite{"topology", {}, 0};
    auto rng = suite_rng(cfg, 6);
    batch(suite, "topology", [&] { return convert(verify_topology(rng, cfg.topology_samples)); });
    return suite;
}

RunReport run_verify(const RunConfig& cfg)
{
    cfg.validate();
    RunReport r;
    r.config = cfg;
    for (auto suite : {cocycle_suite, algebra_suite, module_suite, localfield_suite, coordinate_suite, topology_suite})
        r.suites.push_back(suite(cfg));
    return r;
}

std::string render(const RunReport& r)
{
    return r.config.format == OutputFormat::json ? r.to_json().dump(2) + "\n" : r.to_text();
}

}  // namespace klein
