// Command-line front end: verification runs, censuses, surface
// classification, single modules, orbits, local-field checks and mesh export.
//
// Exit codes: 0 success, 1 a check failed or a runtime error, 2 usage or
// precondition error.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "klein/checks.hpp"
#include "klein/literal.hpp"
#include "klein/localfield.hpp"
#include "klein/mesh.hpp"
#include "klein/representations.hpp"
#include "klein/spectrum.hpp"
#include "klein/topology.hpp"

using namespace klein;
using Json = nlohmann::ordered_json;

namespace {

struct Output {
    std::string format = "text";
    std::string out;
};

void add_output(CLI::App* cmd, Output& o)
{
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
}

void emit(const Output& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) throw std::runtime_error("cannot write " + o.out);
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Cyclotomic nonzero_scalar(const std::string& name, const std::string& text)
{
    const Cyclotomic c = parse_scalar(text);
    if (c.is_zero()) throw PreconditionError(name + " must be nonzero");
    return c;
}

std::string matrix_block(const std::string& name, const Matrix& m)
{
    return "  " + name + " = " + m.to_string() + "\n";
}

// ---- census ----------------------------------------------------------------

int cmd_census(int n, const std::string& flavor, const Output& o)
{
    const Flavor f = parse_flavor(flavor);
    const CensusReport rep = finite_census(n, f);
    if (o.format == "json") {
        Json orbits = Json::array();
        for (const auto& orb : rep.orbits) orbits.push_back({{"characters", orb.characters}, {"dimensions", orb.dimensions}});
        Json counts = Json::object();
        for (const auto& [d, c] : rep.count_by_dimension) counts[std::to_string(d)] = c;
        emit(o, dump({{"modulus", n},
                      {"flavor", to_string(f)},
                      {"orbits", orbits},
                      {"count_by_dimension", counts},
                      {"sum_of_squares", rep.sum_of_squares},
                      {"expected", rep.expected},
                      {"intertwiner_pairs", rep.intertwiner_pairs},
                      {"failures", rep.failures},
                      {"summary", rep.summary()},
                      {"pass", rep.pass()}}));
    } else {
        std::ostringstream os;
        os << "census N=" << n << " " << to_string(f) << ": characters (a, b) mean (w, z) = (zeta_" << n << "^a, zeta_" << n
           << "^b)\n";
        for (const auto& orb : rep.orbits) {
            os << "  {";
            for (std::size_t k = 0; k < orb.characters.size(); ++k)
                os << (k ? ", " : "") << "(" << orb.characters[k].first << "," << orb.characters[k].second << ")";
            os << "}  dims";
            for (int d : orb.dimensions) os << " " << d;
            os << "\n";
        }
        for (const auto& fail : rep.failures) os << "  failure: " << fail << "\n";
        os << rep.summary() << "\n";
        emit(o, os.str());
    }
    return rep.pass() ? 0 : 1;
}

// ---- classify-surface --------------------------------------------------------

DeckGroup custom_group(const std::vector<std::string>& gens, int bound)
{
    if (gens.empty()) throw PreconditionError("custom preset needs at least one --gen \"a,b,c,d:p/q,r/s\"");
    std::vector<TorusAutomorphism> autos;
    for (const auto& g : gens) {
        const auto colon = g.find(':');
        if (colon == std::string::npos) throw PreconditionError("generator '" + g + "' must look like a,b,c,d:p/q,r/s");
        autos.push_back(parse_automorphism(g.substr(0, colon), g.substr(colon + 1)));
    }
    return generate_group(autos, bound);
}

DeckGroup group_for(const std::string& preset, const std::vector<std::string>& gens, int bound)
{
    return preset == "custom" ? custom_group(gens, bound) : preset_group(parse_preset(preset));
}

int cmd_classify(const std::string& preset, const std::vector<std::string>& gens, int bound, const Output& o)
{
    const DeckGroup g = group_for(preset, gens, bound);
    const SurfaceReport r = classify(g);
    if (o.format == "json") {
        Json elements = Json::array();
        for (const auto& e : g.elements) elements.push_back(e.to_string());
        Json j{{"preset", preset},
               {"order", r.order},
               {"elements", elements},
               {"free", r.free},
               {"euler", r.euler ? Json(*r.euler) : Json(nullptr)},
               {"orientable", r.orientable},
               {"h1", r.h1 ? Json(r.h1->to_string()) : Json(nullptr)},
               {"classification", to_string(r.classification)},
               {"summary", r.summary()}};
        if (!r.free) j["fixed"] = {{"element", r.fixed_element->to_string()}, {"locus", r.fixed_locus.describe()}};
        emit(o, dump(j));
    } else {
        std::ostringstream os;
        os << "group of order " << g.order() << ":\n";
        for (const auto& e : g.elements) os << "  " << e.to_string() << "  (det " << e.det() << ")\n";
        if (!r.free) os << "fixed points of " << r.fixed_element->to_string() << ": " << r.fixed_locus.describe() << "\n";
        os << r.summary() << "\n";
        emit(o, os.str());
    }
    return 0;
}

// ---- module ------------------------------------------------------------------

int cmd_module(const std::string& ws, const std::string& zs, const std::string& flavor, bool show, const Output& o)
{
    const Flavor f = parse_flavor(flavor);
    const Cyclotomic w = nonzero_scalar("w", ws);
    const Cyclotomic z = nonzero_scalar("z", zs);
    const BCharacter partner = partner_character(f, {w, z});

    if (f == Flavor::untwisted && (z == Cyclotomic(1) || z == Cyclotomic(-1))) {
        // The orbit is a fixed point; the induced module splits.
        const int delta = z == Cyclotomic(1) ? 1 : -1;
        std::vector<Representation> parts{make_untwisted_character(w, delta, 1), make_untwisted_character(w, delta, -1)};
        const Representation induced = induce_from_character(f, {w, z});
        if (o.format == "json") {
            Json chars = Json::array();
            for (const auto& p : parts) chars.push_back(p.label());
            emit(o, dump({{"flavor", to_string(f)},
                          {"w", w.to_string()},
                          {"z", z.to_string()},
                          {"reducible", true},
                          {"characters", chars},
                          {"induced_commutant_dimension", commutant_dimension(induced)}}));
        } else {
            std::ostringstream os;
            os << "reducible: splits into characters ε = ±1\n";
            for (const auto& p : parts) os << "  " << p.label() << (relations_hold(p) ? "  relations hold" : "  RELATIONS FAIL") << "\n";
            os << "  commutant of the induced module: dimension " << commutant_dimension(induced) << "\n";
            emit(o, os.str());
        }
        return 0;
    }

    const Representation rep = f == Flavor::twisted ? make_twisted_simple(w, z) : make_untwisted_simple(w, z);
    const auto relations = check_relations(rep);
    const std::size_t commutant = commutant_dimension(rep);
    const Representation other =
        f == Flavor::twisted ? make_twisted_simple(partner.w, partner.z) : make_untwisted_simple(partner.w, partner.z);
    const auto t = find_intertwiner(rep, other);
    bool ok = commutant == 1 && t.has_value();
    for (const auto& r : relations) ok = ok && r.holds;

    if (o.format == "json") {
        Json rels = Json::array();
        for (const auto& r : relations) rels.push_back({{"name", r.name}, {"relation", r.relation}, {"holds", r.holds}});
        Json j{{"flavor", to_string(f)},
               {"module", rep.label()},
               {"relations", rels},
               {"commutant_dimension", commutant},
               {"partner", {partner.w.to_string(), partner.z.to_string()}},
               {"partner_intertwiner", t ? Json(t->to_string()) : Json(nullptr)}};
        if (show) j["matrices"] = {{"s", rep.s.to_string()}, {"X", rep.x.to_string()}, {"Y", rep.y.to_string()}};
        emit(o, dump(j));
    } else {
        std::ostringstream os;
        os << rep.label() << "\n";
        if (show) os << matrix_block("s", rep.s) << matrix_block("X", rep.x) << matrix_block("Y", rep.y);
        for (const auto& r : relations) os << "  " << (r.holds ? "ok   " : "FAIL ") << r.relation << "\n";
        os << "  commutant dimension " << commutant << "\n";
        os << "  orbit partner (" << partner.w.to_string() << ", " << partner.z.to_string() << ")";
        os << (t ? ", intertwiner " + t->to_string() : ", NO INTERTWINER") << "\n";
        emit(o, os.str());
    }
    return ok ? 0 : 1;
}

// ---- orbit -------------------------------------------------------------------

int cmd_orbit(const std::string& ws, const std::string& zs, const std::string& flavor, const Output& o)
{
    const Flavor f = parse_flavor(flavor);
    const BCharacter chi{nonzero_scalar("w", ws), nonzero_scalar("z", zs)};
    const BCharacter partner = partner_character(f, chi);
    const bool fixed = partner == chi;
    std::vector<BCharacter> orbit{chi};
    if (!fixed) orbit.push_back(partner);

    // (b, c) lifts of each point, when the square root exists in the field.
    Json lifts = Json::array();
    std::ostringstream lift_text;
    for (const auto& p : orbit) {
        try {
            // sqrt of a root of unity of order n lives at order 2n.
            const Cyclotomic wz = p.w * p.z;
            const BCPair bc = wz_to_bc({p.w, p.z}, 2 * std::lcm(wz.conductor(), 4));
            lifts.push_back({bc.b.to_string(), bc.c.to_string()});
            lift_text << "  (b, c) = " << bc.to_string() << " up to sign, for " << p.to_string() << "\n";
        } catch (const PreconditionError& e) {
            lifts.push_back(nullptr);
            lift_text << "  " << p.to_string() << ": " << e.what() << "\n";
        }
    }
    if (o.format == "json") {
        Json pts = Json::array();
        for (const auto& p : orbit) pts.push_back({p.w.to_string(), p.z.to_string()});
        emit(o, dump({{"flavor", to_string(f)}, {"orbit", pts}, {"size", orbit.size()}, {"fixed", fixed}, {"bc_lifts", lifts}}));
    } else {
        std::ostringstream os;
        os << "orbit of " << chi.to_string() << " under " << (f == Flavor::twisted ? "(w, z) -> (-w, 1/z)" : "(w, z) -> (w, 1/z)")
           << ": {";
        for (std::size_t k = 0; k < orbit.size(); ++k) os << (k ? ", " : "") << orbit[k].to_string();
        os << "}, size " << orbit.size() << (fixed ? " (fixed point)" : "") << "\n" << lift_text.str();
        emit(o, os.str());
    }
    return 0;
}

// ---- localfield ----------------------------------------------------------------

int cmd_localfield(long long q, int bound, const Output& o)
{
    if (bound < 0 || bound > 4) throw PreconditionError("valuation bound must lie in [0, 4]");
    RunConfig cfg;
    cfg.q_list = {q};
    cfg.valuation_bound = bound;
    cfg.format = parse_format(o.format);
    const ResidueData k(q);
    RunReport r;
    r.config = cfg;
    r.suites.push_back(localfield_suite(cfg));
    const auto m0 = enumerate_m0(k, bound);
    if (o.format == "json") {
        Json j = r.to_json();
        j["field"] = {{"q", q},
                      {"m0_size", m0.size()},
                      {"norm_e2_uniformizer", norm(k, kE2, {1, 0}).to_string()},
                      {"norm_e4_uniformizer", norm(k, kE4, {1, 0}).to_string()}};
        emit(o, dump(j));
    } else {
        std::ostringstream os;
        os << "q = " << q << ", |M0| = " << m0.size() << " for |v| <= " << bound << ", N(pi_E2) = " << norm(k, kE2, {1, 0}).to_string()
           << ", N(pi_E4) = " << norm(k, kE4, {1, 0}).to_string() << " (zeta^t pi_F^v)\n"
           << r.to_text();
        emit(o, os.str());
    }
    return r.pass() ? 0 : 1;
}

// ---- mesh ----------------------------------------------------------------------

int cmd_mesh(const std::string& preset, const std::vector<std::string>& gens, int bound, int resolution, const std::string& path,
             bool immersion)
{
    if (resolution < 1) throw PreconditionError("resolution must be a positive integer");
    const DeckGroup g = group_for(preset, gens, bound);
    if (!classify(g).free) throw PreconditionError("not a free action: " + classify(g).fixed_locus.describe());
    const MeshFiles files = export_mesh(g, resolution, path, immersion);
    std::cout << "wrote " << files.geometry << " and " << files.gluing << " (" << 2 * resolution * resolution << " triangles)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for a twisted group algebra, its simple modules and the Klein bottle of their parameters"};
    app.require_subcommand(1);

    RunConfig cfg;
    Output out;
    std::uint64_t seed = cfg.seed;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run every check suite");
    verify->add_option("--window", cfg.window, "cocycle sweep window |m|, |n| <= window");
    verify->add_option("--q", cfg.q_list, "residue field sizes (4 | q-1)")->delimiter(',');
    verify->add_option("--n", cfg.census_n, "census moduli (even, <= 12)")->delimiter(',');
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_flag("--timings", timings, "report elapsed times");
    add_output(verify, out);

    int census_n = 4;
    std::string flavor = "twisted";
    auto* census = app.add_subcommand("census", "list the simple modules of a finite quotient");
    census->add_option("--n", census_n, "modulus N (even, <= 12)")->required();
    census->add_option("--flavor", flavor, "twisted or untwisted");
    add_output(census, out);

    std::string preset;
    std::vector<std::string> gens;
    int bound = 8;
    auto* surface = app.add_subcommand("classify-surface", "classify a torus quotient");
    surface->add_option("preset", preset, "bc, wz, untwisted, j-only or custom")->required();
    surface->add_option("--gen", gens, "custom generator a,b,c,d:p/q,r/s (matrix row-major : translation)");
    surface->add_option("--bound", bound, "largest translation denominator for custom groups");
    add_output(surface, out);

    std::string ws, zs;
    bool show = false;
    auto* module = app.add_subcommand("module", "build and check one module M(w, z)");
    module->add_option("--w", ws, "Y-eigenvalue, e.g. 2, 1/3+i, zeta(8,1)")->required();
    module->add_option("--z", zs, "X-eigenvalue")->required();
    module->add_option("--flavor", flavor, "twisted or untwisted");
    module->add_flag("--show-matrices", show, "print the generator matrices");
    add_output(module, out);

    auto* orbit = app.add_subcommand("orbit", "orbit of a character (w, z) under the involution");
    orbit->add_option("--w", ws, "w")->required();
    orbit->add_option("--z", zs, "z")->required();
    orbit->add_option("--flavor", flavor, "twisted or untwisted");
    add_output(orbit, out);

    long long q = 5;
    int valuation_bound = 2;
    auto* local = app.add_subcommand("localfield", "check the depth-zero character identities for one q");
    local->add_option("--q", q, "residue field size (4 | q-1)");
    local->add_option("--bound", valuation_bound, "valuation bound |v| <= bound");
    add_output(local, out);

    int resolution = 32;
    std::string mesh_path = "klein.obj";
    bool immersion = false;
    auto* mesh = app.add_subcommand("mesh", "export a triangulated fundamental domain");
    mesh->add_option("preset", preset, "bc, wz, j-only or custom")->required();
    mesh->add_option("--gen", gens, "custom generator a,b,c,d:p/q,r/s");
    mesh->add_option("--bound", bound, "largest translation denominator for custom groups");
    mesh->add_option("--resolution", resolution, "grid cells per side");
    mesh->add_option("--out", mesh_path, "OBJ path; the gluing sidecar gets the extension .gluing.json");
    mesh->add_flag("--immersion", immersion, "place vertices on a Klein bottle (or torus) in 3-space");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            cfg.seed = seed;
            cfg.timings = timings;
            cfg.format = parse_format(out.format);
            const RunReport r = run_verify(cfg);
            emit(out, render(r));
            return r.pass() ? 0 : 1;
        }
        if (*census) return cmd_census(census_n, flavor, out);
        if (*surface) return cmd_classify(preset, gens, bound, out);
        if (*module) return cmd_module(ws, zs, flavor, show, out);
        if (*orbit) return cmd_orbit(ws, zs, flavor, out);
        if (*local) return cmd_localfield(q, valuation_bound, out);
        if (*mesh) return cmd_mesh(preset, gens, bound, resolution, mesh_path, immersion);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
