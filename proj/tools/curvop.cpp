#include "curvop/algebra.hpp"
#include "curvop/algebra_io.hpp"
#include "curvop/checks.hpp"
#include "curvop/curv.hpp"
#include "curvop/errors.hpp"
#include "curvop/manifest.hpp"
#include "curvop/parse.hpp"
#include "curvop/slices.hpp"
#include "curvop/twisting.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace curvop;

namespace {

constexpr double kSizeLimit = 1e7;

// Thrown for bad invocations; mapped to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_size(double estimate, bool force) {
    std::cout << "estimated terms: " << static_cast<long long>(estimate) << '\n';
    if (estimate > kSizeLimit && !force)
        throw UsageError("estimated size exceeds 10^7 terms; rerun with --force to proceed");
}

int report_status(bool ok) {
    std::cout << (ok ? "RESULT PASS" : "RESULT FAIL") << '\n';
    return ok ? 0 : 1;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::string rename_unique(const std::vector<Generator>& gens, const std::string& base) {
    std::string name = base + "_Q";
    while (find_generator(gens, name)) name += "_";
    return name;
}

// A Curv object whose generators avoid the names introduced by the coproduct with T.
CurvObject avoid_collisions(CurvObject q) {
    for (std::string_view clash : {kAlpha, kKappaT}) {
        const Generator* g = find_generator(q.generators, clash);
        if (!g) continue;
        const Generator renamed{rename_unique(q.generators, std::string(clash)), g->arity, g->degree, g->symmetry};
        std::cerr << "note: renaming generator " << clash << " to " << renamed.name << '\n';
        auto rename_in = [&](const Element& x) {
            Element r(x.mode(), x.arity());
            for (const auto& [t, c] : x.terms()) r.add_tree(rename_vertices(t, clash, renamed), c);
            return r;
        };
        auto rename_d = [&](const Derivation& d) {
            std::vector<Generator> gens;
            for (const Generator& h : d.generators()) gens.push_back(h.name == clash ? renamed : h);
            Derivation out(d.mode(), gens);
            for (const auto& [name, v] : d.values()) out.set_value(name == clash ? renamed.name : name, rename_in(v));
            return out;
        };
        for (Generator& h : q.generators)
            if (h.name == clash) h = renamed;
        if (q.kappa == clash) q.kappa = renamed.name;
        q.d0 = rename_d(q.d0);
        q.d1 = rename_d(q.d1);
    }
    return q;
}

// Truncated manifests must contain every generator the construction differentiates.
void require_bound(const CurvObject& q, int needed) {
    if (q.arity_bound >= 0 && q.arity_bound < needed)
        throw UsageError("manifest arity bound " + std::to_string(q.arity_bound) + " is below the required " +
                         std::to_string(needed));
}

int max_generator_arity(const CurvObject& q) {
    int m = 0;
    for (const Generator& g : q.generators) m = std::max(m, g.arity);
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curved operads, twisting and exact verification"};
    app.require_subcommand(1);

    std::string preset, mode_name = "ns", manifest, output, element_name, family, target = "unit", expr;
    int arity = 4, alpha = 3, weight = 2, check_arity = 4;
    bool force = false;

    auto* presets = app.add_subcommand("verify-presets", "Check d^2 = 0 on the generators of a preset");
    presets->add_option("--preset", preset, "Ainf, AinfPlus, cAinf, Linf, LinfPlus, cLinf or T")->required();
    presets->add_option("--arity", arity, "Largest generator arity checked")->capture_default_str();
    presets->add_option("--mode", mode_name, "Mode of T (ns or sym)")->capture_default_str();
    presets->add_flag("--force", force, "Run even when the size estimate is large");

    auto* veta = app.add_subcommand("verify-eta", "Check that the twisting morphism is a chain map");
    veta->add_option("--mode", mode_name, "ns or sym")->capture_default_str();
    veta->add_option("--arity", arity, "Largest generator arity checked")->capture_default_str();
    veta->add_option("--alpha", alpha, "Alpha precision of the comparison")->capture_default_str();
    veta->add_flag("--force", force, "Run even when the size estimate is large");

    auto* unit = app.add_subcommand("construct-unit", "Build a morphism out of a Curv object manifest");
    unit->add_option("--manifest", manifest, "Curv object manifest")->required();
    unit->add_option("--alpha", alpha, "Alpha precision")->capture_default_str();
    unit->add_option("--arity", arity, "Largest source arity assigned")->capture_default_str();
    unit->add_option("--target", target, "unit, initial or terminal")
        ->check(CLI::IsMember({"unit", "initial", "terminal"}))
        ->capture_default_str();
    unit->add_option("--output", output, "Write the morphism manifest here instead of stdout");

    auto* twist = app.add_subcommand("twist", "Twist an algebra by one of its named elements");
    twist->add_option("--manifest", manifest, "Algebra manifest (JSON)")->required();
    twist->add_option("--element", element_name, "Name of a degree-0 element of the manifest")->required();
    twist->add_option("--check-arity", check_arity, "Arity bound of the structure check")->capture_default_str();
    twist->add_option("--output", output, "Write the twisted manifest here instead of stdout");

    auto* homology = app.add_subcommand("homology", "Exact homology of the contractibility slices");
    homology->add_option("--slices,--lemma", family, "bracket-kappa or dT")
        ->required()
        ->check(CLI::IsMember({"2.6", "bracket-kappa", "4.2", "5.2", "dT"}));
    homology->add_option("--mode", mode_name, "ns or sym (dT slices)")->capture_default_str();
    homology->add_option("--arity", arity, "Largest arity")->capture_default_str();
    homology->add_option("--alpha", alpha, "Largest alpha count (dT slices)")->capture_default_str();
    homology->add_option("--weight", weight, "Largest kappa weight (bracket slices)")->capture_default_str();
    homology->add_flag("--force", force, "Run even when the size estimate is large");

    auto* parse = app.add_subcommand("parse", "Print the canonical form of an expression");
    parse->add_option("expression", expr, "Expression over the structure generators, alpha and kappa_T")->required();
    parse->add_option("--mode", mode_name, "ns or sym")->capture_default_str();

    auto* exportc = app.add_subcommand("export-curv", "Write the Curv manifest of a preset");
    exportc->add_option("--preset", preset, "cAinf, cLinf or T")->required();
    exportc->add_option("--arity", arity, "Arity bound")->capture_default_str();
    exportc->add_option("--mode", mode_name, "Mode of T (ns or sym)")->capture_default_str();
    exportc->add_option("--output", output, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Mode mode = parse_mode(mode_name);

        if (presets->parsed()) {
            const PresetKind kind = parse_preset_kind(preset);
            check_size(estimate_preset_size(kind, arity), force);
            const Report r = verify_preset(kind, arity, mode);
            std::cout << r.to_string();
            return report_status(r.ok());
        }

        if (veta->parsed()) {
            check_size(estimate_eta_size(mode, arity, alpha), force);
            const Report r = verify_eta(mode, arity, alpha);
            std::cout << r.to_string();
            return report_status(r.ok());
        }

        if (unit->parsed()) {
            CurvObject q = parse_curv(read_text_file(manifest));
            if (target == "unit") q = avoid_collisions(std::move(q));
            const int bound = max_generator_arity(q);
            const Report valid = validate_curv(q, std::max(0, bound - 2));
            if (!valid.ok()) {
                std::cerr << "invalid Curv object:\n";
                for (const ReportLine& l : valid.lines)
                    if (!l.pass) std::cerr << "  " << l.name << ": " << (l.note.empty() ? "nonzero" : l.note) << '\n';
                return 1;
            }
            if (target == "terminal") {
                emit(write_morphism(terminal_morphism(q)), output);
                return 0;
            }
            if (target == "initial") {
                require_bound(q, arity + 2);
                emit(write_morphism(construct_initial_morphism(q, arity).morphism), output);
                return 0;
            }
            require_bound(q, arity + alpha + 2);
            const Presentation p = underlying_presentation(q);
            const UnitMorphism u = construct_unit(q, p, identity_morphism(p), alpha, arity);
            emit(write_morphism(u.phi), output);
            return 0;
        }

        if (twist->parsed()) {
            const AlgebraStructure s = load_algebra_manifest(manifest);
            auto it = s.elements.find(element_name);
            if (it == s.elements.end()) throw UsageError("no element named '" + element_name + "'");
            if (!it->second.is_zero() && it->second.degree != 0)
                throw UsageError("element '" + element_name + "' does not have degree 0");
            const AlgElement curvature = curvature_of(s, it->second);
            std::cerr << "curvature: " << to_string(*s.space, curvature) << '\n';
            std::cerr << "maurer-cartan: " << (curvature.is_zero() ? "yes" : "no") << '\n';
            const AlgebraStructure tw = twist_algebra(s, it->second);
            const Report r = check_structure(tw, check_arity);
            if (!r.ok()) {
                std::cerr << r.to_string();
                return 1;
            }
            emit(write_algebra_manifest(tw), output);
            return 0;
        }

        if (homology->parsed()) {
            const bool bracket = family == "2.6" || family == "bracket-kappa";
            if (bracket && mode == Mode::symmetric)
                throw UsageError("bracket-kappa slices are computed in the nonsymmetric operad only");
            check_size(bracket ? estimate_bracket_kappa_size(arity, weight) : estimate_dT_size(mode, arity, alpha),
                       force);
            const HomologyReport r = bracket ? bracket_kappa_homology(arity, weight) : dT_homology(mode, arity, alpha);
            std::cout << r.to_string();
            return report_status(r.ok());
        }

        if (parse->parsed()) {
            const PresetKind kind = mode == Mode::symmetric ? PresetKind::cLinf : PresetKind::cAinf;
            const Presentation p = coproduct_with_T(build_preset(kind, 12), 12);
            try {
                std::cout << parse_element(expr, mode, p.generators()) << '\n';
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
            return 0;
        }

        if (exportc->parsed()) {
            emit(write_curv(curv_preset(parse_preset_kind(preset), arity, mode)), output);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownGenerator& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
