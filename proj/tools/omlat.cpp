/**
 * omlat: exact checks for orthomodular subspace lattices, finite quantum
 * logics, their state spaces, effects, filters, and symmetries.
 *
 * Every verb prints a list of check reports (text or machine form) and
 * exits 0 when all checks pass, 1 when any check reports a failure or
 * truncation, and 2 on bad input (unreadable or malformed files, vectors
 * outside the space, unknown suite names, bad flags).
 */

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "oml/checks.hpp"
#include "oml/filter.hpp"
#include "oml/parse.hpp"
#include "oml/polytope.hpp"
#include "oml/rng.hpp"
#include "oml/suite.hpp"
#include "oml/symmetry.hpp"

namespace {

using namespace oml;

struct Options {
    std::string format = "text";
    std::uint64_t seed = 2024;
    std::size_t cap_elements = 512;
    std::size_t cap_vertices = 10000;
    int max_seq_len = 4;
};

SpacePtr load_space(const std::string& path) { return parse_space(read_text_file(path)); }

/// Space from --space, or identity-form Q^dim when the flag is absent.
SpacePtr space_or_default(const std::string& path, int dim) {
    if (!path.empty()) return load_space(path);
    return HermitianSpace::make(Field::rationals(), dim);
}

/// Atom lines from --atoms, or the coordinate lines when the flag is absent.
std::vector<Subspace> atom_lines(const SpacePtr& sp, const std::string& atoms_path) {
    std::vector<Subspace> out;
    if (!atoms_path.empty()) {
        for (const auto& v : parse_atom_vectors(read_text_file(atoms_path), sp))
            out.push_back(Subspace::line(sp, v));
        if (out.empty()) fail(ErrorKind::bad_argument, atoms_path + ": no atoms listed");
    } else {
        for (int i = 0; i < sp->dim(); ++i)
            out.push_back(Subspace::line(sp, sp->basis_vector(i)));
    }
    return out;
}

/// Comma-separated decimal coordinates, with or without surrounding
/// parentheses or brackets.
std::vector<double> parse_double_vector(const std::string& text) {
    std::string body = text;
    for (char& ch : body)
        if (ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
    std::vector<double> out;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(tok, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::parse_error, "not a decimal coordinate: '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size())
            fail(ErrorKind::parse_error, "not a decimal coordinate: '" + tok + "'");
        out.push_back(x);
    }
    if (out.empty()) fail(ErrorKind::parse_error, "empty vector");
    return out;
}

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

CheckReport fragment_report(const Fragment& f) {
    CheckReport r;
    r.check = "fragment-build";
    r.target = f.name();
    r.stat("elements", static_cast<long long>(f.size()));
    r.stat("atoms", static_cast<long long>(f.atom_indices().size()));
    r.stat("cap", static_cast<long long>(f.cap()));
    r.stat("truncated", f.truncated() ? "true" : "false");
    if (f.truncated())
        r.note("closure capped; raise --cap-elements to extend the scan");
    return r.finish();
}

std::vector<CheckReport> logic_battery(const FiniteLogic& lg, bool all_laws) {
    CheckReport build;
    build.check = "logic-build";
    build.target = lg.name();
    build.stat("elements", static_cast<long long>(lg.size()));
    build.stat("atoms", static_cast<long long>(atoms_of(lg).size()));

    std::vector<CheckReport> rs;
    rs.push_back(build.finish());
    rs.push_back(check_ortholattice(lg));
    rs.push_back(check_orthomodular(lg));
    rs.push_back(check_atomicity(lg));
    rs.push_back(check_covering_law(lg));
    if (all_laws) {
        rs.push_back(check_irreducible(lg));
        rs.push_back(check_superpositions_exist(lg));
    }
    return rs;
}

std::vector<CheckReport> run_check_logic(const std::string& file, bool all_laws) {
    return logic_battery(parse_logic(read_text_file(file)), all_laws);
}

std::vector<CheckReport> run_check_space(const std::string& file, const Options& opt) {
    const auto sp = load_space(file);

    CheckReport build;
    build.check = "space-build";
    build.target = sp->name();
    build.stat("dim", static_cast<long long>(sp->dim()));

    std::vector<CheckReport> rs;
    rs.push_back(build.finish());
    rs.push_back(check_orthomodular_space(sp, 100, opt.seed));

    Rng rng(opt.seed);
    std::vector<Vec> samples;
    for (int t = 0; t < 10; ++t) samples.push_back(random_vector(sp, rng, 9));
    rs.push_back(check_regularity(sp, samples));
    return rs;
}

std::vector<CheckReport> run_sublattice(const std::string& atoms_path,
                                        const std::string& space_path, bool all_laws,
                                        const Options& opt) {
    const auto sp = space_or_default(space_path, 3);
    const auto gens = atom_lines(sp, atoms_path);
    Fragment frag = Fragment::generate(sp, gens, opt.cap_elements);
    FragmentLogic view(frag);

    std::vector<CheckReport> rs;
    rs.push_back(fragment_report(frag));
    rs.push_back(check_ortholattice(view));
    rs.push_back(check_orthomodular(view));
    rs.push_back(check_atomicity(view));
    rs.push_back(check_covering_law(view));
    if (all_laws) {
        rs.push_back(check_irreducible(view));
        rs.push_back(check_superpositions_exist(view));
    }
    return rs;
}

std::vector<CheckReport> run_states(const std::string& file, bool vertices,
                                    const Options& opt) {
    const FiniteLogic lg = parse_logic(read_text_file(file));
    const LogicPtr logic = compile(lg);
    const StatePolytope poly = build_polytope(logic, opt.cap_elements);

    CheckReport build;
    build.check = "polytope-build";
    build.target = lg.name();
    build.stat("elements", static_cast<long long>(logic->size()));
    build.stat("dimension", static_cast<long long>(poly.dimension));
    build.stat("equalities", static_cast<long long>(poly.equality_count));
    build.stat("empty", poly.empty ? "true" : "false");

    std::vector<CheckReport> rs;
    rs.push_back(build.finish());
    if (!vertices) return rs;

    const auto pure = enumerate_pure_states(poly, opt.cap_vertices);
    CheckReport vr;
    vr.check = "pure-states";
    vr.target = lg.name();
    vr.stat("vertices", static_cast<long long>(pure.size()));
    for (const auto& m : pure) {
        if (!validate_state(m).ok()) vr.witness(m.name() + " fails measure validation");
        std::string row = "(";
        for (int i = 0; i < logic->size(); ++i) {
            if (i) row += ", ";
            row += to_string(m.value(i));
        }
        vr.stat(m.name(), row + ")");
    }
    rs.push_back(vr.finish());
    rs.push_back(check_jauch_piron(pure));
    return rs;
}

std::vector<CheckReport> run_atom_state(const std::string& vector_text,
                                        const std::string& space_path,
                                        const std::string& atoms_path, const Options& opt) {
    SpacePtr sp;
    Vec v;
    if (!space_path.empty()) {
        sp = load_space(space_path);
        v = parse_vector(vector_text, sp->field());
    } else {
        v = parse_vector(vector_text, Field::rationals());
        sp = HermitianSpace::make(Field::rationals(), static_cast<int>(v.size()));
    }

    auto gens = atom_lines(sp, atoms_path);
    gens.push_back(Subspace::line(sp, v));
    Fragment frag = Fragment::generate(sp, gens, opt.cap_elements);
    const LogicPtr logic = compile(frag);
    const StateMeasure m = atom_induced_state(frag, logic, v);

    std::vector<CheckReport> rs;
    rs.push_back(fragment_report(frag));
    rs.push_back(validate_state(m));

    CheckReport vals;
    vals.check = "atom-state";
    vals.target = m.name();
    const auto s = support(m);
    vals.stat("support", s ? frag.label(*s) : std::string("none"));
    for (int a : frag.atom_indices())
        vals.stat("m(" + frag.label(a) + ")", to_string(m.value(a)));
    rs.push_back(vals.finish());
    return rs;
}

std::vector<CheckReport> run_extension_state(const std::string& vector_text,
                                             const std::string& space_path,
                                             const std::string& atoms_path, double tolerance,
                                             const Options& opt) {
    const auto coords = parse_double_vector(vector_text);
    const auto sp = space_or_default(space_path, static_cast<int>(coords.size()));
    if (static_cast<int>(coords.size()) != sp->dim())
        fail(ErrorKind::dimension_mismatch,
             "vector has " + std::to_string(coords.size()) + " coordinates in " + sp->name());

    Fragment frag = Fragment::generate(sp, atom_lines(sp, atoms_path), opt.cap_elements);
    const LogicPtr logic = compile(frag);
    const StateMeasure m = extension_state(frag, logic, coords, tolerance);

    std::vector<CheckReport> rs;
    rs.push_back(fragment_report(frag));
    rs.push_back(validate_state(m));

    CheckReport vals;
    vals.check = "extension-state";
    vals.target = m.name();
    vals.stat("tolerance", format_double(tolerance));
    const auto s = support(m);
    vals.stat("support", s ? frag.label(*s) : std::string("none"));
    for (int a : frag.atom_indices())
        vals.stat("m(" + frag.label(a) + ")", format_double(m.value_d(a)));
    rs.push_back(vals.finish());
    return rs;
}

std::vector<CheckReport> run_filters(const std::string& space_path,
                                     const std::string& atoms_path, const Options& opt) {
    const auto sp = space_or_default(space_path, 3);
    std::vector<Subspace> gens;
    if (!atoms_path.empty()) {
        gens = atom_lines(sp, atoms_path);
    } else {
        // two skew lines whose closure is complete at twelve members
        const Field& f = sp->field();
        if (sp->dim() != 3)
            fail(ErrorKind::bad_argument, "no default filter atoms in dimension " +
                                              std::to_string(sp->dim()) + "; pass --atoms");
        gens = {Subspace::line(sp, {f.one(), f.one(), f.zero()}),
                Subspace::line(sp, {f.one(), f.one(), f.one()})};
    }
    Fragment frag = Fragment::generate(sp, gens, opt.cap_elements);
    const LogicPtr logic = compile(frag);
    const PureFamily fam = atom_state_family(frag, logic);

    std::vector<CheckReport> rs;
    rs.push_back(fragment_report(frag));

    CheckReport laws;
    laws.check = "filter-laws";
    laws.target = frag.name();
    laws.stat("filters", static_cast<long long>(frag.size()));
    long long checks = 0;
    for (int a = 0; a < frag.size(); ++a)
        for (const auto& r : check_filter_axioms(fam, a)) {
            ++checks;
            if (!r.ok())
                for (const auto& w : r.witnesses)
                    laws.witness(r.target + " " + r.check + ": " + w);
        }
    laws.stat("law-checks", checks);
    rs.push_back(laws.finish());

    rs.push_back(check_projection_postulate(fam));
    rs.push_back(check_eigenstate_ideality(fam));
    return rs;
}

std::vector<CheckReport> run_symmetry_swap(const std::string& space_path,
                                           const std::string& x_text, const std::string& y_text,
                                           const std::string& scale_text) {
    const auto sp = space_or_default(space_path, 3);
    const Field& f = sp->field();
    const Vec x = parse_vector(x_text, f);
    const Vec y = parse_vector(y_text, f);
    std::optional<Scalar> scale;
    if (!scale_text.empty()) scale = parse_scalar(scale_text, f);

    const LinearSymmetry u = swap_symmetry(sp, x, y, scale);

    std::vector<CheckReport> rs;
    rs.push_back(check_swap_consistency(u, Subspace::line(sp, x), Subspace::line(sp, y)));

    std::vector<std::pair<Vec, Vec>> pairs;
    for (int i = 0; i < sp->dim(); ++i)
        for (int j = 0; j < sp->dim(); ++j)
            pairs.emplace_back(sp->basis_vector(i), sp->basis_vector(j));
    rs.push_back(verify_form_identity(u, pairs).report);
    return rs;
}

std::vector<CheckReport> run_symmetry_abundance(const std::string& space_path,
                                                const std::string& atoms_path) {
    const auto sp = space_or_default(space_path, 3);
    return {check_abundance(atom_lines(sp, atoms_path))};
}

std::vector<CheckReport> run_symmetry_regularity(const std::string& space_path,
                                                 const Options& opt) {
    const auto sp = space_or_default(space_path, 3);
    Rng rng(opt.seed);
    std::vector<Vec> samples;
    for (int t = 0; t < 10; ++t) samples.push_back(random_vector(sp, rng, 9));
    return {check_regularity(sp, samples)};
}

std::vector<CheckReport> run_suite_verb(const std::string& name,
                                        const std::string& effects_path, const Options& opt) {
    SuiteConfig cfg;
    cfg.seed = opt.seed;
    cfg.max_seq_len = opt.max_seq_len;
    if (!effects_path.empty()) cfg.effects = parse_effects(read_text_file(effects_path));
    return run_suite(name, cfg);
}

int emit(const std::vector<CheckReport>& rs, const Options& opt) {
    if (opt.format == "machine") {
        std::cout << render_machine(rs) << "\n";
    } else {
        std::cout << render_text(rs);
    }
    return all_ok(rs) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for orthomodular subspace lattices and finite quantum logics"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "report rendering: text or machine")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for every sampled check")->capture_default_str();
    app.add_option("--cap-elements", opt.cap_elements,
                   "cap on generated lattice closures")
        ->capture_default_str();
    app.add_option("--cap-vertices", opt.cap_vertices, "cap on enumerated polytope vertices")
        ->capture_default_str();
    app.add_option("--max-seq-len", opt.max_seq_len,
                   "longest orthogonal effect sequence to scan")
        ->capture_default_str();

    std::string logic_file, space_file, atoms_file, vector_text, scale_text, effects_file;
    std::string x_text = "(1, 1, 0)", y_text = "(1, -1, 0)", suite_name;
    double tolerance = 1e-9;
    bool all_laws = false, vertices = false;

    auto* c_logic = app.add_subcommand("check-logic", "law battery for a finite logic file");
    c_logic->fallthrough();
    c_logic->add_option("file", logic_file, "logic table file")->required();
    c_logic->add_flag("--all-laws", all_laws, "also check irreducibility and superpositions");

    auto* c_space = app.add_subcommand("check-space",
                                       "orthomodularity and regularity of a form space");
    c_space->fallthrough();
    c_space->add_option("file", space_file, "space file")->required();

    auto* c_sub = app.add_subcommand("sublattice", "closure of atom lines under meet, join, "
                                                   "and orthocomplement, with the law battery");
    c_sub->fallthrough();
    c_sub->add_option("--atoms", atoms_file, "atom vectors file")->required();
    c_sub->add_option("--space", space_file, "space file (default: identity form Q^3)");
    c_sub->add_flag("--all-laws", all_laws, "also check irreducibility and superpositions");

    auto* c_states = app.add_subcommand("states", "state polytope of a finite logic");
    c_states->fallthrough();
    c_states->add_option("file", logic_file, "logic table file")->required();
    c_states->add_flag("--vertices", vertices, "enumerate and revalidate the pure states");

    auto* c_atom = app.add_subcommand("atom-state",
                                      "probability measure induced by a vector on the "
                                      "closure of the coordinate lines and that vector");
    c_atom->fallthrough();
    c_atom->add_option("--vector", vector_text, "exact coordinates, e.g. \"(1, 1/2, 0)\"")
        ->required();
    c_atom->add_option("--space", space_file, "space file (default: identity form Q^n)");
    c_atom->add_option("--atoms", atoms_file, "atom vectors file (default: coordinate lines)");

    auto* c_ext = app.add_subcommand("extension-state",
                                     "approximate measure induced by a real vector on a "
                                     "rational fragment");
    c_ext->fallthrough();
    c_ext->add_option("--vector", vector_text, "decimal coordinates, e.g. \"(1, 1.41421)\"")
        ->required();
    c_ext->add_option("--space", space_file, "space file (default: identity form Q^n)");
    c_ext->add_option("--atoms", atoms_file, "atom vectors file (default: coordinate lines)");
    c_ext->add_option("--tolerance", tolerance, "additivity tolerance")->capture_default_str();

    auto* c_filters = app.add_subcommand("filters",
                                         "projection filter laws on a closed fragment");
    c_filters->fallthrough();
    c_filters->add_option("--space", space_file, "space file (default: identity form Q^3)");
    c_filters->add_option("--atoms", atoms_file,
                          "atom vectors file (default: two skew lines in Q^3)");

    auto* c_sym = app.add_subcommand("symmetry", "semilinear symmetry checks");
    c_sym->require_subcommand(1);
    auto* c_swap = c_sym->add_subcommand("swap", "construct and audit an atom swap");
    c_swap->fallthrough();
    c_swap->add_option("--x", x_text, "first vector")->capture_default_str();
    c_swap->add_option("--y", y_text, "second vector")->capture_default_str();
    c_swap->add_option("--scale", scale_text, "optional scale applied to the swap");
    c_swap->add_option("--space", space_file, "space file (default: identity form Q^3)");
    auto* c_abund = c_sym->add_subcommand("abundance",
                                          "swap availability for every orthogonal atom pair");
    c_abund->fallthrough();
    c_abund->add_option("--atoms", atoms_file, "atom vectors file (default: coordinate lines)");
    c_abund->add_option("--space", space_file, "space file (default: identity form Q^3)");
    auto* c_reg = c_sym->add_subcommand("regularity",
                                        "field automorphisms fixing every form norm");
    c_reg->fallthrough();
    c_reg->add_option("--space", space_file, "space file (default: identity form Q^3)");

    auto* c_suite = app.add_subcommand("suite", "named bundle of checks");
    c_suite->fallthrough();
    c_suite->add_option("name", suite_name, "one of: section5.4, theorem2, corollary1, lemma-swap")
        ->required();
    c_suite->add_option("--effects", effects_file, "effect table file overriding the default "
                                                   "family (suite theorem2)");

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
        std::vector<CheckReport> rs;
        if (c_logic->parsed()) rs = run_check_logic(logic_file, all_laws);
        else if (c_space->parsed()) rs = run_check_space(space_file, opt);
        else if (c_sub->parsed()) rs = run_sublattice(atoms_file, space_file, all_laws, opt);
        else if (c_states->parsed()) rs = run_states(logic_file, vertices, opt);
        else if (c_atom->parsed()) rs = run_atom_state(vector_text, space_file, atoms_file, opt);
        else if (c_ext->parsed())
            rs = run_extension_state(vector_text, space_file, atoms_file, tolerance, opt);
        else if (c_filters->parsed()) rs = run_filters(space_file, atoms_file, opt);
        else if (c_sym->parsed()) {
            if (c_swap->parsed()) rs = run_symmetry_swap(space_file, x_text, y_text, scale_text);
            else if (c_abund->parsed()) rs = run_symmetry_abundance(space_file, atoms_file);
            else rs = run_symmetry_regularity(space_file, opt);
        } else if (c_suite->parsed()) {
            rs = run_suite_verb(suite_name, effects_file, opt);
        }
        return emit(rs, opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
