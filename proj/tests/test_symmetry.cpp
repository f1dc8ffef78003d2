#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "oml/fragment.hpp"
#include "oml/logic.hpp"
#include "oml/rng.hpp"
#include "oml/symmetry.hpp"

using namespace oml;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::bad_argument;
}

SpacePtr q3() { return HermitianSpace::make(Field::rationals(), 3); }
SpacePtr q2() { return HermitianSpace::make(Field::rationals(), 2); }

Vec rational_vec(const SpacePtr& sp, std::vector<Rational> cs) {
    Vec v;
    for (auto& c : cs) v.push_back(sp->field().from_rational(c));
    return v;
}

Subspace atom(const SpacePtr& sp, std::vector<Rational> cs) {
    return Subspace::line(sp, rational_vec(sp, std::move(cs)));
}

std::string stat_of(const CheckReport& r, const std::string& key) {
    for (const auto& [k, v] : r.stats)
        if (k == key) return v;
    FAIL("missing stat ", key);
    return "";
}

bool has_witness(const CheckReport& r, const std::string& w) {
    for (const auto& x : r.witnesses)
        if (x == w) return true;
    return false;
}

Mat rational_mat(const SpacePtr& sp, std::vector<std::vector<Rational>> rows) {
    Mat m;
    for (auto& row : rows) m.push_back(rational_vec(sp, std::move(row)));
    return m;
}

std::vector<std::pair<Vec, Vec>> basis_pairs(const SpacePtr& sp) {
    std::vector<std::pair<Vec, Vec>> out;
    for (int i = 0; i < sp->dim(); ++i)
        for (int j = 0; j < sp->dim(); ++j)
            out.emplace_back(sp->basis_vector(i), sp->basis_vector(j));
    return out;
}

} // namespace

TEST_CASE("semilinear maps apply coordinatewise after the field automorphism") {
    auto sp = q3();
    const Field& f = sp->field();

    auto id = identity_symmetry(sp);
    CHECK(id.name() == "symmetry(3x3, id)");
    CHECK(id.apply(rational_vec(sp, {1, 2, 3})) == rational_vec(sp, {1, 2, 3}));
    CHECK(id.apply(atom(sp, {1, 2, 3})) == atom(sp, {1, 2, 3}));
    CHECK(id.apply(Subspace::zero(sp)).is_zero());
    CHECK(id.apply(Subspace::full(sp)).is_full());

    auto s5 = scalar_symmetry(sp, f.from_rational(Rational(5)));
    CHECK(s5.apply(rational_vec(sp, {1, 0, 2})) == rational_vec(sp, {5, 0, 10}));
    // scaling never moves a line
    CHECK(s5.apply(atom(sp, {1, 0, 2})) == atom(sp, {1, 0, 2}));

    // conjugation-semilinear identity over Q(i): [(1, -i)] goes to [(1, i)]
    const Field fi = Field::quadratic(-1);
    auto qi = HermitianSpace::make(fi, 2);
    auto cj = make_symmetry(qi, la::identity(2, fi), FieldAutomorphism{fi, true});
    CHECK(cj.name() == "symmetry(2x2, rt->-rt)");
    const Vec v = {fi.make(Rational(0), Rational(1)), fi.one()};
    CHECK(Subspace::line(qi, v).label() == "span{(1, -rt)}");
    CHECK(cj.apply(Subspace::line(qi, v)).label() == "span{(1, rt)}");

    SUBCASE("construction rejects bad input") {
        Mat singular = rational_mat(sp, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
        CHECK(kind_of([&] { make_symmetry(sp, singular); }) == ErrorKind::not_invertible);
        CHECK(kind_of([&] { scalar_symmetry(sp, f.zero()); }) == ErrorKind::not_invertible);

        Mat ragged = rational_mat(sp, {{1, 0}, {0, 1}, {0, 0}});
        CHECK(kind_of([&] { make_symmetry(sp, ragged); }) == ErrorKind::dimension_mismatch);
        Mat small = rational_mat(sp, {{1, 0}, {0, 1}});
        CHECK(kind_of([&] { make_symmetry(sp, small); }) == ErrorKind::dimension_mismatch);

        CHECK(kind_of([&] { make_symmetry(sp, la::identity(3, f), FieldAutomorphism{fi, true}); }) ==
              ErrorKind::bad_argument);
        Mat alien = la::identity(3, f);
        alien[0][0] = fi.one();
        CHECK(kind_of([&] { make_symmetry(sp, alien); }) == ErrorKind::bad_argument);
        CHECK(kind_of([&] { make_symmetry(nullptr, la::identity(3, f)); }) ==
              ErrorKind::bad_argument);

        CHECK(kind_of([&] { id.apply(rational_vec(sp, {1, 2})); }) ==
              ErrorKind::dimension_mismatch);
        CHECK(kind_of([&] { id.apply(atom(q2(), {1, 0})); }) == ErrorKind::space_mismatch);
    }
}

TEST_CASE("composition multiplies matrices through the automorphism and inverts exactly") {
    auto sp = q3();
    const Field& f = sp->field();

    // cyclic coordinate shift e1 -> e2 -> e3 -> e1
    Mat cm = rational_mat(sp, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto cyc = make_symmetry(sp, cm);
    auto perm12 = swap_symmetry(sp, rational_vec(sp, {1, 0, 0}), rational_vec(sp, {0, 1, 0}));

    auto comp = compose(perm12, cyc);
    CHECK(comp.matrix == rational_mat(sp, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    CHECK(comp.name() == "symmetry(3x3, id)");
    for (const Vec& v : {rational_vec(sp, {1, 2, 3}), rational_vec(sp, {0, 5, -1})})
        CHECK(comp.apply(v) == perm12.apply(cyc.apply(v)));

    auto inv = inverse(cyc);
    CHECK(compose(inv, cyc).matrix == la::identity(3, f));
    CHECK(compose(cyc, inv).matrix == la::identity(3, f));

    // two conjugation-semilinear maps compose to a plain linear one
    const Field fi = Field::quadratic(-1);
    auto qi = HermitianSpace::make(fi, 2);
    auto cj = make_symmetry(qi, la::identity(2, fi), FieldAutomorphism{fi, true});
    auto twice = compose(cj, cj);
    CHECK_FALSE(twice.aut.flips_root);
    CHECK(twice.matrix == la::identity(2, fi));
    auto cj_inv = inverse(cj);
    CHECK(cj_inv.aut.flips_root);
    const Vec w = {fi.make(Rational(2), Rational(3)), fi.one()};
    CHECK(cj_inv.apply(cj.apply(w)) == w);

    CHECK(kind_of([&] { compose(identity_symmetry(sp), identity_symmetry(q2())); }) ==
          ErrorKind::space_mismatch);
}

TEST_CASE("orthogonal equal-norm vectors admit an exact swapping symmetry") {
    auto sp = q3();
    const Field& f = sp->field();
    const Vec x = rational_vec(sp, {1, 1, 0});
    const Vec y = rational_vec(sp, {1, -1, 0});

    auto u = swap_symmetry(sp, x, y);
    CHECK(u.matrix == rational_mat(sp, {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
    CHECK(u.apply(Subspace::line(sp, x)) == Subspace::line(sp, y));
    CHECK(u.apply(Subspace::line(sp, y)) == Subspace::line(sp, x));
    // x + y = (2, 0, 0) spans the fixed superposition
    CHECK(u.apply(atom(sp, {1, 0, 0})) == atom(sp, {1, 0, 0}));

    // unit multiplier: the form is preserved on the nose
    Rng rng(31);
    for (int t = 0; t < 12; ++t) {
        const Vec a = random_vector(sp, rng, 6);
        const Vec b = random_vector(sp, rng, 6);
        CHECK(sp->form(u.apply(a), u.apply(b)) == sp->form(a, b));
    }
    // involution up to lambda^2 = 1
    CHECK(compose(u, u).matrix == la::identity(3, f));

    SUBCASE("basis swap is the permutation matrix") {
        auto perm = swap_symmetry(sp, rational_vec(sp, {1, 0, 0}), rational_vec(sp, {0, 1, 0}));
        CHECK(perm.matrix == rational_mat(sp, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
        CHECK(perm.apply(Subspace::line(sp, x)) == Subspace::line(sp, x));
    }

    SUBCASE("lambda scales the whole map") {
        auto u3 = swap_symmetry(sp, x, y, f.from_rational(Rational(3)));
        CHECK(u3.apply(x) == u.apply(rational_vec(sp, {3, 3, 0})));
        CHECK(u3.apply(Subspace::line(sp, x)) == Subspace::line(sp, y));
        const Vec a = rational_vec(sp, {2, 5, 1});
        CHECK(sp->form(u3.apply(a), u3.apply(a)) ==
              f.from_rational(Rational(9)) * sp->form(a, a));
        // U^2 = lambda^2 on every vector
        CHECK(compose(u3, u3).apply(a) == u.apply(u.apply(rational_vec(sp, {18, 45, 9}))));
    }

    SUBCASE("hypothesis guards") {
        CHECK(kind_of([&] { swap_symmetry(sp, x, rational_vec(sp, {0, 1, 1})); }) ==
              ErrorKind::not_orthogonal);
        CHECK(kind_of([&] { swap_symmetry(sp, rational_vec(sp, {1, 0, 0}),
                                          rational_vec(sp, {0, 1, 1})); }) ==
              ErrorKind::norms_unequal);
        CHECK(kind_of([&] { swap_symmetry(sp, x, la::zero_vec(3, f)); }) ==
              ErrorKind::zero_vector);
        CHECK(kind_of([&] { swap_symmetry(sp, x, y, f.zero()); }) == ErrorKind::bad_argument);
        CHECK(kind_of([&] { swap_symmetry(sp, x, rational_vec(sp, {1, -1})); }) ==
              ErrorKind::dimension_mismatch);
    }
}

TEST_CASE("the form transforms by a single multiplier pulled back through the automorphism") {
    auto sp = q3();
    const Field& f = sp->field();
    const auto samples = basis_pairs(sp);

    // scalar maps: rho is exactly lambda^2, over a seeded spread of lambdas
    Rng rng(77);
    for (int t = 0; t < 20; ++t) {
        const Rational lam = rng.nonzero_rational(9);
        auto res = verify_form_identity(scalar_symmetry(sp, f.from_rational(lam)), samples);
        CHECK(res.report.ok());
        REQUIRE(res.rho.has_value());
        CHECK(*res.rho == f.from_rational(lam * lam));
        CHECK(stat_of(res.report, "sample-pairs") == "9");
    }

    // a permutation preserves the form outright
    auto perm = swap_symmetry(sp, rational_vec(sp, {1, 0, 0}), rational_vec(sp, {0, 1, 0}));
    auto rp = verify_form_identity(perm, samples);
    CHECK(rp.report.ok());
    CHECK(rp.rho->is_one());
    CHECK(rp.report.check == "form-identity");
    CHECK(rp.report.target == "symmetry(3x3, id)");

    // diag(1, 2) stretches one axis only: no single multiplier works
    auto sq = q2();
    Mat d12 = rational_mat(sq, {{1, 0}, {0, 2}});
    auto bad = verify_form_identity(make_symmetry(sq, d12), basis_pairs(sq));
    CHECK_FALSE(bad.report.ok());
    CHECK(bad.report.violations == 1);
    CHECK(has_witness(bad.report, "identity fails on u = (0, 1), v = (0, 1)"));
    CHECK(stat_of(bad.report, "rho") == "1");

    // conjugation-semilinear identity over Q(i): rho = 1 on mixed samples too
    const Field fi = Field::quadratic(-1);
    auto qi = HermitianSpace::make(fi, 2);
    auto cj = make_symmetry(qi, la::identity(2, fi), FieldAutomorphism{fi, true});
    auto si = basis_pairs(qi);
    const Vec vi = {fi.make(Rational(0), Rational(1)), fi.one()};
    si.emplace_back(vi, vi);
    auto rc = verify_form_identity(cj, si);
    CHECK(rc.report.ok());
    CHECK(rc.rho->is_one());

    // rho is unreadable off an all-orthogonal sample set
    CHECK(kind_of([&] {
              verify_form_identity(perm, {{sp->basis_vector(0), sp->basis_vector(1)}});
          }) == ErrorKind::hypotheses_unmet);
}

TEST_CASE("a symmetry induces an orthogonality-preserving map on atoms") {
    auto sp = q3();

    auto id = identity_symmetry(sp);
    std::vector<Subspace> atoms = {atom(sp, {1, 0, 0}), atom(sp, {0, 1, 0}),
                                   atom(sp, {1, 1, 1})};
    auto am = induced_atom_map(id, atoms);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        CHECK(am.from[i] == atoms[i]);
        CHECK(am.to[i] == atoms[i]);
    }
    CHECK(am.image_of(atoms[2]) == atoms[2]);
    CHECK_FALSE(am.image_of(atom(sp, {5, 1, 2})).has_value());

    // an anisotropic stretch still maps single atoms fine
    auto sq = q2();
    auto s12 = make_symmetry(sq, rational_mat(sq, {{1, 0}, {0, 2}}));
    auto one = induced_atom_map(s12, {atom(sq, {1, 1})});
    CHECK(one.to[0] == atom(sq, {1, 2}));

    // but breaks orthogonality across a pair, which the map must refuse
    CHECK(kind_of([&] {
              induced_atom_map(s12, {atom(sq, {1, 1}), atom(sq, {1, -1})});
          }) == ErrorKind::identity_fails);

    CHECK(kind_of([&] { induced_atom_map(id, {atoms[0], atoms[0]}); }) ==
          ErrorKind::bad_argument);
    CHECK(kind_of([&] {
              induced_atom_map(id, {Subspace::span(sp, {sp->basis_vector(0),
                                                        sp->basis_vector(1)})});
          }) == ErrorKind::not_an_atom);
    CHECK(kind_of([&] { induced_atom_map(id, {atom(q2(), {1, 0})}); }) ==
          ErrorKind::space_mismatch);
}

TEST_CASE("atom maps extend to lattice automorphisms by joining atom images") {
    auto sp = q3();
    Fragment cube = Fragment::generate(
        sp, {atom(sp, {1, 0, 0}), atom(sp, {0, 1, 0}), atom(sp, {0, 0, 1})});
    REQUIRE(cube.size() == 8);
    REQUIRE(cube.atom_indices() == std::vector<int>{2, 4, 6});

    auto perm12 = swap_symmetry(sp, rational_vec(sp, {1, 0, 0}), rational_vec(sp, {0, 1, 0}));
    auto am = induced_atom_map(perm12, {cube.element(2), cube.element(4), cube.element(6)});
    auto lat = extend_atom_map(cube, am);

    // 2 = [e1], 4 = [e2] swap; their orthocomplements 3, 5 swap with them;
    // [e3] and the plane spanned by e1, e2 stay put
    CHECK(lat(0) == 0);
    CHECK(lat(1) == 1);
    CHECK(lat(2) == 4);
    CHECK(lat(4) == 2);
    CHECK(lat(3) == 5);
    CHECK(lat(5) == 3);
    CHECK(lat(6) == 6);
    CHECK(lat(7) == 7);

    // the extension agrees with applying the symmetry to every element
    for (int i = 0; i < cube.size(); ++i)
        CHECK(cube.element(lat(i)) == perm12.apply(cube.element(i)));

    SUBCASE("abstract tables extend the same way") {
        FiniteLogic mo2 = FiniteLogic::mo2();
        auto cyc = extend_atom_map(mo2, {{"a", "b"}, {"b", "a'"}, {"a'", "b'"}, {"b'", "a"}});
        CHECK(cyc(mo2.index_of("0").value()) == mo2.index_of("0").value());
        CHECK(cyc(mo2.index_of("1").value()) == mo2.index_of("1").value());
        CHECK(cyc(mo2.index_of("a").value()) == mo2.index_of("b").value());
        CHECK(cyc(mo2.index_of("b").value()) == mo2.index_of("a'").value());
        CHECK(cyc(mo2.index_of("a'").value()) == mo2.index_of("b'").value());
        CHECK(cyc(mo2.index_of("b'").value()) == mo2.index_of("a").value());

        // orthocomplements must follow the atom images
        CHECK(kind_of([&] {
                  extend_atom_map(mo2, {{"a", "b"}, {"b", "a'"}, {"a'", "a"}, {"b'", "b'"}});
              }) == ErrorKind::extension_inconsistent);
        CHECK(kind_of([&] { extend_atom_map(mo2, {{"a", "b"}, {"b", "a"}}); }) ==
              ErrorKind::bad_argument);
        CHECK(kind_of([&] {
                  extend_atom_map(mo2, {{"a", "zz"}, {"b", "a'"}, {"a'", "b'"}, {"b'", "a"}});
              }) == ErrorKind::bad_argument);
        CHECK(kind_of([&] {
                  extend_atom_map(mo2, {{"a", "1"}, {"b", "a'"}, {"a'", "b'"}, {"b'", "a"}});
              }) == ErrorKind::bad_argument);
    }

    SUBCASE("elements with no atoms below cannot be reached") {
        Fragment planeonly = Fragment::generate(
            sp, {Subspace::span(sp, {sp->basis_vector(0), sp->basis_vector(1)})});
        REQUIRE(planeonly.size() == 4);
        AtomMap keep;
        for (int a : planeonly.atom_indices()) {
            keep.from.push_back(planeonly.element(a));
            keep.to.push_back(planeonly.element(a));
        }
        CHECK(kind_of([&] { extend_atom_map(planeonly, keep); }) ==
              ErrorKind::extension_inconsistent);
    }

    SUBCASE("uncovered atoms are rejected") {
        AtomMap partial;
        partial.from = {cube.element(2)};
        partial.to = {cube.element(4)};
        CHECK(kind_of([&] { extend_atom_map(cube, partial); }) == ErrorKind::bad_argument);
    }
}

TEST_CASE("swapping symmetries replay their own bookkeeping") {
    auto sp = q3();
    const Field& f = sp->field();
    const Vec x = rational_vec(sp, {1, 1, 0});
    const Vec y = rational_vec(sp, {1, -1, 0});
    const Subspace px = Subspace::line(sp, x);
    const Subspace py = Subspace::line(sp, y);

    SUBCASE("unit swap") {
        auto r = check_swap_consistency(swap_symmetry(sp, x, y), px, py);
        CHECK(r.ok());
        CHECK(r.check == "swap-consistency");
        CHECK(r.target == "span{(1, 1, 0)} <-> span{(1, -1, 0)}");
        CHECK(stat_of(r, "lambda") == "1");
        CHECK(stat_of(r, "alpha") == "1");
        CHECK(stat_of(r, "rho") == "1");
        REQUIRE(r.notes.size() == 1);
        CHECK(r.notes[0] == "fixed superposition span{(1, 0, 0)}");
    }

    SUBCASE("scaled swap: rho picks up lambda squared") {
        auto r = check_swap_consistency(
            swap_symmetry(sp, x, y, f.from_rational(Rational(3))), px, py);
        CHECK(r.ok());
        CHECK(stat_of(r, "lambda") == "3");
        CHECK(stat_of(r, "alpha") == "3");
        CHECK(stat_of(r, "rho") == "9");
    }

    SUBCASE("conjugation-semilinear swap over Q(i)") {
        const Field fi = Field::quadratic(-1);
        auto qi = HermitianSpace::make(fi, 2);
        auto s = make_symmetry(qi, rational_mat(qi, {{0, 1}, {1, 0}}),
                               FieldAutomorphism{fi, true});
        auto r = check_swap_consistency(s, Subspace::line(qi, {fi.one(), fi.zero()}),
                                        Subspace::line(qi, {fi.zero(), fi.one()}));
        CHECK(r.ok());
        CHECK(stat_of(r, "lambda") == "1");
        CHECK(stat_of(r, "rho") == "1");
        CHECK(r.notes[0] == "fixed superposition span{(1, 1)}");
    }

    SUBCASE("root-flip swap over Q(rt2) lands on a root-axis superposition") {
        // form diag(1, 1/2) makes [[0,1],[-2,0]] a genuine quasi-isometry
        const Field f2 = Field::quadratic(2);
        Mat form = la::identity(2, f2);
        form[1][1] = f2.from_rational(Rational(1, 2));
        auto qh = HermitianSpace::make(f2, 2, form);
        Mat sm(2, la::zero_vec(2, f2));
        sm[0][1] = f2.one();
        sm[1][0] = f2.from_rational(Rational(-2));
        auto s = make_symmetry(qh, sm, FieldAutomorphism{f2, true});

        auto fr = verify_form_identity(s, basis_pairs(qh));
        CHECK(fr.report.ok());
        CHECK(fr.rho->str() == "2");

        auto r = check_swap_consistency(s, Subspace::line(qh, {f2.one(), f2.zero()}),
                                        Subspace::line(qh, {f2.zero(), f2.one()}));
        CHECK(r.ok());
        CHECK(stat_of(r, "lambda") == "-rt");
        CHECK(stat_of(r, "alpha") == "-2");
        CHECK(stat_of(r, "rho") == "2");
        CHECK(r.notes[0] == "fixed superposition span{(1, rt)}");
    }

    SUBCASE("swaps with no in-scope fixed superposition are rejected honestly") {
        // eigenvalue equation c^2 = 1/2 has no rational solution
        auto sq = q2();
        auto s02 = make_symmetry(sq, rational_mat(sq, {{0, 2}, {1, 0}}));
        CHECK(kind_of([&] {
                  check_swap_consistency(s02, atom(sq, {1, 0}), atom(sq, {0, 1}));
              }) == ErrorKind::hypotheses_unmet);

        // root-flip case needing a mixed coefficient 1 + rt: out of solver scope
        const Field f2 = Field::quadratic(2);
        auto qr = HermitianSpace::make(f2, 2);
        Mat sm(2, la::zero_vec(2, f2));
        sm[0][1] = f2.from_rational(Rational(-1));
        sm[1][0] = f2.one();
        auto smix = make_symmetry(qr, sm, FieldAutomorphism{f2, true});
        CHECK(kind_of([&] {
                  check_swap_consistency(smix, Subspace::line(qr, {f2.one(), f2.zero()}),
                                         Subspace::line(qr, {f2.zero(), f2.one()}));
              }) == ErrorKind::hypotheses_unmet);
    }

    SUBCASE("hypothesis guards") {
        CHECK(kind_of([&] {
                  check_swap_consistency(identity_symmetry(sp), px, py);
              }) == ErrorKind::hypotheses_unmet);
        CHECK(kind_of([&] {
                  check_swap_consistency(swap_symmetry(sp, x, y), px,
                                         atom(sp, {0, 1, 1}));
              }) == ErrorKind::hypotheses_unmet);
        CHECK(kind_of([&] {
                  check_swap_consistency(identity_symmetry(sp), px,
                                         Subspace::span(sp, {sp->basis_vector(0),
                                                             sp->basis_vector(1)}));
              }) == ErrorKind::not_an_atom);
    }
}

TEST_CASE("abundance of swaps across orthogonal atom pairs") {
    auto sp = q3();
    const Field& f = sp->field();

    SUBCASE("the standard basis swaps freely") {
        auto r = check_abundance({atom(sp, {1, 0, 0}), atom(sp, {0, 1, 0}),
                                  atom(sp, {0, 0, 1})});
        CHECK(r.ok());
        CHECK(r.check == "abundance");
        CHECK(stat_of(r, "orthogonal-pairs") == "3");
        CHECK(stat_of(r, "swappable") == "3");
    }

    SUBCASE("square norm ratios rescale away") {
        Mat form = la::identity(3, f);
        form[1][1] = f.from_rational(Rational(4));
        form[2][2] = f.from_rational(Rational(9));
        auto sq = HermitianSpace::make(f, 3, form);
        auto r = check_abundance({atom(sq, {1, 0, 0}), atom(sq, {0, 1, 0}),
                                  atom(sq, {0, 0, 1})});
        CHECK(r.ok());
        CHECK(stat_of(r, "swappable") == "3");
    }

    SUBCASE("a non-square ratio is witnessed") {
        auto r = check_abundance({atom(sp, {1, 0, 0}), atom(sp, {0, 1, 1})});
        CHECK_FALSE(r.ok());
        CHECK(r.violations == 1);
        CHECK(stat_of(r, "orthogonal-pairs") == "1");
        CHECK(stat_of(r, "swappable") == "0");
        CHECK(has_witness(r, "pair (span{(1, 0, 0)}, span{(0, 1, 1)}): "
                             "norm ratio 2 is not a rational square"));
    }

    SUBCASE("the scan agrees with a direct square test on seeded atoms") {
        // random atoms paired with partners from their orthocomplements, so
        // the scan sees orthogonal pairs with assorted norm ratios
        Rng rng(1009);
        std::vector<Subspace> atoms;
        while (atoms.size() < 10) {
            Subspace cand = Subspace::line(sp, random_nonzero_vector(sp, rng, 5));
            const Mat perp = ortho(cand).basis();
            Vec partner = perp[0];
            const Scalar k = sp->field().from_rational(rng.rational(3));
            for (std::size_t c = 0; c < partner.size(); ++c) partner[c] += k * perp[1][c];
            for (const Subspace& p : {cand, Subspace::line(sp, partner)}) {
                bool fresh = true;
                for (const auto& a : atoms)
                    if (a == p) fresh = false;
                if (fresh && atoms.size() < 10) atoms.push_back(p);
            }
        }
        long long ortho_pairs = 0, squares = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                const Vec& gi = atoms[i].generator();
                const Vec& gj = atoms[j].generator();
                if (!sp->form(gi, gj).is_zero()) continue;
                ++ortho_pairs;
                const Rational ratio = (sp->form(gj, gj) / sp->form(gi, gi)).as_rational();
                if (rational_sqrt(ratio)) ++squares;
            }
        REQUIRE(ortho_pairs > 0);
        auto r = check_abundance(atoms);
        CHECK(stat_of(r, "orthogonal-pairs") == std::to_string(ortho_pairs));
        CHECK(stat_of(r, "swappable") == std::to_string(squares));
        CHECK(r.violations == ortho_pairs - squares);
        CHECK(r.ok() == (squares == ortho_pairs));
    }

    SUBCASE("input guards") {
        CHECK(kind_of([&] { check_abundance({}); }) == ErrorKind::bad_argument);
        const Field f2 = Field::quadratic(2);
        auto qr = HermitianSpace::make(f2, 2);
        CHECK(kind_of([&] {
                  check_abundance({Subspace::line(qr, {f2.one(), f2.zero()})});
              }) == ErrorKind::bad_argument);
        CHECK(kind_of([&] {
                  check_abundance({Subspace::span(sp, {sp->basis_vector(0),
                                                       sp->basis_vector(1)})});
              }) == ErrorKind::not_an_atom);
        CHECK(kind_of([&] { check_abundance({atom(sp, {1, 0, 0}), atom(q2(), {1, 0})}); }) ==
              ErrorKind::space_mismatch);
    }
}

TEST_CASE("field automorphisms fix every squared length on regular spaces") {
    auto sp = q3();
    Rng rng(404);
    std::vector<Vec> samples;
    for (int t = 0; t < 8; ++t) samples.push_back(random_vector(sp, rng, 9));

    auto r = check_regularity(sp, samples);
    CHECK(r.ok());
    CHECK(r.check == "regularity");
    CHECK(stat_of(r, "automorphisms") == "1");
    CHECK(stat_of(r, "samples") == "8");
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0] == "centrality is automatic in a commutative field");

    // (1, rt) under the dot product has squared length 1 + 2 = 3, rational
    const Field f2 = Field::quadratic(2);
    auto qr = HermitianSpace::make(f2, 2);
    auto r2 = check_regularity(qr, {{f2.one(), f2.make(Rational(0), Rational(1))}});
    CHECK(r2.ok());
    CHECK(stat_of(r2, "automorphisms") == "2");

    // Q(i) squared lengths are field norms, always rational
    const Field fi = Field::quadratic(-1);
    auto qi = HermitianSpace::make(fi, 2);
    auto ri = check_regularity(
        qi, {{fi.make(Rational(2), Rational(3)), fi.make(Rational(0), Rational(1))}});
    CHECK(ri.ok());

    // a root on the diagonal of the form breaks regularity
    Mat form = la::identity(2, f2);
    form[1][1] = f2.make(Rational(0), Rational(1));
    auto qbad = HermitianSpace::make(f2, 2, form);
    auto rb = check_regularity(qbad, {qbad->basis_vector(1)});
    CHECK_FALSE(rb.ok());
    CHECK(rb.violations == 1);
    CHECK(has_witness(rb, "automorphism rt->-rt moves f(v, v) = rt for v = (0, 1)"));

    CHECK(kind_of([&] { check_regularity(nullptr, {}); }) == ErrorKind::bad_argument);
}

TEST_CASE("orbits of a symmetry group reach test atoms or their superpositions") {
    auto sp = q3();
    Mat cm = rational_mat(sp, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto cyc = make_symmetry(sp, cm);
    const Subspace e1 = atom(sp, {1, 0, 0});

    SUBCASE("a cyclic shift reaches every coordinate atom") {
        auto r = orbit_superposition_check({cyc}, e1,
                                           {atom(sp, {1, 1, 0}), atom(sp, {0, 1, 0})});
        CHECK(r.ok());
        CHECK(r.check == "orbit-superposition");
        CHECK(r.target == "span{(1, 0, 0)}");
        CHECK(stat_of(r, "orbit-size") == "3");
        CHECK(stat_of(r, "tests") == "2");
    }

    SUBCASE("basis swaps cover rational atoms of coordinate planes") {
        auto s12 = swap_symmetry(sp, rational_vec(sp, {1, 0, 0}), rational_vec(sp, {0, 1, 0}));
        auto s23 = swap_symmetry(sp, rational_vec(sp, {0, 1, 0}), rational_vec(sp, {0, 0, 1}));
        auto r = orbit_superposition_check(
            {s12, s23}, e1,
            {atom(sp, {1, 2, 0}), atom(sp, {0, 3, 5}), atom(sp, {7, 0, 1})});
        CHECK(r.ok());
        CHECK(stat_of(r, "orbit-size") == "3");
    }

    SUBCASE("a trivial group reaches nothing new") {
        auto r = orbit_superposition_check({identity_symmetry(sp)}, e1,
                                           {atom(sp, {0, 1, 0})});
        CHECK_FALSE(r.ok());
        CHECK(r.violations == 1);
        CHECK(has_witness(r, "atom span{(0, 1, 0)} is not a superposition of orbit atoms"));
    }

    SUBCASE("hitting the cap turns the verdict to truncated") {
        auto r = orbit_superposition_check({cyc}, e1, {atom(sp, {1, 1, 0})}, 2);
        CHECK(r.verdict == Verdict::truncated);
        CHECK_FALSE(r.ok());
        CHECK(r.violations == 0);
        CHECK(stat_of(r, "orbit-size") == "2");
        REQUIRE(r.notes.size() == 1);
        CHECK(r.notes[0] == "orbit truncated at cap 2; witnesses may reflect the truncation");
    }

    SUBCASE("input guards") {
        CHECK(kind_of([&] {
                  orbit_superposition_check({cyc}, Subspace::full(sp), {});
              }) == ErrorKind::not_an_atom);
        CHECK(kind_of([&] {
                  orbit_superposition_check({cyc}, e1, {Subspace::zero(sp)});
              }) == ErrorKind::not_an_atom);
        CHECK(kind_of([&] {
                  orbit_superposition_check({identity_symmetry(q2())}, e1, {});
              }) == ErrorKind::space_mismatch);
    }
}
