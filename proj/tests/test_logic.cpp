#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "oml/checks.hpp"
#include "oml/fragment.hpp"

using namespace oml;

namespace {

SpacePtr q3() { return HermitianSpace::make(Field::rationals(), 3); }

Vec rational_vec(const SpacePtr& sp, std::vector<Rational> cs) {
    Vec v;
    for (auto& c : cs) v.push_back(sp->field().from_rational(c));
    return v;
}

Subspace atom(const SpacePtr& sp, std::vector<Rational> cs) {
    return Subspace::line(sp, rational_vec(sp, std::move(cs)));
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::bad_argument;
}

std::set<std::string> labels_of(const FiniteLogic& l, const std::vector<int>& idx) {
    std::set<std::string> out;
    for (int i : idx) out.insert(l.label(i));
    return out;
}

} // namespace

TEST_CASE("boolean algebra tables satisfy every law") {
    for (int n : {1, 2, 3, 5}) {
        const auto l = FiniteLogic::boolean_algebra(n);
        CHECK(l.size() == (1 << n));
        CHECK(static_cast<int>(atoms_of(l).size()) == n);
        CHECK(check_ortholattice(l).ok());
        CHECK(check_orthomodular(l).ok());
        CHECK(check_atomicity(l).ok());
        CHECK(check_covering_law(l).ok());
        // distributive, so everything is central
        CHECK(static_cast<int>(center_of(l).size()) == l.size());
        CHECK(complementary_pairs(l).empty());
    }

    const auto b3 = FiniteLogic::boolean_algebra(3);
    CHECK(b3.label(0) == "0");
    CHECK(b3.label(3) == "ab");
    CHECK(b3.label(7) == "1");
    CHECK(b3.meet(3, 5).value() == 1);  // ab ^ ac = a
    CHECK(b3.join(1, 2).value() == 3);  // a v b = ab
    CHECK(b3.ortho(3) == 4);            // (ab)' = c

    // no third atom ever sits under the join of two atoms
    CHECK(superposition_atoms(b3, 1, 2).empty());
    const auto sup = check_superpositions_exist(b3);
    CHECK_FALSE(sup.ok());
    CHECK(sup.violations == 3); // one per atom pair

    const auto irr = check_irreducible(b3);
    CHECK_FALSE(irr.ok());
    CHECK(irr.violations == 6); // every element but the bounds is central
}

TEST_CASE("MO2: irreducible, superpositions across blocks") {
    const auto l = FiniteLogic::mo2();
    CHECK(l.size() == 6);
    CHECK(check_ortholattice(l).ok());
    CHECK(check_orthomodular(l).ok());
    CHECK(check_atomicity(l).ok());
    CHECK(check_covering_law(l).ok());
    CHECK(check_superpositions_exist(l).ok());

    const auto atoms = atoms_of(l);
    CHECK(labels_of(l, atoms) == std::set<std::string>{"a", "a'", "b", "b'"});

    CHECK(labels_of(l, center_of(l)) == std::set<std::string>{"0", "1"});
    CHECK(check_irreducible(l).ok());

    // a ^ b = 0 without orthogonality, in both blocks and across them
    const auto pairs = complementary_pairs(l);
    REQUIRE(pairs.size() == 4);
    std::set<std::pair<std::string, std::string>> got;
    for (auto [x, y] : pairs) got.insert({l.label(x), l.label(y)});
    CHECK(got == std::set<std::pair<std::string, std::string>>{
                     {"a", "b"}, {"a", "b'"}, {"a'", "b"}, {"a'", "b'"}});

    const int a = l.index_of("a").value();
    const int b = l.index_of("b").value();
    CHECK(labels_of(l, superposition_atoms(l, a, b)) == std::set<std::string>{"a'", "b'"});

    CHECK(kind_of([&] { superposition_atoms(l, a, a); }) == ErrorKind::bad_argument);
    CHECK(kind_of([&] { superposition_atoms(l, l.bottom(), b); }) == ErrorKind::not_an_atom);
}

TEST_CASE("O6 is an ortholattice but not orthomodular") {
    const auto l = FiniteLogic::o6();
    CHECK(check_ortholattice(l).ok());
    CHECK(check_atomicity(l).ok());

    const auto om = check_orthomodular(l);
    CHECK_FALSE(om.ok());
    CHECK(om.violations == 2);
    REQUIRE(om.witnesses.size() == 2);
    // a < b but a v (b ^ a') = a v 0 = a
    CHECK(om.witnesses[0] == "(a, b)");
    CHECK(om.witnesses[1] == "(b', a')");

    CHECK(labels_of(l, center_of(l)) == std::set<std::string>{"0", "1"});
}

TEST_CASE("a self-orthogonal element breaks the complement laws") {
    const auto l = FiniteLogic::from_parts(
        "broken", {"0", "a", "1"},
        {{true, true, true}, {false, true, true}, {false, false, true}}, {2, 1, 0}, 0, 2);
    const auto r = check_ortholattice(l);
    CHECK_FALSE(r.ok());
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == "complement laws fail at a");
    // a v (1 ^ a-perp) = a v a = a, so orthomodularity collapses too
    const auto om = check_orthomodular(l);
    CHECK_FALSE(om.ok());
    CHECK(std::count(om.witnesses.begin(), om.witnesses.end(), "(a, 1)") == 1);
}

TEST_CASE("construction rejects malformed relations") {
    using pairs = std::vector<std::pair<std::string, std::string>>;

    CHECK(kind_of([] {
              FiniteLogic::from_relations("dup", {"0", "x", "x", "1"}, {}, {{"0", "1"}, {"x", "x"}},
                                          "0", "1");
          }) == ErrorKind::malformed_table);

    CHECK(kind_of([] {
              FiniteLogic::from_relations("unknown", {"0", "1"}, pairs{{"0", "z"}},
                                          pairs{{"0", "1"}}, "0", "1");
          }) == ErrorKind::unknown_element);

    CHECK(kind_of([] {
              FiniteLogic::from_relations("cycle", {"0", "x", "y", "1"},
                                          pairs{{"x", "y"}, {"y", "x"}, {"0", "x"}, {"y", "1"}},
                                          pairs{{"0", "1"}, {"x", "y"}}, "0", "1");
          }) == ErrorKind::malformed_table);

    CHECK(kind_of([] {
              FiniteLogic::from_relations("partial", {"0", "x", "y", "1"}, pairs{{"0", "x"}},
                                          pairs{{"0", "1"}}, "0", "1");
          }) == ErrorKind::malformed_table);

    CHECK(kind_of([] {
              FiniteLogic::from_relations("conflict", {"0", "x", "y", "1"}, {},
                                          pairs{{"0", "1"}, {"x", "y"}, {"x", "x"}}, "0", "1");
          }) == ErrorKind::malformed_table);

    // from_parts checks the involution: 0 -> x -> y is a 3-cycle
    CHECK(kind_of([] {
              FiniteLogic::from_parts("noninv", {"0", "x", "y", "1"},
                                      {{true, true, true, true},
                                       {false, true, false, true},
                                       {false, false, true, true},
                                       {false, false, false, true}},
                                      {1, 2, 0, 3}, 0, 3);
          }) == ErrorKind::malformed_table);
}

TEST_CASE("tables without unique bounds report missing data") {
    using pairs = std::vector<std::pair<std::string, std::string>>;
    // p and q both lie under x and y: neither x ^ y nor p v q exists
    const auto l = FiniteLogic::from_relations(
        "nonlattice", {"0", "p", "q", "x", "y", "1"},
        pairs{{"0", "p"}, {"0", "q"}, {"p", "x"}, {"p", "y"}, {"q", "x"}, {"q", "y"},
              {"x", "1"}, {"y", "1"}},
        pairs{{"0", "1"}, {"p", "x"}, {"q", "y"}}, "0", "1");

    const int x = l.index_of("x").value();
    const int y = l.index_of("y").value();
    const int p = l.index_of("p").value();
    const int q = l.index_of("q").value();
    CHECK_FALSE(l.meet(x, y).has_value());
    CHECK_FALSE(l.join(p, q).has_value());
    CHECK(l.meet(p, x).value() == p);

    const auto om = check_orthomodular(l);
    CHECK_FALSE(om.ok());
    CHECK(std::count(om.witnesses.begin(), om.witnesses.end(), "(p, y) [bound missing]") == 1);
    CHECK_FALSE(om.notes.empty());
}

TEST_CASE("coordinate atoms close to an eight element boolean fragment") {
    const auto sp = q3();
    const auto f = Fragment::generate(
        sp, {atom(sp, {1, 0, 0}), atom(sp, {0, 1, 0}), atom(sp, {0, 0, 1})});
    CHECK(f.size() == 8);
    CHECK_FALSE(f.truncated());
    CHECK(f.atom_indices().size() == 3);
    CHECK(f.index_of(Subspace::zero(sp)).value() == 0);
    CHECK(f.index_of(Subspace::full(sp)).value() == 1);

    const FragmentLogic fl(f);
    CHECK(check_ortholattice(fl).ok());
    CHECK(check_orthomodular(fl).ok());
    CHECK(check_atomicity(fl).ok());
    CHECK(check_covering_law(fl).ok());
    // compatible generators produce a distributive fragment
    CHECK(static_cast<int>(center_of(fl).size()) == 8);
    CHECK_FALSE(check_irreducible(fl).ok());
    CHECK(complementary_pairs(fl).empty());

    // the exported table is complete and passes the same checks
    const auto t = f.to_logic();
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            CHECK(t.meet(i, j).has_value());
            CHECK(t.join(i, j).has_value());
        }
    CHECK(check_ortholattice(t).ok());
    CHECK(check_orthomodular(t).ok());
    CHECK(check_covering_law(t).ok());
    CHECK(static_cast<int>(atoms_of(t).size()) == 3);
}

TEST_CASE("two skew atoms close to twelve elements") {
    const auto sp = q3();
    const auto p = atom(sp, {1, 0, 0});
    const auto q = atom(sp, {1, 1, 1});
    const auto f = Fragment::generate(sp, {p, q});
    CHECK(f.size() == 12);
    CHECK_FALSE(f.truncated());
    CHECK(f.atom_indices().size() == 5);

    // the join plane, its normal line, and the two section lines
    const auto plane = join(p, q);
    const auto normal = ortho(plane);
    const auto s = meet(plane, ortho(p));
    const auto t = meet(plane, ortho(q));
    CHECK(s == atom(sp, {0, 1, 1}));
    CHECK(t == atom(sp, {2, -1, -1}));
    CHECK(f.index_of(plane).has_value());
    CHECK(f.index_of(normal).has_value());

    const FragmentLogic fl(f);
    CHECK(check_ortholattice(fl).ok());
    CHECK(check_orthomodular(fl).ok());
    CHECK(check_atomicity(fl).ok());
    CHECK(check_covering_law(fl).ok());

    // every member splits along plane + normal, so those are central
    const auto c = center_of(fl);
    REQUIRE(c.size() == 4);
    std::set<std::string> cl;
    for (int i : c) cl.insert(f.label(i));
    CHECK(cl == std::set<std::string>{"0", "V", plane.label(), normal.label()});
    CHECK_FALSE(check_irreducible(fl).ok());

    // superpositions of the generators are exactly the two section lines
    const auto qs = superposition_atoms(fl, f.index_of(p).value(), f.index_of(q).value());
    REQUIRE(qs.size() == 2);
    std::set<std::string> ql;
    for (int i : qs) ql.insert(f.label(i));
    CHECK(ql == std::set<std::string>{s.label(), t.label()});

    // finite fragments do not satisfy superposition existence globally:
    // nothing inside lies strictly between p and the normal line
    CHECK_FALSE(check_superpositions_exist(fl).ok());

    // closed fragment: the exported table is complete and orthomodular
    const auto tab = f.to_logic();
    CHECK(tab.meet(f.index_of(plane).value(), f.index_of(ortho(p)).value()).has_value());
    CHECK(check_orthomodular(tab).ok());
    CHECK(check_covering_law(tab).ok());
}

TEST_CASE("the cap truncates closure but keeps orthocomplement pairing") {
    const auto sp = q3();
    const auto p = atom(sp, {1, 0, 0});
    const auto q = atom(sp, {1, 1, 1});
    const auto f = Fragment::generate(sp, {p, q}, 6);
    CHECK(f.truncated());
    CHECK(f.size() == 6);
    for (int i = 0; i < f.size(); ++i) CHECK(f.ortho(f.ortho(i)) == i);

    const FragmentLogic fl(f);
    // geometric laws cannot be broken by truncation
    CHECK(check_ortholattice(fl).ok());
    CHECK(check_orthomodular(fl).ok());
    CHECK(check_covering_law(fl).ok());
    // but the fragment is too small to be atomistic
    const auto at = check_atomicity(fl);
    CHECK_FALSE(at.ok());
    CHECK(at.violations == 2); // both generator orthoplanes lack internal atoms

    // The exported table takes its bounds from the order restricted to the
    // six members, so it disagrees with the ambient lattice: inside the
    // table p v q jumps straight to V and the two orthoplanes meet at 0,
    // although geometrically they share a line the cap excluded.
    const auto tab = f.to_logic();
    const int ip = f.index_of(p).value();
    const int iq = f.index_of(q).value();
    CHECK(tab.join(ip, iq).value() == 1);
    CHECK(tab.meet(f.ortho(ip), f.ortho(iq)).value() == 0);
    CHECK_FALSE(meet(ortho(p), ortho(q)).is_zero());

    CHECK(f.name() == "fragment(Q^3, 6 elements, truncated)");
}

TEST_CASE("fragment construction rejects bad input") {
    const auto sp = q3();
    CHECK(kind_of([&] { Fragment::generate(sp, {}, 1); }) == ErrorKind::bad_argument);

    const auto other = HermitianSpace::make(Field::rationals(), 2);
    CHECK(kind_of([&] {
              Fragment::generate(sp, {Subspace::full(other)});
          }) == ErrorKind::space_mismatch);
}

TEST_CASE("trivial fragment holds only the bounds") {
    const auto sp = q3();
    const auto f = Fragment::generate(sp, {});
    CHECK(f.size() == 2);
    CHECK_FALSE(f.truncated());
    CHECK(f.label(0) == "0");
    CHECK(f.label(1) == "V");
    CHECK(f.ortho(0) == 1);
    CHECK(f.atom_indices().empty());
    CHECK(check_ortholattice(FragmentLogic(f)).ok());
}
