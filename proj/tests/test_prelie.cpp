#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchbox/prelie.hpp"
#include "matchbox/structures.hpp"

using namespace matchbox;

namespace {
const Alphabet ORG = Alphabet::parse("red,green");

PreLieElem one(const RootedTree& t) { return PreLieElem::basis(t, Rational(1)); }
} // namespace

TEST_CASE("ladder graftings match the worked two-term sums") {
    // Grafting c on the two vertices of the ladder a -red- b: one summand
    // attaches c at the root a, the other at the leaf b.
    const RootedTree ladder =
        RootedTree::make("a", {{"red", RootedTree::vertex("b")}}, ORG);
    const RootedTree c = RootedTree::vertex("c");

    const PreLieElem red = prelie_star_basis(c, ladder, "red", ORG);
    CHECK(red.term_count() == 2);
    CHECK(red.coeff(parse_rooted("R(a;[red:R(b),red:R(c)])", ORG)) == 1);
    CHECK(red.coeff(parse_rooted("R(a;[red:R(b;[red:R(c)])])", ORG)) == 1);

    const PreLieElem green = prelie_star_basis(c, ladder, "green", ORG);
    CHECK(green.term_count() == 2);
    CHECK(green.coeff(parse_rooted("R(a;[red:R(b),green:R(c)])", ORG)) == 1);
    CHECK(green.coeff(parse_rooted("R(a;[red:R(b;[green:R(c)])])", ORG)) == 1);
}

TEST_CASE("coincident grafts accumulate coefficients") {
    const Alphabet O2 = Alphabet::parse("r,g");
    // Two identical r-children: grafting at either child lands on the same
    // canonical tree, so its coefficient is 2.
    const RootedTree sym = parse_rooted("R(a;[r:R(a),r:R(a)])", O2);
    const PreLieElem p = prelie_star_basis(RootedTree::vertex("b"), sym, "r", O2);
    CHECK(p.coeff(parse_rooted("R(a;[r:R(a),r:R(a),r:R(b)])", O2)) == 1);
    CHECK(p.coeff(parse_rooted("R(a;[r:R(a;[r:R(b)]),r:R(a)])", O2)) == 2);
    CHECK(p.term_count() == 2);
}

TEST_CASE("grafting is bilinear") {
    const Alphabet O2 = Alphabet::parse("r,g");
    const RootedTree a = RootedTree::vertex("a");
    const RootedTree b = RootedTree::vertex("b");
    const PreLieElem mix = rat(2) * one(a) - rat(1, 3) * one(b);
    const PreLieElem out = prelie_star(one(b), mix, "g", O2);
    CHECK(out.coeff(parse_rooted("R(a;[g:R(b)])", O2)) == 2);
    CHECK(out.coeff(parse_rooted("R(b;[g:R(b)])", O2)) == rat(-1, 3));
}

TEST_CASE("the matching pre-Lie identity holds on small trees") {
    const Alphabet O2 = Alphabet::parse("r,g");
    const RootedTree a = RootedTree::vertex("a");
    const RootedTree ch = parse_rooted("R(a;[g:R(a)])", O2);
    const auto star = [&](const std::string& w, const PreLieElem& x, const PreLieElem& y) {
        return prelie_star(x, y, w, O2);
    };
    const PreLieElem x = one(a), y = one(ch), z = one(ch);
    // x *a (y *b z) - (x *a y) *b z symmetric in (x,a) <-> (y,b).
    const PreLieElem l = star("r", x, star("g", y, z)) - star("g", star("r", x, y), z);
    const PreLieElem r = star("g", y, star("r", x, z)) - star("r", star("g", y, x), z);
    CHECK(l == r);
}

TEST_CASE("the structure wrapper validates alphabets") {
    const auto s = make_rooted_prelie(Alphabet::parse("a"), Alphabet::parse("r,g"));
    const PreLieElem a = one(RootedTree::vertex("a"));
    const PreLieElem z = one(RootedTree::vertex("z"));
    CHECK_THROWS_AS(s.apply(OpName::Star, "x", a, a), Error);
    CHECK_THROWS_AS(s.apply(OpName::Star, "r", a, z), Error);
    CHECK_THROWS_AS(s.apply(OpName::Prec, "r", a, a), Error);
}
