#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "matchbox/alphabet.hpp"
#include "matchbox/pbt.hpp"
#include "matchbox/rooted.hpp"

using namespace matchbox;

namespace {
const Alphabet D1 = Alphabet::parse("a");
const Alphabet D2 = Alphabet::parse("a,b");
const Alphabet O1 = Alphabet::parse("r");
const Alphabet O2 = Alphabet::parse("r,g");

Pbt v(const std::string& d) { return Pbt::node(d, "e", Pbt::leaf(), "e", Pbt::leaf()); }
} // namespace

TEST_CASE("alphabets validate their symbols") {
    CHECK(O2.rank("r") == 0);
    CHECK(O2.rank("g") == 1);
    CHECK(O2.rank("x") == -1);
    CHECK_THROWS_AS(Alphabet::parse("r,r"), Error);      // duplicate
    CHECK_THROWS_AS(Alphabet::parse(""), Error);         // empty
    CHECK_THROWS_AS(Alphabet::parse("a,b(c"), Error);    // grammar delimiter
    CHECK_THROWS_AS(Alphabet::parse("a,|"), Error);      // leaf token
    CHECK_THROWS_AS(require_omega(Alphabet::parse("r,e")), Error); // reserved
    CHECK_NOTHROW(require_omega(O2));
}

TEST_CASE("pbt node construction enforces the empty-type discipline") {
    const Pbt a = v("a");
    CHECK(a.vertices() == 1);
    CHECK(a.depth() == 1);
    CHECK(a.encode() == "B(a,e,|,e,|)");
    CHECK(Pbt::leaf().encode() == "|");
    CHECK_THROWS_AS(Pbt::node("a", "r", Pbt::leaf(), "e", Pbt::leaf()), Error); // r into leaf
    CHECK_THROWS_AS(Pbt::node("a", "e", a, "e", Pbt::leaf()), Error);          // e into vertex
    CHECK_THROWS_AS(Pbt::leaf().dec(), Error);
}

TEST_CASE("pbt enumeration matches the closed-form count") {
    for (const Alphabet& dec : {D1, D2})
        for (const Alphabet& omega : {O1, O2})
            for (int n = 0; n <= 5; ++n) {
                const auto trees = enumerate_pbt(n, dec, omega);
                CHECK(Integer(trees.size()) == count_pbt(n, dec.size(), omega.size()));
                CHECK(std::is_sorted(trees.begin(), trees.end()));
                const std::set<std::string> uniq = [&] {
                    std::set<std::string> s;
                    for (const auto& t : trees) s.insert(t.encode());
                    return s;
                }();
                CHECK(uniq.size() == trees.size());
                for (const auto& t : trees) {
                    CHECK(t.vertices() == n);
                    CHECK(validate_pbt(t, dec, omega));
                }
            }
    CHECK(count_pbt(3, 1, 2) == 20); // Catalan(3)=5, 5 * 1^3 * 2^2
    CHECK(count_pbt(0, 2, 2) == 1);
}

TEST_CASE("pbt decompose/graft round trip and parser") {
    for (int n = 1; n <= 3; ++n)
        for (const Pbt& t : enumerate_pbt(n, D2, O2)) {
            const PbtParts p = decompose_pbt(t);
            CHECK(graft_pbt(p.left, p.right, p.dec, p.ltype, p.rtype) == t);
            CHECK(parse_pbt(t.encode()) == t);
        }
    CHECK_THROWS_AS(decompose_pbt(Pbt::leaf()), Error);
    CHECK_THROWS_AS(parse_pbt("B(a,e,|,e"), Error);       // truncated
    CHECK_THROWS_AS(parse_pbt("B(a,r,|,e,|)"), Error);    // typed edge into leaf
    CHECK_THROWS_AS(parse_pbt("B(a,e,|,e,|)x"), Error);   // trailing garbage
    CHECK_THROWS_AS(parse_pbt(""), Error);
    CHECK_THROWS_AS(parse_pbt("Q"), Error);
}

TEST_CASE("pbt supports multi-byte utf-8 symbols") {
    const Alphabet dec = Alphabet::parse("a,b");
    const Alphabet omega = Alphabet::parse("α,β");
    const Pbt b = Pbt::node("b", "e", Pbt::leaf(), "e", Pbt::leaf());
    const Pbt t = Pbt::node("a", "e", Pbt::leaf(), "α", b);
    CHECK(t.encode() == "B(a,e,|,α,B(b,e,|,e,|))");
    CHECK(parse_pbt(t.encode()) == t);
    CHECK(validate_pbt(t, dec, omega));
    CHECK(enumerate_pbt(2, Alphabet::parse("a"), omega).size() == 4);
}

TEST_CASE("rooted trees canonicalize the child order") {
    const RootedTree b = RootedTree::vertex("b");
    const RootedTree c = RootedTree::vertex("c");
    const RootedTree t1 = RootedTree::make("a", {{"g", b}, {"r", c}}, O2);
    const RootedTree t2 = RootedTree::make("a", {{"r", c}, {"g", b}}, O2);
    CHECK(t1 == t2);
    CHECK(t1.encode() == "R(a;[r:R(c),g:R(b)])"); // r ranks before g in O2
    CHECK(t1.vertices() == 3);

    // Same multiset of children regardless of construction order, deeper too.
    const RootedTree u1 = RootedTree::make("a", {{"r", t1}, {"r", b}}, O2);
    const RootedTree u2 = RootedTree::make("a", {{"r", b}, {"r", t1}}, O2);
    CHECK(u1 == u2);
}

TEST_CASE("rooted enumeration counts isomorphism classes") {
    // |D|=1, |O|=1 gives the unlabeled rooted trees: 1, 1, 2, 4, 9.
    const int expected[] = {1, 1, 2, 4, 9};
    for (int n = 1; n <= 5; ++n) {
        const auto trees = enumerate_rooted(n, D1, O1);
        CHECK(trees.size() == static_cast<std::size_t>(expected[n - 1]));
        for (const auto& t : trees) {
            CHECK(t.vertices() == n);
            CHECK(validate_rooted(t, D1, O1));
            CHECK(parse_rooted(t.encode(), O1) == t);
        }
    }
    // Two edge types at n=3: two chains x 2 x 2 plus three child multisets.
    CHECK(enumerate_rooted(3, D1, O2).size() == 7);
    const auto two = enumerate_rooted(2, D2, O2);
    CHECK(two.size() == 8); // root dec x edge type x leaf dec
}

TEST_CASE("rooted grafting targets vertices in preorder") {
    const RootedTree a = RootedTree::vertex("a");
    const RootedTree chain = RootedTree::make("a", {{"r", RootedTree::vertex("b")}}, O2);
    CHECK(graft_rooted_at(chain, 0, a, "g", O2).encode() == "R(a;[r:R(b),g:R(a)])");
    CHECK(graft_rooted_at(chain, 1, a, "g", O2).encode() == "R(a;[r:R(b;[g:R(a)])])");
    CHECK_THROWS_AS(graft_rooted_at(chain, 2, a, "g", O2), Error);
    CHECK_THROWS_AS(graft_rooted_at(chain, -1, a, "g", O2), Error);
    CHECK_THROWS_AS(graft_rooted_at(chain, 0, a, "e", O2), Error); // not in omega
}

TEST_CASE("rooted parser accepts non-canonical input and errors cleanly") {
    const RootedTree t = parse_rooted("R(a;[g:R(b),r:R(c)])", O2);
    CHECK(t.encode() == "R(a;[r:R(c),g:R(b)])");
    CHECK_THROWS_AS(parse_rooted("R(a;[x:R(b)])", O2), Error); // unknown type
    CHECK_THROWS_AS(parse_rooted("R(a;[r:R(b)]", O2), Error);  // truncated
    CHECK_THROWS_AS(parse_rooted("R(a)b", O2), Error);         // trailing garbage
    CHECK_THROWS_AS(parse_rooted("", O2), Error);
}
