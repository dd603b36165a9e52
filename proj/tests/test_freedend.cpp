#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchbox/freedend.hpp"
#include "matchbox/structures.hpp"

using namespace matchbox;

namespace {
const Pbt L = Pbt::leaf();

Pbt v(const std::string& d) { return Pbt::node(d, "e", L, "e", L); }

DendElem one(const Pbt& t) { return DendElem::basis(t, Rational(1)); }
} // namespace

TEST_CASE("single-vertex products match the worked examples") {
    // With A = B(a,e,|,e,|), B = B(b,e,|,e,|):
    //   a prec_al b  = a with b hung on the right by al
    //   a succ_be b  = b with a hung on the left by be
    const Pbt A = v("a"), B = v("b");
    CHECK(dend_prec_basis(A, B, "α").encode() == "1*B(a,e,|,α,B(b,e,|,e,|))");
    CHECK(dend_succ_basis(A, B, "β").encode() == "1*B(b,β,B(a,e,|,e,|),e,|)");
}

TEST_CASE("unit rules anchor the recursion") {
    const Pbt A = v("a");
    CHECK(dend_prec_basis(A, L, "r") == one(A));  // S prec |  = S
    CHECK(dend_prec_basis(L, A, "r").is_zero());  // | prec U  = 0
    CHECK(dend_succ_basis(L, A, "r") == one(A));  // | succ U  = U
    CHECK(dend_succ_basis(A, L, "r").is_zero());  // S succ |  = 0
    CHECK_THROWS_AS(dend_prec_basis(L, L, "r"), Error); // leaf-leaf undefined
}

TEST_CASE("the empty index is rejected on the bilinear surface") {
    const DendElem A = one(v("a")), B = one(v("b"));
    CHECK_THROWS_AS(dend_prec(A, B, "e"), Error);
    CHECK_THROWS_AS(dend_succ(A, B, "e"), Error);
    // Two internal trees with index "e" cannot arise from a valid call chain.
    CHECK_THROWS_AS(dend_prec_basis(v("a"), v("b"), "e"), Error);
    CHECK_THROWS_AS(dend_succ_basis(v("a"), v("b"), "e"), Error);
}

TEST_CASE("three-factor expansions agree with the dendriform identities") {
    const Pbt A = v("a"), B = v("b"), C = v("c");
    const DendElem a = one(A), b = one(B), c = one(C);

    SUBCASE("ddf1 on singles, alpha=r beta=g") {
        const DendElem lhs = dend_prec(dend_prec(a, b, "r"), c, "g");
        const DendElem rhs = dend_prec(a, dend_prec(b, c, "g"), "r") +
                             dend_prec(a, dend_succ(b, c, "r"), "g");
        CHECK(lhs == rhs);
        // Frozen expansion of the left side: two right combs.
        CHECK(lhs.encode() ==
              "1*B(a,e,|,g,B(c,r,B(b,e,|,e,|),e,|)) + 1*B(a,e,|,r,B(b,e,|,g,B(c,e,|,e,|)))");
    }

    SUBCASE("ddf2 on singles collapses to a single tree") {
        const DendElem lhs = dend_prec(dend_succ(a, b, "r"), c, "g");
        CHECK(lhs == dend_succ(a, dend_prec(b, c, "g"), "r"));
        CHECK(lhs.encode() == "1*B(b,r,B(a,e,|,e,|),g,B(c,e,|,e,|))");
    }

    SUBCASE("ddf3 on singles") {
        CHECK(dend_succ(a, dend_succ(b, c, "g"), "r") ==
              dend_succ(dend_prec(a, b, "g"), c, "r") + dend_succ(dend_succ(a, b, "r"), c, "g"));
    }
}

TEST_CASE("products are graded by vertex count") {
    const Alphabet dec = Alphabet::parse("a,b");
    const Alphabet omega = Alphabet::parse("r,g");
    for (const Pbt& s : enumerate_pbt(2, dec, omega))
        for (const Pbt& u : enumerate_pbt(1, dec, omega)) {
            const DendElem p = dend_prec_basis(s, u, "g");
            for (const auto& [t, c] : p.terms()) {
                (void)c;
                CHECK(t.vertices() == 3);
            }
            const DendElem q = dend_succ_basis(s, u, "r");
            for (const auto& [t, c] : q.terms()) {
                (void)c;
                CHECK(t.vertices() == 3);
            }
        }
}

TEST_CASE("the structure wrapper validates alphabets") {
    const auto s = make_free_dend(Alphabet::parse("a"), Alphabet::parse("r,g"));
    const DendElem a = one(v("a")), z = one(v("z"));
    CHECK_THROWS_AS(s.apply(OpName::Prec, "x", a, a), Error);  // unknown index
    CHECK_THROWS_AS(s.apply(OpName::Prec, "r", a, z), Error);  // decoration not in D
    CHECK_THROWS_AS(s.apply(OpName::Star, "r", a, a), Error);  // no such operation
    CHECK(s.apply(OpName::Bullet, "r", a, a) ==
          s.apply(OpName::Prec, "r", a, a) + s.apply(OpName::Succ, "r", a, a));
}

TEST_CASE("utf-8 type symbols flow through products") {
    const DendElem a = one(v("a")), b = one(v("b"));
    CHECK(dend_prec(a, b, "α").encode() == "1*B(a,e,|,α,B(b,e,|,e,|))");
}
