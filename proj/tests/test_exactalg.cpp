#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchbox/lincomb.hpp"
#include "matchbox/matrix.hpp"
#include "matchbox/poly.hpp"
#include "matchbox/rational.hpp"
#include "matchbox/rng.hpp"
#include "matchbox/seqn.hpp"

using namespace matchbox;

namespace {
// Minimal ordered key for LinComb tests.
struct K {
    std::string s;
    std::string encode() const { return s; }
    bool operator<(const K& o) const { return s < o.s; }
    bool operator==(const K& o) const { return s == o.s; }
};
} // namespace

TEST_CASE("rational parsing and canonical text") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-2") == rat(-2));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(to_string(rat(6, -8)) == "-3/4");
    CHECK(to_string(rat(5, 1)) == "5");
    CHECK(to_string(parse_rational("-7/21")) == "-1/3");
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1/"), Error);
    CHECK_THROWS_AS(rat(1, 0), Error);
}

TEST_CASE("rng streams are deterministic and forks are independent") {
    Rng a(42), b(42);
    for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());

    Rng root(7);
    Rng f0 = root.fork(0);
    Rng f1 = root.fork(1);
    Rng f0again = root.fork(0);
    CHECK(f0.next() == f0again.next());
    bool diverged = false;
    Rng g0 = root.fork(0), g1 = root.fork(1);
    for (int i = 0; i < 8; ++i) diverged |= (g0.next() != g1.next());
    CHECK(diverged);

    Rng r(3);
    for (int i = 0; i < 64; ++i) {
        const long long v = r.int_in(-2, 5);
        CHECK(v >= -2);
        CHECK(v <= 5);
    }
}

TEST_CASE("lincomb arithmetic keeps no zero terms") {
    LinComb<K> v;
    v.add_term(K{"b"}, rat(1, 2));
    v.add_term(K{"a"}, rat(-1));
    CHECK(v.encode() == "-1*a + 1/2*b");
    v.add_term(K{"b"}, rat(-1, 2));
    CHECK(v.term_count() == 1);
    v += LinComb<K>::basis(K{"a"}, rat(1));
    CHECK(v.is_zero());
    CHECK(v.encode() == "0");

    const auto w = rat(3) * LinComb<K>::basis(K{"z"}, rat(1, 3));
    CHECK(w.coeff(K{"z"}) == 1);

    // bilinear of single terms multiplies coefficients through.
    LinComb<K> x = LinComb<K>::basis(K{"p"}, rat(2));
    LinComb<K> y = LinComb<K>::basis(K{"q"}, rat(3, 5));
    const auto prod = bilinear(x, y, [](const K& l, const K& r) {
        return LinComb<K>::basis(K{l.s + r.s}, rat(1));
    });
    CHECK(prod.coeff(K{"pq"}) == rat(6, 5));
}

TEST_CASE("polynomial ring and integration") {
    const Poly x = Poly::monomial(1);
    const Poly p = (x + Poly::constant(rat(1))) * (x + Poly::constant(rat(1)));
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(2) == 1);
    CHECK(p.encode() == "1*x^2 + 2*x + 1");
    CHECK((p - p).is_zero());
    CHECK(Poly::zero().encode() == "0");
    CHECK(Poly::zero().degree() == -1);

    // Power rule: integrating x^k gives x^(k+1)/(k+1).
    for (int k = 0; k <= 6; ++k)
        CHECK(integrate(Poly::monomial(k)) == Poly::monomial(k + 1, Rational(1) / (k + 1)));
    CHECK(kernel_integral(Poly::constant(rat(1)), Poly::monomial(1)) ==
          Poly::monomial(2, rat(1, 2)));
    CHECK(integrate(Poly::zero()).is_zero());
}

TEST_CASE("pointwise sequences and the running sum") {
    const SeqN a(std::vector<Rational>{rat(1), rat(2), rat(3)});
    const SeqN b(std::vector<Rational>{rat(-1), rat(1, 2), rat(0)});
    CHECK((a * b).values() == std::vector<Rational>{rat(-1), rat(1), rat(0)});
    CHECK(a.encode() == "[1, 2, 3]");
    CHECK_THROWS_AS(a + SeqN(std::vector<Rational>{rat(1), rat(1)}), Error);
    CHECK_THROWS_AS(SeqN(std::vector<Rational>{rat(1)}), Error); // length >= 2

    CHECK(running_sum(a).values() == std::vector<Rational>{rat(0), rat(1), rat(3)});

    // Strictly-lower summation obeys the discrete integration by parts with
    // weight +1: sum_{j,k<i} = (k<j) + (j<k) + (j=k).
    CHECK(running_sum_weight(6) == Rational(1));
    const SeqN pa = running_sum(a), pb = running_sum(b);
    CHECK(pa * pb == running_sum(a * pb) + running_sum(pa * b) + running_sum(a * b));
}

TEST_CASE("matrices over Q") {
    const Mat e12 = Mat::unit(2, 1, 2);
    const Mat e21 = Mat::unit(2, 2, 1);
    CHECK(e12 * e21 == Mat::unit(2, 1, 1));
    CHECK((e12 * e12).is_zero());
    CHECK(commutator(e12, e21) == Mat::unit(2, 1, 1) - Mat::unit(2, 2, 2));
    CHECK(Mat::identity(2) * e12 == e12);
    CHECK(e12.encode() == "[[0,1],[0,0]]");
    CHECK(parse_matrix_unit("E21", 2) == e21);
    CHECK_THROWS_AS(parse_matrix_unit("E13", 2), Error); // out of range
    CHECK_THROWS_AS(parse_matrix_unit("X11", 2), Error);
    CHECK_THROWS_AS(parse_matrix_unit("E1", 2), Error);
    CHECK_THROWS_AS(e12 + Mat::identity(3), Error);
}
