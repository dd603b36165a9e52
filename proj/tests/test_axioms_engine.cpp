#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchbox/jsonio.hpp"
#include "matchbox/structures.hpp"

using namespace matchbox;

namespace {
const Alphabet D1 = Alphabet::parse("a");
const Alphabet O2 = Alphabet::parse("r,g");
} // namespace

TEST_CASE("axiom registry") {
    for (const auto& name : axiom_set_names()) {
        const auto set = axiom_set<DendElem>(name);
        CHECK(set.name == name);
        CHECK_FALSE(set.identities.empty());
        CHECK_FALSE(set.required.empty());
    }
    CHECK(axiom_set<DendElem>("matching-tridendriform").identities.size() == 7);
    CHECK(axiom_set<DendElem>("matching-lie").identities.size() == 2);
    CHECK_THROWS_AS(axiom_set<DendElem>("dendriform"), Error);
}

TEST_CASE("missing operations are reported before any work") {
    const auto s = make_free_dend(D1, O2);
    const auto prelie = axiom_set<DendElem>("matching-prelie"); // needs star
    CHECK_THROWS_AS(check_exhaustive(s, prelie, pbt_basis_pool(D1, O2, 1)), Error);
}

TEST_CASE("exhaustive trial counting") {
    const auto s = make_free_dend(D1, O2);
    const auto set = axiom_set<DendElem>("matching-dendriform");
    const auto pool = pbt_basis_pool(D1, O2, 1);
    REQUIRE(pool.size() == 1);
    const Verdict v = check_exhaustive(s, set, pool);
    CHECK(v.pass);
    // 3 identities x 2 x 2 index pairs, one triple each.
    CHECK(v.trials == 12);
    CHECK(v.mode == Mode::Exhaustive);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("a failing witness is sound and canonical") {
    // The bullet of the free structure is not matching associative once Omega
    // has two symbols; the first witness in canonical order must reproduce
    // its recorded residual exactly.
    const auto s = make_free_dend(D1, O2);
    const auto set = axiom_set<DendElem>("matching-associative");
    const auto pool = pbt_basis_pool(D1, O2, 1);
    const Verdict v = check_exhaustive(s, set, pool);
    REQUIRE_FALSE(v.pass);
    REQUIRE(v.witness.has_value());
    const Witness& w = *v.witness;
    CHECK(w.identity == "massoc");

    const auto elem = [](const std::string& text) {
        REQUIRE(text.substr(0, 2) == "1*");
        return DendElem::basis(parse_pbt(text.substr(2)));
    };
    const DendElem r = set.identities[0].residual(s, w.alpha, w.beta, elem(w.x), elem(w.y),
                                                  elem(w.z));
    CHECK_FALSE(r.is_zero());
    CHECK(r.encode() == w.residual);

    // find_counterexample is the same sweep.
    const auto cx = find_counterexample(s, set, pool);
    REQUIRE(cx.has_value());
    CHECK(cx->residual == w.residual);
}

TEST_CASE("verdicts do not depend on thread count or repetition") {
    const auto s = make_free_dend(D1, O2);
    const auto sampler = pool_sampler(pbt_keys(D1, O2, 2));
    CheckOptions opt;
    opt.seed = 42;
    opt.trials = 40;

    for (const char* axioms : {"matching-dendriform", "matching-associative"}) {
        const auto set = axiom_set<DendElem>(axioms);
        opt.threads = 1;
        const std::string once = check_report("free-dend", axioms, check_random(s, set, sampler, opt)).dump();
        const std::string again =
            check_report("free-dend", axioms, check_random(s, set, sampler, opt)).dump();
        opt.threads = 4;
        const std::string wide = check_report("free-dend", axioms, check_random(s, set, sampler, opt)).dump();
        CHECK(once == again);
        CHECK(once == wide);
    }

    // Same determinism for the exhaustive sweep with a failing verdict.
    const auto set = axiom_set<DendElem>("matching-associative");
    const auto pool = pbt_basis_pool(D1, O2, 1);
    const Verdict v1 = check_exhaustive(s, set, pool, 1);
    const Verdict v4 = check_exhaustive(s, set, pool, 4);
    CHECK(v1.trials == v4.trials);
    CHECK(verdict_json(v1).dump() == verdict_json(v4).dump());
}

TEST_CASE("random mode seeds are reported and matter") {
    const auto s = make_free_dend(D1, O2);
    const auto set = axiom_set<DendElem>("matching-dendriform");
    const auto sampler = pool_sampler(pbt_keys(D1, O2, 2));
    CheckOptions opt;
    opt.trials = 10;
    opt.seed = 5;
    const Verdict v = check_random(s, set, sampler, opt);
    CHECK(v.pass);
    CHECK(v.seed == 5);
    CHECK(v.trials == 12 * 10);
    CHECK(verdict_json(v)["seed"] == 5);
    CHECK(verdict_json(check_exhaustive(s, set, pbt_basis_pool(D1, O2, 1))).contains("seed") ==
          false);
}

TEST_CASE("scalar multiples of one associative product are totally compatible") {
    // bullet_r = xy, bullet_g = 2xy on Q[x]: massoc, tcswap and wm1 all hold.
    OpStructure<Poly> s;
    s.name = "scaled-mul";
    s.omega = O2;
    s.set_op(OpName::Bullet, [](const std::string& w, const Poly& x, const Poly& y) {
        return w == "g" ? rat(2) * (x * y) : x * y;
    });
    CheckOptions opt;
    opt.seed = 9;
    opt.trials = 30;
    const auto sampler = poly_sampler(3);
    CHECK(check_random(s, axiom_set<Poly>("totally-compatible"), sampler, opt).pass);
    CHECK(check_random(s, axiom_set<Poly>("matching-associative"), sampler, opt).pass);
    CHECK(check_random(s, axiom_set<Poly>("compatible-associative"), sampler, opt).pass);
}

TEST_CASE("with one type symbol the free bullet is associative") {
    const Alphabet O1 = Alphabet::parse("r");
    const auto s = make_free_dend(D1, O1);
    const Verdict v =
        check_exhaustive(s, axiom_set<DendElem>("matching-associative"), pbt_basis_pool(D1, O1, 2));
    CHECK(v.pass);
    CHECK(v.trials == 27);
}

TEST_CASE("pool sampling is seed-stable") {
    const auto keys = pbt_keys(D1, O2, 2);
    Rng r1(77), r2(77);
    for (int i = 0; i < 10; ++i)
        CHECK(sample_element(keys, r1).encode() == sample_element(keys, r2).encode());
}
