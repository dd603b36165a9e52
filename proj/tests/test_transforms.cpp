#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchbox/pipeline.hpp"
#include "matchbox/structures.hpp"
#include "matchbox/transforms.hpp"

using namespace matchbox;

namespace {
const Alphabet O2 = Alphabet::parse("a,b");

CheckOptions quick(std::uint64_t seed) {
    CheckOptions opt;
    opt.seed = seed;
    opt.trials = 40;
    return opt;
}
} // namespace

TEST_CASE("splittings of verified families satisfy their target axioms") {
    const auto kernel = default_kernel_family(O2);
    const auto sums = default_running_sum_family(O2, 6);
    const auto psamp = poly_sampler(4);
    const auto ssamp = seqn_sampler(6);

    const auto dend = rb_to_dendriform(kernel, psamp);
    CHECK(check_random(dend, axiom_set<Poly>("matching-dendriform"), psamp, quick(2)).pass);

    const auto tridend = rb_to_tridendriform(sums, ssamp);
    CHECK(check_random(tridend, axiom_set<SeqN>("matching-tridendriform"), ssamp, quick(3)).pass);

    const auto prelie = dendriform_to_prelie(dend, psamp);
    CHECK(check_random(prelie, axiom_set<Poly>("matching-prelie"), psamp, quick(4)).pass);

    const auto postlie = tridendriform_to_postlie(tridend, ssamp);
    CHECK(check_random(postlie, axiom_set<SeqN>("matching-assoc-postlie"), ssamp, quick(5)).pass);

    // The sum of a dendriform splitting is compatible associative; with the
    // dot present it is matching associative outright.
    const auto assoc_d = split_to_assoc(dend, psamp);
    CHECK(check_random(assoc_d, axiom_set<Poly>("compatible-associative"), psamp, quick(6)).pass);
    const auto assoc_t = split_to_assoc(tridend, ssamp);
    CHECK(check_random(assoc_t, axiom_set<SeqN>("matching-associative"), ssamp, quick(7)).pass);

    // Either route to a bracket.
    CHECK(check_random(antisymmetrize(prelie, psamp), axiom_set<Poly>("compatible-lie"), psamp,
                       quick(8))
              .pass);
    CHECK(check_random(antisymmetrize(postlie, ssamp), axiom_set<SeqN>("matching-postlie"), ssamp,
                       quick(9))
              .pass);
}

TEST_CASE("the split products recombine to the double product") {
    const auto sums = default_running_sum_family(O2, 6);
    const auto tridend = rb_to_tridendriform(sums);
    const auto assoc = split_to_assoc(tridend);
    const SeqN x({rat(1), rat(0), rat(2), rat(-1), rat(1), rat(0)});
    const SeqN y({rat(0), rat(1), rat(1), rat(2), rat(0), rat(1)});
    for (const std::string w : {"a", "b"}) {
        const SeqN expect = x * sums.apply(w, y) + sums.apply(w, x) * y +
                            sums.weight(w) * (x * y);
        CHECK(assoc.apply(OpName::Bullet, w, x, y) == expect);
    }
    // The bullet is all the derived structure exposes.
    CHECK_FALSE(assoc.has_op(OpName::Prec));
    CHECK_FALSE(assoc.has_op(OpName::Succ));
    CHECK_FALSE(assoc.has_op(OpName::Dot));
}

TEST_CASE("checked transforms refuse broken inputs") {
    // Integration operators with a falsified weight fail the source check.
    const auto broken = scaled_family<Poly>([](const Poly& p) { return integrate(p); },
                                            Rational(1), // the true weight is 0
                                            {{"a", rat(1)}, {"b", rat(2)}},
                                            [](const Poly& u, const Poly& v) { return u * v; },
                                            "broken-kernel");
    const auto psamp = poly_sampler(3);
    CHECK_THROWS_AS(rb_to_dendriform(broken, psamp), Error);
    CHECK_THROWS_AS(rb_to_tridendriform(broken, psamp), Error);

    // A non-dendriform structure fails the prelie precondition.
    OpStructure<Poly> bogus;
    bogus.name = "bogus";
    bogus.omega = O2;
    bogus.set_op(OpName::Prec, [](const std::string&, const Poly& x, const Poly& y) { return x * y; });
    bogus.set_op(OpName::Succ, [](const std::string&, const Poly& x, const Poly& y) { return x + y; });
    CHECK_THROWS_AS(dendriform_to_prelie(bogus, psamp), Error);
}

TEST_CASE("rblie_to_prelie is weight-zero only") {
    const auto sums = default_running_sum_family(O2, 6);
    CHECK_THROWS_AS(rblie_to_prelie(sums), Error);

    const auto paybe = default_paybe_family(O2, 2);
    const auto msamp = mat_sampler(2);
    const auto prelie = rblie_to_prelie(paybe, msamp);
    CHECK(check_random(prelie, axiom_set<Mat>("matching-prelie"), msamp, quick(10)).pass);
    // x star_w y = [P_w(x), y].
    const Mat x(2, {rat(1), rat(2), rat(0), rat(1)});
    const Mat y(2, {rat(0), rat(1), rat(1), rat(0)});
    CHECK(prelie.apply(OpName::Star, "a", x, y) == commutator(paybe.apply("a", x), y));
}

TEST_CASE("transforms demand the operations they consume") {
    OpStructure<Poly> empty;
    empty.name = "empty";
    empty.omega = O2;
    CHECK_THROWS_AS(dendriform_to_prelie(empty), Error);
    CHECK_THROWS_AS(tridendriform_to_postlie(empty), Error);
    CHECK_THROWS_AS(split_to_assoc(empty), Error);
    CHECK_THROWS_AS(antisymmetrize(empty), Error);

    // tridendriform_to_postlie needs the dot even when prec/succ exist.
    const auto dend = rb_to_dendriform(default_kernel_family(O2));
    CHECK_THROWS_AS(tridendriform_to_postlie(dend), Error);
}

TEST_CASE("antisymmetrize picks the most structured product") {
    const auto mk = [](bool star, bool astar, bool bullet) {
        OpStructure<Mat> s;
        s.name = "mix";
        s.omega = O2;
        if (star)
            s.set_op(OpName::Star, [](const std::string&, const Mat& x, const Mat& y) { return x * y; });
        if (astar) {
            s.set_op(OpName::AssocStar,
                     [](const std::string&, const Mat& x, const Mat& y) { return x * y; });
            s.set_op(OpName::Circ,
                     [](const std::string&, const Mat& x, const Mat& y) { return commutator(x, y); });
        }
        if (bullet) // reversed product: antisymmetrizing it flips the sign
            s.set_op(OpName::Bullet,
                     [](const std::string&, const Mat& x, const Mat& y) { return y * x; });
        return s;
    };
    const Mat e12 = Mat::unit(2, 1, 2), e21 = Mat::unit(2, 2, 1);
    const Mat comm = commutator(e12, e21);

    // star outranks the reversed bullet.
    const auto from_star = antisymmetrize(mk(true, false, true));
    CHECK(from_star.apply(OpName::Bracket, "a", e12, e21) == comm);
    CHECK_FALSE(from_star.has_op(OpName::Circ));

    // assoc_star outranks bullet and carries the circle product along.
    const auto from_astar = antisymmetrize(mk(false, true, true));
    CHECK(from_astar.apply(OpName::Bracket, "a", e12, e21) == comm);
    CHECK(from_astar.has_op(OpName::Circ));

    const auto from_bullet = antisymmetrize(mk(false, false, true));
    CHECK(from_bullet.apply(OpName::Bracket, "a", e12, e21) == -comm);
}

TEST_CASE("provenance records the construction chain") {
    const auto chain = dendriform_to_prelie(rb_to_dendriform(default_kernel_family(O2)));
    const std::vector<std::string> expect = {"kernel-family", "rb_to_dendriform",
                                             "dendriform_to_prelie"};
    CHECK(chain.provenance == expect);
}

TEST_CASE("transform_target") {
    CHECK(transform_target("dend", false) == "matching-dendriform");
    CHECK(transform_target("tridend", false) == "matching-tridendriform");
    CHECK(transform_target("prelie", false) == "matching-prelie");
    CHECK(transform_target("rblie-prelie", false) == "matching-prelie");
    CHECK(transform_target("postlie", true) == "matching-assoc-postlie");
    CHECK(transform_target("assoc", false) == "compatible-associative");
    CHECK(transform_target("antisym", false) == "compatible-lie");
    CHECK(transform_target("antisym", true) == "matching-postlie");
    CHECK_THROWS_AS(transform_target("nope", false), Error);
}

TEST_CASE("pipeline runs, fails fast, and rejects bad step orders") {
    const auto sums = default_running_sum_family(O2, 6);
    const auto ssamp = seqn_sampler(6);
    CheckOptions opt = quick(12);

    const auto full = run_pipeline<SeqN>(sums, {"tridend", "postlie", "antisym"}, ssamp, opt);
    CHECK(full.passed);
    CHECK(full.report["result"] == "pass");
    REQUIRE(full.report["stages"].size() == 4);
    CHECK(full.report["stages"][0]["stage"] == "source");
    CHECK(full.report["stages"][0]["axioms"] == "matching-rb");
    CHECK(full.report["stages"][3]["axioms"] == "matching-postlie");

    // Lie-side source check only for the Lie-side construction.
    const auto paybe = default_paybe_family(O2, 2);
    const auto lie = run_pipeline<Mat>(paybe, {"rblie-prelie", "antisym"}, mat_sampler(2), opt);
    CHECK(lie.passed);
    CHECK(lie.report["stages"][0]["axioms"] == "matching-rb-lie");
    CHECK(lie.report["stages"][2]["axioms"] == "compatible-lie");

    // A broken source stops at stage one with a recorded witness.
    const auto broken = scaled_family<SeqN>([](const SeqN& v) { return running_sum(v); },
                                            Rational(-1), {{"a", rat(1)}, {"b", rat(2)}},
                                            [](const SeqN& u, const SeqN& v) { return u * v; },
                                            "broken");
    const auto failed = run_pipeline<SeqN>(broken, {"dend", "prelie"}, ssamp, opt);
    CHECK_FALSE(failed.passed);
    CHECK(failed.report["result"] == "fail");
    REQUIRE(failed.report["stages"].size() == 1);
    CHECK(failed.report["stages"][0]["verdict"]["verdict"] == "fail");
    CHECK(failed.report["stages"][0]["verdict"].contains("witness"));

    // Step-order validation.
    CHECK_THROWS_AS(run_pipeline<SeqN>(sums, {"prelie"}, ssamp, opt), Error);
    CHECK_THROWS_AS(run_pipeline<SeqN>(sums, {"dend", "tridend"}, ssamp, opt), Error);
}
