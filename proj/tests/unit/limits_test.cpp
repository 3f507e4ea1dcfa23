#include "bidual/limits/iterated.hpp"

#include <doctest.h>

using namespace bidual;

namespace {

TruncatedSeq delta(std::int64_t j) { return TruncatedSeq::delta(GroupTag::ZConv, j); }

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("group operations") {
    CHECK(convolve(delta(2), delta(3)) == delta(5));
    CHECK(involution(delta(2)) == delta(-2));
    CHECK(pair(TestFunctional::heaviside(), delta(-1)).is_zero());
    CHECK(pair(TestFunctional::heaviside(), delta(4)).is_one());
    TruncatedSeq x(GroupTag::ZConv);
    x.add(1, Scalar::i());
    x.add(-2, Scalar(Rational(1, 2)));
    CHECK(involution(x)[-1] == Scalar(0) - Scalar::i());
    CHECK(involution(involution(x)) == x);
    CHECK(x.l1_norm() == doctest::Approx(1.5));
  }

  TEST_CASE("pointwise products") {
    auto e = [](std::int64_t j) { return TruncatedSeq::delta(GroupTag::NPointwise, j); };
    CHECK(pointwise(e(3), e(3)) == e(3));
    CHECK(pointwise(e(3), e(4)).support().empty());
    CHECK(multiply(e(2), e(2)) == e(2));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(convolve(delta(1), TruncatedSeq::delta(GroupTag::NPointwise, 1)), SequenceError);
    CHECK_THROWS_AS(TruncatedSeq::delta(GroupTag::NPointwise, -1), SequenceError);
    CHECK_THROWS_AS(convolve(TruncatedSeq::delta(GroupTag::ZConv, 8, 10), TruncatedSeq::delta(GroupTag::ZConv, 5, 10)),
                    SequenceError);
    CHECK_THROWS(parse_space("l2"));
  }

  TEST_CASE("functionals") {
    CHECK(TestFunctional::parity()(3) == Scalar(-1));
    CHECK(TestFunctional::parse("constant:1/2")(100) == Scalar(Rational(1, 2)));
    auto w = TestFunctional::parse("window:1,2,3@-1");
    CHECK(w(-1) == Scalar(1));
    CHECK(w(1) == Scalar(3));
    CHECK(w(2).is_zero());
    CHECK(w.bound() == doctest::Approx(3.0));
    CHECK_THROWS(TestFunctional::parse("gauss"));
  }
}

TEST_SUITE("families") {
  TEST_CASE("affine index families") {
    CHECK(Family::parse(GroupTag::ZConv, "n")(4) == delta(4));
    CHECK(Family::parse(GroupTag::ZConv, "-n")(4) == delta(-4));
    CHECK(Family::parse(GroupTag::ZConv, "n+3")(4) == delta(7));
    CHECK(Family::parse(GroupTag::ZConv, "2n-1")(4) == delta(7));
    CHECK(Family::parse(GroupTag::ZConv, "0")(4) == delta(0));
    CHECK(Family::parse(GroupTag::ZConv, "n-2").to_string() == "n-2");
    CHECK_THROWS(Family::parse(GroupTag::ZConv, "k"));
    CHECK_THROWS(Family::parse(GroupTag::ZConv, "n*2"));
  }
}

TEST_SUITE("iterated limits") {
  const auto Z = GroupTag::ZConv;
  const auto heaviside = TestFunctional::heaviside();

  TEST_CASE("bilinear witness on the integers") {
    auto r = arens_gap(Family(Z, 1, 0), Family(Z, -1, 0), heaviside);
    REQUIRE(r.all_converged());
    CHECK(*r.orders[0].value == Scalar(0));
    CHECK(*r.orders[1].value == Scalar(1));
    CHECK(r.gap() == 1.0);
  }

  TEST_CASE("gap is exactly one for every N from 2") {
    for (std::int64_t N : {2, 3, 5, 11, 40}) {
      CAPTURE(N);
      auto r = arens_gap(Family(Z, 1, 0), Family(Z, -1, 0), heaviside, {N, 10});
      CHECK(r.all_converged());
      CHECK(r.gap() == 1.0);
      CHECK(r.orders[0].stable_from == 1);
    }
  }

  TEST_CASE("constant families") {
    auto r = arens_gap(Family(Z, 0, 2), Family(Z, 0, -5), heaviside);
    CHECK(r.gap() == 0.0);
    CHECK(*r.orders[0].value == pair(heaviside, convolve(delta(2), delta(-5))));
    auto r2 = arens_gap(Family(Z, 1, 0), Family(Z, 0, -3), TestFunctional::parity());
    CHECK_FALSE(r2.all_converged());
  }

  TEST_CASE("second family constant matches direct evaluation") {
    for (std::int64_t c : {-7, -1, 0, 4}) {
      auto r = arens_gap(Family(Z, -1, 0), Family(Z, 0, c), heaviside);
      REQUIRE(r.all_converged());
      for (const auto& o : r.orders) CHECK(*o.value == pair(heaviside, delta(-1000 + c)));
    }
  }

  TEST_CASE("non-stabilizing sequences are flagged") {
    auto r = arens_gap(Family(Z, 1, 0), Family(Z, 0, 0), TestFunctional::parity());
    CHECK_FALSE(r.orders[0].converged());
    CHECK(r.to_json()["orders"][0]["value"].is_null());
  }

  TEST_CASE("triple witness") {
    std::array<Family, 3> fam{Family(Z, 1, 0), Family(Z, 0, 0), Family(Z, -1, 0)};
    auto r = triple_gap(fam, heaviside, {Perm3::from_label(0), Perm3::from_label(2)});
    REQUIRE(r.all_converged());
    CHECK(*r.orders[0].value == Scalar(0));
    CHECK(*r.orders[1].value == Scalar(1));
    CHECK(r.gap() == 1.0);
  }

  TEST_CASE("relabeling families and orders leaves values unchanged") {
    std::array<Family, 3> fam{Family(Z, 1, 0), Family(Z, 0, 1), Family(Z, -1, 2)};
    std::array<Family, 3> swapped{fam[2], fam[1], fam[0]};
    Perm3 tau = Perm3::from_label(2);
    for (const auto& s : Perm3::all()) {
      auto a = triple_limit(fam, heaviside, s);
      auto b = triple_limit(swapped, heaviside, tau.compose(s));
      CAPTURE(s.label());
      REQUIRE(a.converged());
      REQUIRE(b.converged());
      CHECK(*a.value == *b.value);
    }
    auto ab = arens_gap(Family(Z, 1, 0), Family(Z, -1, 0), heaviside);
    auto ba = arens_gap(Family(Z, -1, 0), Family(Z, 1, 0), heaviside);
    CHECK(*ab.orders[0].value == *ba.orders[1].value);
    CHECK(*ab.orders[1].value == *ba.orders[0].value);
  }

  TEST_CASE("pointwise basis families give gap zero for every pair of orders") {
    auto N = GroupTag::NPointwise;
    for (const auto& psi : {TestFunctional::heaviside(), TestFunctional::parity(), TestFunctional::constant(Scalar(3))}) {
      for (const auto& fams : {std::array<Family, 3>{Family(N, 1, 0), Family(N, 1, 0), Family(N, 1, 0)},
                               std::array<Family, 3>{Family(N, 1, 0), Family(N, 0, 0), Family(N, 1, 0)},
                               std::array<Family, 3>{Family(N, 2, 0), Family(N, 1, 1), Family(N, 1, 0)}}) {
        auto r = triple_all_orders(fams, psi);
        REQUIRE(r.all_converged());
        auto pairs = r.pairwise();
        CHECK(pairs.size() == 15);
        for (const auto& p : pairs) CHECK(*p.gap == 0.0);
      }
    }
  }

  TEST_CASE("witness reports") {
    auto z = run_witness(GroupTag::ZConv, heaviside);
    CHECK(z.expected());
    auto n = run_witness(GroupTag::NPointwise, heaviside);
    CHECK(n.expected());
    auto j = z.to_json();
    CHECK(j["bilinear"]["gap"] == 1.0);
    CHECK(j["all_orders"]["pairwise"].size() == 15);
    CHECK(z.to_text().find("gap = 1") != std::string::npos);
  }

  TEST_CASE("bad settings") {
    CHECK_THROWS(arens_gap(Family(Z, 1, 0), Family(Z, 1, 0), heaviside, {0, 10}));
    CHECK_THROWS(arens_gap(Family(Z, 1, 0), Family(GroupTag::NPointwise, 1, 0), heaviside));
  }
}
