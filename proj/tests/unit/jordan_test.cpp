#include "bidual/jordan/checks.hpp"
#include "bidual/jordan/matrix_io.hpp"
#include "bidual/jordan/peirce.hpp"
#include "bidual/jordan/tensor.hpp"

#include <doctest.h>

using namespace bidual;

namespace {

const char* const kSystems[] = {"cstar:2", "cstar:3", "rect:2x3", "hilbert:4", "jbstar:3"};

}  // namespace

TEST_SUITE("triple system") {
  TEST_CASE("spec parsing") {
    CHECK(TripleSystem::parse("cstar:3").dim() == 9);
    CHECK(TripleSystem::parse("rect:2x3").dim() == 6);
    CHECK(TripleSystem::parse("hilbert:4").name() == "hilbert:4");
    CHECK_THROWS(TripleSystem::parse("cstar:0"));
    CHECK_THROWS(TripleSystem::parse("rect:2"));
    CHECK_THROWS(TripleSystem::parse("spin:3"));
    CHECK_THROWS(TripleSystem::parse("cstar"));
  }

  TEST_CASE("products on small examples") {
    TripleSystem c2 = TripleSystem::parse("cstar:2");
    CVec e11 = named_tripotent(c2, "e11");
    CVec e12 = named_tripotent(c2, "e12");
    CHECK(c2.norm(c2.product(e11, e11, e11) - e11) == doctest::Approx(0.0));
    CHECK(c2.norm(c2.product(e11, e11, e12) - 0.5 * e12) == doctest::Approx(0.0));
    TripleSystem h = TripleSystem::parse("hilbert:2");
    CVec u = CVec::Unit(2, 0), v = CVec::Unit(2, 1);
    CHECK(h.norm(h.product(u, u, v) - 0.5 * v) == doctest::Approx(0.0));
    TripleSystem j = TripleSystem::parse("jbstar:2");
    CVec w(2);
    w << cplx(0, 2), cplx(1, 0);
    CVec expect(2);
    expect << cplx(0, 8), cplx(1, 0);
    CHECK(j.norm(j.product(w, w, w) - expect) == doctest::Approx(0.0));
  }

  TEST_CASE("dimension mismatch") {
    TripleSystem c2 = TripleSystem::parse("cstar:2");
    CHECK_THROWS_AS(c2.product(CVec::Zero(4), CVec::Zero(3), CVec::Zero(4)), DimensionError);
  }

  TEST_CASE("realified operators") {
    Rng rng(7);
    TripleSystem s = TripleSystem::parse("rect:2x3");
    CVec a = s.random_element(rng), b = s.random_element(rng), x = s.random_element(rng);
    CHECK(s.norm(complexify(RVec(Q_operator(s, a, b) * realify(x))) - s.product(a, x, b)) < 1e-12);
    CHECK(s.norm(L_operator(s, a, b) * x - s.product(a, b, x)) < 1e-12);
    CHECK((complexify(realify(x)) - x).norm() == 0.0);
  }

  TEST_CASE("identity suite passes on every kind") {
    for (const char* spec : kSystems) {
      CAPTURE(spec);
      auto checks = jordan_suite(TripleSystem::parse(spec), 100, 42);
      CHECK(checks.size() == 6);
      for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.pass());
      }
    }
  }

  TEST_CASE("suite is reproducible and seed-sensitive") {
    TripleSystem s = TripleSystem::parse("cstar:3");
    auto a = jordan_suite(s, 20, 5), b = jordan_suite(s, 20, 5), c = jordan_suite(s, 20, 6);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].worst == b[i].worst);
    CHECK(a[0].worst != c[0].worst);
  }

  TEST_CASE("associative identity fails for the Jordan product") {
    Rng rng(11);
    TripleSystem s = TripleSystem::parse("cstar:2");
    CVec v[5];
    for (auto& x : v) x = s.random_element(rng);
    CHECK(abelian_residual(s, v[0], v[1], v[2], v[3], v[4]) > 1e-3);
  }

  TEST_CASE("a check with a broken tolerance reports failure") {
    CheckResult c{"x", 1e-3, 1e-10};
    CHECK_FALSE(c.pass());
    CHECK_FALSE(all_pass({c}));
    CHECK(to_json(c)["pass"] == false);
  }
}

TEST_SUITE("peirce") {
  TEST_CASE("ranks") {
    TripleSystem c2 = TripleSystem::parse("cstar:2");
    CHECK(peirce(c2, named_tripotent(c2, "e11")).ranks() == std::array<int, 3>{1, 2, 1});
    CHECK(peirce(c2, named_tripotent(c2, "id")).ranks() == std::array<int, 3>{0, 0, 4});
    CHECK(peirce(c2, named_tripotent(c2, "0")).ranks() == std::array<int, 3>{4, 0, 0});
    TripleSystem c3 = TripleSystem::parse("cstar:3");
    CHECK(peirce(c3, named_tripotent(c3, "e11+e22")).ranks() == std::array<int, 3>{1, 4, 4});
  }

  TEST_CASE("unitary tripotent gives the whole space") {
    TripleSystem c3 = TripleSystem::parse("cstar:3");
    auto pd = peirce(c3, named_tripotent(c3, "id"));
    CHECK((pd.P[2] - CMat::Identity(9, 9)).norm() < 1e-12);
  }

  TEST_CASE("every canonical tripotent passes every check") {
    for (const char* spec : kSystems) {
      TripleSystem s = TripleSystem::parse(spec);
      for (const auto& [name, e] : canonical_tripotents(s)) {
        CAPTURE(spec);
        CAPTURE(name);
        auto pd = peirce(s, e);
        CHECK(all_pass(peirce_projection_checks(s, e, pd)));
        CHECK(all_pass(peirce_rules_residual(s, e, 25, 42)));
      }
    }
  }

  TEST_CASE("non-tripotents are rejected") {
    TripleSystem c2 = TripleSystem::parse("cstar:2");
    CVec e = 2.0 * named_tripotent(c2, "e11");
    CHECK_THROWS_AS(peirce(c2, e), NotTripotentError);
    CHECK_THROWS(named_tripotent(c2, "e13"));
    CHECK_THROWS(named_tripotent(c2, "f11"));
  }

  TEST_CASE("matrix JSON") {
    TripleSystem c2 = TripleSystem::parse("cstar:2");
    auto j = nlohmann::json::parse("[[[1,0],[0,0]],[[0,0],[0,0]]]");
    CHECK((element_from_json(c2, j) - named_tripotent(c2, "e11")).norm() == 0.0);
    CMat m = CMat::Random(2, 3);
    CHECK((matrix_from_json(matrix_to_json(m)) - m).norm() == 0.0);
    CHECK_THROWS(element_from_json(c2, nlohmann::json::parse("[[[1,0]],[[0,0],[0,0]]]")));
    CHECK_THROWS(element_from_json(TripleSystem::parse("cstar:3"), j));
  }
}

TEST_SUITE("tensor") {
  TEST_CASE("adjoint shape and duality") {
    Rng rng(3);
    TrilinearTensor t = TrilinearTensor::random({2, 3, 1, 2}, rng);
    TrilinearTensor a = adjoint(t);
    CHECK(a.dims() == TrilinearTensor::Dims{2, 2, 3, 1});
    std::vector<cplx> x1{unit_disc(rng), unit_disc(rng)}, x2{unit_disc(rng), unit_disc(rng), unit_disc(rng)},
        x3{unit_disc(rng)}, ys{unit_disc(rng), unit_disc(rng)};
    auto fx = t.apply(x1, x2, x3);
    cplx lhs = a.apply(ys, x1, x2)[0] * x3[0];
    cplx rhs = ys[0] * fx[0] + ys[1] * fx[1];
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }

  TEST_CASE("four adjoints return the map and all extensions coincide") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng rng(derive_seed(99, s));
      TrilinearTensor t = TrilinearTensor::random({3, 3, 3, 3}, rng);
      CHECK(max_abs_difference(circledast(t), t) <= 1e-12);
      for (const auto& p : Perm3::all()) CHECK(max_abs_difference(permuted_extension(t, p), t) <= 1e-12);
    }
  }

  TEST_CASE("permuting inputs") {
    Rng rng(5);
    TrilinearTensor t = TrilinearTensor::random({1, 2, 3, 1}, rng);
    TrilinearTensor u = permute_inputs(t, Perm3::from_label(2));
    CHECK(u.dims() == TrilinearTensor::Dims{3, 2, 1, 1});
    CHECK(u.at(2, 1, 0, 0) == t.at(0, 1, 2, 0));
    for (const auto& p : Perm3::all()) {
      CHECK(max_abs_difference(permute_inputs(permute_inputs(t, p), p.inverse()), t) == 0.0);
    }
  }

  TEST_CASE("norm estimate is preserved") {
    Rng rng(8);
    TrilinearTensor t = TrilinearTensor::random({2, 2, 2, 2}, rng);
    double n1 = norm_estimate(t, rng), n2 = norm_estimate(circledast(t), rng);
    CHECK(std::abs(n1 - n2) <= 1e-10 * n1);
    TrilinearTensor e({1, 1, 1, 1});
    e.at(0, 0, 0, 0) = cplx(0, 3);
    CHECK(norm_estimate(e, rng) == doctest::Approx(3.0));
  }

  TEST_CASE("errors") {
    CHECK_THROWS(TrilinearTensor({0, 1, 1, 1}));
    Rng rng(1);
    auto a = TrilinearTensor::random({1, 1, 1, 1}, rng), b = TrilinearTensor::random({1, 1, 1, 2}, rng);
    CHECK_THROWS(max_abs_difference(a, b));
    CHECK_THROWS(a.apply({1.0, 2.0}, {1.0}, {1.0}));
    CHECK(tensor_from_json(tensor_to_json(b)).data() == b.data());
  }
}
