#include <doctest.h>

#include "incidence/error.hpp"
#include "incidence/kernels.hpp"
#include "support.hpp"

using namespace incidence;
using namespace testing_support;

namespace {

struct KiteFixture {
  PosetPtr p = kite();
  AlgebraPtr a = make_algebra(p, Field::rationals());
  LinearMap phi = kite_phi(a);
  AlgebraElement e(const std::string &text) const { return E(a, text); }
  InnerUnit unit(const std::string &radical) const { return InnerUnit(AlgebraElement::identity(a) + e(radical)); }
};

ErrorKind kind_of(auto &&f)
{
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE_FIXTURE(KiteFixture, "applying maps")
{
  auto f = e("3*e(1) - e(1,2) + 1/2*e(2,3)");
  CHECK(LinearMap::identity(a)(f) == f);
  CHECK(phi(e("e(1,3)")) == e("-e(1,3)"));
  CHECK(phi(e("e(2)")) == e("e(1) + e(3) + e(4)"));
  CHECK(kind_of([&] { phi(E(make_algebra(chain(3), Field::rationals()), "e(1)")); }) == ErrorKind::PosetMismatch);
}

TEST_CASE_FIXTURE(KiteFixture, "composition and inversion")
{
  CHECK(compose(phi, invert_map(phi)) == LinearMap::identity(a));
  CHECK(compose(invert_map(phi), phi) == LinearMap::identity(a));
  CHECK(invert_map(inner_from_unit(unit("e(1,2)"))) == inner_from_unit(unit("-e(1,2)")));
  CHECK(kind_of([&] { invert_map(LinearMap::zero(a)); }) == ErrorKind::Singular);
}

TEST_CASE_FIXTURE(KiteFixture, "Lie automorphism predicate")
{
  CHECK(is_lie_automorphism(phi));
  CHECK(is_lie_automorphism(LinearMap::identity(a)));
  std::vector<AlgebraElement> images;
  for (int i = 0; i < a->dim(); ++i)
    images.push_back(AlgebraElement::basis(a, a->basis(i).first, a->basis(i).second));
  std::swap(images[a->index(0, 0)], images[a->index(0, 1)]);
  CHECK_FALSE(is_lie_automorphism(LinearMap(a, images)));
  CHECK_FALSE(is_lie_automorphism(LinearMap::zero(a)));
}

TEST_CASE_FIXTURE(KiteFixture, "associative predicates")
{
  auto conj = inner_from_unit(unit("e(1,2) - 2*e(1,3)"));
  CHECK(is_algebra_automorphism(conj));
  CHECK_FALSE(is_anti_automorphism(conj));
  CHECK_FALSE(is_algebra_automorphism(phi));
  CHECK_FALSE(is_anti_automorphism(phi));

  auto c3 = chain(3);
  auto a3 = make_algebra(c3, Field::rationals());
  std::vector<AlgebraElement> images;
  for (auto [x, y] : c3->pairs())
    images.push_back(AlgebraElement::basis(a3, 2 - y, 2 - x));
  LinearMap flip(a3, images);
  CHECK(is_anti_automorphism(flip));
  CHECK_FALSE(is_algebra_automorphism(flip));
  CHECK(is_lie_automorphism(-flip));
}

TEST_CASE_FIXTURE(KiteFixture, "conjugation by a unit")
{
  auto conj = inner_from_unit(unit("e(1,2)"));
  CHECK(conj(e("e(2)")) == e("e(2) + e(1,2)"));
  CHECK(conj(e("e(2,3)")) == e("e(2,3) + e(1,3)"));
  CHECK(inner_from_unit(InnerUnit(AlgebraElement::identity(a))) == LinearMap::identity(a));
  CHECK_THROWS_AS(InnerUnit(e("2*e(1) + e(2) + e(3) + e(4)")), Error);
}

TEST_CASE_FIXTURE(KiteFixture, "tilde")
{
  auto conj = inner_from_unit(unit("e(1,2)"));
  CHECK(tilde(conj) == LinearMap::identity(a));
  CHECK(tilde(phi) == phi);
  CHECK(tilde(compose(conj, phi)) == phi);
  CHECK(kind_of([&] { tilde(LinearMap::zero(a)); }) == ErrorKind::NotLieAutomorphism);
}

TEST_CASE_FIXTURE(KiteFixture, "elementary maps")
{
  CHECK(is_elementary(phi));
  CHECK(is_elementary(LinearMap::identity(a)));
  CHECK_FALSE(is_elementary(inner_from_unit(unit("e(1,2)"))));

  auto [theta, sigma] = extract_theta_sigma(phi);
  CHECK(theta == kite_theta(p));
  CHECK(sigma == kite_sigma(p, a->field()));

  auto [id_theta, id_sigma] = extract_theta_sigma(LinearMap::identity(a));
  CHECK(id_theta == BasisBijection::identity(p));
  CHECK(id_sigma == SigmaMap::constant(p, a->one()));

  CHECK(kind_of([&] { extract_theta_sigma(inner_from_unit(unit("e(1,2)"))); }) == ErrorKind::NotElementary);
}

TEST_CASE("theta and sigma of an inverse")
{
  Rng rng(3);
  for (auto p : {kite(), crown(), chain(4)}) {
    auto a = make_algebra(p, Field::prime(5));
    for (int i = 0; i < 10; ++i) {
      auto t = random_triple(a, rng);
      auto tau = build_tau(a, t);
      auto [theta, sigma] = extract_theta_sigma(invert_map(tau));
      CHECK(theta == t.theta.inverse());
      for (auto [x, y] : p->strict_pairs()) {
        auto [u, v] = t.theta(x, y);
        CHECK(sigma(u, v) == t.sigma(x, y).inverse());
      }
    }
  }
}

TEST_CASE_FIXTURE(KiteFixture, "inner-elementary decomposition")
{
  auto beta = unit("e(1,2)");
  auto conj = inner_from_unit(beta);

  auto d1 = decompose_inner_elementary(conj);
  CHECK(d1.unit == beta);
  CHECK(d1.elementary == LinearMap::identity(a));

  auto d2 = decompose_inner_elementary(phi);
  CHECK(d2.unit.beta() == AlgebraElement::identity(a));
  CHECK(d2.elementary == phi);

  auto d3 = decompose_inner_elementary(compose(conj, phi));
  CHECK(d3.unit == beta);
  CHECK(d3.elementary == phi);

  CHECK(kind_of([&] { decompose_inner_elementary(LinearMap::zero(a)); }) == ErrorKind::NotLieAutomorphism);
}

TEST_CASE_FIXTURE(KiteFixture, "properness")
{
  CHECK_FALSE(is_proper(phi).has_value());
  auto w = is_proper(LinearMap::identity(a));
  REQUIRE(w.has_value());
  CHECK(w->kind == ProperWitness::Kind::Automorphism);
  for (const auto &alpha : w->alpha)
    CHECK(alpha.is_zero());
  CHECK(kind_of([&] { is_proper(LinearMap::zero(a)); }) == ErrorKind::NotLieAutomorphism);
  CHECK(is_proper(inner_from_unit(unit("e(1,2) + e(1,4)"))).has_value());
}

TEST_CASE("properness on a three-element chain")
{
  auto p = chain(3);
  auto a = make_algebra(p, Field::rationals());
  ElementaryTriple t{BasisBijection::identity(p), SigmaMap::constant(p, a->one()), scalars(a->field(), {1, 1, 1})};
  auto tau = build_tau(a, t);
  auto w = is_proper(tau);
  REQUIRE(w.has_value());
  CHECK(w->kind == ProperWitness::Kind::Automorphism);
  auto psi = proper_component(tau, *w);
  CHECK(psi == LinearMap::identity(a));
  // tau(e_i) = e_i + alpha_i delta with alpha = (c_1 - 1, c_2, c_3)
  CHECK(w->alpha == scalars(a->field(), {0, 1, 1}));
  CHECK(tau == psi + central_part(a, w->alpha));
}

TEST_CASE("tilde is multiplicative on random compositions")
{
  Rng rng(17);
  for (auto p : {kite(), crown(), chain(4)}) {
    auto a = make_algebra(p, Field::prime(5));
    for (int i = 0; i < 10; ++i) {
      auto m1 = compose(inner_from_unit(random_unit(a, rng)), build_tau(a, random_triple(a, rng)));
      auto m2 = compose(inner_from_unit(random_unit(a, rng)), build_tau(a, random_triple(a, rng)));
      CHECK(is_lie_automorphism(m1));
      CHECK(tilde(compose(m1, m2)) == compose(tilde(m1), tilde(m2)));
    }
  }
}

TEST_CASE("map files")
{
  auto p = kite();
  auto a = make_algebra(p, Field::rationals());
  auto phi = kite_phi(a);
  CHECK(format_map(phi, "") == kite_phi_text);
  CHECK(format_map(phi, "kite.poset") == std::string("map for kite.poset\n") + kite_phi_text);
  CHECK(parse_map_string(a, format_map(phi, "kite.poset")) == phi);

  auto kind = [&](const std::string &text) {
    try {
      parse_map_string(a, text);
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("e(1) -> e(1)\n") == ErrorKind::ParseError);
  CHECK(kind(std::string(kite_phi_text) + "e(4) -> e(4)\n") == ErrorKind::ParseError);
  CHECK(kind("e(1) => e(1)\n") == ErrorKind::ParseError);
}
