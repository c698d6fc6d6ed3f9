#include <doctest.h>

#include <thread>

#include "prin/derive.hpp"
#include "prin/ideal.hpp"

using namespace prin;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, std::move(ps));
}

} // namespace

TEST_CASE("reduced groebner bases") {
  auto r = xyz();
  SUBCASE("already reduced") {
    Ideal a = I(r, {"x", "y"});
    auto basis = a.groebner_basis();
    REQUIRE(basis.size() == 2);
    // ascending by leading monomial: y < x under grevlex with x > y > z
    CHECK(basis[0] == parse_polynomial("y", r));
    CHECK(basis[1] == parse_polynomial("x", r));
  }
  SUBCASE("z^3 enters the basis") {
    Ideal a = I(r, {"x*y - z^3", "x", "y"});
    CHECK(a.equals(I(r, {"x", "y", "z^3"})));
    auto basis = a.groebner_basis();
    CHECK(basis.size() == 3);
  }
  SUBCASE("principal ideal is its own basis, made monic") {
    Ideal a = I(r, {"x^2 + y^3 - z^6"});
    auto basis = a.groebner_basis();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == parse_polynomial("z^6 - y^3 - x^2", r));
  }
  SUBCASE("determinism across equal ideals") {
    Ideal a = I(r, {"x + y", "y^2 - z", "x*z"});
    Ideal b = I(r, {"y^2 - z", "x*z", "x + y"});
    CHECK(a.groebner_basis() == b.groebner_basis());
  }
}

TEST_CASE("normal forms and membership") {
  auto r = xyz();
  CHECK(I(r, {"x", "y", "x*y - z^3"}).normal_form(parse_polynomial("z^3", r)).is_zero());
  CHECK(I(r, {"x", "y"}).normal_form(parse_polynomial("1", r)) ==
        parse_polynomial("1", r));
  // y^{2m} for m = 3 lies in (x^2, x*y^3, y^4)
  Ideal a = I(r, {"x^2", "x*y^3", "y^4"});
  CHECK(a.normal_form(parse_polynomial("y^6", r)).is_zero());
}

TEST_CASE("sums, products and powers") {
  auto r = xyz();
  CHECK(ideal_product(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
  CHECK(ideal_power(I(r, {"x", "y"}), 2).equals(I(r, {"x^2", "x*y", "y^2"})));
  Ideal s = ideal_sum(I(r, {"x*y - z^3"}), ideal_power(I(r, {"x", "y", "z^2"}), 2));
  CHECK(s.equals(I(r, {"x*y", "x^2", "y^2", "x*z^2", "y*z^2", "z^3"})));
}

TEST_CASE("marked sums and products") {
  auto r = xyz();
  MarkedIdeal a(I(r, {"x"}), 2);
  MarkedIdeal b(I(r, {"y"}), 3);
  CHECK(marked_product(a, b).marking == 5);
  CHECK_THROWS_AS(marked_sum(a, b), precondition_error);
  MarkedIdeal c(I(r, {"y"}), 2);
  CHECK(marked_sum(a, c).marking == 2);
  CHECK_THROWS_AS(MarkedIdeal(I(r, {"x"}), 0), precondition_error);
}

TEST_CASE("containment and equality") {
  auto r = xyz();
  CHECK(I(r, {"x", "y"}).contains_ideal(I(r, {"x^2 + y^5"})));
  CHECK_FALSE(I(r, {"x"}).equals(I(r, {"x^2"})));
  // (D(I))^2 inside I*(1) for I = (x^2, x*y^3, y^4)
  Ideal a = I(r, {"x^2", "x*y^3", "y^4"});
  Ideal d = derivative_ideal(a);
  CHECK(a.contains_ideal(ideal_power(d, 2)));
}

TEST_CASE("contains_one") {
  auto r = xyz();
  CHECK(I(r, {"x", "x + 1"}).contains_one());
  CHECK_FALSE(I(r, {"x", "y", "z^2"}).contains_one());
  // D^2 of an order-2 ideal is the unit ideal
  Ideal a = I(r, {"x^2 + y^3 - z^6"});
  CHECK(derivative_ideal_r(a, 2).contains_one());
}

TEST_CASE("orders of ideals") {
  auto r4 = make_ring({"x", "y", "z", "w"});
  Ideal a(r4, {parse_polynomial("x^3 - y^2", r4),
               parse_polynomial("x^4 + x*z^2 - w^3", r4)});
  CHECK(a.ord_at_origin() == Ord(2));
  CHECK(Ideal::unit(r4).ord_at_origin() == Ord(0));
  Ideal b(r4, {parse_polynomial("x^3", r4),
               parse_polynomial("x*z^2 - w^3", r4)});
  CHECK(b.ord_at_origin() == Ord(3));
}

TEST_CASE("max_order via the derivative criterion") {
  auto r = xyz();
  CHECK(max_order(I(r, {"x^2 + y^3 - z^6"})) == 2);
  CHECK(max_order(Ideal::unit(r)) == 0);
  CHECK(max_order(I(r, {"x^3 + (y^2 - z^6)^2 + z^21"})) == 3);
  auto r4 = make_ring({"x", "z", "w"});
  CHECK(max_order(Ideal(r4, {parse_polynomial("x^3", r4),
                             parse_polynomial("x*z^2 - w^3", r4)})) == 3);
}

TEST_CASE("cosupport ideals") {
  auto r = xyz();
  // order-2 locus of the pinch point is the line x = y = 0
  Ideal a = I(r, {"x^2 - y^2*z"});
  Ideal cos = cosupport_ideal(a, 2);
  Ideal line = I(r, {"x", "y"});
  // equal radicals: the line ideal contains cos, and some power of each
  // line generator lies in cos
  CHECK(line.contains_ideal(cos));
  CHECK(cos.contains(parse_polynomial("x", r)));
  CHECK(cos.contains(parse_polynomial("y^2", r)));

  CHECK(cosupport_ideal(a, 1).equals(a));
  Ideal c = cosupport_ideal(I(r, {"x*y - z^3"}), 2);
  CHECK(c.equals(I(r, {"x", "y", "z^2"})));
}

TEST_CASE("resource caps raise structured errors") {
  auto r = xyz();
  Limits saved = global_limits();
  global_limits().max_total_degree = 3;
  Ideal a = I(r, {"x^5 + y^2", "y^5 + z^2", "z^5 + x^2"});
  CHECK_THROWS_AS(a.groebner_basis(), resource_limit_error);
  global_limits() = saved;
}

TEST_CASE("basis cache is shared and race-safe") {
  auto r = xyz();
  Ideal a = I(r, {"x + y", "y^2 - z", "x*z"});
  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(8, 0);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&a, &sizes, t] { sizes[t] = a.groebner_basis().size(); });
  for (auto& t : threads) t.join();
  for (auto s : sizes) CHECK(s == sizes[0]);
}

TEST_CASE("cosupport monotonicity on random instances") {
  auto r = xyz();
  // containment I within J implies cosupp(J, m) empty whenever cosupp(I, m) is
  std::vector<std::pair<Ideal, Ideal>> pairs = {
      {I(r, {"x^2"}), I(r, {"x^2", "y"})},
      {I(r, {"x*y - z^3"}), I(r, {"x*y - z^3", "z^2"})},
      {I(r, {"x^3", "y^3"}), I(r, {"x", "y^3"})},
  };
  for (const auto& [small, big] : pairs) {
    REQUIRE(big.contains_ideal(small));
    for (long m = 1; m <= 3; ++m) {
      if (cosupport_ideal(small, m).contains_one())
        CHECK(cosupport_ideal(big, m).contains_one());
    }
  }
  // cosupp(I^c, m*c) vs cosupp(I, m): equal radicals via powers of generators
  Ideal a = I(r, {"x^2 - y^2*z"});
  Ideal c1 = cosupport_ideal(a, 2);
  Ideal c2 = cosupport_ideal(ideal_power(a, 2), 4);
  for (const auto& g : c1.generators()) CHECK(c2.contains(g.pow(4)));
  for (const auto& g : c2.generators()) CHECK(c1.contains(g.pow(4)));
}
