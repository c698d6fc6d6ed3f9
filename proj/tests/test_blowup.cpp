#include <doctest.h>

#include "prin/blowup.hpp"

using namespace prin;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}

Chart make_chart(std::vector<std::string> vars,
                 std::initializer_list<const char*> gens,
                 std::optional<long> marking = std::nullopt) {
  RingPtr r = make_ring(std::move(vars));
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
  Chart c(r, Ideal(r, std::move(ps)));
  c.marking = marking;
  return c;
}

std::size_t var(const Chart& c, const std::string& name) {
  return c.ring->index_of(name);
}

} // namespace

TEST_CASE("pinch point reproduces itself in the z-chart") {
  Chart c = make_chart({"x", "y", "z"}, {"x^2 - y^2*z"});
  Center origin{{0, 1, 2}, std::nullopt};
  Chart child = unmarked_transform(c, origin, 2, "E1");
  REQUIRE(child.ideal.generators().size() == 1);
  CHECK(child.ideal.generators()[0] == P(child.ring, "x_1^2 - y_1^2*z_1"));
  CHECK(child.ring->names() == std::vector<std::string>{"x_1", "y_1", "z_1"});
  REQUIRE(child.divisors.size() == 1);
  CHECK(child.divisors[0].locus == std::optional<std::size_t>(2));
  CHECK(child.divisors[0].pullback_multiplicity == 2);
}

TEST_CASE("threefold t-chart") {
  for (long m : {2L, 3L}) {
    std::string f = "x^2 + y^2 + z^" + std::to_string(m) + "*t^" + std::to_string(m);
    Chart c = make_chart({"x", "y", "z", "t"}, {f.c_str()});
    Center origin{{0, 1, 2, 3}, std::nullopt};
    Chart child = unmarked_transform(c, origin, 3, "E1");
    std::string expect = "x_1^2 + y_1^2 + z_1^" + std::to_string(m) + "*t_1^" +
                         std::to_string(2 * m - 2);
    CHECK(child.ideal.generators()[0] == P(child.ring, expect));
  }
}

TEST_CASE("two z-chart transforms of the degree-one cone") {
  Chart c = make_chart({"x", "y", "z"}, {"x^2 + y^3 - z^6"});
  Center origin{{0, 1, 2}, std::nullopt};
  Chart c1 = unmarked_transform(c, origin, 2, "E1");
  CHECK(c1.ideal.generators()[0] == P(c1.ring, "x_1^2 + (y_1^3 - z_1^3)*z_1"));
  Center origin1{{0, 1, 2}, std::nullopt};
  Chart c2 = unmarked_transform(c1, origin1, 2, "E2");
  CHECK(c2.ideal.generators()[0] == P(c2.ring, "x_2^2 + (y_2^3 - 1)*z_2^2"));
  // the first exceptional divisor leaves the second z-chart
  REQUIRE(c2.divisors.size() == 2);
  CHECK_FALSE(c2.divisors[0].meets_chart());
  CHECK(c2.divisors[1].locus == std::optional<std::size_t>(2));
}

TEST_CASE("three z-chart transforms of the messy surface") {
  Chart c = make_chart({"x", "y", "z"}, {"x^3 + (y^2 - z^6)^2 + z^21"});
  const char* expected[] = {
      "x_1^3 + z_1*(y_1^2 - z_1^4)^2 + z_1^18",
      "x_2^3 + z_2^2*(y_2^2 - z_2^2)^2 + z_2^15",
      "x_3^3 + z_3^3*(y_3^2 - 1)^2 + z_3^12",
  };
  Chart cur = c;
  for (int i = 0; i < 3; ++i) {
    Center origin{{0, 1, 2}, std::nullopt};
    cur = unmarked_transform(cur, origin, 2, "E" + std::to_string(i + 1));
    CHECK(cur.ideal.generators()[0] == P(cur.ring, expected[i]));
  }
}

TEST_CASE("first blow-up of the embedded space curve") {
  Chart c = make_chart({"x", "y", "z", "w"}, {"x^3 - y^2", "x^4 + x*z^2 - w^3"});
  Center origin{{0, 1, 2, 3}, std::nullopt};
  BlowupFan fan = blowup_all_charts(c, origin, "E1");
  CHECK(fan.exponent == 2);
  REQUIRE(fan.children.size() == 4);
  const Chart& xchart = fan.children[0];
  REQUIRE(xchart.ideal.generators().size() == 2);
  CHECK(xchart.ideal.generators()[0] == P(xchart.ring, "x_1 - y_1^2"));
  CHECK(xchart.ideal.generators()[1] ==
        P(xchart.ring, "x_1*(x_1 + z_1^2 - w_1^3)"));
  REQUIRE(xchart.divisors.size() == 1);
  CHECK(xchart.divisors[0].locus == std::optional<std::size_t>(0));
  CHECK(xchart.divisors[0].label == "E1");
}

TEST_CASE("codimension-one centers are trivial blow-ups") {
  Chart c = make_chart({"x"}, {"x^5"}, 2);
  Center z{{0}, std::nullopt};
  BlowupFan fan = blowup_all_charts(c, z, "E1");
  REQUIRE(fan.children.size() == 1);
  CHECK(fan.exponent == 2);
  CHECK(fan.children[0].ideal.generators()[0] == P(fan.children[0].ring, "x^3"));
  CHECK(fan.children[0].ring->names() == std::vector<std::string>{"x"});

  // origin in two variables gives two charts
  Chart s = make_chart({"x", "y"}, {"x^2 + y^3"});
  BlowupFan fan2 = blowup_all_charts(s, Center{{0, 1}, std::nullopt}, "E1");
  CHECK(fan2.children.size() == 2);
}

TEST_CASE("principal monomial codimension-one transform is the unit ideal") {
  Chart c = make_chart({"x", "y"}, {"x^3"});
  Chart child = unmarked_transform(c, Center{{0}, std::nullopt}, 0, "E1");
  CHECK(child.ideal.contains_one());
}

TEST_CASE("divisibility failure reports the violated precondition") {
  Chart c = make_chart({"x", "y", "z"}, {"x^2 - y^2*z"}, 3);
  Center origin{{0, 1, 2}, std::nullopt};
  CHECK_THROWS_AS(blowup_chart(c, origin, 2, "E1"), precondition_error);
}

TEST_CASE("restriction to a hypersurface") {
  Chart c = make_chart({"x", "y", "z"}, {"x*y - z^3"});
  Chart h = restrict_to_hypersurface(c, 0);
  CHECK(h.ring->names() == std::vector<std::string>{"y", "z"});
  CHECK(h.ideal.equals(Ideal(h.ring, {P(h.ring, "z^3")})));

  Chart c2 = make_chart({"x", "y", "z"},
                        {"x*y", "x^2", "y^2", "x*z^2", "y*z^2", "z^3"});
  Chart h2 = restrict_to_hypersurface(c2, 0);
  CHECK(h2.ideal.equals(Ideal(h2.ring, {P(h2.ring, "y^2"), P(h2.ring, "y*z^2"),
                                        P(h2.ring, "z^3")})));

  // a variable absent from the generators just shrinks the ring
  Chart c3 = make_chart({"x", "y", "z"}, {"y^2 - z^3"});
  Chart h3 = restrict_to_hypersurface(c3, 0);
  CHECK(h3.ideal.generators()[0] == P(h3.ring, "y^2 - z^3"));

  // zero restriction is the excluded case
  Chart c4 = make_chart({"x", "y"}, {"x^2", "x*y"});
  CHECK_THROWS_AS(restrict_to_hypersurface(c4, 0), precondition_error);

  // divisor records at the dropped variable disappear, others re-index
  Chart c5 = make_chart({"x", "y", "z"}, {"y^2 - z^3"});
  DivisorRecord d0{"E1", 0, 0, std::nullopt, 2};
  DivisorRecord d1{"E2", 1, 2, std::nullopt, 1};
  c5.divisors = {d0, d1};
  Chart h5 = restrict_to_hypersurface(c5, 0);
  REQUIRE(h5.divisors.size() == 1);
  CHECK(h5.divisors[0].label == "E2");
  CHECK(h5.divisors[0].locus == std::optional<std::size_t>(1));
}

TEST_CASE("divisor bookkeeping under the total-transform rule") {
  Chart c = make_chart({"x", "y", "z"}, {"x^2 - y^2*z"}, 2);
  DivisorRecord d{"E1", 0, 1, std::nullopt, 3}; // divisor at (y = 0)
  c.divisors = {d};
  Center z{{0, 1}, std::nullopt}; // blow up the line x = y = 0
  Chart child = blowup_chart(c, z, 0, "E2");
  REQUIRE(child.divisors.size() == 2);
  // the old divisor at y persists at the same index; new one appended last
  CHECK(child.divisors[0].label == "E1");
  CHECK(child.divisors[0].locus == std::optional<std::size_t>(1));
  CHECK(child.divisors[0].order_index == 0);
  CHECK(child.divisors[1].label == "E2");
  CHECK(child.divisors[1].locus == std::optional<std::size_t>(0));
  CHECK(child.divisors[1].order_index == 1);
  // new multiplicity = exponent + carried multiplicity of divisors through
  // the center
  CHECK(child.divisors[1].pullback_multiplicity == 2 + 3);

  Chart other = blowup_chart(c, z, 1, "E2");
  CHECK_FALSE(other.divisors[0].meets_chart()); // y-divisor leaves its chart
}

TEST_CASE("log serialization round-trips bit-exactly and replays") {
  Chart root = make_chart({"x", "y", "z"}, {"x^2 + y^3 - z^6"});
  BlowupLog log;
  LogStep s0;
  s0.step = 0;
  s0.chart_id = 0;
  s0.center_vars = {"x", "y", "z"};
  s0.exponent_m = 2;
  s0.children = {1, 2, 3};
  s0.new_divisor_label = "E1";
  log.steps.push_back(s0);
  LogStep s1;
  s1.step = 1;
  s1.chart_id = 3;
  s1.center_vars = {"x_1", "y_1", "z_1"};
  s1.exponent_m = 2;
  s1.children = {4, 5, 6};
  s1.new_divisor_label = "E2";
  log.steps.push_back(s1);

  std::string text = log_to_jsonl(log);
  BlowupLog back = log_from_jsonl(text);
  CHECK(log_to_jsonl(back) == text);

  root.id = 0;
  std::vector<Chart> charts = replay_log(root, log);
  REQUIRE(charts.size() == 7);
  CHECK(charts[6].ideal.generators()[0] ==
        P(charts[6].ring, "x_2^2 + (y_2^3 - 1)*z_2^2"));
  // replay determinism
  std::vector<Chart> again = replay_log(root, log);
  for (std::size_t i = 0; i < charts.size(); ++i) {
    CHECK(charts[i].ideal.equals(again[i].ideal));
    CHECK(charts[i].ring->names() == again[i].ring->names());
  }
}

TEST_CASE("marked transforms depend on the order of blow-ups") {
  // A pointed curve: p the origin of 3-space, C the z-axis, I = (x, y).
  // First tower: blow up p, then the birational transform of C.
  Chart root = make_chart({"x", "y", "z"}, {"x", "y"}, 1);

  Chart pi1 = blowup_chart(root, Center{{0, 1, 2}, std::nullopt}, 2, "E1");
  CHECK(pi1.ideal.generators() ==
        std::vector<Polynomial>{P(pi1.ring, "x_1"), P(pi1.ring, "y_1")});
  Chart pi2 = blowup_chart(pi1, Center{{0, 1}, std::nullopt}, 0, "E2");
  CHECK(pi2.ideal.contains_one());
  // exponents of the accumulated pull-back: E1 from the point, E2 from the
  // curve, neither center inside the other's divisor
  REQUIRE(pi2.divisors.size() == 2);
  CHECK(pi2.divisors[0].pullback_multiplicity == 1);
  CHECK(pi2.divisors[1].pullback_multiplicity == 1);

  // Second tower: blow up C first, then the fiber over p. The second center
  // lies inside the first exceptional divisor, so the marked multiplier
  // picks up an extra copy of it: exponents (1, 2) instead of (1, 1).
  Chart sigma1 = blowup_chart(root, Center{{0, 1}, std::nullopt}, 0, "F1");
  CHECK(sigma1.ideal.contains_one()); // transform of the center's own ideal
  long sigma_f1 = sigma1.divisors[0].pullback_multiplicity;
  CHECK(sigma_f1 == 1);
  long sigma_f2 = 1 + sigma_f1; // marking + carried multiplicity through F1

  // Both towers compose to the same morphism; compare the two marked
  // multipliers against the common total pull-back, cross-multiplied to
  // stay inside honest ideals.
  RingPtr r2 = make_ring({"x_2", "y_2", "z_2"});
  Ideal total(r2, {P(r2, "x_2*z_2"), P(r2, "x_2*y_2*z_2")});
  // first tower: divide by x_2^1 z_2^1; second: by x_2^1 z_2^2
  Ideal lhs = ideal_product(total, Ideal(r2, {P(r2, "x_2*z_2^2")}));
  Ideal rhs = ideal_product(total, Ideal(r2, {P(r2, "x_2*z_2")}));
  (void)sigma_f2;
  CHECK_FALSE(lhs.equals(rhs));

  // sanity: the common chart of the first tower indeed has that total
  // pull-back (transform times the recorded multiplier monomial)
  Ideal reassembled = ideal_product(
      pi2.ideal, Ideal(pi2.ring, {P(pi2.ring, "x_2*z_2")}));
  CHECK(reassembled.equals(total.map_ring(pi2.ring, {0, 1, 2})));
}
