#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skeincalc/intpoly.hpp>
#include <skeincalc/ratfunc.hpp>

#include <cstdint>

using namespace skeincalc;

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

IntPoly random_poly(SplitMix& rng, int max_deg) {
  std::vector<BigInt> c;
  int d = static_cast<int>(rng.range(0, max_deg));
  for (int i = 0; i <= d; ++i) c.push_back(BigInt(rng.range(-5, 5)));
  return IntPoly(std::move(c));
}

RatFunc random_ratfunc(SplitMix& rng) {
  IntPoly den;
  while (den.is_zero()) den = random_poly(rng, 2);
  return RatFunc(random_poly(rng, 3), rng.range(-3, 3), den);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntPoly a({BigInt(1), BigInt(2)});         // 1 + 2t
  IntPoly b({BigInt(-1), BigInt(0), BigInt(3)});  // -1 + 3t^2
  CHECK((a + b) == IntPoly({BigInt(0), BigInt(2), BigInt(3)}));
  CHECK((a * b).to_string() == "6*t^3 + 3*t^2 - 2*t - 1");
  CHECK((a - a).is_zero());
  CHECK(IntPoly::div_exact(a * b, b) == a);
  CHECK_THROWS_AS(IntPoly::div_exact(IntPoly(1) + IntPoly::monomial(BigInt(1), 1), IntPoly(2)),
                  consistency_error);
}

TEST_CASE("content, primitive part, gcd") {
  IntPoly p({BigInt(4), BigInt(-6)});
  CHECK(p.content() == BigInt(2));
  CHECK(p.primitive() == IntPoly({BigInt(-2), BigInt(3)}));

  // gcd((t-1)(t+2)^2, (t+2)(t+3)) == t+2
  IntPoly t1({BigInt(-1), BigInt(1)});
  IntPoly t2({BigInt(2), BigInt(1)});
  IntPoly t3({BigInt(3), BigInt(1)});
  CHECK(IntPoly::gcd(t1 * t2 * t2, t2 * t3) == t2);
  CHECK(IntPoly::gcd(IntPoly(6), IntPoly(-4)) == IntPoly(2));
  CHECK(IntPoly::gcd(IntPoly(), t2) == t2);

  SplitMix rng{13};
  for (int iter = 0; iter < 200; ++iter) {
    IntPoly f = random_poly(rng, 4), g = random_poly(rng, 4), h = random_poly(rng, 3);
    IntPoly d = IntPoly::gcd(f * h, g * h);
    if (!h.is_zero() && !(f * h).is_zero() && !(g * h).is_zero()) {
      // h divides the gcd
      CHECK_NOTHROW(IntPoly::div_exact(d, IntPoly::gcd(d, h.primitive())));
      CHECK(IntPoly::gcd(d, h.primitive()) == h.primitive());
    }
  }
}

TEST_CASE("rational function canonical form") {
  // (t^2 - 1)/(t - 1) reduces to t + 1
  RatFunc r(IntPoly({BigInt(-1), BigInt(0), BigInt(1)}), 0, IntPoly({BigInt(-1), BigInt(1)}));
  CHECK(r == RatFunc::from_poly(IntPoly({BigInt(1), BigInt(1)})));
  // denominator sign and content normalize away
  RatFunc s(IntPoly(2), 0, IntPoly(-4));
  CHECK(s == RatFunc(IntPoly(-1), 0, IntPoly(2)));
  // t factors of the denominator land in the shift
  RatFunc u(IntPoly(1), 0, IntPoly::monomial(BigInt(1), 2));
  CHECK(u == RatFunc::t_power(-2));
  CHECK(RatFunc(0).is_zero());
  CHECK((RatFunc::t_power(5) * RatFunc::t_power(-5)).is_one());
}

TEST_CASE("field axioms on random rational functions") {
  SplitMix rng{99};
  for (int iter = 0; iter < 120; ++iter) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(a / a == RatFunc(1));
    }
    CHECK(a * b == b * a);
  }
}

TEST_CASE("powers and evaluation") {
  RatFunc t = RatFunc::t_power(1);
  RatFunc f = (t - t.pow(-1));  // t - 1/t
  CHECK(f.pow(2) == t.pow(2) - RatFunc(2) + t.pow(-2));
  CHECK(f.eval_at_one().is_zero());
  RatFunc g = RatFunc(IntPoly({BigInt(1), BigInt(1)}), 0, IntPoly({BigInt(2)}));
  CHECK(g.eval_at_one() == Rational(1));
  CHECK(RatFunc(IntPoly(1), 0, IntPoly({BigInt(3)})).eval_at_one() == Rational(1, 3));
}
