#include "doctest.h"
#include "oracles.hpp"

#include "cellx/errors.hpp"
#include "cellx/lattice.hpp"
#include "cellx/oracle.hpp"
#include "cellx/random.hpp"

using namespace cellx;

namespace {

const RingSpec Z4{Flavor::ZModPSquared, 2};
const RingSpec Z9{Flavor::ZModPSquared, 3};
const RingSpec F2e{Flavor::DualNumbers, 2};

MatrixR m1(const RingSpec& ring, int a, int b) {
  MatrixR m(ring, 1, 1);
  m.set(0, 0, ring.element(a, b));
  return m;
}

std::vector<ChainComplex> frozen_family(const RingSpec& ring) {
  std::vector<ChainComplex> out;
  for (int j = 0; j <= 3; ++j) out.push_back(interval(ring, 0, j));
  out.push_back(disk(ring, 1));
  out.push_back(disk(ring, 2));
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate_chain_maps(sphere(Z4, 0), sphere(Z4, 0)).size() == 4);
  CHECK(enumerate_chain_maps(sphere(Z9, 0), sphere(Z9, 0)).size() == 9);
  const auto maps = enumerate_chain_maps(interval(Z4, 0, 1), interval(Z4, 0, 0));
  CHECK(maps.size() == 2);
  for (const auto& f : maps) {
    CHECK_FALSE(f.at(0)(0, 0).is_unit());
    CHECK_FALSE(f.check_commutes());
  }
  CHECK(enumerate_chain_maps(ChainComplex(Z4), interval(Z4, 0, 2)).size() == 1);
}

TEST_CASE("enumeration agrees with unpruned enumeration") {
  Rng rng(51);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 60; ++t) {
    const auto& ring = t % 2 ? Z4 : F2e;
    const auto x = random_complex(ring, {2, 2}, rng), y = random_complex(ring, {2, 2}, rng);
    std::size_t slots = 0;
    for (int n = 0; n < std::max(x.length(), y.length()); ++n) slots += x.rank(n) * y.rank(n);
    if (slots > 7) continue;
    ++checked;
    std::set<std::string> pruned, naive;
    auto key = [](const std::vector<MatrixR>& mats) {
      std::string s;
      for (const auto& m : mats)
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) s += std::to_string(m(i, j).index()) + ",";
        s += ";";
      return s;
    };
    for (const auto& f : enumerate_chain_maps(x, y)) pruned.insert(key(f.mats()));
    oracle_ref::for_each_map_naive(x, y, [&](const std::vector<MatrixR>& m) { naive.insert(key(m)); });
    REQUIRE(pruned == naive);
  }
  CHECK(checked >= 30);
}

TEST_CASE("maps out of S^0 are the elements of degree 0") {
  Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const auto y = random_complex(Z4, {3, 3}, rng);
    if (y.rank(0) > 4) continue;
    REQUIRE(enumerate_chain_maps(sphere(Z4, 0), y).size() == oracle_ref::ipow(4, y.rank(0)));
  }
}

TEST_CASE("guard refusal") {
  const ChainComplex big(Z4, {4}, {});
  SizeGuard tight{1 << 10};
  CHECK_THROWS_AS(enumerate_chain_maps(big, big, tight), GuardRefusal);
  try {
    enumerate_chain_maps(big, big, tight);
  } catch (const GuardRefusal& e) {
    CHECK(e.required_log2() == doctest::Approx(32.0));
  }
  CHECK_NOTHROW(enumerate_chain_maps(sphere(Z4, 0), big, tight));
}

TEST_CASE("h0 epimorphism examples") {
  CHECK(exists_h0_epi(interval(Z4, 0, 0), interval(Z4, 0, 1)));
  CHECK_FALSE(exists_h0_epi(interval(Z4, 0, 1), interval(Z4, 0, 0)));
  CHECK(exists_h0_epi(interval(Z4, 0, 2), disk(Z4, 1)));
  CHECK_THROWS_AS(exists_h0_epi(sphere(Z4, 1), sphere(Z4, 0)), DomainError);
  CHECK_THROWS_AS(exists_h0_epi(disk(Z4, 1), sphere(Z4, 0)), DomainError);
}

TEST_CASE("cross check examples") {
  const auto a = cross_check(interval(Z4, 0, 2), interval(Z4, 0, 1));
  CHECK(a.agree);
  CHECK(a.lattice);
  CHECK(a.oracle);
  CHECK(a.route == "h0-epi");
  const auto b = cross_check(interval(Z4, 0, 0), interval(Z4, 0, 1));
  CHECK(b.agree);
  CHECK_FALSE(b.lattice);
  const auto c = cross_check(disk(Z4, 1), interval(Z4, 0, 0));
  CHECK(c.agree);
  CHECK(c.lattice);
  const auto d = cross_check(interval(Z4, 1, 1), interval(Z4, 1, 0));
  CHECK(d.route == "h0-epi-desuspended");
  CHECK(d.agree);
  const auto e = cross_check(interval(Z4, 0, 1), interval(Z4, 1, 0));
  CHECK(e.route == "shift");
  CHECK(e.agree);
  const auto f = cross_check(interval(Z4, 0, 1), disk(Z4, 1));
  CHECK(f.route == "acyclic");
  CHECK(f.agree);
}

TEST_CASE("cross check on the frozen family") {
  for (const auto& ring : {Z4, F2e}) {
    const auto family = frozen_family(ring);
    for (const auto& x : family)
      for (const auto& a : family) REQUIRE(cross_check(x, a).agree);
  }
}

TEST_CASE("extensions") {
  const auto e = extend(sphere(Z4, 0), sphere(Z4, 1), {m1(Z4, 0, 1)});
  CHECK(e.extension == interval(Z4, 0, 1));
  CHECK_FALSE(e.inclusion.check_commutes());
  CHECK_FALSE(e.projection.check_commutes());
  const auto zero = extend(interval(Z4, 0, 1), sphere(Z4, 1), {MatrixR(Z4, 1, 1)});
  CHECK(zero.extension == direct_sum(interval(Z4, 0, 1), sphere(Z4, 1)));
  CHECK_THROWS_AS(extend(interval(Z4, 0, 2), sphere(Z4, 2), {MatrixR(Z4, 1, 0), m1(Z4, 1, 0)}),
                  InvalidComplex);
  Rng rng(53);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_complex(Z9, {3, 3}, rng), z = random_complex(Z9, {3, 3}, rng);
    const auto ext = random_extension(x, z, rng());
    REQUIRE_FALSE(validate(ext.extension));
    REQUIRE_FALSE(ext.inclusion.check_commutes());
    REQUIRE_FALSE(ext.projection.check_commutes());
    for (int n = 0; n < ext.extension.length(); ++n)
      REQUIRE(matmul(ext.projection.at(n), ext.inclusion.at(n)).is_zero());
  }
}

TEST_CASE("random extensions are reproducible from the seed") {
  const auto x = interval(Z9, 0, 2), z = interval(Z9, 1, 1);
  const auto a = random_extension(x, z, 77), b = random_extension(x, z, 77);
  CHECK(a.extension == b.extension);
  CHECK(a.seed == 77);
}
