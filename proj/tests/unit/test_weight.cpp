#include <doctest.h>

#include <algorithm>

#include "padictheta/json_io.hpp"
#include "padictheta/weight.hpp"

using namespace padictheta;

namespace {
Signature sig_of(const std::string& s) { return parse_signature(s); }
Weight w(const std::string& sig, const std::string& k) { return parse_weight(sig_of(sig), k); }
}  // namespace

TEST_CASE("signatures") {
  CHECK(sig_of("2,2").n() == 4);
  CHECK(sig_of("2,2;1,3").num_places() == 2);
  CHECK_THROWS_AS(sig_of("2,2;1,1"), Error);
  CHECK_FALSE(sig_of("1,1").is_geometric());
  CHECK(sig_of("2,1").is_geometric());
  CHECK(sig_of("1,1;1,1").is_geometric());
}

TEST_CASE("dominance") {
  CHECK(is_dominant(w("2,2", "2,0,2,0")));
  CHECK_FALSE(is_dominant(w("2,2", "0,2,0,0")));
  CHECK(is_dominant(w("1,1", "0,5")));
}

TEST_CASE("sum-symmetry and depth") {
  auto a = is_sum_symmetric(w("2,2", "1,1,1,1"));
  CHECK(a.sum_symmetric);
  CHECK(a.depth == 2);
  auto b = is_sum_symmetric(w("2,2", "2,0,2,0"));
  CHECK(b.sum_symmetric);
  CHECK(b.depth == 2);
  CHECK_FALSE(is_sum_symmetric(w("2,1", "1,0,2")).sum_symmetric);
  CHECK_FALSE(is_sum_symmetric(w("1,1", "-1,-1")).sum_symmetric);
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(w("2,2", "2,0,2,0")));
  CHECK(is_symmetric(w("2,2", "1,1,1,1")));
  CHECK_FALSE(is_symmetric(w("2,2", "2,0,0,2")));
  CHECK_FALSE(is_symmetric(w("2,2", "2,0,1,1")));
}

TEST_CASE("congruence hypotheses") {
  CHECK(weight_congruent(w("1,1", "2,2"), w("1,1", "22,22"), 5, 1));
  CHECK_FALSE(weight_congruent(w("1,1", "1,1"), w("1,1", "21,21"), 5, 1));
  CHECK(weight_congruent(w("2,2", "3,1,3,1"), w("2,2", "3,1,3,1"), 5, 3));
  CHECK_FALSE(weight_congruent(w("1,1", "2,2"), w("1,1", "12,12"), 5, 1));
  // the gap condition below a+
  CHECK_FALSE(weight_congruent(w("2,1", "3,2,3"), w("2,1", "23,2,23"), 5, 1));
  CHECK(weight_congruent(w("2,1", "4,2,4"), w("2,1", "24,2,24"), 5, 1));
}

TEST_CASE("congruence hypotheses are symmetric and reflexive") {
  const Signature s = sig_of("2,1");
  for (long a = 0; a < 30; a += 3) {
    for (long b = 0; b <= a; b += 2) {
      Weight k(s, {{a, b, a}});
      Weight kp(s, {{a + 20, b, a + 20}});
      CHECK(weight_congruent(k, k, 5, 1));
      CHECK(weight_congruent(k, kp, 5, 1) == weight_congruent(kp, k, 5, 1));
    }
  }
}

TEST_CASE("components along a partition") {
  const Signature s = sig_of("2,2");
  const auto part = parse_partition(s, "1,1/1,1");
  auto c = restrict_components(w("2,2", "2,0,2,0"), part);
  REQUIRE(c.size() == 2);
  CHECK(c[0].entries() == std::vector<std::vector<long>>{{2, 2}});
  CHECK(c[1].is_zero());
  c = restrict_components(w("2,2", "1,1,1,1"), part);
  CHECK(c[0].entries() == std::vector<std::vector<long>>{{1, 1}});
  CHECK(c[1].entries() == std::vector<std::vector<long>>{{1, 1}});
  for (const auto& comp : restrict_components(Weight::zero(s), part)) CHECK(comp.is_zero());
  CHECK(assemble_components(part, restrict_components(w("2,2", "3,1,2,2"), part)) == w("2,2", "3,1,2,2"));
  CHECK_THROWS_AS(restrict_components(w("1,1", "1,1"), part), Error);
}

TEST_CASE("partition indexing") {
  const auto part = parse_partition(sig_of("2,1"), "1,1/1,0");
  CHECK(part.ambient_index(0, 0, 1) == 1);
  CHECK(part.ambient_index(0, 0, 2) == 3);
  CHECK(part.ambient_index(1, 0, 1) == 2);
  CHECK(part.block_of(0, 3) == 0);
  CHECK(part.local_index(0, 2) == 1);
  CHECK_THROWS_AS(parse_partition(sig_of("2,2"), "1,1/1,0"), Error);
}

TEST_CASE("purity") {
  const auto part = parse_partition(sig_of("2,2"), "1,1/1,1");
  auto a = is_pure(w("2,2", "2,0,2,0"), part);
  CHECK(a.pure);
  CHECK(a.index == std::size_t{1});
  CHECK_FALSE(is_pure(w("2,2", "1,1,1,1"), part).pure);
  auto z = is_pure(Weight::zero(sig_of("2,2")), part);
  CHECK(z.pure);
  CHECK_FALSE(z.index.has_value());
  CHECK(is_pure(w("2,2", "0,2,0,2"), part).index == std::size_t{2});
}

TEST_CASE("Weyl conjugation to a dominant weight") {
  const Signature s = sig_of("2,2");
  const auto part = parse_partition(s, "1,1/1,1");
  const Weight lambda = w("2,2", "0,2,0,2");
  CHECK_FALSE(is_dominant(lambda));
  const auto wc = weyl_conjugate_to_dominant(lambda, part);
  CHECK(wc.dominant == w("2,2", "2,0,2,0"));
  CHECK(wc.sigma.order == std::vector<std::size_t>{1, 0});
  CHECK(wc.sigma.index_map == std::vector<std::vector<unsigned>>{{2, 1, 4, 3}});
  auto already = weyl_conjugate_to_dominant(w("2,2", "2,0,2,0"), part);
  CHECK(already.sigma.is_identity());
  CHECK(already.dominant == w("2,2", "2,0,2,0"));
  auto zero = weyl_conjugate_to_dominant(Weight::zero(s), part);
  CHECK(zero.sigma.is_identity());
  CHECK_THROWS_AS(weyl_conjugate_to_dominant(w("2,2", "1,1,1,1"), part), Error);
}

TEST_CASE("Weyl conjugation preserves entries and yields dominant weights") {
  const Signature s = sig_of("3,3");
  const auto part = parse_partition(s, "1,1/1,1/1,1");
  for (std::size_t blk = 0; blk < 3; ++blk) {
    for (long a = 1; a <= 3; ++a) {
      std::vector<Weight> comps(3, Weight::zero(sig_of("1,1")));
      comps[blk] = Weight(sig_of("1,1"), {{a, a}});
      const Weight lambda = assemble_components(part, comps);
      const auto wc = weyl_conjugate_to_dominant(lambda, part);
      CHECK(is_dominant(wc.dominant));
      auto e1 = lambda.entries()[0], e2 = wc.dominant.entries()[0];
      std::sort(e1.begin(), e1.end());
      std::sort(e2.begin(), e2.end());
      CHECK(e1 == e2);
      CHECK(is_pure(wc.dominant, wc.permuted).index == std::size_t{1});
    }
  }
}

TEST_CASE("characters") {
  PAdicCharacterApprox chi{w("1,1", "2,2"), 1, {}, true};
  CHECK_NOTHROW(chi.validate());
  CHECK_FALSE(chi.has_twist());
  PAdicCharacterApprox bad{w("2,2", "2,0,1,1"), 1, {}, true};
  CHECK_THROWS_AS(bad.validate(), Error);
  PAdicCharacterApprox tw{w("1,1", "2,2"), 1, {{1, 1}}, true};
  CHECK(tw.has_twist());
}
