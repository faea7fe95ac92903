#include <doctest.h>

#include <algorithm>
#include <set>

#include "artifact/sectors.hpp"

using namespace artifact;

namespace {

// fusion read slot by slot from the one-slot Ising rules
std::set<std::pair<uint32_t, uint32_t>> slot_fusion(const Sector& a, const Sector& b) {
  std::vector<std::vector<IS>> cur{{}};
  for (int i = 0; i < a.n(); ++i) {
    std::vector<std::vector<IS>> nxt;
    for (auto& lab : cur)
      for (IS x : fuse1(a.slot(i), b.slot(i))) {
        auto l2 = lab;
        l2.push_back(x);
        nxt.push_back(l2);
      }
    cur = nxt;
  }
  std::set<std::pair<uint32_t, uint32_t>> out;
  for (auto& lab : cur) {
    Sector s = Sector::from_labels(lab, a.l);
    out.insert({s.d, s.c});
  }
  return out;
}

}  // namespace

TEST_SUITE("sectors") {
  TEST_CASE("ising fusion") {
    CHECK(fuse1(IS::Sigma, IS::Sigma) == std::vector<IS>{IS::Zero, IS::Half});
    CHECK(fuse1(IS::Half, IS::Sigma) == std::vector<IS>{IS::Sigma});
    CHECK(fuse1(IS::Half, IS::Half) == std::vector<IS>{IS::Zero});
    CHECK(intermediates1(IS::Sigma, IS::Sigma, IS::Sigma, IS::Sigma).size() == 2);
    CHECK(intermediates1(IS::Half, IS::Half, IS::Sigma, IS::Sigma) == std::vector<IS>{IS::Zero});
    CHECK(intermediates1(IS::Half, IS::Zero, IS::Zero, IS::Zero).empty());
    CHECK(parse_is("1/16") == IS::Sigma);
    CHECK_THROWS_AS(parse_is("1/4"), std::invalid_argument);
  }

  TEST_CASE("word fusion agrees with slotwise fusion") {
    for (int n = 1; n <= 3; ++n)
      for (int l = 0; l <= n; ++l) {
        auto all = all_sectors(l, n - l);
        long long expect = 1;
        for (int i = 0; i < n; ++i) expect *= 3;
        CHECK(static_cast<long long>(all.size()) == expect);
        for (const auto& a : all)
          for (const auto& b : all) {
            auto f = fuse(a, b);
            std::set<std::pair<uint32_t, uint32_t>> got;
            for (const auto& s : f) got.insert({s.d, s.c});
            CHECK(got == slot_fusion(a, b));
            for (const auto& o : all) CHECK(in_fusion(o, a, b) == (got.count({o.d, o.c}) > 0));
          }
      }
  }

  TEST_CASE("weights and validation") {
    Sector s(parse_word("10|01"), parse_word("01|00"));
    SectorWeight w = weight(s);
    CHECK(w.lwt == Rational(1, 16) + Rational(1, 2));
    CHECK(w.rwt == Rational(1, 16));
    CHECK(w.spin == Rational(1, 2));
    CHECK_THROWS_AS(Sector(parse_word("11"), parse_word("10")), std::invalid_argument);
    CHECK(s.slot(0) == IS::Sigma);
    CHECK(s.slot(1) == IS::Half);
    CHECK(s.slot(2) == IS::Zero);
  }
}
