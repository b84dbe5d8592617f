#include <gtest/gtest.h>

#include "ztau/errors.hpp"
#include "ztau/serialize.hpp"

using namespace ztau;

TEST(Serialize, Element) {
  EXPECT_EQ(element_to_json(RingElement(3, -4)).dump(), "[3,-4]");
  EXPECT_EQ(element_from_json(Json::parse("[106,172]")), RingElement(106, 172));
  const RingElement big(Integer("-123456789012345678901234567890"), Integer(7));
  EXPECT_EQ(element_to_json(big).dump(), "[\"-123456789012345678901234567890\",7]");
  EXPECT_EQ(element_from_json(element_to_json(big)), big);
  EXPECT_THROW(element_from_json(Json::parse("[1]")), DomainError);
  EXPECT_THROW(element_from_json(Json::parse("[1.5,2]")), DomainError);
  EXPECT_THROW(element_from_json(Json::parse("[\"x\",2]")), DomainError);
}

TEST(Serialize, Triple) {
  const PowerTriple t{RingElement(4, 3), RingElement(5, 6), RingElement(6, 6), 3};
  const Json j = triple_to_json(t);
  EXPECT_EQ(j.at("k"), 3);
  EXPECT_EQ(triple_from_json(j), t);
  EXPECT_THROW(triple_from_json(Json::parse("{\"x\":[1,0]}")), DomainError);
}

TEST(Serialize, Params) {
  const Parametrization p{RingElement(1), RingElement::tau(), RingElement(1), -1, true};
  EXPECT_EQ(params_from_json(params_to_json(p)), p);
}

TEST(Serialize, Shift) {
  ShiftResult r;
  r.exponent = 2;
  r.shifted = {RingElement(1, 2), RingElement(2, 4), RingElement(3, 4), 2};
  r.sigma = {embed_conj(r.shifted.x), embed_conj(r.shifted.y), embed_conj(r.shifted.z)};
  const Json j = shift_to_json(r);
  EXPECT_EQ(j.at("N"), 2);
  EXPECT_EQ(j.at("sigma").dump(), "[\"-0.236068\",\"-0.472136\",\"0.527864\"]");
  const ShiftResult back = shift_from_json(j);
  EXPECT_EQ(back.exponent, r.exponent);
  EXPECT_EQ(back.shifted, r.shifted);
  EXPECT_EQ(back.sigma, r.sigma);
}

TEST(Serialize, Report) {
  SearchReport r;
  r.config.k = 3;
  r.config.bound = 12;
  r.config.dedup = false;
  r.pairs_tested = box_pair_count(12);
  r.elapsed = std::chrono::milliseconds(42);
  r.solutions = {{RingElement(4, 3), RingElement(5, 6), RingElement(6, 6), 3}};
  const SearchReport back = report_from_json(report_to_json(r));
  EXPECT_EQ(back.config.k, 3u);
  EXPECT_EQ(back.config.bound, 12);
  EXPECT_FALSE(back.config.dedup);
  EXPECT_EQ(back.pairs_tested, r.pairs_tested);
  EXPECT_EQ(back.elapsed, r.elapsed);
  EXPECT_EQ(back.solutions, r.solutions);
}

TEST(Serialize, Elements) {
  const std::vector<RingElement> xs = {RingElement(0, -1), RingElement::zero(), RingElement::tau()};
  EXPECT_EQ(elements_from_json(elements_to_json(xs)), xs);
  EXPECT_THROW(elements_from_json(Json::parse("{}")), DomainError);
}
