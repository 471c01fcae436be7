#include "doctest.h"
#include "fixtures.hpp"
#include "ttg/io.hpp"

using namespace ttg;
using namespace fixtures;
using io::json;

namespace {

Ring F4() { return Ring::quotient(Fpt(2), poly(Fpt(2), {1, 1, 1})); }
Ring Zhalf() { return Ring::localization(Z(), Z().from_int(2)); }

std::vector<Ring> testbeds() {
  return {Z(),
          Fpt(2),
          Fpt(5),
          Zn(12),
          F4(),
          Zhalf(),
          Ring::localization(Fpt(2), poly(Fpt(2), {0, 1})),
          Ring::product({Zn(4), Zn(3)}),
          Ring::product({Z(), Fpt(3), Zhalf()}),
          Ring::zero_ring()};
}

}  // namespace

TEST_CASE("rings round trip") {
  for (const Ring& r : testbeds()) {
    const json j = io::ring_to_json(r);
    CHECK_MESSAGE(io::ring_from_json(j) == r, j.dump());
    CHECK(io::ring_from_json(io::parse(j.dump(), "ring")) == r);
  }
  CHECK(io::ring_from_json(io::parse(R"({"kind":"quotient","base":{"kind":"Z"},"d":"12"})", "r")) == Zn(12));
  CHECK(io::ring_from_json(io::parse(R"({"kind":"quotient","base":{"kind":"Z"},"d":12})", "r")) == Zn(12));
  CHECK(io::ring_from_json(io::parse(R"({"kind":"localization","base":{"kind":"Z"},"f":"4"})", "r")) == Zhalf());
  // nested descriptors flatten
  const json nested = io::parse(
      R"({"kind":"product","factors":[{"kind":"quotient","base":{"kind":"Z"},"d":"4"},
          {"kind":"product","factors":[{"kind":"quotient","base":{"kind":"Z"},"d":"3"},{"kind":"Z"}]}]})",
      "r");
  CHECK(io::ring_from_json(nested) == Ring::product({Zn(4), Zn(3), Z()}));
  // quotient of a quotient
  const json zz = io::parse(
      R"({"kind":"quotient","base":{"kind":"quotient","base":{"kind":"Z"},"d":"12"},"d":"2"})", "r");
  CHECK(io::ring_from_json(zz) == Zn(2));
}

TEST_CASE("ring names on the command line") {
  CHECK(io::ring_from_argument("Z") == Z());
  CHECK(io::ring_from_argument("Z12") == Zn(12));
  CHECK(io::ring_from_argument("Z/12") == Zn(12));
  CHECK(io::ring_from_argument("Z/(12)") == Zn(12));
  CHECK(io::ring_from_argument("Z[1/2]") == Zhalf());
  CHECK(io::ring_from_argument("F3[t]") == Fpt(3));
  CHECK(io::ring_from_argument(R"({"kind":"Fpt","p":2})") == Fpt(2));
  CHECK_THROWS_AS(io::ring_from_argument("Q"), io::ParseError);
  CHECK_THROWS_AS(io::ring_from_argument("missing.json"), io::ParseError);
}

TEST_CASE("elements round trip") {
  for (const Ring& r : testbeds()) {
    std::vector<Element> xs;
    if (r.cardinality()) {
      xs = r.elements(200);
    } else {
      for (long v : {-7, -1, 0, 1, 2, 30}) xs.push_back(r.from_int(v));
    }
    for (const auto& a : xs) CHECK_MESSAGE(io::element_from_json(r, io::element_to_json(r, a)) == a, r.to_string(a));
  }
  const Ring h = Zhalf();
  const Element x = io::element_from_json(h, io::parse(R"({"num":"-3","den":"2"})", "e"));
  CHECK(h.mul(x, h.from_int(2)) == h.from_int(-3));
  CHECK(io::element_to_json(h, x) == io::parse(R"({"num":"-3","den":"2"})", "e"));
  // reduced on input
  CHECK(io::element_from_json(Zn(12), json("30")) == Zn(12).from_int(6));
  CHECK(io::element_from_json(Fpt(2), io::parse("[3, 0, 2]", "e")) == poly(Fpt(2), {1}));
  // nested product arrays flatten in order
  const Ring p = Ring::product({Zn(4), Zn(3), Z()});
  CHECK(io::element_from_json(p, io::parse(R"(["1", ["2", "5"]])", "e")) ==
        io::element_from_json(p, io::parse(R"(["1", "2", "5"])", "e")));
  const Ring pf = Ring::product({Fpt(2), Z()});
  CHECK(io::element_from_json(pf, io::parse(R"([[1, 1], "4"])", "e")).parts[0] == poly(Fpt(2), {1, 1}).parts[0]);
}

TEST_CASE("malformed elements and rings") {
  CHECK_THROWS_AS(io::element_from_json(Z(), json("12a")), io::ParseError);
  CHECK_THROWS_AS(io::element_from_json(Z(), json(1.5)), io::ParseError);
  CHECK_THROWS_AS(io::element_from_json(Fpt(2), json("x")), io::ParseError);
  CHECK_THROWS_AS(io::element_from_json(Ring::product({Z(), Z()}), io::parse(R"(["1"])", "e")), io::ParseError);
  CHECK_THROWS_AS(io::element_from_json(Zhalf(), io::parse(R"({"num":"1","den":"3"})", "e")), InvalidArgument);
  CHECK_THROWS_AS(io::ring_from_json(io::parse(R"({"kind":"R"})", "r")), io::ParseError);
  CHECK_THROWS_AS(io::ring_from_json(io::parse(R"({"kind":"quotient","base":{"kind":"Z"}})", "r")), io::ParseError);
  CHECK_THROWS_AS(io::ring_from_json(io::parse(R"({"kind":"Fpt"})", "r")), io::ParseError);
  CHECK_THROWS_AS(io::ring_from_json(io::parse(R"(["Z"])", "r")), io::ParseError);
  CHECK_THROWS_AS(io::parse("{", "text"), io::ParseError);
}

TEST_CASE("complexes round trip") {
  const Ring h = Zhalf();
  const json half = io::parse(R"({"ring":{"kind":"localization","base":{"kind":"Z"},"f":"2"},"lo":0,"hi":1,
      "ranks":[1,1],"differentials":[[[{"num":"-3","den":"2"}]]]})",
                              "c");
  const Complex p = io::complex_from_json(half);
  CHECK(p.ring() == h);
  CHECK(p.rank(0) == 1);
  CHECK(p.rank(1) == 1);
  CHECK(io::complex_to_json(p) == half);

  std::vector<Complex> cs{unit(Z()),
                          zero_complex(Zn(12)),
                          cone_of(Zn(12), Zn(12).from_int(4)),
                          tensor(cone_of(Z(), Z().from_int(6)), cone_of(Z(), Z().from_int(10))),
                          shift(cone_of(Fpt(3), poly(Fpt(3), {1, 1})), -2),
                          cone_of(Ring::product({Zn(4), Zhalf()}), Ring::product({Zn(4), Zhalf()}).from_int(3))};
  // a complex whose components have different ranks
  const Ring zz = Ring::product({Z(), Zn(5)});
  cs.push_back(Complex(zz, {cone_of(Z(), Z().from_int(2)).block(0), unit(Zn(5)).block(0)}));
  for (const auto& c : cs) {
    const json j = io::complex_to_json(c);
    CHECK_MESSAGE(io::complex_from_json(j) == c, j.dump());
  }
  CHECK(io::complex_to_json(cs.back()).contains("blocks"));
}

TEST_CASE("malformed complexes") {
  const auto bad = [](const char* text) { return io::complex_from_json(io::parse(text, "c")); };
  CHECK_THROWS_AS(bad(R"({"ring":{"kind":"Z"},"lo":0,"hi":1,"ranks":[1],"differentials":[]})"), io::ParseError);
  CHECK_THROWS_AS(bad(R"({"ring":{"kind":"Z"},"lo":0,"hi":1,"ranks":[1,2],"differentials":[[["1"]]]})"),
                  io::ParseError);
  CHECK_THROWS_AS(bad(R"({"ring":{"kind":"Z"},"lo":0,"hi":1,"ranks":[1,1]})"), io::ParseError);
  CHECK_THROWS_AS(bad(R"({"ring":{"kind":"Z"},"lo":0,"hi":2,"ranks":[1,1,1],"differentials":[[["2"]],[["3"]]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(bad(R"({"ring":{"kind":"Z"},"lo":0,"hi":0,"ranks":[-1],"differentials":[]})"), io::ParseError);
}

TEST_CASE("supports, points and opens") {
  for (const Ring& r : {Z(), Zn(12), Fpt(2), Ring::product({Zn(4), Zn(3)}), Ring::product({Z(), Fpt(3)})}) {
    for (const auto& y : all_supports(r, enumerate_points(r, 2))) {
      CHECK(io::support_from_json(r, io::support_to_json(y)) == y);
      const OpenSet v(y);
      CHECK(io::open_from_json(r, io::open_to_json(v)).complement() == y);
    }
    for (const auto& x : enumerate_points(r, 2).points) CHECK(io::point_from_json(r, io::point_to_json(r, x)) == x);
  }
  const Support y = io::support_from_json(Z(), io::parse(R"({"components":[{"whole":false,"points":["3","2"]}]})", "s"));
  CHECK(y == Support::of_points(Z(), {{0, zb(2)}, {0, zb(3)}}));
  CHECK_THROWS_AS(io::support_from_json(Z(), io::parse(R"({"components":[]})", "s")), io::ParseError);
  CHECK_THROWS(io::support_from_json(Z(), io::parse(R"({"components":[{"points":["4"]}]})", "s")));
  CHECK_THROWS_AS(io::point_from_json(Zn(12), io::parse(R"({"component":0,"prime":"5"})", "p")), io::ParseError);
}

TEST_CASE("ring maps round trip") {
  const Ring f4 = F4();
  const Ring f2 = Fpt(2);
  const BaseRing& b2 = f2.component(0).base_ring();
  const std::vector<RingMap> maps{
      RingMap::canonical(Z(), Zn(12)),
      RingMap::polynomial(Fpt(2), f4, f4.from_base(b2.poly({0, 1}))),
      RingMap::polynomial(Fpt(2), f4, f4.from_base(b2.poly({1, 1}))),
      localization_map(Z(), Z().from_int(6)),
      RingMap::identity(Ring::product({Zn(4), Fpt(3)})),
      RingMap(Ring::product({Zn(4), Fpt(3)}), Ring::product({Fpt(3), Zn(2)}),
              {{1, Fpt(3).component(0).from_base(Fpt(3).component(0).base_ring().poly({2, 1}))}, {0, std::nullopt}}),
  };
  for (const auto& f : maps) CHECK_MESSAGE(io::ring_map_from_json(io::ring_map_to_json(f)) == f, f.to_string());
  const RingMap omega = io::ring_map_from_json(io::parse(
      R"({"source":{"kind":"Fpt","p":2},"target":{"kind":"quotient","base":{"kind":"Fpt","p":2},"d":[1,1,1]},
          "gen_images":{"t":[0,1]}})",
      "m"));
  CHECK(omega == maps[1]);
  CHECK_THROWS_AS(io::ring_map_from_json(io::parse(
                      R"({"source":{"kind":"Fpt","p":2},"target":{"kind":"Fpt","p":2},"gen_images":{}})", "m")),
                  io::ParseError);
  CHECK_THROWS_AS(io::ring_map_from_json(io::parse(
                      R"({"source":{"kind":"product","factors":[{"kind":"Z"},{"kind":"Z"}]},"target":{"kind":"Z"}})",
                      "m")),
                  io::ParseError);
  // Z/4 has no map to Z/3
  CHECK_THROWS_AS(io::ring_map_from_json(io::parse(
                      R"({"source":{"kind":"quotient","base":{"kind":"Z"},"d":"4"},
                          "target":{"kind":"quotient","base":{"kind":"Z"},"d":"3"}})",
                      "m")),
                  InvalidArgument);
}

TEST_CASE("spectrum dump") {
  const json s = io::spectrum_to_json(SpectrumModel(Z(), 3));
  REQUIRE(s["points"].size() == 3);
  CHECK(s["points"][0]["label"] == "eta");
  CHECK(s["points"][0]["closure"] == io::parse("[0, 1, 2]", "c"));
  CHECK(s["points"][1]["closure"] == io::parse("[1]", "c"));
  CHECK(s["covering"] == io::parse("[[0, 1], [0, 2]]", "c"));
  CHECK(s["complete"] == false);
  const json z12 = io::spectrum_to_json(SpectrumModel(Zn(12), 1));
  CHECK(z12["points"].size() == 2);
  CHECK(z12["covering"].empty());
}

TEST_CASE("module classes") {
  const Complex k = cone_of(Z(), Z().from_int(6));
  const json m = io::module_to_json(Z(), homology(k, 0));
  CHECK(m["text"] == "Z/(6)");
  CHECK(m["components"][0]["divisors"] == io::parse(R"(["6"])", "d"));
  CHECK(m["components"][0]["free_rank"] == 0);
}
