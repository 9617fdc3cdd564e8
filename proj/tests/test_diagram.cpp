#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "braidforge/braid.hpp"
#include "braidforge/closure.hpp"
#include "braidforge/grid.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/io.hpp"
#include "braidforge/verify.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

const char* kUnknotGrid = "G2: X=1,2 O=2,1";
const char* kHopfGrid = "G4: X=1,2,3,4 O=3,4,1,2";
const char* kCyclicGrid = "G5: X=1,2,3,4,5 O=3,4,5,1,2";

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(ParseGrid, Examples) {
  const GridDiagram g = parse_grid(kUnknotGrid);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.xcols(), (std::vector<int>{1, 2}));
  EXPECT_EQ(g.ocols(), (std::vector<int>{2, 1}));

  const GridDiagram g5 = parse_grid(kCyclicGrid);
  EXPECT_EQ(g5.ocols(), (std::vector<int>{3, 4, 5, 1, 2}));
}

TEST(ParseGrid, Errors) {
  EXPECT_NE(error_of([] { parse_grid("G2: X=1,2 O=1,2"); }).find("row 1"), std::string::npos);
  EXPECT_NE(error_of([] { parse_grid("G3: X=1,1,2 O=2,3,1"); }).find("column 1"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_grid("G3: X=1,2 O=2,1"); }).find("size mismatch"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_grid("G2: X=1;2 O=2,1"); }).find("column"), std::string::npos);
  EXPECT_THROW(parse_grid("G2: X=1,3 O=2,1"), InputError);
  EXPECT_THROW(parse_grid("G1: X=1 O=1"), InputError);
  EXPECT_THROW(parse_grid("X=1,2 O=2,1"), InputError);
  EXPECT_THROW(parse_grid("G2: X=1,2 O=2,1 junk"), InputError);
}

TEST(ColumnOrientation, Examples) {
  const GridDiagram g = parse_grid(kUnknotGrid);
  EXPECT_EQ(column_orientation(g, 1), ColumnOrientation::Down);
  EXPECT_EQ(column_orientation(g, 2), ColumnOrientation::Up);
  EXPECT_THROW(column_orientation(g, 3), InputError);
}

TEST(GridComponents, Examples) {
  EXPECT_EQ(grid_components(parse_grid(kUnknotGrid)), 1);
  EXPECT_EQ(grid_components(parse_grid(kHopfGrid)), 2);
  EXPECT_EQ(grid_components(parse_grid(kCyclicGrid)), 1);
  // independent marker union-find agrees on the same examples
  EXPECT_EQ(oracle::marker_components(parse_grid(kHopfGrid)), 2);
  EXPECT_EQ(oracle::marker_components(parse_grid(kCyclicGrid)), 1);
}

TEST(GridToPd, Examples) {
  const PDCode unknot = grid_to_pd(parse_grid(kUnknotGrid));
  EXPECT_TRUE(unknot.crossings.empty());
  EXPECT_EQ(unknot.free_loops, 1);

  // row 2 spans column 3 while column 3 spans row 2; likewise (row 3, col 2)
  const PDCode hopf = grid_to_pd(parse_grid(kHopfGrid));
  EXPECT_EQ(hopf.crossings.size(), 2u);
  EXPECT_EQ(hopf.free_loops, 0);
  EXPECT_NO_THROW(validate(hopf));

  const PDCode cyclic = grid_to_pd(parse_grid(kCyclicGrid));
  EXPECT_NO_THROW(validate(cyclic));
  EXPECT_NE(normalized_bracket(cyclic), LaurentPoly::constant(1));
}

TEST(BraidClosureToPd, Examples) {
  const PDCode trivial = braid_closure_to_pd(BraidWord(1));
  EXPECT_TRUE(trivial.crossings.empty());
  EXPECT_EQ(trivial.free_loops, 1);

  const PDCode kink = braid_closure_to_pd(BraidWord(2, {1}));
  EXPECT_EQ(kink.crossings.size(), 1u);
  EXPECT_EQ(component_count(kink), 1);

  const PDCode hopf = braid_closure_to_pd(BraidWord(2, {1, 1}));
  EXPECT_EQ(hopf.crossings.size(), 2u);
  EXPECT_EQ(component_count(hopf), 2);
}

TEST(BraidClosureToPd, LetterSignFixesOverStrand) {
  // mirror letters differ only in the sign of their crossing
  const PDCode pos = braid_closure_to_pd(BraidWord(3, {1}));
  const PDCode neg = braid_closure_to_pd(BraidWord(3, {-1}));
  ASSERT_EQ(pos.crossings.size(), 1u);
  EXPECT_EQ(pos.crossings[0].sign, -neg.crossings[0].sign);
  // positions 1 and 2 close into one component, position 3 is a free loop
  EXPECT_EQ(component_count(pos), 2);
  EXPECT_EQ(component_count(neg), 2);
  EXPECT_EQ(pos.free_loops, 1);
}

TEST(ValidatePd, RejectsBrokenCodes) {
  PDCode pd;
  pd.crossings.push_back({1, 1, 2, 2, 1}); // arc 1 enters twice
  EXPECT_THROW(validate(pd), InputError);
  pd.crossings = {{1, 4, 2, 3, 1}, {3, 2, 4, 1, -1}};
  EXPECT_NO_THROW(validate(pd));
  pd.crossings[1].sign = 0;
  EXPECT_THROW(validate(pd), InputError);
  pd.crossings[1].sign = -1;
  pd.crossings[1].over_out = 5;
  EXPECT_THROW(validate(pd), InputError);
  pd.crossings[1].over_out = 2;
  EXPECT_THROW(validate(pd), InputError);
}

TEST(ParseBraid, Examples) {
  EXPECT_EQ(parse_braid("B3: 1 2 -1"), BraidWord(3, {1, 2, -1}));
  EXPECT_EQ(parse_braid("B1:"), BraidWord(1));
  EXPECT_THROW(parse_braid("B3: 5"), InputError);
  EXPECT_THROW(parse_braid("B3 1 2"), InputError);
  EXPECT_THROW(parse_braid("B3: 1 x"), InputError);
  EXPECT_EQ(braid_from_json(json::parse(R"({"strands":3,"letters":[1,2,-1]})")),
            BraidWord(3, {1, 2, -1}));
  EXPECT_THROW(braid_from_json(json::parse(R"({"strands":3})")), InputError);
}

TEST(ParsePd, RoundTripAndErrors) {
  const PDCode pd = grid_to_pd(parse_grid(kCyclicGrid));
  EXPECT_EQ(parse_pd(to_json(pd).dump()), pd);
  EXPECT_THROW(parse_pd(R"({"crossings":[{"arcs":[1,2,3],"sign":1}]})"), InputError);
  EXPECT_THROW(parse_pd(R"({"crossings":[{"arcs":[1,1,2,2],"sign":1}]})"), InputError);
  EXPECT_THROW(parse_pd("{not json"), InputError);
  const PDCode loops = parse_pd(R"({"crossings":[],"free_loops":2})");
  EXPECT_EQ(loops.free_loops, 2);
}

TEST(ParseObject, DetectsKind) {
  EXPECT_TRUE(std::holds_alternative<GridDiagram>(parse_object(kUnknotGrid)));
  EXPECT_TRUE(std::holds_alternative<BraidWord>(parse_object("  B2: 1\n")));
  EXPECT_TRUE(std::holds_alternative<GridDiagram>(
      parse_object(R"({"size":2,"xcol":[1,2],"ocol":[2,1]})")));
  EXPECT_TRUE(std::holds_alternative<PDCode>(parse_object(R"({"crossings":[],"free_loops":1})")));
  EXPECT_THROW(parse_object("K3: 1"), InputError);
  EXPECT_THROW(parse_object(""), InputError);
}

TEST(Serialization, PolynomialText) {
  const LaurentPoly d = loop_value();
  EXPECT_EQ(d.to_string(), "-A^-2 - A^2");
  EXPECT_EQ(poly_from_json(to_json(d)), d);
  EXPECT_EQ(LaurentPoly::constant(1).to_string(), "1");
  EXPECT_EQ((LaurentPoly::monomial(1, 3) - LaurentPoly::monomial(0, 2)).to_string(), "-2 + 3A");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(Serialization, JonesDisplay) {
  // A^-4 -> t, A^-2 -> t^1/2
  EXPECT_EQ(jones_in_t(LaurentPoly::monomial(-4) + LaurentPoly::monomial(-12, -1)), "t - t^3");
  EXPECT_EQ(jones_in_t(LaurentPoly::monomial(-2, -1) - LaurentPoly::monomial(-10)),
            "-t^1/2 - t^5/2");
  EXPECT_EQ(jones_in_t(LaurentPoly::constant(1)), "1");
}

// parse(serialize(x)) == x for 1000 seeded random words, grids and PD codes.
TEST(Serialization, RoundTripProperty) {
  std::mt19937_64 rng(1000);
  for (int k = 0; k < 1000; ++k) {
    const int n = draw(rng, 1, 8);
    const BraidWord w = random_word(rng, n, n > 1 ? draw(rng, 0, 15) : 0);
    ASSERT_EQ(parse_braid(to_text(w)), w);
    ASSERT_EQ(braid_from_json(to_json(w)), w);

    const GridDiagram g = random_grid(rng, draw(rng, 2, 8));
    ASSERT_EQ(parse_grid(to_text(g)), g);
    ASSERT_EQ(grid_from_json(to_json(g)), g);

    const PDCode pd = k % 2 ? grid_to_pd(g) : braid_closure_to_pd(w);
    ASSERT_EQ(parse_pd(to_json(pd).dump()), pd);
  }
}

TEST(DiagramProperties, SmallGridsExhaustive) {
  for (int n = 2; n <= 3; ++n)
    for (const GridDiagram& g : oracle::all_grids(n)) {
      const PDCode pd = grid_to_pd(g);
      ASSERT_NO_THROW(validate(pd));
      ASSERT_EQ(component_count(pd), grid_components(g));
      ASSERT_EQ(grid_components(g), oracle::marker_components(g));
      ASSERT_GE(strand_count(g), grid_components(g));
      ASSERT_EQ(static_cast<int>(pd.crossings.size()), grid_crossing_count(g));
    }
}

TEST(DiagramProperties, RandomGrids) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 10000; ++k) {
    const GridDiagram g = random_grid(rng, draw(rng, 2, 5));
    const PDCode pd = grid_to_pd(g);
    ASSERT_NO_THROW(validate(pd));
    ASSERT_EQ(component_count(pd), grid_components(g));
    ASSERT_EQ(grid_components(g), oracle::marker_components(g));
    int up = 0;
    for (int c = 1; c <= g.size(); ++c)
      up += column_orientation(g, c) == ColumnOrientation::Up;
    ASSERT_GE(up, grid_components(g));
  }
}

TEST(DiagramProperties, ClosureStructure) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const int n = draw(rng, 1, 6);
    const BraidWord w = random_word(rng, n, n > 1 ? draw(rng, 0, 14) : 0);
    const PDCode pd = braid_closure_to_pd(w);
    ASSERT_NO_THROW(validate(pd));
    ASSERT_EQ(pd.crossings.size(), w.length());
    ASSERT_EQ(component_count(pd), closure_component_count(w));
    const PDCode wider = braid_closure_to_pd(embed(w, n + 1));
    ASSERT_EQ(wider.free_loops, pd.free_loops + 1);
    ASSERT_EQ(component_count(wider), component_count(pd) + 1);
  }
}
