#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "generators.hpp"
#include "polyban/errors.hpp"
#include "polyban/io.hpp"

using namespace polyban;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::MalformedProgram;
}

class IoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("polyban_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

}  // namespace

TEST_F(IoTest, SpaceRoundTrip) {
  testkit::Generator gen(80);
  for (int trial = 0; trial < 10; ++trial) {
    const auto K = gen.space(1 + gen.index(3));
    const fs::path p = dir_ / "k.json";
    io::write_space(p, K);
    EXPECT_EQ(io::read_space(p), K);
    EXPECT_EQ(io::space_to_json(io::parse_space(io::space_to_json(K))), io::space_to_json(K));
  }
}

TEST_F(IoTest, SpaceFromFacetsOrVertices) {
  const auto from_v = io::parse_space(R"({"dim": 2, "vertices": [["1","0"],["-1","0"],["0","1"],["0","-1"]]})");
  const auto from_f = io::parse_space(R"({"dim": 2, "facets": [[1,1],[1,-1],[-1,1],[-1,-1]]})");
  EXPECT_EQ(from_v, PolyhedralSpace::ell_one(2));
  EXPECT_EQ(from_f, PolyhedralSpace::ell_one(2));
  const auto both = io::parse_space(
      R"({"dim": 1, "vertices": [["2"],["-2"]], "facets": [["1/2"],["-1/2"]]})");
  EXPECT_EQ(both.norm({1}), Rational(1, 2));
}

TEST_F(IoTest, SpaceErrors) {
  EXPECT_EQ(code_of([] { io::parse_space("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_space(R"({"vertices": [["1"]]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_space(R"({"dim": 1, "vertices": [["1/0"],["-1"]]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_space(R"({"dim": 1, "vertices": [["1"],["-2"]]})"); }), ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of([] { io::parse_space(R"({"dim": 2, "vertices": [["1","0"],["-1","0"]]})"); }),
            ErrorCode::NotFullDimensional);
  EXPECT_EQ(code_of([] { io::parse_space(R"({"dim": 1, "vertices": [["2"],["-2"]], "facets": [["1"],["-1"]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { io::read_space(dir_ / "missing.json"); }), ErrorCode::IoError);
}

TEST_F(IoTest, NamedSpaces) {
  EXPECT_EQ(io::resolve_space("real_line", dir_), PolyhedralSpace::real_line());
  EXPECT_EQ(io::resolve_space("zero", dir_).dim(), 0u);
  EXPECT_EQ(io::resolve_space("ell_one(3)", dir_), PolyhedralSpace::ell_one(3));
  EXPECT_EQ(io::resolve_space("ell_infinity(2)", dir_), PolyhedralSpace::ell_infinity(2));
  EXPECT_NE(code_of([&] { io::resolve_space("ell_one(x)", dir_); }), ErrorCode::MalformedProgram);
}

TEST_F(IoTest, MapRoundTrip) {
  testkit::Generator gen(81);
  for (int trial = 0; trial < 10; ++trial) {
    const auto A = gen.space(1 + gen.index(2)), B = gen.space(1 + gen.index(2));
    const LinearMap f(A, B, gen.matrix(B.dim(), A.dim()));
    const fs::path p = dir_ / "sub" / "f.map";
    io::write_map(p, f);
    EXPECT_EQ(io::read_map(p), f);
  }
  io::write_space(dir_ / "a.json", PolyhedralSpace::ell_one(2));
  const LinearMap g(PolyhedralSpace::ell_one(2), PolyhedralSpace::real_line(), Matrix::from_rows({{1, Rational(-1, 2)}}));
  io::write_map(dir_ / "g.map", g, std::string("a.json"), std::string("real_line"));
  EXPECT_EQ(io::read_map(dir_ / "g.map"), g);
}

TEST_F(IoTest, MapErrors) {
  EXPECT_EQ(code_of([&] { io::parse_map(R"({"domain": "real_line", "codomain": "real_line", "matrix": [["1","2"]]})", dir_); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { io::parse_map(R"({"domain": "real_line", "matrix": [["1"]]})", dir_); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_map(R"({"domain": "nowhere.json", "codomain": "real_line", "matrix": [["1"]]})", dir_); }),
            ErrorCode::IoError);
}

TEST_F(IoTest, WorkspaceResolution) {
  fs::create_directories(dir_ / "ws");
  io::write_space(dir_ / "ws" / "plane.json", PolyhedralSpace::ell_infinity(2));
  fs::create_directories(dir_ / "elsewhere");
  const io::Context ctx{dir_ / "ws"};
  EXPECT_EQ(io::resolve_space("plane.json", dir_ / "elsewhere", ctx), PolyhedralSpace::ell_infinity(2));
  EXPECT_EQ(code_of([&] { io::resolve_space("plane.json", dir_ / "elsewhere"); }), ErrorCode::IoError);

  ::setenv("POLYBAN_WORKSPACE", (dir_ / "ws").c_str(), 1);
  ASSERT_TRUE(io::workspace_from_env());
  EXPECT_EQ(*io::workspace_from_env(), dir_ / "ws");
  ::unsetenv("POLYBAN_WORKSPACE");
  EXPECT_FALSE(io::workspace_from_env());
}

TEST_F(IoTest, ChainsAndCatalogs) {
  io::write_text(dir_ / "half.map", R"({"domain": "real_line", "codomain": "real_line", "matrix": [["1/2"]]})");
  io::write_text(dir_ / "chain.json", R"({"links": ["half.map", "half.map"]})");
  const Chain ch = io::read_chain(dir_ / "chain.json");
  EXPECT_EQ(ch.length(), 3u);
  EXPECT_EQ(ch.composite(0, 2).matrix(), Matrix::from_rows({{Rational(1, 4)}}));
  io::write_text(dir_ / "single.json", R"j({"space": "ell_one(2)"})j");
  EXPECT_EQ(io::read_chain(dir_ / "single.json").length(), 1u);

  io::write_text(dir_ / "cat.json", R"j({"maps": [
      {"name": "half", "file": "half.map"},
      {"name": "e1", "map": {"domain": "real_line", "codomain": "ell_infinity(2)", "matrix": [["1"], ["0"]]}}]})j");
  const MorphismCatalog cat = io::read_catalog(dir_ / "cat.json");
  ASSERT_EQ(cat.entries().size(), 2u);
  EXPECT_FALSE(cat.entries()[0].isometry);
  EXPECT_TRUE(cat.entries()[1].isometry);
  io::write_text(dir_ / "big.map", R"({"domain": "real_line", "codomain": "real_line", "matrix": [["3"]]})");
  io::write_text(dir_ / "bad_chain.json", R"({"links": ["big.map"]})");
  EXPECT_EQ(code_of([&] { io::read_chain(dir_ / "bad_chain.json"); }), ErrorCode::NormTooLarge);
}

TEST(VectorList, Parsing) {
  EXPECT_EQ(io::parse_vector_list("1,0;0,1/2"), (std::vector<RatVec>{{1, 0}, {0, Rational(1, 2)}}));
  EXPECT_TRUE(io::parse_vector_list("").empty());
  EXPECT_EQ(io::parse_vector_list(" -3/4 "), (std::vector<RatVec>{{Rational(-3, 4)}}));
  EXPECT_EQ(code_of([] { io::parse_vector_list("1,a"); }), ErrorCode::ParseError);
}
