#include <doctest.h>

#include "qrep/quiver.hpp"
#include "support.hpp"

using namespace qrep;
using namespace qrep::testing;

namespace {

const DynkinType A2{DynkinType::Family::A, 2};
const DynkinType A3{DynkinType::Family::A, 3};

IntVector random_vector(std::mt19937_64& rng, Eigen::Index n, long long lo, long long hi) {
  IntVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform(rng, lo, hi);
  return v;
}

}  // namespace

TEST_CASE("euler form examples") {
  const auto a2 = dynkin_quiver(A2);
  CHECK(euler_form(a2, DimVector{1, 0}, DimVector{0, 1}) == -1);
  CHECK(euler_form(a2, DimVector{0, 1}, DimVector{1, 0}) == 0);
  CHECK(euler_form(a2, DimVector::zero(2), DimVector{3, 5}) == 0);
  CHECK(euler_form(kronecker_quiver(), DimVector{1, 1}, DimVector{1, 1}) == 0);
}

TEST_CASE("tits form examples") {
  CHECK(tits_form(dynkin_quiver(A2), DimVector{1, 1}) == 1);
  CHECK(tits_form(kronecker_quiver(), DimVector{1, 1}) == 0);
  const auto e8 = dynkin_quiver({DynkinType::Family::E, 8});
  for (Eigen::Index i = 0; i < 8; ++i) CHECK(tits_form(e8, DimVector::unit(8, i)) == 1);
  // A loop lowers q(e_i) to 0.
  CHECK(tits_form(cyclic_quiver(1), DimVector{1}) == 0);
}

TEST_CASE("symmetrized matrix examples") {
  IntMatrix expected(2, 2);
  expected << 2, -1, -1, 2;
  CHECK(symmetrized_matrix(dynkin_quiver(A2)) == expected);
  CHECK(symmetrized_matrix(dynkin_quiver({DynkinType::Family::A, 1})) == IntMatrix::Constant(1, 1, 2));
  expected << 2, -2, -2, 2;
  CHECK(symmetrized_matrix(kronecker_quiver()) == expected);
}

TEST_CASE("positive definiteness examples") {
  CHECK(is_positive_definite(dynkin_quiver(A2)));
  CHECK_FALSE(is_positive_definite(kronecker_quiver()));
  CHECK_FALSE(is_positive_definite(cyclic_quiver(3)));
  CHECK_FALSE(is_positive_definite(extended_d4_quiver()));
  CHECK_FALSE(is_positive_definite(cyclic_quiver(1)));
}

TEST_CASE("classify examples") {
  const auto a3 = Quiver::from_edges(3, {{0, 1}, {1, 2}});
  auto c = classify(a3);
  CHECK(c.is_finite());
  REQUIRE(c.types().size() == 1);
  CHECK(c.types()[0] == A3);

  // Three edges into a centre, one arm extended to length 2: D5.
  const auto d5 = Quiver::from_edges(5, {{0, 3}, {1, 3}, {2, 3}, {4, 2}});
  c = classify(d5);
  REQUIRE(c.is_finite());
  CHECK(c.types()[0] == DynkinType{DynkinType::Family::D, 5});

  c = classify(kronecker_quiver());
  CHECK_FALSE(c.is_finite());
  CHECK(c.witness().find("parallel edges") != std::string::npos);

  CHECK(classify(cyclic_quiver(1)).witness().find("loop") != std::string::npos);
  CHECK(classify(cyclic_quiver(3)).witness().find("cycle") != std::string::npos);
  CHECK_FALSE(classify(extended_d4_quiver()).is_finite());
  CHECK_THROWS_AS(require_finite_type(kronecker_quiver()), InfiniteTypeError);
  CHECK_NOTHROW(require_finite_type(a3));
}

TEST_CASE("classify handles disconnected quivers") {
  // A2 + isolated vertex + A1 with nothing else: three components.
  const auto q = Quiver::from_edges(4, {{0, 1}});
  const auto c = classify(q);
  REQUIRE(c.components.size() == 3);
  CHECK(c.types()[0] == A2);
  CHECK(c.types()[1].name() == "A1");

  const auto mixed = Quiver::from_edges(4, {{0, 1}, {2, 3}, {2, 3}});
  CHECK_FALSE(classify(mixed).is_finite());
  CHECK_FALSE(is_positive_definite(mixed));
}

TEST_CASE("every standard Dynkin orientation classifies as its own type") {
  for (const auto& t : dynkin_types_up_to(8))
    for (auto o : all_orientations()) {
      const auto q = dynkin_quiver(t, o);
      CAPTURE(q.name());
      const auto c = classify(q);
      REQUIRE(c.is_finite());
      REQUIRE(c.types().size() == 1);
      CHECK(c.types()[0] == t);
      CHECK(is_positive_definite(q));
    }
}

TEST_CASE("extended Dynkin shapes are infinite type") {
  std::vector<Quiver> shapes;
  for (Eigen::Index n = 1; n <= 8; ++n) shapes.push_back(cyclic_quiver(n));
  shapes.push_back(kronecker_quiver());
  // Extended D_n for n = 4..8: path 0..n-2 with two extra leaves at each end.
  for (Eigen::Index n = 4; n <= 8; ++n) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
    const Eigen::Index path = n - 1;
    for (Eigen::Index i = 0; i + 1 < path; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(path, 1);
    edges.emplace_back(path + 1, path - 2);
    if (n == 4) {
      // D~4 is the star with four arms.
      edges = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    }
    shapes.push_back(Quiver::from_edges(n + 1, edges));
  }
  // E~6, E~7, E~8 as arm lengths (2,2,2), (1,3,3), (1,2,5) around a centre.
  auto star = [](std::vector<int> arms) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
    Eigen::Index next = 1;
    for (int len : arms) {
      Eigen::Index prev = 0;
      for (int k = 0; k < len; ++k) {
        edges.emplace_back(next, prev);
        prev = next++;
      }
    }
    return Quiver::from_edges(next, edges);
  };
  shapes.push_back(star({2, 2, 2}));
  shapes.push_back(star({1, 3, 3}));
  shapes.push_back(star({1, 2, 5}));

  for (const auto& q : shapes) {
    CAPTURE(q.vertex_count());
    CHECK_FALSE(classify(q).is_finite());
    CHECK_FALSE(is_positive_definite(q));
  }
  // One step smaller on each E arm stays finite.
  CHECK(classify(star({1, 2, 2})).is_finite());
  CHECK(classify(star({1, 2, 4})).is_finite());
}

TEST_CASE("property: classification agrees with positive definiteness") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const Eigen::Index n = uniform(rng, 1, 7);
    const auto q = random_quiver(rng, n, static_cast<int>(uniform(rng, 0, n + 1)), trial % 3 == 0);
    CHECK(classify(q).is_finite() == is_positive_definite(q));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = random_dynkin_quiver(rng, 8);
    CHECK(classify(q).is_finite());
  }
}

TEST_CASE("property: form identities") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = uniform(rng, 1, 6);
    const auto q = random_quiver(rng, n, static_cast<int>(uniform(rng, 0, 8)));
    const IntVector v = random_vector(rng, n, -4, 4);
    const IntVector w = random_vector(rng, n, -4, 4);
    CHECK(tits_form(q, v) == euler_form(q, v, v));
    CHECK(2 * tits_form(q, v) == v.dot(symmetrized_matrix(q) * v));
    CHECK(euler_form(q, v, w) + euler_form(q, w, v) == v.dot(symmetrized_matrix(q) * w));

    // Reversing any arrow leaves q unchanged.
    for (Eigen::Index v0 = 0; v0 < n; ++v0) CHECK(tits_form(q.reversed_at(v0), v) == tits_form(q, v));
    std::vector<Arrow> flipped = q.arrows();
    if (!flipped.empty()) {
      auto& a = flipped[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(flipped.size()) - 1))];
      std::swap(a.source, a.target);
      CHECK(tits_form(Quiver(q.vertex_labels(), flipped), v) == tits_form(q, v));
    }
  }
}

TEST_CASE("quiver construction validates input") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", 0, 1}, {"a", 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", 0, 1}}), std::invalid_argument);
  const Quiver q({"x", "y"}, {{"f", 0, 1}}, "named");
  CHECK(q.vertex_index("y") == 1);
  CHECK_FALSE(q.vertex_index("z").has_value());
  CHECK(q.arrow_index("f") == 0);
  CHECK(q.is_source(0));
  CHECK(q.is_sink(1));
  CHECK_FALSE(q.is_sink(0));
  const auto r = q.reversed_at(1);
  CHECK(r.is_sink(0));
  CHECK(r.arrow(0).id == "f");
  CHECK(r.reversed_at(1) == q);
  CHECK(q.with_name("other") == q);
}

TEST_CASE("dimension vectors") {
  const DimVector d{1, 2, 1};
  CHECK(d.to_string() == "1,2,1");
  CHECK(d.total() == 4);
  CHECK(DimVector::unit(3, 1) == DimVector{0, 1, 0});
  CHECK(DimVector{0, 1} < DimVector{1, 0});
  CHECK(DimVector{1} < DimVector{0, 0});
  CHECK(DimVector::zero(3).is_zero());
}

TEST_CASE("dynkin type names") {
  CHECK(DynkinType::parse("E8") == DynkinType{DynkinType::Family::E, 8});
  CHECK(DynkinType::parse("D4")->name() == "D4");
  CHECK_FALSE(DynkinType::parse("D3").has_value());
  CHECK_FALSE(DynkinType::parse("E9").has_value());
  CHECK_FALSE(DynkinType::parse("A0").has_value());
  CHECK_FALSE(DynkinType::parse("B2").has_value());
}

TEST_CASE("orientations have the advertised sinks and sources") {
  for (const auto& t : dynkin_types_up_to(8)) {
    const auto lin = dynkin_quiver(t, Orientation::linear);
    for (const auto& a : lin.arrows()) CHECK(a.source < a.target);
    const auto rev = dynkin_quiver(t, Orientation::reversed);
    for (const auto& a : rev.arrows()) CHECK(a.source > a.target);
    const auto alt = dynkin_quiver(t, Orientation::alternating);
    for (Eigen::Index v = 0; v < alt.vertex_count(); ++v) CHECK((alt.is_sink(v) || alt.is_source(v)));
    const auto in = dynkin_quiver(t, Orientation::inward);
    Eigen::Index sinks = 0;
    for (Eigen::Index v = 0; v < in.vertex_count(); ++v) sinks += in.is_sink(v) ? 1 : 0;
    CHECK(sinks == 1);
  }
}
