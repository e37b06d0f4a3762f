#include "bnreorder/random_dag.hpp"

#include <gtest/gtest.h>

#include "bnreorder/text_format.hpp"

namespace bnreorder {
namespace {

TEST(RandomDag, DensityExtremes) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    EXPECT_EQ(random_dag(5, 0.0, seed).arc_count(), 0u);
    const Dag full = random_dag(5, 1.0, seed);
    EXPECT_EQ(full.arc_count(), 10u);
  }
}

TEST(RandomDag, NamesAreSynthetic) {
  EXPECT_EQ(random_dag(3, 0.5, 1).nodes().names(), (std::vector<std::string>{"v0", "v1", "v2"}));
}

TEST(RandomDag, Deterministic) {
  const Dag a = random_dag(8, 0.4, 7);
  const Dag b = random_dag(8, 0.4, 7);
  EXPECT_EQ(a.arcs(), b.arcs());
  EXPECT_EQ(render_dag_file(a), render_dag_file(b));
  EXPECT_NE(render_dag_file(random_dag(8, 0.4, 8)), render_dag_file(a));
}

// Pins the generator conventions so a change to shuffling or arc drawing
// shows up here rather than as drifting property-test instances.
TEST(RandomDag, Golden) {
  const Dag d = random_dag(8, 0.4, 7);
  EXPECT_EQ(render_dag_file(d), R"(node v0
node v1
node v2
node v3
node v4
node v5
node v6
node v7
arc v0 v4
arc v1 v7
arc v2 v4
arc v2 v5
arc v2 v7
arc v3 v6
arc v3 v7
arc v5 v0
arc v5 v1
arc v5 v4
arc v5 v7
arc v6 v0
arc v6 v1
arc v6 v4
)");
}

TEST(RandomDag, ArcDensityIsRoughlyRight) {
  std::size_t arcs = 0;
  constexpr std::size_t n = 30;
  for (std::uint64_t seed = 0; seed < 20; ++seed) arcs += random_dag(n, 0.3, seed).arc_count();
  const double fraction = static_cast<double>(arcs) / (20.0 * n * (n - 1) / 2);
  EXPECT_NEAR(fraction, 0.3, 0.03);
}

TEST(RandomDag, Errors) {
  try {
    random_dag(0, 0.5, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptySet);
  }
  for (double bad : {-0.1, 1.5}) {
    try {
      random_dag(4, bad, 1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadDensity);
    }
  }
}

TEST(RandomOrdering, PermutationAndDeterminism) {
  const Dag d = random_dag(10, 0.3, 5);
  const Ordering a = random_ordering(d, 11);
  EXPECT_EQ(a, random_ordering(d, 11));
  EXPECT_EQ(a.sequence().size(), 10u);
  bool any_different = false;
  for (std::uint64_t s = 0; s < 10; ++s) any_different |= !(random_ordering(d, s) == a);
  EXPECT_TRUE(any_different);
}

}  // namespace
}  // namespace bnreorder
