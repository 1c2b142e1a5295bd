#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "space/hierarchy.hpp"
#include "test_util.hpp"

using namespace space;

TEST_CASE("empty definition gives empty hierarchy") {
  LocationHierarchy h = LocationHierarchy::load("");
  CHECK(h.empty());
  LocationHierarchy commented = LocationHierarchy::load("# nothing\n\n");
  CHECK(commented.size() == 0);
}

TEST_CASE("basic record parsing and parent lookup") {
  LocationHierarchy h = LocationHierarchy::load(
      "rockies|L|The Rockies||The Rockies|0\n"
      "colorado|M|Colorado|rockies|Colorado|0\n");
  CHECK(h.size() == 2);
  CHECK(h.resolve("colorado") == "colorado");
  CHECK(h.node("colorado").parents == std::vector<std::string>{"rockies"});
}

TEST_CASE("ancestor chain makes small node related to large node") {
  LocationHierarchy h = LocationHierarchy::load(
      "rockies|L|The Rockies||The Rockies|0\n"
      "colorado|M|Colorado|rockies|Colorado|0\n"
      "denver|S|Denver|colorado|Denver|0\n");
  CHECK(h.related("denver", "rockies"));
  CHECK(h.related("denver", "colorado"));
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(LocationHierarchy::load("a|L|A|"), HierarchyError);
  CHECK_THROWS_AS(LocationHierarchy::load("a|X|A||A|0"), HierarchyError);
  // duplicate alias
  CHECK_THROWS_AS(LocationHierarchy::load("a|L|A||Foo|0\nb|L|B||FOO|0"),
                  HierarchyError);
  // unknown parent
  CHECK_THROWS_AS(LocationHierarchy::load("a|M|A|nope|A|0"), HierarchyError);
  // cycle between equal-scale nodes
  CHECK_THROWS_AS(LocationHierarchy::load("a|L|A|b|A|0\nb|L|B|a|B|0"),
                  HierarchyError);
  // parent of smaller scale
  CHECK_THROWS_AS(
      LocationHierarchy::load("a|S|A||A|0\nb|M|B|a|B|0"), HierarchyError);
}

TEST_CASE("resolve folds case and whitespace") {
  LocationHierarchy h = LocationHierarchy::load(
      "rockies|L|The Rockies||The Rockies|0\n"
      "colorado|M|Colorado|rockies|Colorado|0\n");
  CHECK(h.resolve("COLORADO") == "colorado");
  CHECK(h.resolve("the   Rockies") == "rockies");
  CHECK(!h.resolve("Narnia"));
}

TEST_CASE("stop nodes cannot be the common relative or its endpoints") {
  LocationHierarchy h = LocationHierarchy::load(
      "central-us|L|Central US||Central US|1\n"
      "plains|L|Plains||Plains|0\n"
      "kansas|M|Kansas|central-us|Kansas|0\n"
      "nebraska|M|Nebraska|central-us|Nebraska|0\n"
      "iowa|M|Iowa|plains|Iowa|0\n"
      "missouri|M|Missouri|plains|Missouri|0\n");
  // only common ancestor is the stop node
  CHECK(!h.related("kansas", "nebraska"));
  // non-stop common ancestor works
  CHECK(h.related("iowa", "missouri"));
  // ancestor/descendant through a stop node still holds
  CHECK(h.related("kansas", "central-us"));
  // stop node equality
  CHECK(h.related("central-us", "central-us"));
}

TEST_CASE("stop endpoints never match via a common relative") {
  LocationHierarchy h = LocationHierarchy::load(
      "us|L|US||US|0\n"
      "midwest|L|Midwest|us|Midwest|1\n"
      "southeast|L|Southeast|us|Southeast|0\n");
  // midwest and southeast share non-stop ancestor "us", but midwest is a
  // stop node and so cannot take part in a common-relative match.
  CHECK(!h.related("midwest", "southeast"));
}

TEST_CASE("shipped hierarchy loads and satisfies the core examples") {
  LocationHierarchy h =
      LocationHierarchy::load(testutil::read_file(testutil::data_path("hierarchy.txt")));
  CHECK(h.size() > 150);
  CHECK(h.resolve("Denver") == "denver-co");
  CHECK(h.resolve("the Rockies") == "rockies");
  CHECK(h.related("denver-co", "rockies"));
  CHECK(h.related("columbia-sc", "southeast-us"));
  CHECK(h.related("tucson-az", "southwest-us"));
  CHECK(!h.related("arizona", "maine"));
  // stop set matches the published list
  CHECK(h.stop_set().count("midwest") == 1);
  CHECK(h.stop_set().count("the-plains") == 1);
  CHECK(h.stop_set().size() == 13);
}

TEST_CASE("shipped hierarchy: related is symmetric and reflexive") {
  LocationHierarchy h =
      LocationHierarchy::load(testutil::read_file(testutil::data_path("hierarchy.txt")));
  std::vector<std::string> ids;
  for (const auto& [id, node] : h.nodes()) ids.push_back(id);
  for (const std::string& a : ids) {
    CHECK(h.related(a, a));
    for (const std::string& b : ids) {
      CHECK(h.related(a, b) == h.related(b, a));
    }
  }
}

TEST_CASE("every declared alias resolves to its node") {
  LocationHierarchy h =
      LocationHierarchy::load(testutil::read_file(testutil::data_path("hierarchy.txt")));
  for (const auto& [id, node] : h.nodes()) {
    for (const std::string& alias : node.aliases) {
      auto r = h.resolve(alias);
      REQUIRE(r.has_value());
      CHECK(*r == id);
    }
  }
}

namespace {

// Brute-force relatedness over explicit parent lists, independent of the
// LocationHierarchy internals.
struct BruteHierarchy {
  // index -> parents
  std::vector<std::vector<int>> parents;
  std::vector<bool> stop;

  std::set<int> ancestors(int x) const {
    std::set<int> out{x};
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int p : parents[cur]) {
        if (out.insert(p).second) stack.push_back(p);
      }
    }
    return out;
  }

  bool related(int a, int b) const {
    if (a == b) return true;
    std::set<int> anc_a = ancestors(a);
    std::set<int> anc_b = ancestors(b);
    if (anc_a.count(b) || anc_b.count(a)) return true;
    if (stop[a] || stop[b]) return false;
    for (int c : anc_a) {
      if (!stop[c] && anc_b.count(c)) return true;
    }
    return false;
  }
};

// Random three-level DAG of up to 20 nodes serialized to the definition
// format along with the plain struct used by the oracle.
std::pair<std::string, BruteHierarchy> random_hierarchy(std::mt19937& gen) {
  std::uniform_int_distribution<int> nodes_dist(1, 20);
  int n = nodes_dist(gen);
  BruteHierarchy brute;
  brute.parents.resize(n);
  brute.stop.resize(n);
  std::vector<int> scale(n);
  std::string text;
  for (int i = 0; i < n; ++i) {
    scale[i] = std::uniform_int_distribution<int>(0, 2)(gen);  // 0=L,1=M,2=S
    brute.stop[i] = std::uniform_int_distribution<int>(0, 4)(gen) == 0;
    // Parents must come earlier and have equal-or-larger scale.
    std::string parents;
    for (int j = 0; j < i; ++j) {
      if (scale[j] > scale[i]) continue;
      if (std::uniform_int_distribution<int>(0, 3)(gen) != 0) continue;
      brute.parents[i].push_back(j);
      if (!parents.empty()) parents += ",";
      parents += "n" + std::to_string(j);
    }
    const char* scale_names = "LMS";
    text += "n" + std::to_string(i) + "|" + scale_names[scale[i]] + std::string("|Node") +
            std::to_string(i) + "|" + parents + "|Alias" + std::to_string(i) +
            "|" + (brute.stop[i] ? "1" : "0") + "\n";
  }
  return {text, brute};
}

}  // namespace

TEST_CASE("random hierarchies agree with the brute-force oracle") {
  std::mt19937 gen(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    auto [text, brute] = random_hierarchy(gen);
    LocationHierarchy h = LocationHierarchy::load(text);
    int n = static_cast<int>(brute.parents.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        CHECK(h.related("n" + std::to_string(a), "n" + std::to_string(b)) ==
              brute.related(a, b));
      }
    }
  }
}

TEST_CASE("removing a stop flag is monotone: false may turn true only") {
  std::mt19937 gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    auto [text, brute] = random_hierarchy(gen);
    int n = static_cast<int>(brute.parents.size());
    int flagged = -1;
    for (int i = 0; i < n; ++i) {
      if (brute.stop[i]) { flagged = i; break; }
    }
    if (flagged < 0) continue;
    BruteHierarchy relaxed = brute;
    relaxed.stop[flagged] = false;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (brute.related(a, b)) CHECK(relaxed.related(a, b));
      }
    }
  }
}
