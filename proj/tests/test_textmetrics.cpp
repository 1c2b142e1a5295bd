#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "space/text.hpp"
#include "space/textmetrics.hpp"

using namespace space;

namespace {

// Independent oracle: full-matrix LCS, written against the textbook
// recurrence rather than the two-row implementation under test.
std::size_t lcs_full_matrix(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> dp(a.size() + 1,
                                           std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        dp[i][j] = dp[i - 1][j - 1] + 1;
      } else {
        dp[i][j] = std::max(dp[i - 1][j], dp[i][j - 1]);
      }
    }
  }
  return dp[a.size()][b.size()];
}

double rouge_from_lcs(std::size_t lcs, std::size_t np, std::size_t nr) {
  if (np == 0 || nr == 0) return 0.0;
  double p = static_cast<double>(lcs) / static_cast<double>(np);
  double r = static_cast<double>(lcs) / static_cast<double>(nr);
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

}  // namespace

TEST_CASE("rouge-l worked example") {
  // pred: "the cat sat", ref: "the cat sat down" -> LCS 3, P=1, R=3/4,
  // F = 2*1*(3/4)/(1+3/4) = 6/7.
  CHECK(rouge_l_text("the cat sat", "the cat sat down") ==
        doctest::Approx(6.0 / 7.0));
}

TEST_CASE("rouge-l edge cases") {
  CHECK(rouge_l_text("", "") == 0.0);
  CHECK(rouge_l_text("rain", "") == 0.0);
  CHECK(rouge_l_text("", "rain") == 0.0);
  CHECK(rouge_l_text("rain today", "rain today") == 1.0);
  CHECK(rouge_l_text("snow heavy late", "late heavy snow") ==
        doctest::Approx(1.0 / 3.0));
}

TEST_CASE("tokenizer lowercases and splits on non-alphanumerics") {
  CHECK(tokenize("High PRESSURE, 10.5 in-flow!") ==
        std::vector<std::string>{"high", "pressure", "10", "5", "in", "flow"});
  CHECK(tokenize("  \n\t ").empty());
}

TEST_CASE("rouge-l matches a full-matrix oracle on random token lists") {
  std::vector<std::string> vocab = {"rain", "snow",  "wind", "high", "low",
                                    "cold", "front", "fog",  "warm", "dry"};
  std::mt19937 gen(2718);
  for (int trial = 0; trial < 500; ++trial) {
    auto draw = [&] {
      std::vector<std::string> out;
      int n = std::uniform_int_distribution<int>(0, 25)(gen);
      for (int i = 0; i < n; ++i) out.push_back(vocab[gen() % vocab.size()]);
      return out;
    };
    std::vector<std::string> pred = draw(), ref = draw();
    double expected =
        rouge_from_lcs(lcs_full_matrix(pred, ref), pred.size(), ref.size());
    CHECK(rouge_l(pred, ref) == doctest::Approx(expected));
  }
}

TEST_CASE("token f1 worked example") {
  // pred: {a,a,b}, ref: {a,b,b} -> overlap 2, P=2/3, R=2/3, F1=2/3.
  CHECK(token_f1({"a", "a", "b"}, {"a", "b", "b"}) == doctest::Approx(2.0 / 3.0));
  CHECK(token_f1_text("rain then sun", "sun then rain") == 1.0);
  CHECK(token_f1_text("rain", "snow") == 0.0);
  CHECK(token_f1_text("", "") == 0.0);
}

TEST_CASE("token f1 matches a multiset oracle on random inputs") {
  std::vector<std::string> vocab = {"a", "b", "c", "d"};
  std::mt19937 gen(31337);
  for (int trial = 0; trial < 500; ++trial) {
    auto draw = [&] {
      std::vector<std::string> out;
      int n = std::uniform_int_distribution<int>(0, 15)(gen);
      for (int i = 0; i < n; ++i) out.push_back(vocab[gen() % vocab.size()]);
      return out;
    };
    std::vector<std::string> pred = draw(), ref = draw();
    std::map<std::string, int> cp, cr;
    for (const auto& t : pred) cp[t]++;
    for (const auto& t : ref) cr[t]++;
    int overlap = 0;
    for (const auto& [t, n] : cp) {
      auto it = cr.find(t);
      if (it != cr.end()) overlap += std::min(n, it->second);
    }
    double expected = 0.0;
    if (!pred.empty() && !ref.empty() && overlap > 0) {
      double p = static_cast<double>(overlap) / pred.size();
      double r = static_cast<double>(overlap) / ref.size();
      expected = 2.0 * p * r / (p + r);
    }
    CHECK(token_f1(pred, ref) == doctest::Approx(expected));

    // Symmetry and identity.
    CHECK(token_f1(pred, ref) == doctest::Approx(token_f1(ref, pred)));
    CHECK(rouge_l(pred, ref) == doctest::Approx(rouge_l(ref, pred)));
    if (!pred.empty()) {
      CHECK(token_f1(pred, pred) == 1.0);
      CHECK(rouge_l(pred, pred) == 1.0);
    }
  }
}
