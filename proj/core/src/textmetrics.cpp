#include "space/textmetrics.hpp"

#include <algorithm>
#include <unordered_map>

#include "space/text.hpp"

namespace space {

namespace {

// Two-row LCS length.
std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double f_measure(double p, double r) {
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

}  // namespace

double rouge_l(const std::vector<std::string>& pred,
               const std::vector<std::string>& ref) {
  if (pred.empty() || ref.empty()) return 0.0;
  const double lcs = static_cast<double>(lcs_length(pred, ref));
  return f_measure(lcs / pred.size(), lcs / ref.size());
}

double token_f1(const std::vector<std::string>& pred,
                const std::vector<std::string>& ref) {
  if (pred.empty() || ref.empty()) return 0.0;
  std::unordered_map<std::string, int> ref_counts;
  for (const std::string& t : ref) ++ref_counts[t];
  int overlap = 0;
  for (const std::string& t : pred) {
    auto it = ref_counts.find(t);
    if (it != ref_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  const double p = static_cast<double>(overlap) / pred.size();
  const double r = static_cast<double>(overlap) / ref.size();
  return f_measure(p, r);
}

double rouge_l_text(std::string_view pred, std::string_view ref) {
  return rouge_l(tokenize(pred), tokenize(ref));
}

double token_f1_text(std::string_view pred, std::string_view ref) {
  return token_f1(tokenize(pred), tokenize(ref));
}

}  // namespace space
