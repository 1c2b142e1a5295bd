#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace space {

// LCS F-measure over token lists: P = LCS/|pred|, R = LCS/|ref|,
// F = 2PR/(P+R). 0 when either input is empty.
double rouge_l(const std::vector<std::string>& pred,
               const std::vector<std::string>& ref);

// Multiset-overlap F1 over token lists. 0 when either input is empty.
double token_f1(const std::vector<std::string>& pred,
                const std::vector<std::string>& ref);

// The shared tokenizer for both metrics: lowercase, split on
// non-alphanumerics, digits kept (space::tokenize).
double rouge_l_text(std::string_view pred, std::string_view ref);
double token_f1_text(std::string_view pred, std::string_view ref);

}  // namespace space
