#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taskforge/grammar.hpp"

namespace forge::seq {

long long trapping_rain_water(const std::vector<int>& h);
long long buy_sell_stock(const std::vector<int>& prices);  // unlimited transactions
long long container_most_water(const std::vector<int>& h);
long long h_index(const std::vector<int>& citations);
long long largest_rectangle(const std::vector<int>& h);
long long longest_increasing_subsequence(const std::vector<int>& v);
long long hills_and_valleys(const std::vector<int>& v);

// Exhaustive search over leaf permutations, operator choices and tree shapes
// with exact rational arithmetic. nullopt when 24 is unreachable.
std::optional<Expr> solve_24(const std::array<int, 4>& nums);
int count_24_witnesses(const std::array<int, 4>& nums, int limit);
bool solvable_24_plus_minus_only(const std::array<int, 4>& nums);

struct CryptoPuzzle {
  std::vector<std::string> operands;
  char op = '+';  // one of + - *
  std::string result;
};

// Counts digit assignments up to `limit`; fills `solution` with the first
// found in lexicographic digit order.
int count_cryptomath(const CryptoPuzzle& p, int limit, std::map<char, int>* solution);

}  // namespace forge::seq
