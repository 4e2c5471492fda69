#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "bei/field.hpp"

namespace bei {

/// Caps on the part of a Betti table to compute. Unset means "as far as
/// needed to certify the whole table".
struct BettiBounds {
  std::optional<int> max_homological_degree;
  std::optional<int> max_internal_degree;
  /// Worker threads; 0 picks the available hardware parallelism.
  unsigned threads = 0;
};

/// Graded Betti numbers beta_{i,j} of a quotient S/J, tagged with the field
/// characteristic. Only nonzero entries are stored.
struct BettiTable {
  std::uint32_t characteristic = PrimeField::kDefaultPrime;
  /// Set when caller-imposed bounds cut the computation short of the bounds
  /// that certify the whole table.
  bool truncated = false;
  // Window actually computed: i <= max_i, j <= max_j.
  int max_i = 0;
  int max_j = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries;

  std::uint64_t at(int i, int j) const;
  /// Setting zero erases the entry.
  void set(int i, int j, std::uint64_t value);
};

bool same_entries(const BettiTable& a, const BettiTable& b);

/// Convolution of two tables (Betti numbers of a tensor product of quotients
/// in disjoint variables). Throws InputError on a characteristic mismatch.
BettiTable betti_tensor(const BettiTable& t1, const BettiTable& t2);

/// max{j - i : beta_{i,j} != 0}. On a truncated table, throws
/// InconclusiveError when a nonzero entry sits on the edge of the computed
/// window, since the true value may then lie outside it.
int regularity(const BettiTable& t);
/// max{i : beta_{i,j} != 0}, with the same truncation rule.
int projective_dimension(const BettiTable& t);

/// {"char": p, "truncated": bool, "entries": [{"i","j","beta"}...]} sorted by (i, j).
nlohmann::ordered_json betti_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::ordered_json& j);

/// Diagram with columns i and rows j - i, in the usual layout:
///
///            0 1 2
///     total: 1 2 1
///         0: 1 . .
///         1: . 2 .
std::string betti_diagram(const BettiTable& t);

/// Signed entrywise difference b - a (e.g. initial minus binomial).
std::map<std::pair<int, int>, long long> betti_gap(const BettiTable& a, const BettiTable& b);
std::string gap_diagram(const std::map<std::pair<int, int>, long long>& gap);

}  // namespace bei
