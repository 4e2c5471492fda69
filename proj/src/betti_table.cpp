#include "bei/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "bei/errors.hpp"

namespace bei {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::uint64_t value) {
  if (value == 0)
    entries.erase({i, j});
  else
    entries[{i, j}] = value;
}

bool same_entries(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }

BettiTable betti_tensor(const BettiTable& t1, const BettiTable& t2) {
  if (t1.characteristic != t2.characteristic) {
    throw InputError("cannot tensor Betti tables over characteristics " +
                     std::to_string(t1.characteristic) + " and " +
                     std::to_string(t2.characteristic));
  }
  BettiTable out;
  out.characteristic = t1.characteristic;
  out.truncated = t1.truncated || t2.truncated;
  out.max_i = t1.max_i + t2.max_i;
  out.max_j = t1.max_j + t2.max_j;
  for (const auto& [k1, v1] : t1.entries)
    for (const auto& [k2, v2] : t2.entries)
      out.entries[{k1.first + k2.first, k1.second + k2.second}] += v1 * v2;
  return out;
}

namespace {

void check_window(const BettiTable& t, const char* what) {
  if (!t.truncated) return;
  for (const auto& [k, v] : t.entries) {
    if (k.first >= t.max_i || k.second >= t.max_j) {
      throw InconclusiveError(std::string(what) +
                              " is inconclusive: the table was truncated at i <= " +
                              std::to_string(t.max_i) + ", j <= " + std::to_string(t.max_j));
    }
  }
}

}  // namespace

int regularity(const BettiTable& t) {
  if (t.entries.empty()) throw PreconditionError("regularity of the zero module");
  check_window(t, "regularity");
  int r = 0;
  for (const auto& [k, v] : t.entries) r = std::max(r, k.second - k.first);
  return r;
}

int projective_dimension(const BettiTable& t) {
  if (t.entries.empty()) throw PreconditionError("projective dimension of the zero module");
  check_window(t, "projective dimension");
  int p = 0;
  for (const auto& [k, v] : t.entries) p = std::max(p, k.first);
  return p;
}

nlohmann::ordered_json betti_json(const BettiTable& t) {
  nlohmann::ordered_json out;
  out["char"] = t.characteristic;
  out["truncated"] = t.truncated;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [k, v] : t.entries)
    entries.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
  out["entries"] = std::move(entries);
  return out;
}

BettiTable betti_from_json(const nlohmann::ordered_json& j) {
  BettiTable t;
  try {
    t.characteristic = j.at("char").get<std::uint32_t>();
    t.truncated = j.at("truncated").get<bool>();
    for (const auto& e : j.at("entries")) {
      int i = e.at("i").get<int>();
      int jj = e.at("j").get<int>();
      t.set(i, jj, e.at("beta").get<std::uint64_t>());
      t.max_i = std::max(t.max_i, i);
      t.max_j = std::max(t.max_j, jj);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed Betti table: ") + e.what());
  }
  return t;
}

namespace {

template <class Value>
std::string diagram(const std::map<std::pair<int, int>, Value>& entries, bool with_total) {
  int max_i = 0, min_row = 0, max_row = 0;
  bool any = false;
  for (const auto& [k, v] : entries) {
    if (v == 0) continue;
    int row = k.second - k.first;
    if (!any) min_row = max_row = row;
    any = true;
    max_i = std::max(max_i, k.first);
    min_row = std::min(min_row, row);
    max_row = std::max(max_row, row);
  }
  if (!any) return "(zero)\n";

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  auto cell = [](Value v) { return v == 0 ? std::string(".") : std::to_string(v); };

  std::vector<std::string> header;
  for (int i = 0; i <= max_i; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  labels.push_back("");
  if (with_total) {
    std::vector<std::string> total;
    for (int i = 0; i <= max_i; ++i) {
      Value s = 0;
      for (const auto& [k, v] : entries)
        if (k.first == i) s += v;
      total.push_back(std::to_string(s));
    }
    cells.push_back(total);
    labels.push_back("total:");
  }
  for (int r = min_row; r <= max_row; ++r) {
    std::vector<std::string> row;
    for (int i = 0; i <= max_i; ++i) {
      auto it = entries.find({i, i + r});
      row.push_back(cell(it == entries.end() ? 0 : it->second));
    }
    cells.push_back(row);
    labels.push_back(std::to_string(r) + ":");
  }

  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> width(max_i + 1, 1);
  for (const auto& row : cells)
    for (int i = 0; i <= max_i; ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = std::string(label_w - labels[r].size(), ' ') + labels[r];
    for (int i = 0; i <= max_i; ++i)
      line += ' ' + std::string(width[i] - cells[r][i].size(), ' ') + cells[r][i];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

std::string betti_diagram(const BettiTable& t) { return diagram(t.entries, true); }

std::map<std::pair<int, int>, long long> betti_gap(const BettiTable& a, const BettiTable& b) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [k, v] : b.entries) out[k] += static_cast<long long>(v);
  for (const auto& [k, v] : a.entries) out[k] -= static_cast<long long>(v);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string gap_diagram(const std::map<std::pair<int, int>, long long>& gap) {
  if (gap.empty()) return "(all zero)\n";
  return diagram(gap, false);
}

}  // namespace bei
