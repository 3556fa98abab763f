#include "partplanar/gf2.hpp"

#include <algorithm>
#include <unordered_set>

namespace partplanar {

void Gf2System::add_row(std::vector<int> support, bool rhs) {
  std::sort(support.begin(), support.end());
  // x + x = 0: cancel repeated indices pairwise.
  std::vector<int> reduced;
  reduced.reserve(support.size());
  for (size_t i = 0; i < support.size();) {
    size_t j = i;
    while (j < support.size() && support[j] == support[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(support[i]);
    i = j;
  }
  for (int var : reduced) {
    if (var < 0 || var >= num_variables) {
      throw ValidationError("variable index " + std::to_string(var) + " out of range for " +
                            std::to_string(num_variables) + " variables");
    }
  }
  rows.push_back(Row{std::move(reduced), static_cast<uint8_t>(rhs ? 1 : 0)});
}

namespace {

struct RowHash {
  size_t operator()(const Gf2System::Row* r) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(r->rhs);
    for (int v : r->support) mix(static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull);
    return h;
  }
};

struct RowEq {
  bool operator()(const Gf2System::Row* a, const Gf2System::Row* b) const {
    return a->rhs == b->rhs && a->support == b->support;
  }
};

// Packed row storage skipping leading zero words; the rhs lives in the bit
// just past the last variable column.
struct PackedRow {
  int lead_word = 0;
  std::vector<uint64_t> words;  // from lead_word to the end
};

}  // namespace

EliminationResult eliminate(const Gf2System& sys) {
  EliminationResult result;

  // Column compaction: only variables that occur get a dense column.
  std::vector<int> occurring;
  for (const auto& row : sys.rows) {
    occurring.insert(occurring.end(), row.support.begin(), row.support.end());
  }
  std::sort(occurring.begin(), occurring.end());
  occurring.erase(std::unique(occurring.begin(), occurring.end()), occurring.end());
  const int cols = static_cast<int>(occurring.size());
  std::vector<int> col_of;
  if (!occurring.empty()) {
    col_of.assign(static_cast<size_t>(occurring.back()) + 1, -1);
    for (int c = 0; c < cols; ++c) col_of[static_cast<size_t>(occurring[c])] = c;
  }

  const int total_words = (cols + 1 + 63) / 64;  // +1 bit for the rhs
  const int rhs_bit = cols;

  std::unordered_set<const Gf2System::Row*, RowHash, RowEq> seen;
  std::vector<PackedRow> basis(static_cast<size_t>(cols));
  std::vector<uint8_t> has_pivot(static_cast<size_t>(cols), 0);
  std::vector<uint64_t> work(static_cast<size_t>(total_words));
  bool saw_contradiction = false;

  auto first_set = [&](const std::vector<uint64_t>& w, int from_bit) {
    int wi = from_bit / 64;
    for (; wi < total_words; ++wi) {
      uint64_t x = w[static_cast<size_t>(wi)];
      if (wi == from_bit / 64) x &= ~0ull << (from_bit % 64);
      if (wi == rhs_bit / 64) x &= ~(1ull << (rhs_bit % 64));  // never pivot on the rhs
      if (x) return wi * 64 + __builtin_ctzll(x);
    }
    return -1;
  };

  for (const auto& row : sys.rows) {
    if (!seen.insert(&row).second) continue;  // duplicate row

    std::fill(work.begin(), work.end(), 0);
    for (int var : row.support) {
      int c = col_of[static_cast<size_t>(var)];
      work[static_cast<size_t>(c) / 64] |= 1ull << (c % 64);
    }
    if (row.rhs) work[static_cast<size_t>(rhs_bit) / 64] |= 1ull << (rhs_bit % 64);

    int lead = first_set(work, 0);
    while (lead >= 0 && has_pivot[static_cast<size_t>(lead)]) {
      const PackedRow& b = basis[static_cast<size_t>(lead)];
      for (size_t wi = 0; wi < b.words.size(); ++wi) {
        work[static_cast<size_t>(b.lead_word) + wi] ^= b.words[wi];
      }
      lead = first_set(work, lead);
    }
    if (lead < 0) {
      if (work[static_cast<size_t>(rhs_bit) / 64] >> (rhs_bit % 64) & 1) saw_contradiction = true;
      continue;
    }
    PackedRow packed;
    packed.lead_word = lead / 64;
    packed.words.assign(work.begin() + packed.lead_word, work.end());
    basis[static_cast<size_t>(lead)] = std::move(packed);
    has_pivot[static_cast<size_t>(lead)] = 1;
    ++result.rank;
  }

  result.consistent = !saw_contradiction;
  result.free_variable_count = sys.num_variables - result.rank;

  if (result.consistent) {
    // Back-substitution over the echelon basis, free variables at 0.
    std::vector<uint64_t> packed_solution(static_cast<size_t>(total_words), 0);
    for (int c = cols - 1; c >= 0; --c) {
      if (!has_pivot[static_cast<size_t>(c)]) continue;
      const PackedRow& b = basis[static_cast<size_t>(c)];
      uint64_t acc = 0;
      for (size_t wi = 0; wi < b.words.size(); ++wi) {
        acc ^= b.words[wi] & packed_solution[static_cast<size_t>(b.lead_word) + wi];
      }
      int bit = __builtin_parityll(acc);
      if (b.words[static_cast<size_t>(rhs_bit / 64 - b.lead_word)] >> (rhs_bit % 64) & 1) bit ^= 1;
      if (bit) packed_solution[static_cast<size_t>(c) / 64] |= 1ull << (c % 64);
    }
    result.solution.assign(static_cast<size_t>(sys.num_variables), 0);
    for (int c = 0; c < cols; ++c) {
      if (packed_solution[static_cast<size_t>(c) / 64] >> (c % 64) & 1) {
        result.solution[static_cast<size_t>(occurring[static_cast<size_t>(c)])] = 1;
      }
    }
  }
  return result;
}

bool evaluate(const Gf2System& sys, const std::vector<uint8_t>& assignment) {
  if (static_cast<int>(assignment.size()) != sys.num_variables) {
    throw ValidationError("assignment has " + std::to_string(assignment.size()) +
                          " entries, system has " + std::to_string(sys.num_variables) +
                          " variables");
  }
  for (const auto& row : sys.rows) {
    int parity = row.rhs;
    for (int var : row.support) parity ^= assignment[static_cast<size_t>(var)] & 1;
    if (parity) return false;
  }
  return true;
}

}  // namespace partplanar
