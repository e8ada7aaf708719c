#include "treealign/delta.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace treealign {

std::string Comparator::fold(std::string_view token) const {
  std::string out;
  out.reserve(token.size());
  for (unsigned char c : token) {
    if (ignore_space && std::isspace(c)) continue;
    out.push_back(ignore_case ? static_cast<char>(std::tolower(c))
                              : static_cast<char>(c));
  }
  return out;
}

bool token_eq(std::string_view a, std::string_view b, const Comparator& cmp) {
  return cmp.fold(a) == cmp.fold(b);
}

namespace {

// Direct DP above this many table cells would stop being "cheap"; larger
// slices go through the divide-and-conquer path instead.
constexpr long long kDirectDpMaxCells = 1LL << 24;

using Sym = std::int32_t;

std::vector<Sym> intern(const std::vector<std::string>& tokens, const Comparator& cmp,
                        std::unordered_map<std::string, Sym>& table) {
  std::vector<Sym> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] = table.try_emplace(cmp.fold(t), static_cast<Sym>(table.size()));
    (void)inserted;
    out.push_back(it->second);
  }
  return out;
}

struct RawPair {
  int left;
  int right;
};

// Suffix-LCS table over a slice, then a greedy walk that emits the
// lexicographically smallest optimal pairing: take the earliest usable left
// position, matched at the earliest right position that keeps optimality.
void lcs_direct(const Sym* a, int alo, int ahi, const Sym* b, int blo, int bhi,
                std::vector<RawPair>& out) {
  const int n = ahi - alo, m = bhi - blo;
  // min(n, m) <= sqrt(cells) <= 4096 under kDirectDpMaxCells, so uint16 holds
  // every LCS length that can occur here.
  std::vector<std::uint16_t> len(static_cast<std::size_t>(n + 1) * (m + 1), 0);
  const std::size_t stride = static_cast<std::size_t>(m) + 1;
  for (int i = n - 1; i >= 0; --i) {
    const Sym ai = a[alo + i];
    for (int j = m - 1; j >= 0; --j) {
      const std::size_t at = static_cast<std::size_t>(i) * stride + j;
      if (ai == b[blo + j])
        len[at] = static_cast<std::uint16_t>(len[at + stride + 1] + 1);
      else
        len[at] = std::max(len[at + stride], len[at + 1]);
    }
  }
  int i = 0, j = 0;
  while (i < n && j < m && len[static_cast<std::size_t>(i) * stride + j] > 0) {
    const int remaining = len[static_cast<std::size_t>(i) * stride + j];
    int jj = j;
    while (jj < m && b[blo + jj] != a[alo + i]) ++jj;
    // Matching at the first occurrence maximizes what is left; if even that
    // falls short, no match in this row preserves optimality.
    if (jj < m &&
        len[static_cast<std::size_t>(i + 1) * stride + (jj + 1)] == remaining - 1) {
      out.push_back({alo + i, blo + jj});
      ++i;
      j = jj + 1;
    } else {
      ++i;
    }
  }
}

struct Snake {
  int x, y;  // start, slice-local coordinates made absolute by the caller
  int u, v;  // end
};

// Middle snake of the minimal edit script over a slice (the linear-space
// divide step of the greedy O(ND) diff).
Snake middle_snake(const Sym* a, int alo, int ahi, const Sym* b, int blo, int bhi) {
  const int n = ahi - alo, m = bhi - blo;
  const int delta = n - m;
  const bool odd = (delta & 1) != 0;
  const int dmax = (n + m + 3) / 2;

  std::vector<int> vf(2 * dmax + 3, 0), vb(2 * dmax + 3, 0);
  auto F = [&](int k) -> int& { return vf[k + dmax + 1]; };
  auto B = [&](int k) -> int& { return vb[k + dmax + 1]; };

  for (int d = 0; d <= dmax; ++d) {
    for (int k = -d; k <= d; k += 2) {
      int x = (k == -d || (k != d && F(k - 1) < F(k + 1))) ? F(k + 1) : F(k - 1) + 1;
      int y = x - k;
      const int x0 = x, y0 = y;
      while (x < n && y < m && a[alo + x] == b[blo + y]) { ++x; ++y; }
      F(k) = x;
      if (odd && k - delta >= -(d - 1) && k - delta <= d - 1 &&
          F(k) + B(delta - k) >= n)
        return {alo + x0, blo + y0, alo + x, blo + y};
    }
    for (int k = -d; k <= d; k += 2) {
      int x = (k == -d || (k != d && B(k - 1) < B(k + 1))) ? B(k + 1) : B(k - 1) + 1;
      int y = x - k;
      const int x0 = x, y0 = y;
      while (x < n && y < m && a[ahi - 1 - x] == b[bhi - 1 - y]) { ++x; ++y; }
      B(k) = x;
      if (!odd && delta - k >= -d && delta - k <= d && B(k) + F(delta - k) >= n)
        return {alo + (n - x), blo + (m - y), alo + (n - x0), blo + (m - y0)};
    }
  }
  throw std::logic_error("middle snake search did not terminate");
}

void lcs_rec(const Sym* a, int alo, int ahi, const Sym* b, int blo, int bhi,
             long long dp_max_cells, std::vector<RawPair>& out) {
  while (alo < ahi && blo < bhi && a[alo] == b[blo]) {
    out.push_back({alo, blo});
    ++alo;
    ++blo;
  }
  int suffix = 0;
  while (ahi > alo && bhi > blo && a[ahi - 1] == b[bhi - 1]) {
    --ahi;
    --bhi;
    ++suffix;
  }
  const long long n = ahi - alo, m = bhi - blo;
  if (n > 0 && m > 0) {
    if ((n + 1) * (m + 1) <= dp_max_cells) {
      lcs_direct(a, alo, ahi, b, blo, bhi, out);
    } else {
      const Snake s = middle_snake(a, alo, ahi, b, blo, bhi);
      lcs_rec(a, alo, s.x, b, blo, s.y, dp_max_cells, out);
      for (int t = 0; t < s.u - s.x; ++t) out.push_back({s.x + t, s.y + t});
      lcs_rec(a, s.u, ahi, b, s.v, bhi, dp_max_cells, out);
    }
  }
  for (int t = 0; t < suffix; ++t) out.push_back({ahi + t, bhi + t});
}

std::vector<MatchPair> matches_with_budget(const std::vector<std::string>& left,
                                           const std::vector<std::string>& right,
                                           const Comparator& cmp,
                                           long long dp_max_cells) {
  std::unordered_map<std::string, Sym> table;
  const std::vector<Sym> a = intern(left, cmp, table);
  const std::vector<Sym> b = intern(right, cmp, table);

  std::vector<RawPair> raw;
  raw.reserve(std::min(a.size(), b.size()));
  lcs_rec(a.data(), 0, static_cast<int>(a.size()), b.data(), 0,
          static_cast<int>(b.size()), dp_max_cells, raw);

  std::vector<MatchPair> out;
  out.reserve(raw.size());
  for (const RawPair& p : raw) out.push_back({p.left + 1, p.right + 1});
  return out;
}

}  // namespace

std::vector<MatchPair> minimal_matches(const std::vector<std::string>& left,
                                       const std::vector<std::string>& right,
                                       const Comparator& cmp) {
  return matches_with_budget(left, right, cmp, kDirectDpMaxCells);
}

namespace detail {
std::vector<MatchPair> minimal_matches_capped(const std::vector<std::string>& left,
                                              const std::vector<std::string>& right,
                                              const Comparator& cmp,
                                              long long direct_dp_max_cells) {
  return matches_with_budget(left, right, cmp, direct_dp_max_cells);
}
}  // namespace detail

std::optional<int> DeltaMap::image(int left_index) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), left_index,
                             [](const DeltaPair& p, int v) { return p.left < v; });
  if (it != pairs.end() && it->left == left_index) return it->right;
  return std::nullopt;
}

std::optional<int> DeltaMap::preimage(int right_index) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), right_index,
                             [](const DeltaPair& p, int v) { return p.right < v; });
  if (it != pairs.end() && it->right == right_index) return it->left;
  return std::nullopt;
}

DeltaMap compute_delta(const std::vector<std::string>& left,
                       const std::vector<std::string>& right,
                       const Comparator& cmp) {
  const auto exact = minimal_matches(left, right, cmp);
  DeltaMap delta;
  delta.pairs.reserve(exact.size());
  for (std::size_t t = 0; t < exact.size(); ++t) {
    if (t > 0) {
      const MatchPair& prev = exact[t - 1];
      const MatchPair& cur = exact[t];
      // a 1x1 gap between adjacent exact matches: the single-mismatch rule.
      // Both tokens necessarily differ, or the diff would have matched them.
      if (cur.left - prev.left == 2 && cur.right - prev.right == 2)
        delta.pairs.push_back({prev.left + 1, prev.right + 1, false});
    }
    delta.pairs.push_back({exact[t].left, exact[t].right, true});
  }
  return delta;
}

}  // namespace treealign
