#include "chainorder/crystal.hpp"

#include <algorithm>
#include <stdexcept>

#include "chainorder/chevalley.hpp"

namespace chainorder {

Column::Column(int n, std::vector<int> entries) : n(n), entries(std::move(entries)) {
  for (std::size_t i = 0; i < this->entries.size(); ++i) {
    if (this->entries[i] < 1 || this->entries[i] > n + 1)
      throw std::invalid_argument("column entry out of range");
    if (i > 0 && this->entries[i - 1] >= this->entries[i])
      throw std::invalid_argument("column entries must strictly increase");
  }
}

Column highest_column(int n, int k) {
  std::vector<int> e(k);
  for (int i = 0; i < k; ++i) e[i] = i + 1;
  return Column(n, std::move(e));
}

std::vector<Column> crystal_elements(int n, int k) {
  std::vector<Column> out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == k) {
      out.emplace_back(n, pick);
      return;
    }
    for (int v = from; v <= n + 1; ++v) {
      pick[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

std::optional<Column> ftilde(int i, const Column& b) {
  for (std::size_t l = 0; l < b.entries.size(); ++l)
    if (b.entries[l] == i) {
      int next = l + 1 < b.entries.size() ? b.entries[l + 1] : b.n + 2;
      if (next == i + 1) return std::nullopt;
      Column c = b;
      c.entries[l] = i + 1;
      return c;
    }
  return std::nullopt;
}

std::optional<Column> etilde(int i, const Column& b) {
  for (std::size_t l = 0; l < b.entries.size(); ++l)
    if (b.entries[l] == i + 1) {
      int prev = l > 0 ? b.entries[l - 1] : 0;
      if (prev == i) return std::nullopt;
      Column c = b;
      c.entries[l] = i;
      return c;
    }
  return std::nullopt;
}

int epsilon(int i, const Column& b) { return etilde(i, b) ? 1 : 0; }
int phi(int i, const Column& b) { return ftilde(i, b) ? 1 : 0; }

std::vector<int> weight(const Column& b) {
  std::vector<int> w(b.n);
  for (int i = 1; i <= b.n; ++i) w[i - 1] = phi(i, b) - epsilon(i, b);
  return w;
}

Column weyl(int i, const Column& b) {
  Column c = b;
  for (int& e : c.entries) {
    if (e == i) e = i + 1;
    else if (e == i + 1) e = i;
  }
  std::sort(c.entries.begin(), c.entries.end());
  return c;
}

CombValuation comb_valuation(int n, int k, const Column& b, const Partition& part) {
  if (b.n != n || b.k() != k) throw std::invalid_argument("column does not lie in B(pi_k)");
  std::vector<int> word = reduced_word(TypeTag::A, n);
  int nn = static_cast<int>(word.size());
  if (part.size() != nn) throw std::invalid_argument("partition size mismatch");
  auto block_start = [](int m) { return m * (m - 1) / 2; };  // N_{m-1}

  CombValuation out;
  out.value.assign(nn, 0);
  Column cur = b;
  auto apply_u = [&](int pos) {
    if (part.is_chain(pos)) cur = weyl(word[pos], cur);
  };

  for (int pos = 0; pos < block_start(n - k + 1); ++pos) apply_u(pos);

  for (int m = n - k + 1; m <= n; ++m) {
    int gamma = cur.entries[m - (n - k) - 1];
    out.gammas.push_back(gamma);
    int exception = m - gamma + 1;  // the only block position that may be 1
    for (int l = 1; l <= m; ++l) {
      int pos = block_start(m) + l - 1;
      int a;
      if (!part.is_chain(pos)) {
        if (l <= exception) a = 0;
        else if (l <= n - k + 1) a = 1;
        else a = 0;
      } else if (l != exception) {
        a = 0;
      } else {
        int idx = m - (n - k) + 1;  // 1-based entry index, n+2 past the end
        int entry = idx <= k ? cur.entries[idx - 1] : n + 2;
        a = entry == gamma + 1 ? 0 : 1;
      }
      out.value[pos] = a;
      apply_u(pos);
      for (int rep = 0; rep < a; ++rep) {
        auto up = etilde(word[pos], cur);
        if (!up) throw std::logic_error("comb_valuation: raising operator vanished");
        cur = *up;
      }
    }
  }
  if (!(cur == highest_column(n, k)))
    throw std::logic_error("comb_valuation: running column did not return to highest weight");
  return out;
}

}  // namespace chainorder
