// Copyright 2026 The Domino Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "domino/oracle.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace domino {

namespace {

// Enumerates all compositions of `total` into `parts` nonnegative integers.
void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == parts - 1) {
      cur[pos] = remaining;
      fn(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (parts >= 1) rec(0, total);
}

bool next_subset(std::vector<int>& pick, int n) {
  const int k = static_cast<int>(pick.size());
  int i = k - 1;
  while (i >= 0 && pick[i] == n - k + i) --i;
  if (i < 0) return false;
  ++pick[i];
  for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

}  // namespace

std::optional<int> enumerate_min_support(const Game& g, int player, int i,
                                         int max_actions) {
  const int count = g.actions(player);
  if (i < 0 || i >= count) {
    throw std::out_of_range("enumerate_min_support: action index out of range");
  }
  if (count > max_actions) {
    throw std::invalid_argument(
        "enumerate_min_support: action count exceeds the subset-search cap");
  }
  std::vector<int> others;
  for (int j = 0; j < count; ++j) {
    if (j != i) others.push_back(j);
  }
  const int n_others = static_cast<int>(others.size());

  for (int size = 1; size <= n_others; ++size) {
    std::vector<int> pick(size);
    for (int t = 0; t < size; ++t) pick[t] = t;
    do {
      std::vector<int> allowed;
      for (int t : pick) allowed.push_back(others[t]);
      if (find_dominating_mixture(g, player, i, allowed)) return size;
    } while (next_subset(pick, n_others));
  }
  return std::nullopt;
}

std::optional<Belief> grid_check_nbr(const Game& g, int player, int i,
                                     const GridSpec& grid) {
  if (grid.resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  const Game view = (player == 1) ? g : transpose(g);
  const int n = view.rows();
  const int m = view.cols();
  Vec vi = payoff_vector(view, 1, i);

  std::optional<Belief> found;
  for_each_composition(grid.resolution, m, [&](const std::vector<int>& counts) {
    if (found) return;
    Belief q;
    for (int c : counts) q.probs.push_back(Rational(c, grid.resolution));
    Rational ei = dot(vi, q.probs);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (dot(payoff_vector(view, 1, j), q.probs) > ei) return;
    }
    found = std::move(q);  // i is a weak best response here
  });
  return found;
}

bool verify_dominance_exhaustive(const Game& g, int player,
                                 const DominanceCertificate& cert,
                                 const GridSpec& grid) {
  if (cert.margin <= 0) return false;
  const Game view = (player == 1) ? g : transpose(g);
  const int m = view.cols();
  Vec vi = payoff_vector(view, 1, cert.dominated);

  Vec u(m, Rational(0));
  for (const auto& [j, w] : cert.mixture.weights) {
    if (j == cert.dominated || w <= 0) return false;
    Vec vj = payoff_vector(view, 1, j);
    for (int k = 0; k < m; ++k) u[k] += w * vj[k];
  }

  // Vertex check: complete by the coordinatewise criterion.
  for (int k = 0; k < m; ++k) {
    if (u[k] < vi[k] + cert.margin) return false;
  }

  // Grid cross-check.
  bool ok = true;
  for_each_composition(grid.resolution, m, [&](const std::vector<int>& counts) {
    if (!ok) return;
    Vec q;
    for (int c : counts) q.push_back(Rational(c, grid.resolution));
    if (dot(u, q) <= dot(vi, q)) ok = false;
  });
  return ok;
}

}  // namespace domino
