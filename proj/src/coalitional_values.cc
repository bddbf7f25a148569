// Copyright 2026 The coopgame Authors
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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "coopgame/values.h"

namespace coopgame {
namespace {

std::uint64_t AllUnions(int m) { return (std::uint64_t{1} << m) - 1; }

std::uint64_t OtherUnions(int m, int k) {
  return AllUnions(m) & ~(std::uint64_t{1} << k);
}

// sum over R subset of M\{k}, T subset of P_k\{i} of
//   union_weight(r) * member_weight(t) * [v(U_R u T u i) - v(U_R u T)]
template <typename UnionWeight, typename MemberWeight>
Allocation WeightedMarginalValue(const CSGame& csg, UnionWeight union_weight,
                                 MemberWeight member_weight) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  const int m = p.num_unions();
  Allocation result{std::vector<double>(v.num_players(), 0.0)};
  for (int i = 0; i < v.num_players(); ++i) {
    const int k = p.UnionOf(i);
    const Coalition own = p.Union(k);
    double sum = 0.0;
    // Union sets are bitmasks over union indices; ForEachSubset only cares
    // about the bits.
    ForEachSubset(Coalition(OtherUnions(m, k)), [&](Coalition r) {
      const Coalition outside = p.Merge(r.mask());
      const double wr = union_weight(m, r.size());
      ForEachSubset(own.Without(i), [&](Coalition t) {
        const Coalition s = outside | t;
        sum += wr * member_weight(own.size(), t.size()) * (v(s.With(i)) - v(s));
      });
    });
    result[i] = sum;
  }
  return result;
}

Allocation GammaCOf(const Game& v, const Partition& p) {
  const int m = p.num_unions();
  const std::uint64_t all = AllUnions(m);

  // Union-level bracket, one per union:
  //   sum_{R proper, k in R} v(U_R)/r - sum_{R nonempty, k not in R} v(U_R)/(m-r)
  std::vector<double> union_term(m, 0.0);
  for (std::uint64_t r = 1; r < all; ++r) {
    const double worth = v(p.Merge(r));
    const int size = std::popcount(r);
    for (int k = 0; k < m; ++k) {
      if ((r >> k) & 1) {
        union_term[k] += worth / size;
      } else {
        union_term[k] -= worth / (m - size);
      }
    }
  }

  Allocation result{std::vector<double>(v.num_players(), 0.0)};
  for (int i = 0; i < v.num_players(); ++i) {
    const int k = p.UnionOf(i);
    const Coalition own = p.Union(k);
    const int pk = own.size();
    double inner = 0.0;
    ForEachSubset(Coalition(OtherUnions(m, k)), [&](Coalition r) {
      const Coalition outside = p.Merge(r.mask());
      ForEachSubset(own, [&](Coalition t) {
        if (t.empty() || t == own) return;
        const double worth = v(outside | t);
        if (t.Contains(i)) {
          inner += worth / t.size();
        } else {
          inner -= worth / (pk - t.size());
        }
      });
    });
    result[i] = std::ldexp(inner, -(m - 1) - (pk - 1)) +
                std::ldexp(union_term[k], -(m - 1)) / pk +
                v.Grand() / (static_cast<double>(m) * pk);
  }
  return result;
}

// v(P_k) - sum_{j in P_k} v({j}), per union.
std::vector<double> UnionSurplus(const Game& v, const Partition& p) {
  std::vector<double> surplus;
  for (const Coalition u : p.unions()) {
    double x = v(u);
    ForEachMember(u, [&](int j) { x -= v.Singleton(j); });
    surplus.push_back(x);
  }
  return surplus;
}

}  // namespace

Allocation Owen(const CSGame& csg) {
  return WeightedMarginalValue(
      csg,
      [](int m, int r) {
        return 1.0 / (static_cast<double>(m) *
                      static_cast<double>(Binomial(m - 1, r)));
      },
      [](int pk, int t) {
        return 1.0 / (static_cast<double>(pk) *
                      static_cast<double>(Binomial(pk - 1, t)));
      });
}

Allocation OwenOrderingOracle(const CSGame& csg) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  const int n = v.num_players();
  if (n > 10) {
    throw std::invalid_argument("ordering oracle is limited to 10 players");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> total(n, 0.0);
  std::uint64_t count = 0;
  do {
    // Unions must appear as contiguous blocks.
    std::vector<bool> closed(p.num_unions(), false);
    bool compatible = true;
    for (int pos = 0; pos < n && compatible; ++pos) {
      const int u = p.UnionOf(order[pos]);
      if (closed[u]) compatible = false;
      if (pos + 1 < n && p.UnionOf(order[pos + 1]) != u) closed[u] = true;
    }
    if (!compatible) continue;
    Coalition before;
    for (int player : order) {
      total[player] += v(before.With(player)) - v(before);
      before = before.With(player);
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& x : total) x /= static_cast<double>(count);
  return Allocation{std::move(total)};
}

Allocation BanzhafOwen(const CSGame& csg) {
  return WeightedMarginalValue(
      csg, [](int m, int) { return std::ldexp(1.0, -(m - 1)); },
      [](int pk, int) { return std::ldexp(1.0, -(pk - 1)); });
}

Allocation GammaC(const CSGame& csg) {
  return GammaCOf(csg.game(), csg.partition());
}

Allocation BigGammaC(const CSGame& csg) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  const std::vector<double> surplus = UnionSurplus(v, p);
  Allocation result = GammaCOf(PartitionNormalize(csg), p);
  for (int i = 0; i < v.num_players(); ++i) {
    const int k = p.UnionOf(i);
    result[i] += v.Singleton(i) + surplus[k] / p.Union(k).size();
  }
  return result;
}

Allocation EqualDivisionUnions(const CSGame& csg) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  const int m = p.num_unions();
  Allocation result{std::vector<double>(v.num_players())};
  for (int i = 0; i < v.num_players(); ++i) {
    result[i] = v.Grand() /
                (static_cast<double>(m) * p.Union(p.UnionOf(i)).size());
  }
  return result;
}

Allocation EqualSurplusDivision2Unions(const CSGame& csg) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  const int m = p.num_unions();
  const std::vector<double> surplus = UnionSurplus(v, p);
  double grand_surplus = v.Grand();
  for (const Coalition u : p.unions()) grand_surplus -= v(u);
  Allocation result{std::vector<double>(v.num_players())};
  for (int i = 0; i < v.num_players(); ++i) {
    const int k = p.UnionOf(i);
    const int pk = p.Union(k).size();
    result[i] = v.Singleton(i) + surplus[k] / pk +
                grand_surplus / (static_cast<double>(m) * pk);
  }
  return result;
}

}  // namespace coopgame
