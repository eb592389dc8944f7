/*
 * Copyright 2026 permchar developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "permchar/oracles.hpp"

namespace pc {

uint64_t count_ham_cycles_through_edge(const std::vector<std::vector<int>>& adj, int u, int v) {
    const int n = int(adj.size());
    if (n < 3) return 0;
    if (!adj[size_t(u)][size_t(v)]) return 0;
    // count undirected Hamiltonian cycles containing edge {u, v}: paths from v
    // to u visiting all other vertices, divided by 2 for direction... a path
    // enumeration from u's side fixes direction, so no double counting.
    uint64_t count = 0;
    std::vector<char> used(size_t(n), 0);
    used[size_t(u)] = used[size_t(v)] = 1;
    auto rec = [&](auto&& self, int at, int left) -> void {
        if (left == 0) {
            if (adj[size_t(at)][size_t(u)]) ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[size_t(w)] || !adj[size_t(at)][size_t(w)]) continue;
            used[size_t(w)] = 1;
            self(self, w, left - 1);
            used[size_t(w)] = 0;
        }
    };
    rec(rec, v, n - 2);
    return count;
}

long long per_m2_even_int(const std::vector<std::vector<long long>>& a) {
    const int n = int(a.size());
    if (n % 2 != 0) throw OddSize{};
    if (n > 10) throw TooLarge("per_m2_even cap is 10");
    if (n == 0) return 1;
    long long acc = 0;
    std::vector<int> p(size_t(n), 0);
    for (int i = 0; i < n; ++i) p[size_t(i)] = i;
    do {
        auto cycles = detail::cycles_lexmin(p);
        bool even = true;
        for (auto& c : cycles) even = even && (c.size() % 2 == 0);
        if (!even) continue;
        long long t = 1;
        for (int i = 0; i < n; ++i) t *= a[size_t(i)][size_t(p[size_t(i)])];
        long long w = 1;
        for (size_t q = 0; q < cycles.size(); ++q) w *= -2;
        acc += w * t;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

}  // namespace pc
