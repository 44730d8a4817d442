// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/maxflow.hpp"

#include <queue>
#include <stdexcept>

namespace dslab {

MaxFlow::MaxFlow(int node_count)
    : n_(node_count),
      arcs_(static_cast<std::size_t>(node_count)),
      level_(static_cast<std::size_t>(node_count)),
      iter_(static_cast<std::size_t>(node_count)) {
  if (node_count <= 0) throw std::invalid_argument("flow network needs nodes");
}

void MaxFlow::add_arc(int u, int v, BigInt capacity) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("arc endpoint out of range");
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  auto& fwd = arcs_[static_cast<std::size_t>(u)];
  auto& bwd = arcs_[static_cast<std::size_t>(v)];
  fwd.push_back(Arc{v, static_cast<int>(bwd.size()), std::move(capacity)});
  bwd.push_back(Arc{u, static_cast<int>(fwd.size()) - 1, BigInt(0)});
}

bool MaxFlow::bfs(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Arc& arc : arcs_[static_cast<std::size_t>(v)]) {
      if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
        level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

BigInt MaxFlow::dfs(int v, int sink, const BigInt& limit) {
  if (v == sink) return limit;
  BigInt pushed = 0;
  for (std::size_t& i = iter_[static_cast<std::size_t>(v)]; i < arcs_[static_cast<std::size_t>(v)].size(); ++i) {
    Arc& arc = arcs_[static_cast<std::size_t>(v)][i];
    if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1) {
      continue;
    }
    BigInt room = limit - pushed;
    if (room > arc.cap) room = arc.cap;
    BigInt got = dfs(arc.to, sink, room);
    if (got > 0) {
      arc.cap -= got;
      arcs_[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.rev)].cap += got;
      pushed += got;
      if (pushed == limit) return pushed;
    }
  }
  return pushed;
}

BigInt MaxFlow::run(int source, int sink) {
  if (source == sink) throw std::invalid_argument("source equals sink");
  BigInt total = 0;
  BigInt infinity = 0;
  for (const Arc& arc : arcs_[static_cast<std::size_t>(source)]) infinity += arc.cap;
  infinity += 1;
  while (bfs(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    for (;;) {
      BigInt got = dfs(source, sink, infinity);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

std::vector<char> MaxFlow::min_cut_source_side(int source) const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::queue<int> queue;
  seen[static_cast<std::size_t>(source)] = 1;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Arc& arc : arcs_[static_cast<std::size_t>(v)]) {
      if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
        seen[static_cast<std::size_t>(arc.to)] = 1;
        queue.push(arc.to);
      }
    }
  }
  return seen;
}

std::vector<char> MaxFlow::max_cut_source_side(int sink) const {
  // Walk residual arcs backwards from the sink; whatever cannot reach the
  // sink belongs to the largest minimum cut's source side.
  std::vector<char> reaches(static_cast<std::size_t>(n_), 0);
  std::queue<int> queue;
  reaches[static_cast<std::size_t>(sink)] = 1;
  queue.push(sink);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    // An arc u -> v with residual capacity lets u reach v; scan v's arc list
    // for reverse entries whose partner still has capacity.
    for (const Arc& arc : arcs_[static_cast<std::size_t>(v)]) {
      int u = arc.to;
      const Arc& partner = arcs_[static_cast<std::size_t>(u)][static_cast<std::size_t>(arc.rev)];
      if (partner.cap > 0 && !reaches[static_cast<std::size_t>(u)]) {
        reaches[static_cast<std::size_t>(u)] = 1;
        queue.push(u);
      }
    }
  }
  std::vector<char> side(static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) side[static_cast<std::size_t>(v)] = reaches[static_cast<std::size_t>(v)] ? 0 : 1;
  return side;
}

}  // namespace dslab
