#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

namespace lfw::detail {

/// Dinic max-flow over an arc list with paired reverse arcs.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  int add_arc(int from, int to, long long cap) {
    const int id = static_cast<int>(to_.size());
    push(from, to, cap);
    push(to, from, 0);
    return id;
  }

  long long flow_on(int arc) const { return cap_[arc ^ 1]; }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
    }
    return total;
  }

 private:
  void push(int from, int to, long long cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int a = head_[v]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          q.push_back(to_[a]);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long pushed) {
    if (v == t) return pushed;
    for (int& a = iter_[v]; a != -1; a = next_[a]) {
      const int u = to_[a];
      if (cap_[a] <= 0 || level_[u] != level_[v] + 1) continue;
      if (long long f = dfs(u, t, std::min(pushed, cap_[a]))) {
        cap_[a] -= f;
        cap_[a ^ 1] += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<int> head_, to_, next_, level_, iter_;
  std::vector<long long> cap_;
};

/// Feasible s-t flow with per-arc lower bounds, via the usual excess
/// transformation onto a super source/sink.
class BoundedFlow {
 public:
  explicit BoundedFlow(int nodes) : nodes_(nodes), excess_(nodes, 0) {}

  int add_arc(int from, int to, long long lo, long long hi) {
    arcs_.push_back({from, to, lo, hi});
    excess_[to] += lo;
    excess_[from] -= lo;
    return static_cast<int>(arcs_.size()) - 1;
  }

  bool solve(int s, int t) {
    const int ss = nodes_, tt = nodes_ + 1;
    MaxFlow mf(nodes_ + 2);
    ids_.clear();
    for (const auto& a : arcs_) ids_.push_back(mf.add_arc(a.from, a.to, a.hi - a.lo));
    mf.add_arc(t, s, std::numeric_limits<long long>::max() / 4);
    long long need = 0;
    for (int v = 0; v < nodes_; ++v) {
      if (excess_[v] > 0) {
        mf.add_arc(ss, v, excess_[v]);
        need += excess_[v];
      } else if (excess_[v] < 0) {
        mf.add_arc(v, tt, -excess_[v]);
      }
    }
    const bool ok = mf.run(ss, tt) == need;
    flows_.assign(arcs_.size(), 0);
    for (std::size_t i = 0; i < arcs_.size(); ++i) flows_[i] = arcs_[i].lo + mf.flow_on(ids_[i]);
    return ok;
  }

  long long flow(int arc) const { return flows_[arc]; }

 private:
  struct Arc {
    int from, to;
    long long lo, hi;
  };
  int nodes_;
  std::vector<long long> excess_;
  std::vector<Arc> arcs_;
  std::vector<int> ids_;
  std::vector<long long> flows_;
};

}  // namespace lfw::detail
