#include "tmatch/blossom.hpp"

#include <algorithm>
#include <numeric>

namespace tmatch {

namespace {

class WeightedMatcher {
 public:
  WeightedMatcher(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : nv_(n), ne_(static_cast<int>(edges.size())), maxcard_(max_cardinality), edges_(edges) {
    endpoint_.resize(2 * ne_);
    neighbend_.assign(nv_, {});
    Weight maxweight = 0;
    for (int k = 0; k < ne_; ++k) {
      const auto& e = edges_[k];
      TMATCH_CHECK(e.u != e.v && e.u >= 0 && e.v >= 0 && e.u < nv_ && e.v < nv_, "matching edge out of range");
      endpoint_[2 * k] = e.u;
      endpoint_[2 * k + 1] = e.v;
      neighbend_[e.u].push_back(2 * k + 1);
      neighbend_[e.v].push_back(2 * k);
      maxweight = std::max(maxweight, e.w);
    }
    mate_.assign(nv_, -1);
    label_.assign(2 * nv_, 0);
    labelend_.assign(2 * nv_, -1);
    inblossom_.resize(nv_);
    std::iota(inblossom_.begin(), inblossom_.end(), 0);
    blossomparent_.assign(2 * nv_, -1);
    blossomchilds_.assign(2 * nv_, {});
    blossombase_.assign(2 * nv_, -1);
    for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * nv_, {});
    bestedge_.assign(2 * nv_, -1);
    blossombestedges_.assign(2 * nv_, {});
    hasbestedges_.assign(2 * nv_, 0);
    for (int b = 2 * nv_ - 1; b >= nv_; --b) unused_.push_back(b);
    dualvar_.assign(2 * nv_, 0);
    for (int v = 0; v < nv_; ++v) dualvar_[v] = 2 * maxweight;
    allowedge_.assign(ne_, 0);
  }

  void warm_start(const WarmStart& ws) {
    TMATCH_CHECK(static_cast<int>(ws.y.size()) == nv_, "warm start size mismatch");
    for (int v = 0; v < nv_; ++v) dualvar_[v] = 2 * ws.y[v];
    for (int k = 0; k < ne_; ++k) TMATCH_CHECK(slack(k) >= 0, "warm start duals are infeasible");
    for (int k : ws.greedy) {
      int u = edges_[k].u, v = edges_[k].v;
      if (mate_[u] == -1 && mate_[v] == -1 && slack(k) == 0) {
        mate_[u] = 2 * k + 1;
        mate_[v] = 2 * k;
      }
    }
  }

  void solve() {
    if (nv_ == 0) return;
    while (true) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv_; b < 2 * nv_; ++b) {
        blossombestedges_[b].clear();
        hasbestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < nv_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            Weight kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        Weight delta = 0;
        int deltaedge = -1, deltablossom = -1;
        if (!maxcard_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_);
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            Weight d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * nv_; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            Weight kslack = slack(bestedge_[b]);
            TMATCH_CHECK(kslack % 2 == 0, "odd slack between S-vertices");
            Weight d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          TMATCH_CHECK(maxcard_, "no dual step available");
          deltatype = 1;
          delta = std::max<Weight>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_));
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 1) dualvar_[v] -= delta;
          else if (label_[inblossom_[v]] == 2) dualvar_[v] += delta;
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) dualvar_[b] += delta;
            else if (label_[b] == 2) dualvar_[b] -= delta;
          }
        }
        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].u);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = nv_; b < 2 * nv_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }
  }

  MatchingResult result() const {
    MatchingResult r;
    r.mate_edge.assign(nv_, -1);
    for (int v = 0; v < nv_; ++v) {
      if (mate_[v] >= 0) {
        r.mate_edge[v] = mate_[v] / 2;
        if (edges_[mate_[v] / 2].u == v || edges_[mate_[v] / 2].v == v) {
          if (v < endpoint_[mate_[v]]) {
            r.weight += edges_[mate_[v] / 2].w;
            ++r.size;
          }
        }
      }
    }
    r.y2.assign(dualvar_.begin(), dualvar_.begin() + nv_);
    for (int b = nv_; b < 2 * nv_; ++b) {
      if (blossombase_[b] < 0) continue;
      DualBlossom db;
      leaves(b, db.vertices);
      db.z2 = 2 * dualvar_[b];
      r.blossoms.push_back(std::move(db));
    }
    return r;
  }

 private:
  Weight slack(int k) const { return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].w; }

  void leaves(int b, std::vector<int>& out) const {
    std::vector<int> stack{b};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x < nv_) {
        out.push_back(x);
      } else {
        for (auto it = blossomchilds_[x].rbegin(); it != blossomchilds_[x].rend(); ++it) stack.push_back(*it);
      }
    }
  }

  static int at(const std::vector<int>& v, int j) {
    int n = static_cast<int>(v.size());
    return v[((j % n) + n) % n];
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else if (t == 2) {
      int base = blossombase_[b];
      TMATCH_CHECK(mate_[base] >= 0, "T-blossom base is unmatched");
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u, w = edges_[k].v;
    int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
    TMATCH_CHECK(!unused_.empty(), "out of blossom slots");
    int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    std::vector<int> lv;
    leaves(b, lv);
    for (int x : lv) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    }
    std::vector<int>& bestedgeto = scratch_bestedgeto_;
    bestedgeto.assign(2 * nv_, -1);
    std::vector<int> touched;
    auto consider = [&](int kk) {
      int i = edges_[kk].u, j = edges_[kk].v;
      if (inblossom_[j] == b) std::swap(i, j);
      int bj = inblossom_[j];
      if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
        if (bestedgeto[bj] == -1) touched.push_back(bj);
        bestedgeto[bj] = kk;
      }
    };
    for (int sub : path) {
      if (!hasbestedges_[sub]) {
        std::vector<int> sl;
        leaves(sub, sl);
        for (int x : sl)
          for (int p : neighbend_[x]) consider(p / 2);
      } else {
        for (int kk : blossombestedges_[sub]) consider(kk);
      }
      blossombestedges_[sub].clear();
      hasbestedges_[sub] = 0;
      bestedge_[sub] = -1;
    }
    std::sort(touched.begin(), touched.end());
    auto& mine = blossombestedges_[b];
    mine.clear();
    for (int bj : touched) mine.push_back(bestedgeto[bj]);
    hasbestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : mine)
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }

  void expand_blossom(int b, bool endstage) {
    std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> lv;
        leaves(s, lv);
        for (int x : lv) inblossom_[x] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& ch = blossomchilds_[b];
      const auto& ep = blossomendps_[b];
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= static_cast<int>(ch.size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[at(ep, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[at(ep, j - endptrick) / 2] = 1;
        j += jstep;
        p = at(ep, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = at(ch, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (at(ch, j) != entrychild) {
        bv = at(ch, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> lv;
        leaves(bv, lv);
        int found = -1;
        for (int x : lv)
          if (label_[x] != 0) {
            found = x;
            break;
          }
        if (found >= 0) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    hasbestedges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& ch = blossomchilds_[b];
    auto& ep = blossomendps_[b];
    int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= static_cast<int>(ch.size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(ch, j);
      int p = at(ep, j - endptrick) ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = at(ch, j);
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
    TMATCH_CHECK(blossombase_[b] == v, "blossom base mismatch after augmentation");
  }

  void augment_matching(int k) {
    int v = edges_[k].u, w = edges_[k].v;
    int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (auto& sp : starts) {
      int s = sp[0], p = sp[1];
      while (true) {
        int bs = inblossom_[s];
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_, ne_;
  bool maxcard_;
  const std::vector<WeightedEdge>& edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
  std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
  std::vector<char> hasbestedges_;
  std::vector<int> unused_;
  std::vector<Weight> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
  std::vector<int> scratch_bestedgeto_;
};

}  // namespace

MatchingResult max_weight_matching(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality,
                                   const WarmStart* warm) {
  WeightedMatcher m(n, edges, max_cardinality);
  if (warm) m.warm_start(*warm);
  m.solve();
  return m.result();
}

std::optional<MatchingResult> max_weight_perfect_matching(int n, const std::vector<WeightedEdge>& edges,
                                                          const WarmStart* warm) {
  if (n % 2 != 0) return std::nullopt;
  auto r = max_weight_matching(n, edges, true, warm);
  if (2 * r.size != n) return std::nullopt;
  return r;
}

bool verify_perfect_certificate(int n, const std::vector<WeightedEdge>& edges, const MatchingResult& r) {
  if (static_cast<int>(r.mate_edge.size()) != n || static_cast<int>(r.y2.size()) != n) return false;
  // innermost-first blossom chains per vertex
  std::vector<std::vector<int>> chain(n);
  for (int i = 0; i < static_cast<int>(r.blossoms.size()); ++i) {
    const auto& b = r.blossoms[i];
    if (b.z2 < 0) return false;
    if (b.vertices.size() % 2 == 0) return false;
    for (int v : b.vertices) chain[v].push_back(i);
  }
  std::vector<int> inside(r.blossoms.size(), 0);
  for (int v = 0; v < n; ++v) {
    int k = r.mate_edge[v];
    if (k < 0 || (edges[k].u != v && edges[k].v != v)) return false;
  }
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    const auto& e = edges[k];
    Weight s = r.y2[e.u] + r.y2[e.v] - 2 * e.w;
    if (!chain[e.u].empty() && !chain[e.v].empty()) {
      std::vector<int> a = chain[e.u], b = chain[e.v];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<int> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      for (int bi : both) {
        s += r.blossoms[bi].z2;
        if (r.mate_edge[e.u] == k) ++inside[bi];
      }
    }
    if (s < 0) return false;
    if (r.mate_edge[e.u] == k && s != 0) return false;
  }
  for (std::size_t i = 0; i < r.blossoms.size(); ++i)
    if (r.blossoms[i].z2 > 0 && 2 * inside[i] + 1 != static_cast<int>(r.blossoms[i].vertices.size())) return false;
  return true;
}

namespace {

class CardinalityMatcher {
 public:
  CardinalityMatcher(int n, const std::vector<std::vector<int>>& adj, std::vector<int> mate)
      : n_(n), adj_(adj), mate_(std::move(mate)), label_(n, -1), parent_(n, -1), base_(n), dsu_(n), mark_(n, 0),
        dead_(n, 0) {
    std::iota(base_.begin(), base_.end(), 0);
    std::iota(dsu_.begin(), dsu_.end(), 0);
  }

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v)
      if (mate_[v] == -1)
        for (int u : adj_[v])
          if (mate_[u] == -1) {
            mate_[u] = v;
            mate_[v] = u;
            break;
          }
    for (int r = 0; r < n_; ++r)
      if (mate_[r] == -1 && !dead_[r]) search(r);
    return mate_;
  }

 private:
  int find(int x) {
    while (dsu_[x] != x) x = dsu_[x] = dsu_[dsu_[x]];
    return x;
  }
  int base(int x) { return base_[find(x)]; }
  void touch(int x) {
    if (label_[x] == -1 && parent_[x] == -1 && dsu_[x] == x) touched_.push_back(x);
  }

  int lca(int a, int b) {
    ++stamp_;
    while (true) {
      a = base(a);
      mark_[a] = stamp_;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base(b);
      if (mark_[b] == stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void unite(int x, int into_base) {
    int rx = find(x), ry = find(into_base);
    if (rx == ry) return;
    dsu_[rx] = ry;
    base_[ry] = into_base;
  }

  void contract(int v, int w, int a, std::vector<int>& queue) {
    while (base(v) != a) {
      parent_[v] = w;
      w = mate_[v];
      if (label_[w] == 1) {
        label_[w] = 0;
        queue.push_back(w);
      }
      unite(v, a);
      unite(w, a);
      v = parent_[w];
    }
  }

  void search(int root) {
    touched_.clear();
    std::vector<int> queue;
    touch(root);
    label_[root] = 0;
    queue.push_back(root);
    bool found = false;
    for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
      int v = queue[qi];
      for (int u : adj_[v]) {
        if (dead_[u]) continue;
        if (label_[u] == -1) {
          touch(u);
          label_[u] = 1;
          parent_[u] = v;
          if (mate_[u] == -1) {
            augment(u);
            found = true;
            break;
          }
          int m = mate_[u];
          touch(m);
          label_[m] = 0;
          queue.push_back(m);
        } else if (label_[u] == 0 && base(u) != base(v)) {
          int a = lca(base(u), base(v));
          contract(u, v, a, queue);
          contract(v, u, a, queue);
        }
      }
    }
    for (int x : touched_) {
      if (!found) dead_[x] = 1;
      label_[x] = -1;
      parent_[x] = -1;
      dsu_[x] = x;
      base_[x] = x;
    }
  }

  void augment(int u) {
    while (u != -1) {
      int pv = parent_[u];
      int nv = mate_[pv];
      mate_[u] = pv;
      mate_[pv] = u;
      u = nv;
    }
  }

  int n_;
  const std::vector<std::vector<int>>& adj_;
  std::vector<int> mate_, label_, parent_, base_, dsu_;
  std::vector<int> mark_;
  std::vector<char> dead_;
  std::vector<int> touched_;
  int stamp_ = 0;
};

}  // namespace

std::vector<int> max_cardinality_matching(int n, const std::vector<std::vector<int>>& adj, std::vector<int> mate) {
  if (mate.empty()) mate.assign(n, -1);
  TMATCH_CHECK(static_cast<int>(mate.size()) == n, "initial matching size mismatch");
  CardinalityMatcher cm(n, adj, std::move(mate));
  return cm.run();
}

}  // namespace tmatch
