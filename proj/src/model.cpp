#include "owct/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace owct {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_meta(int n, const std::vector<Rational>& r, const std::vector<Rational>& w) {
  require(n >= 0, "negative job count");
  require(static_cast<int>(r.size()) == n, "release vector size mismatch");
  require(static_cast<int>(w.size()) == n, "weight vector size mismatch");
  for (const auto& x : r) require(x >= 0, "negative release time");
  for (const auto& x : w) require(x >= 0, "negative weight");
}

}  // namespace

void CosInstance::check() const {
  check_meta(n, r, w);
  require(m >= 0, "negative machine count");
  require(static_cast<int>(p.size()) == m, "processing matrix row count mismatch");
  for (const auto& row : p) {
    require(static_cast<int>(row.size()) == n, "processing matrix column count mismatch");
    for (const auto& x : row) require(x >= 0, "negative processing time");
  }
}

void CoflowInstance::check() const {
  check_meta(n, r, w);
  require(m >= 1, "coflow instance needs at least one port per side");
  require(static_cast<int>(demand.size()) == n, "demand tensor job count mismatch");
  for (const auto& mat : demand) {
    require(static_cast<int>(mat.size()) == m, "demand matrix row count mismatch");
    for (const auto& row : mat) {
      require(static_cast<int>(row.size()) == m, "demand matrix column count mismatch");
      for (const auto& x : row) require(x >= 0, "negative demand");
    }
  }
}

void ClusterInstance::check() const {
  check_meta(n, r, w);
  require(m >= 0, "negative cluster count");
  require(static_cast<int>(sizes.size()) == m, "cluster size vector mismatch");
  for (int s : sizes) require(s >= 1, "cluster must have at least one machine");
  require(static_cast<int>(tasks.size()) == n, "task tensor job count mismatch");
  for (const auto& per_cluster : tasks) {
    require(static_cast<int>(per_cluster.size()) == m, "task tensor cluster count mismatch");
    for (const auto& list : per_cluster)
      for (const auto& x : list) require(x >= 0, "negative task duration");
  }
}

Rational Schedule::completion(int job) const {
  bool seen = false;
  Rational best;
  for (const auto& unit : by_unit)
    for (const auto& seg : unit)
      if (seg.job == job && (!seen || seg.end > best)) {
        best = seg.end;
        seen = true;
      }
  return seen ? best : offset;
}

Rational Schedule::makespan() const {
  Rational best = offset;
  for (const auto& unit : by_unit)
    if (!unit.empty() && unit.back().end > best) best = unit.back().end;
  return best - offset;
}

bool Schedule::contains(int job) const {
  return std::binary_search(jobs.begin(), jobs.end(), job);
}

Rational total_weight(const CosInstance& inst) {
  Rational s = 0;
  for (const auto& x : inst.w) s += x;
  return s;
}
Rational total_weight(const CoflowInstance& inst) {
  Rational s = 0;
  for (const auto& x : inst.w) s += x;
  return s;
}
Rational total_weight(const ClusterInstance& inst) {
  Rational s = 0;
  for (const auto& x : inst.w) s += x;
  return s;
}

Rational cos_batch_makespan(const CosInstance& inst, const std::vector<int>& jobs) {
  Rational best = 0;
  for (int i = 0; i < inst.m; ++i) {
    Rational load = 0;
    for (int j : jobs) load += inst.p[i][j];
    if (load > best) best = load;
  }
  return best;
}

namespace {

// Shared structural checks; fills per-(job, unit) scheduled work.
std::optional<std::string> check_segments(const Schedule& s, const std::vector<Rational>& r,
                                          int n,
                                          std::map<std::pair<int, int>, Rational>& work) {
  if (static_cast<int>(s.by_unit.size()) != s.units)
    return "unit list size does not match unit count";
  if (!std::is_sorted(s.jobs.begin(), s.jobs.end())) return "job list not ascending";
  for (int u = 0; u < s.units; ++u) {
    const auto& segs = s.by_unit[u];
    for (size_t k = 0; k < segs.size(); ++k) {
      const Segment& seg = segs[k];
      if (seg.job < 0 || seg.job >= n) return "segment with unknown job";
      if (!s.contains(seg.job)) return "segment of a job outside the scheduled set";
      if (seg.end <= seg.start) return "empty or reversed segment";
      if (seg.start < r[seg.job]) return "segment starts before the job's release";
      if (k > 0 && seg.start < segs[k - 1].end) return "overlapping or unsorted segments";
      work[{seg.job, u}] += seg.end - seg.start;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const CosInstance& inst, const Schedule& s) {
  if (s.units != inst.m) return "unit count does not match machine count";
  std::map<std::pair<int, int>, Rational> work;
  if (auto err = check_segments(s, inst.r, inst.n, work)) return err;
  for (int j : s.jobs)
    for (int i = 0; i < inst.m; ++i) {
      auto it = work.find({j, i});
      Rational scheduled = it == work.end() ? Rational(0) : it->second;
      if (scheduled != inst.p[i][j]) return "scheduled work differs from requirement";
      if (it != work.end()) work.erase(it);
    }
  if (!work.empty()) return "leftover segments of scheduled jobs";
  return std::nullopt;
}

std::optional<std::string> validate(const ClusterInstance& inst, const Schedule& s) {
  auto offsets = cluster_unit_offsets(inst);
  if (s.units != offsets[inst.m]) return "unit count does not match total machine count";
  std::map<std::pair<int, int>, Rational> ignored;
  if (auto err = check_segments(s, inst.r, inst.n, ignored)) return err;

  // Per (job, cluster) the multiset of segment lengths must equal the
  // multiset of nonzero task durations.
  std::map<std::pair<int, int>, std::vector<Rational>> seen;
  for (int u = 0; u < s.units; ++u) {
    int cluster = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), u) -
                                   offsets.begin()) -
                  1;
    for (const Segment& seg : s.by_unit[u])
      seen[{seg.job, cluster}].push_back(seg.end - seg.start);
  }
  for (auto& [key, lens] : seen) std::sort(lens.begin(), lens.end());
  for (int j : s.jobs)
    for (int i = 0; i < inst.m; ++i) {
      std::vector<Rational> want;
      for (const auto& d : inst.tasks[j][i])
        if (d > 0) want.push_back(d);
      std::sort(want.begin(), want.end());
      auto it = seen.find({j, i});
      const std::vector<Rational> empty;
      const auto& got = it == seen.end() ? empty : it->second;
      if (got != want) return "task segments differ from the subjob's task list";
      if (it != seen.end()) seen.erase(it);
    }
  if (!seen.empty()) return "leftover segments of scheduled jobs";
  return std::nullopt;
}

namespace {

template <typename Inst>
Rational objective_impl(const Inst& inst, const Schedule& s) {
  if (auto err = validate(inst, s)) throw std::invalid_argument("invalid schedule: " + *err);
  Rational total = 0;
  for (int j : s.jobs) total += inst.w[j] * s.completion(j);
  return total;
}

}  // namespace

Rational objective(const CosInstance& inst, const Schedule& s) {
  return objective_impl(inst, s);
}
Rational objective(const ClusterInstance& inst, const Schedule& s) {
  return objective_impl(inst, s);
}

CosInstance coflow_to_cos(const CoflowInstance& inst) {
  CosInstance out;
  out.n = inst.n;
  out.m = 2 * inst.m;
  out.r = inst.r;
  out.w = inst.w;
  out.p.assign(out.m, std::vector<Rational>(out.n, Rational(0)));
  for (int j = 0; j < inst.n; ++j)
    for (int i = 0; i < inst.m; ++i)
      for (int o = 0; o < inst.m; ++o) {
        out.p[i][j] += inst.demand[j][i][o];          // input port load
        out.p[inst.m + o][j] += inst.demand[j][i][o]; // output port load
      }
  return out;
}

std::pair<Rational, Rational> cluster_aggregates(const ClusterInstance& inst, int job,
                                                 int cluster) {
  Rational sum = 0, mx = 0;
  for (const auto& d : inst.tasks[job][cluster]) {
    sum += d;
    if (d > mx) mx = d;
  }
  return {sum, mx};
}

std::vector<int> cluster_unit_offsets(const ClusterInstance& inst) {
  std::vector<int> offsets(inst.m + 1, 0);
  for (int i = 0; i < inst.m; ++i) offsets[i + 1] = offsets[i] + inst.sizes[i];
  return offsets;
}

Rational online_size(const CosInstance& inst, int job) {
  Rational mx = 0;
  for (int i = 0; i < inst.m; ++i)
    if (inst.p[i][job] > mx) mx = inst.p[i][job];
  return mx;
}

Rational online_size(const CoflowInstance& inst, int job) {
  Rational mx = 0;
  for (int i = 0; i < inst.m; ++i) {
    Rational in = 0, out = 0;
    for (int o = 0; o < inst.m; ++o) {
      in += inst.demand[job][i][o];
      out += inst.demand[job][o][i];
    }
    if (in > mx) mx = in;
    if (out > mx) mx = out;
  }
  return mx;
}

Rational online_size(const ClusterInstance& inst, int job) {
  Rational mx = 0;
  for (int i = 0; i < inst.m; ++i)
    for (const auto& d : inst.tasks[job][i])
      if (d > mx) mx = d;
  return mx;
}

Rational completion_lower_bound(const CosInstance& inst, int job) {
  return inst.r[job] + online_size(inst, job);
}

Rational completion_lower_bound(const CoflowInstance& inst, int job) {
  return inst.r[job] + online_size(inst, job);
}

Rational completion_lower_bound(const ClusterInstance& inst, int job) {
  // Alone, subjob (j,i) cannot finish before max(B_ji, P_ji / m_i).
  Rational mx = 0;
  for (int i = 0; i < inst.m; ++i) {
    auto [total, largest] = cluster_aggregates(inst, job, i);
    Rational bound = total / inst.sizes[i];
    if (largest > bound) bound = largest;
    if (bound > mx) mx = bound;
  }
  return inst.r[job] + mx;
}

}  // namespace owct
