#pragma once

#include <optional>
#include <string>
#include <vector>

#include "owct/rational.hpp"

namespace owct {

// Concurrent open shop: job j has one component per machine, components of
// the same job may run in parallel, the job completes when all of them do.
struct CosInstance {
  int n = 0;  // jobs
  int m = 0;  // machines
  std::vector<std::vector<Rational>> p;  // m x n, p[i][j] >= 0
  std::vector<Rational> r;               // release time per job
  std::vector<Rational> w;               // weight per job

  void check() const;  // shape + nonnegativity, throws std::invalid_argument
};

// Coflow on an m x m non-blocking switch; demand[j](i,o) = data from input
// port i to output port o. Ports process one unit of data per time unit.
struct CoflowInstance {
  int n = 0;  // coflows
  int m = 0;  // ports per side
  std::vector<std::vector<std::vector<Rational>>> demand;  // n x m x m
  std::vector<Rational> r;
  std::vector<Rational> w;

  void check() const;
};

// Concurrent cluster: job j has one subjob per cluster; subjob (j,i) is a
// set of tasks, each runnable on any of the sizes[i] identical machines.
struct ClusterInstance {
  int n = 0;  // jobs
  int m = 0;  // clusters
  std::vector<int> sizes;                                 // m, each >= 1
  std::vector<std::vector<std::vector<Rational>>> tasks;  // n x m task lists
  std::vector<Rational> r;
  std::vector<Rational> w;

  void check() const;
};

struct Segment {
  int job = -1;
  Rational start;
  Rational end;
};

// A schedule over a linear "unit" space: machines for open shop, the 2m
// ports of the reduced instance for coflows, the flattened cluster machines
// for clusters. Jobs whose entire work is zero get no segments and complete
// at the schedule offset.
struct Schedule {
  int units = 0;
  Rational offset;
  std::vector<int> jobs;  // scheduled set, ascending
  std::vector<std::vector<Segment>> by_unit;

  // Latest segment end of the job, or `offset` if it has none.
  Rational completion(int job) const;
  // Max segment end minus offset; zero for an all-empty schedule.
  Rational makespan() const;
  bool contains(int job) const;
};

Rational total_weight(const CosInstance& inst);
Rational total_weight(const CoflowInstance& inst);
Rational total_weight(const ClusterInstance& inst);

// Minimum completion time of the set ignoring release times: the maximum
// machine load. Empty set gives 0.
Rational cos_batch_makespan(const CosInstance& inst, const std::vector<int>& jobs);

// Validation is a pure predicate; returns an explanation on failure.
// Checks per unit: sorted non-overlapping segments; per job: no segment
// before its release, and the scheduled work matches the instance exactly.
std::optional<std::string> validate(const CosInstance& inst, const Schedule& s);
std::optional<std::string> validate(const ClusterInstance& inst, const Schedule& s);

// Sum of w_j * C_j over the schedule's job set; throws std::invalid_argument
// when validation fails.
Rational objective(const CosInstance& inst, const Schedule& s);
Rational objective(const ClusterInstance& inst, const Schedule& s);

// Reduction to concurrent open shop on 2m port machines: machine i in
// [0, m) carries row sums of job j's demand (input port loads), machine
// m + o carries column sums (output port loads).
CosInstance coflow_to_cos(const CoflowInstance& inst);

// (P_ji, B_ji): total and largest task duration of subjob (j, i); (0, 0)
// for an empty task list.
std::pair<Rational, Rational> cluster_aggregates(const ClusterInstance& inst, int job,
                                                 int cluster);

// Unit-space layout for cluster schedules: unit_offsets[i] is the first
// unit of cluster i; one extra entry holds the total unit count.
std::vector<int> cluster_unit_offsets(const ClusterInstance& inst);

// Largest single quantum of work of a job; the online framework requires
// this to be >= 1 for every job. COS: max_i p_ij; coflow: max port load;
// cluster: largest task.
Rational online_size(const CosInstance& inst, int job);
Rational online_size(const CoflowInstance& inst, int job);
Rational online_size(const ClusterInstance& inst, int job);

// Per-job lower bound r_j + (largest work quantum, or best-possible lone
// completion for clusters); summing w_j times this bounds OPT from below.
Rational completion_lower_bound(const CosInstance& inst, int job);
Rational completion_lower_bound(const CoflowInstance& inst, int job);
Rational completion_lower_bound(const ClusterInstance& inst, int job);

}  // namespace owct
