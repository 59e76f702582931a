#pragma once

// Core shop-floor entities: operations, jobs, batches, machines, and the
// mean-weighted-tardiness objective.

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dfjss {

using Time = double;
using MachineId = int;
using JobId = int;

struct EligibleMachine {
    MachineId machine;
    Time processing_time;
};

struct Operation {
    JobId job = 0;
    int index = 1;                          // 1-based position within the job
    std::vector<EligibleMachine> eligible;  // sorted by machine id

    // Processing time on `machine`, or nullopt if the machine is not eligible.
    std::optional<Time> processing_time_on(MachineId machine) const;
    // Median over the eligible set (mean of the two middle values when even).
    Time median_processing_time() const;
};

struct Job {
    JobId id = 0;
    int batch = 0;
    int weight = 1;
    Time arrival = 0;
    Time due_date = 0;
    std::vector<Operation> operations;
    std::optional<Time> completion;  // unset until the last operation finishes
};

struct Batch {
    int id = 0;
    Time arrival = 0;
    std::vector<Job> jobs;
    bool warmup = false;
};

// An operation waiting at (or running on) a machine. `job` indexes the
// simulator's flat job table; `op` is the 0-based operation position.
struct QueuedOperation {
    int job = 0;
    int op = 0;
    Time processing_time = 0;
};

struct MachineState {
    MachineId id = 0;
    std::vector<QueuedOperation> queue;
    Time workload = 0;    // sum of processing times in `queue`
    Time busy_until = 0;  // completion of `current`, or when the machine last became free
    std::optional<QueuedOperation> current;
    Time current_start = 0;

    bool busy() const { return current.has_value(); }
};

// Throws std::logic_error("incomplete schedule") if completion is unset.
Time tardiness(const Job& job);

// (1/|J|) * sum w * max(0, C - d). Throws std::invalid_argument("no evaluable
// jobs") on an empty list and std::logic_error("incomplete schedule") if any job
// is missing its completion time.
double wt_mean(std::span<const Job> jobs);

// Structural checks on a generated instance (eligibility non-empty, PT >= 1,
// contiguous indices, weights in {1,2,4}, due >= arrival, batch-consistent
// arrivals). Returns human-readable violations; empty when valid.
std::vector<std::string> validate_instance(std::span<const Batch> batches, int machines);

// One executed operation, as recorded by the simulator trace.
struct ScheduledOp {
    JobId job = 0;
    int index = 1;
    MachineId machine = 0;
    Time ready = 0;
    Time start = 0;
    Time end = 0;
};

// Post-hoc check of the four shop constraints (precedence, eligibility,
// capacity, non-preemption) plus completeness: every operation of every job in
// `batches` is scheduled exactly once. Returns violations; empty when valid.
std::vector<std::string> check_schedule(std::span<const Batch> batches, std::span<const ScheduledOp> schedule);

}  // namespace dfjss
