#pragma once

// Discrete-event simulation of a dynamic flexible job shop driven by a
// routing/sequencing rule pair.
//
// Events are ordered by (time, kind, seq) with completions ahead of arrivals
// at equal timestamps. Every decision made before the arrival event of the
// first non-warm-up batch uses the SPT/LWIQ baseline; from that event on, the
// evaluated pair decides everything, including leftover warm-up work. Warm-up
// jobs never enter the objective.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dfjss/domain.hpp"
#include "dfjss/rules.hpp"
#include "dfjss/scenarios.hpp"

namespace dfjss {

enum class EventKind : std::uint8_t { OperationCompletion = 0, BatchArrival = 1 };

struct SimOptions {
    bool log_decisions = false;  // keep one DecisionRecord per sequencing decision
    bool record_trace = false;   // keep the event trace, executed schedule and completed jobs
};

// Machine workload (WIQ, measured before the pick) at a sequencing decision.
struct DecisionRecord {
    Time time = 0;
    MachineId machine = 0;
    double workload = 0;
    std::size_t queue_length = 0;
    bool post_warmup = false;
};

struct TraceEvent {
    Time time = 0;
    EventKind kind = EventKind::BatchArrival;
    int batch = -1;
    JobId job = -1;
    int op_index = 0;  // 1-based; 0 for arrivals
    MachineId machine = -1;
};

struct RunResult {
    double objective = 0;
    int n_jobs_evaluated = 0;
    long n_operations = 0;
    long n_routing_decisions = 0;
    long n_sequencing_decisions = 0;
    long n_post_warmup_sequencing_decisions = 0;
    Time warmup_boundary = 0;  // arrival time of the first evaluated batch
    Time last_arrival = 0;
    Time makespan = 0;
    std::uint64_t seed = 0;
    double wall_time = 0;  // seconds

    std::vector<DecisionRecord> decision_log;
    std::vector<TraceEvent> events;
    std::vector<ScheduledOp> schedule;
    std::vector<Job> jobs;  // every job with completion set (record_trace only)
};

// Generates the instance for (config, seed) and simulates it. Throws
// std::invalid_argument for an invalid config before any event fires.
RunResult simulate(const ScenarioConfig& config, const RulePair& pair, std::uint64_t seed, SimOptions options = {});

// Simulates an explicit batch stream on `machines` machines.
RunResult simulate_batches(std::span<const Batch> batches, int machines, const RulePair& pair, SimOptions options = {});

// Fraction of machine capacity busy within [from, to).
double busy_fraction(std::span<const ScheduledOp> schedule, int machines, Time from, Time to);

// Post-hoc: an operation never waits in a queue while its machine is idle.
// An operation joins its machine's queue at its ready time.
std::vector<std::string> check_work_conservation(std::span<const ScheduledOp> schedule);

// CSV: time,kind,batch,job,op,machine
void write_event_trace_csv(std::ostream& os, std::span<const TraceEvent> events);

}  // namespace dfjss
