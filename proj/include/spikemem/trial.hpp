#pragma once

#include <optional>

#include "spikemem/network.hpp"

namespace spikemem {

// The memory experiment protocol: constant stimulation of the inputs for
// stimulation_s, then the output must stay active for target_sustain_s,
// then stay silent for silence_window_s. All durations are seconds; the
// simulation itself runs in steps of dt_ms.
struct TrialSpec {
    double stimulation_s = 1.0;
    double target_sustain_s = 2.0;
    double silence_window_s = 4.0;
    double dt_ms = 0.1;
    StimulusSpec stimulus;

    double total_s() const { return stimulation_s + target_sustain_s + silence_window_s; }
    long stimulation_steps() const { return seconds_to_steps(stimulation_s); }
    // Step by which the output is expected to have stopped: (1+2)/0.0001
    // = 30000 for the 2 s task at dt = 0.1 ms.
    long target_stop_step() const { return seconds_to_steps(stimulation_s + target_sustain_s); }
    long total_steps() const { return seconds_to_steps(total_s()); }
    long seconds_to_steps(double seconds) const;
    void validate() const; // throws ConfigError
};

// Gaussian fitness over the last output spike step x and the target stop
// step s, both in simulation steps:
//   exp(-(x - s)^2 / (2 sigma^2)),  sigma = 0.35 s for x <= s
//                                   sigma = 10^3   for x > s
// Peaks at exactly 1.0 when x = s; the late branch decays much faster
// than the early one. A network whose output never spikes is scored with
// x = 0.
double fitness(long last_output_spike_step, long target_stop_step);

struct TrialRecord {
    SpikeLog spike_log;
    std::optional<std::int64_t> last_output_spike_step;
    double fitness = 0.0;
};

// Runs the full protocol (never exits early, so late revivals count) and
// scores the result. Pure in its inputs; safe to run many evaluations
// concurrently. record_all=false keeps only output-neuron events in the
// log; the record's step and fitness are unchanged.
TrialRecord evaluate(const NetworkInstance& net, const TrialSpec& spec, bool record_all = true);

} // namespace spikemem
