#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spikemem/neuron.hpp"

namespace spikemem {

enum class NeuronKind : std::uint8_t { Excitatory, Inhibitory };

// External drive injected into the input neurons while the stimulation
// window is open. Constant by default; a periodic on/off gate can be
// used for pattern-perturbation studies.
struct StimulusSpec {
    double amplitude = 10.0;
    long on_steps = 0;  // both zero -> constant drive
    long off_steps = 0;

    bool periodic() const { return on_steps > 0 && off_steps > 0; }

    double drive_at(long step) const {
        if (!periodic()) return amplitude;
        return (step % (on_steps + off_steps)) < on_steps ? amplitude : 0.0;
    }
};

// Decoded, runnable network. Neuron ids are global: inputs first, then
// hidden, then outputs. Connectivity is fixed: every input feeds every
// hidden and output neuron, every hidden neuron feeds every other hidden
// neuron and every output; nothing feeds inputs, outputs feed nothing.
// weights is n x n row-major (pre * n + post), exactly 0 where no edge
// exists, and sign-consistent with the pre-synaptic neuron's kind.
struct NetworkInstance {
    int n_inputs = 5;
    int n_hidden = 60;
    int n_outputs = 1;
    std::vector<NeuronKind> kinds;
    std::vector<double> weights;
    double delay_ms = 1.0; // transmission delay, all synapses
    NeuronParams params;

    int n() const { return n_inputs + n_hidden + n_outputs; }
    int hidden_begin() const { return n_inputs; }
    int output_begin() const { return n_inputs + n_hidden; }
    bool is_input(int id) const { return id >= 0 && id < n_inputs; }
    bool is_hidden(int id) const { return id >= hidden_begin() && id < output_begin(); }
    bool is_output(int id) const { return id >= output_begin() && id < n(); }

    bool has_edge(int pre, int post) const {
        if (pre == post || is_output(pre) || is_input(post)) return false;
        if (is_input(pre)) return true;              // input -> hidden/output
        return is_hidden(pre);                       // hidden -> hidden/output
    }

    double weight(int pre, int post) const { return weights[static_cast<std::size_t>(pre) * n() + post]; }
    double& weight_ref(int pre, int post) { return weights[static_cast<std::size_t>(pre) * n() + post]; }

    // 1 ms must be an integer multiple of dt so the delay is exact.
    int delay_steps(double dt_ms) const;
};

struct SpikeEvent {
    std::int64_t step;
    std::int32_t neuron;
    bool operator==(const SpikeEvent&) const = default;
};

// Events ordered by step (ascending); within one step, by neuron id.
struct SpikeLog {
    std::vector<SpikeEvent> events;

    bool operator==(const SpikeLog&) const = default;
    std::optional<std::int64_t> last_spike_of_range(int begin, int end) const;
    std::vector<std::int64_t> steps_of(int neuron) const;
    long count_of(int neuron) const;
};

struct RunOptions {
    long total_steps = 0;
    long stimulation_steps = 0;
    StimulusSpec stimulus;
    double dt_ms = 0.1;
    // When false, only output-neuron events are logged (the dynamics are
    // unchanged); used by GA evaluation where only the last output spike
    // matters.
    bool record_all = true;
    // Optional per-neuron deactivation step: from that step on the neuron
    // is frozen and emits nothing. Spikes already in flight still arrive.
    const std::vector<long>* deactivate_from_step = nullptr;
};

// Total synaptic current into `post` given the spike flags from one
// delay earlier: I = sum over pre of w[pre,post] * 30 mV, plus external
// drive. Input neurons receive external drive only.
double synaptic_input(const NetworkInstance& net, int post,
                      const std::vector<std::uint8_t>& delayed_spike_flags, double external);

// Fixed-step synchronous simulation. Deterministic: identical inputs
// produce identical logs, regardless of how many trials run in parallel
// elsewhere (the function shares no mutable state).
SpikeLog run_trial(const NetworkInstance& net, const RunOptions& opt);

} // namespace spikemem
