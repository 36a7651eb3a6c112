#pragma once

#include <cmath>

#include "spikemem/errors.hpp"

namespace spikemem {

// Izhikevich model constants. A spike is detected when the membrane
// potential reaches 30 mV after an update; the delta transmitted to
// post-synaptic neurons is the fixed 30 mV, never the overshoot value.
inline constexpr double kSpikeThresholdMv = 30.0;
inline constexpr double kSpikeDeltaMv = 30.0;

// Regular-spiking regime by default.
struct NeuronParams {
    double a = 0.02; // recovery time scale (1/ms)
    double b = 0.2;  // recovery sensitivity
    double c = -65.0; // post-spike reset potential (mV)
    double d = 6.0;  // post-spike recovery increment
};

struct NeuronState {
    double v = -65.0; // membrane potential (mV)
    double u = -13.0; // membrane recovery

    static NeuronState resting(const NeuronParams& p) {
        NeuronState s;
        s.v = -65.0;
        s.u = p.b * s.v;
        return s;
    }
};

struct StepResult {
    NeuronState state;
    bool spiked = false;
};

// One forward-Euler step of
//   v' = 0.04 v^2 + 5 v + 140 - u + I
//   u' = a (b v - u)
// with both derivatives evaluated at the old state. If the updated v
// reaches 30 mV the neuron spikes and the returned state is v = c,
// u = u + d (reset applied after detection).
inline StepResult step_neuron(NeuronState s, const NeuronParams& p, double input_current,
                              double dt_ms) {
    if (!(dt_ms > 0.0)) throw ConfigError("step_neuron: dt must be positive");
    if (!std::isfinite(s.v) || !std::isfinite(s.u) || !std::isfinite(input_current))
        throw SimulationFault(-1, -1);
    StepResult r;
    r.state.v = s.v + dt_ms * (0.04 * s.v * s.v + 5.0 * s.v + 140.0 - s.u + input_current);
    r.state.u = s.u + dt_ms * (p.a * (p.b * s.v - s.u));
    if (r.state.v >= kSpikeThresholdMv) {
        r.spiked = true;
        r.state.v = p.c;
        r.state.u += p.d;
    }
    if (!std::isfinite(r.state.v) || !std::isfinite(r.state.u)) throw SimulationFault(-1, -1);
    return r;
}

} // namespace spikemem
