#include "spikemem/network.hpp"

#include <algorithm>
#include <cmath>

#include "spikemem/errors.hpp"

namespace spikemem {

int NetworkInstance::delay_steps(double dt_ms) const {
    if (!(dt_ms > 0.0)) throw ConfigError("dt must be positive");
    const double ratio = delay_ms / dt_ms;
    const long steps = std::lround(ratio);
    if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9)
        throw ConfigError("transmission delay (" + std::to_string(delay_ms) +
                          " ms) is not an integer multiple of dt");
    return static_cast<int>(steps);
}

std::optional<std::int64_t> SpikeLog::last_spike_of_range(int begin, int end) const {
    for (auto it = events.rbegin(); it != events.rend(); ++it)
        if (it->neuron >= begin && it->neuron < end) return it->step;
    return std::nullopt;
}

std::vector<std::int64_t> SpikeLog::steps_of(int neuron) const {
    std::vector<std::int64_t> steps;
    for (const auto& e : events)
        if (e.neuron == neuron) steps.push_back(e.step);
    return steps;
}

long SpikeLog::count_of(int neuron) const {
    return static_cast<long>(
        std::count_if(events.begin(), events.end(),
                      [neuron](const SpikeEvent& e) { return e.neuron == neuron; }));
}

double synaptic_input(const NetworkInstance& net, int post,
                      const std::vector<std::uint8_t>& delayed_spike_flags, double external) {
    double current = 0.0;
    if (!net.is_input(post)) {
        const int n = net.n();
        for (int pre = 0; pre < n; ++pre)
            if (delayed_spike_flags[pre]) current += net.weight(pre, post) * kSpikeDeltaMv;
    }
    return current + external;
}

SpikeLog run_trial(const NetworkInstance& net, const RunOptions& opt) {
    const int n = net.n();
    const int delay = net.delay_steps(opt.dt_ms);
    if (opt.total_steps < opt.stimulation_steps)
        throw ConfigError("total_steps is shorter than the stimulation window");

    const NeuronParams p = net.params;
    std::vector<double> v(n, -65.0);
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = p.b * v[i];

    // Ring of spiking-neuron ids; slot step % delay holds the spikes of
    // step - delay when read at the top of an iteration.
    std::vector<std::vector<std::int32_t>> ring(delay);
    std::vector<double> input(n);
    SpikeLog log;

    const double dt = opt.dt_ms;
    const int first_post = net.n_inputs; // no edges into inputs
    const std::vector<long>* dead = opt.deactivate_from_step;

    for (long step = 0; step < opt.total_steps; ++step) {
        std::fill(input.begin(), input.end(), 0.0);
        auto& slot = ring[static_cast<std::size_t>(step % delay)];
        for (std::int32_t pre : slot) {
            const double* row = net.weights.data() + static_cast<std::size_t>(pre) * n;
            for (int post = first_post; post < n; ++post)
                input[post] += row[post] * kSpikeDeltaMv;
        }
        slot.clear(); // reuse for this step's spikes
        if (step < opt.stimulation_steps) {
            const double ext = opt.stimulus.drive_at(step);
            for (int i = 0; i < net.n_inputs; ++i) input[i] += ext;
        }
        for (int i = 0; i < n; ++i) {
            if (dead && step >= (*dead)[i]) continue; // frozen, emits nothing
            const double vi = v[i];
            const double ui = u[i];
            double nv = vi + dt * (0.04 * vi * vi + 5.0 * vi + 140.0 - ui + input[i]);
            double nu = ui + dt * (p.a * (p.b * vi - ui));
            if (nv >= kSpikeThresholdMv) {
                nv = p.c;
                nu += p.d;
                slot.push_back(static_cast<std::int32_t>(i));
                if (opt.record_all || i >= net.output_begin())
                    log.events.push_back({step, static_cast<std::int32_t>(i)});
            }
            if (!std::isfinite(nv) || !std::isfinite(nu)) throw SimulationFault(i, step);
            v[i] = nv;
            u[i] = nu;
        }
    }
    return log;
}

} // namespace spikemem
