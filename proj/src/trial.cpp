#include "spikemem/trial.hpp"

#include <cmath>

#include "spikemem/errors.hpp"

namespace spikemem {

long TrialSpec::seconds_to_steps(double seconds) const {
    if (!(dt_ms > 0.0)) throw ConfigError("trial: dt must be positive");
    return std::llround(seconds * 1000.0 / dt_ms);
}

void TrialSpec::validate() const {
    if (!(dt_ms > 0.0)) throw ConfigError("trial: dt must be positive");
    if (!(stimulation_s >= 0.0) || !(target_sustain_s > 0.0) || !(silence_window_s >= 0.0))
        throw ConfigError("trial: durations must be positive");
    if (!std::isfinite(stimulus.amplitude)) throw ConfigError("trial: stimulus amplitude must be finite");
    if (stimulus.on_steps < 0 || stimulus.off_steps < 0 ||
        (stimulus.on_steps > 0) != (stimulus.off_steps > 0))
        throw ConfigError("trial: periodic stimulus needs positive on and off windows");
}

double fitness(long last_output_spike_step, long target_stop_step) {
    if (target_stop_step <= 0) throw ConfigError("fitness: target stop step must be positive");
    if (last_output_spike_step < 0) throw ConfigError("fitness: last spike step must be >= 0");
    const double x = static_cast<double>(last_output_spike_step);
    const double s = static_cast<double>(target_stop_step);
    const double sigma = x <= s ? 0.35 * s : 1e3;
    const double dev = x - s;
    return std::exp(-(dev * dev) / (2.0 * sigma * sigma));
}

TrialRecord evaluate(const NetworkInstance& net, const TrialSpec& spec, bool record_all) {
    spec.validate();
    RunOptions opt;
    opt.total_steps = spec.total_steps();
    opt.stimulation_steps = spec.stimulation_steps();
    opt.stimulus = spec.stimulus;
    opt.dt_ms = spec.dt_ms;
    opt.record_all = record_all;
    TrialRecord record;
    record.spike_log = run_trial(net, opt);
    record.last_output_spike_step =
        record.spike_log.last_spike_of_range(net.output_begin(), net.n());
    record.fitness = fitness(record.last_output_spike_step.value_or(0), spec.target_stop_step());
    return record;
}

} // namespace spikemem
