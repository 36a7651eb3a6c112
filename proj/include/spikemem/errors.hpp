#pragma once

#include <stdexcept>
#include <string>

namespace spikemem {

// Invalid configuration or trial/GA parameters. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Genome of wrong length or with out-of-range genes.
class EncodingError : public std::runtime_error {
public:
    EncodingError(const std::string& msg, long index = -1)
        : std::runtime_error(msg), gene_index(index) {}
    long gene_index;
};

// Non-finite state reached during simulation; identifies neuron and step.
class SimulationFault : public std::runtime_error {
public:
    SimulationFault(int neuron, long step)
        : std::runtime_error("simulation fault: non-finite state at neuron " +
                             std::to_string(neuron) + ", step " + std::to_string(step)),
          neuron_id(neuron), step_index(step) {}
    int neuron_id;
    long step_index;
};

// Filesystem / serialization failure. CLI exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace spikemem
