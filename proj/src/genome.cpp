#include "spikemem/genome.hpp"

#include <cmath>

#include "spikemem/errors.hpp"
#include "spikemem/rng.hpp"

namespace spikemem {

void GenomeLayout::validate() const {
    if (n_inputs < 1 || n_hidden < 2 || n_outputs < 1)
        throw ConfigError("genome layout needs >=1 input, >=2 hidden, >=1 output neurons");
}

std::string GenomeViolation::message() const {
    if (kind == Kind::Length)
        return "genome length mismatch: expected " + std::to_string(expected) + ", got " +
               std::to_string(got);
    return "gene " + std::to_string(index) + " out of [0,1]: " + std::to_string(value);
}

ValidationReport validate(const Genome& genome) {
    ValidationReport report;
    genome.layout.validate();
    const long expected = genome.layout.total();
    const long got = static_cast<long>(genome.genes.size());
    if (got != expected) {
        report.violations.push_back(
            {GenomeViolation::Kind::Length, -1, 0.0, expected, got});
        return report;
    }
    for (long i = 0; i < got; ++i) {
        const double g = genome.genes[static_cast<std::size_t>(i)];
        if (!(g >= 0.0 && g <= 1.0))
            report.violations.push_back({GenomeViolation::Kind::Range, i, g, 0, 0});
    }
    return report;
}

NetworkInstance decode(const Genome& genome) {
    const ValidationReport report = validate(genome);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw EncodingError(v.message(), v.index);
    }
    const GenomeLayout& l = genome.layout;
    NetworkInstance net;
    net.n_inputs = l.n_inputs;
    net.n_hidden = l.n_hidden;
    net.n_outputs = l.n_outputs;
    const int n = net.n();
    net.kinds.assign(n, NeuronKind::Excitatory);
    // "lower than 0.5" is strict: a kind gene of exactly 0.5 stays excitatory.
    for (int h = 0; h < l.n_hidden; ++h)
        if (genome.genes[static_cast<std::size_t>(h)] < 0.5)
            net.kinds[static_cast<std::size_t>(net.hidden_begin() + h)] = NeuronKind::Inhibitory;
    net.weights.assign(static_cast<std::size_t>(n) * n, 0.0);
    for_each_synapse_gene(l, [&](long g, int pre, int post) {
        const double magnitude = genome.genes[static_cast<std::size_t>(g)];
        const double sign = net.kinds[static_cast<std::size_t>(pre)] == NeuronKind::Inhibitory
                                ? -1.0
                                : 1.0;
        net.weight_ref(pre, post) = sign * magnitude;
    });
    return net;
}

Genome random_genome(const GenomeLayout& layout, std::uint64_t seed) {
    layout.validate();
    Genome g;
    g.layout = layout;
    g.genes.resize(static_cast<std::size_t>(layout.total()));
    Rng rng(seed);
    for (double& gene : g.genes) gene = rng.u01();
    return g;
}

} // namespace spikemem
