#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spikemem/network.hpp"

namespace spikemem {

// Fixed gene ordering of the flat genome vector (all values in [0,1]):
//
//   [0, H)            hidden-neuron kind genes, hidden-index order
//   [H, H+I*H)        input -> hidden weights, input-major
//   then I*O          input -> output weights
//   then H*(H-1)      hidden -> hidden weights, row-major, self skipped
//   then H*O          hidden -> output weights
//
// For the default 5/60/1 topology: 60 kind genes + 3905 synapse genes,
// 3965 genes total. The same ordering is used by the genome JSON file
// (see docs/formats.md).
struct GenomeLayout {
    int n_inputs = 5;
    int n_hidden = 60;
    int n_outputs = 1;

    bool operator==(const GenomeLayout&) const = default;

    int kind_gene_count() const { return n_hidden; }
    int synapse_gene_count() const {
        return n_inputs * (n_hidden + n_outputs) + n_hidden * (n_hidden - 1) +
               n_hidden * n_outputs;
    }
    int total() const { return kind_gene_count() + synapse_gene_count(); }
    void validate() const; // throws ConfigError on nonsensical counts
};

struct Genome {
    GenomeLayout layout;
    std::vector<double> genes;

    bool operator==(const Genome&) const = default;
};

struct GenomeViolation {
    enum class Kind { Length, Range };
    Kind kind;
    long index = -1;     // offending gene (Range)
    double value = 0.0;  // offending value (Range)
    long expected = 0;   // expected length (Length)
    long got = 0;        // actual length (Length)
    std::string message() const;
};

struct ValidationReport {
    std::vector<GenomeViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Length and range checks; returns a report instead of throwing.
ValidationReport validate(const Genome& genome);

// Genome -> runnable network. Hidden neuron i is inhibitory iff its kind
// gene is strictly below 0.5; inputs and outputs are excitatory. A
// synapse gene g becomes weight +g for an excitatory pre-synaptic neuron
// and -g for an inhibitory one. Throws EncodingError naming the first
// offending gene if the genome is invalid. Pure: equal genomes decode to
// equal networks.
NetworkInstance decode(const Genome& genome);

// Every gene i.i.d. uniform on [0,1] from the documented PRNG (see
// rng.hpp); the same seed always produces the same genome.
Genome random_genome(const GenomeLayout& layout, std::uint64_t seed);

// Iteration order of the synapse gene block: calls visit(gene_index,
// pre, post) for every synapse in the documented ordering.
template <typename Visit>
void for_each_synapse_gene(const GenomeLayout& l, Visit&& visit) {
    const int in_begin = 0;
    const int hid_begin = l.n_inputs;
    const int out_begin = l.n_inputs + l.n_hidden;
    long g = l.kind_gene_count();
    for (int i = 0; i < l.n_inputs; ++i)
        for (int h = 0; h < l.n_hidden; ++h) visit(g++, in_begin + i, hid_begin + h);
    for (int i = 0; i < l.n_inputs; ++i)
        for (int o = 0; o < l.n_outputs; ++o) visit(g++, in_begin + i, out_begin + o);
    for (int h1 = 0; h1 < l.n_hidden; ++h1)
        for (int h2 = 0; h2 < l.n_hidden; ++h2) {
            if (h1 == h2) continue;
            visit(g++, hid_begin + h1, hid_begin + h2);
        }
    for (int h = 0; h < l.n_hidden; ++h)
        for (int o = 0; o < l.n_outputs; ++o) visit(g++, hid_begin + h, out_begin + o);
}

} // namespace spikemem
