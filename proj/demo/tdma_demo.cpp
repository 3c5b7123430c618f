// Builds TDMA schedules for a random sensor field and compares how often nodes
// get to transmit against a one-slot-per-node schedule of the same frame.

#include <iomanip>
#include <iostream>

#include "mcolor/mcolor.hpp"

using namespace mcolor;

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
    const auto field = cap_degree(gen_udg(150, 0.12, 1000, seed), 8);
    const double eps = 0.5;
    std::cout << "sensor field: n=" << field.size() << " edges=" << field.edge_count()
              << " max_degree=" << field.max_degree() << "\n\n";

    const RandomizedAlgorithm randomized(field.size(), field.max_degree(), eps);
    const AlgebraicWeightedAlgorithm weighted(make_weighted_scheme(field.id_space(), field.max_degree(), 0, eps));
    const std::vector<const NodeAlgorithm*> algos{&randomized, &weighted};

    std::cout << std::left << std::setw(20) << "algorithm" << std::setw(8) << "frame" << std::setw(12) << "mean duty"
              << std::setw(12) << "min duty" << std::setw(12) << "baseline" << "mean slots/frame\n";
    for (const auto* algo : algos) {
        const auto run = run_one_shot(field, *algo, seed);
        const auto schedule = to_schedule(field, run.coloring);
        const auto u = utilization(schedule, field);
        std::cout << std::setw(20) << algo->name() << std::setw(8) << schedule.frame_length << std::setw(12)
                  << u.mean_duty_cycle << std::setw(12) << u.min_duty_cycle << std::setw(12) << u.baseline_duty_cycle
                  << u.mean_speedup << "\n";
    }
    return 0;
}
