// Times the serial enumeration kernel against the parallel DP kernel for L.
#include <chrono>
#include <iostream>
#include <string>

#include "tmc/graph.hpp"
#include "tmc/orbits.hpp"
#include "tmc/transfer.hpp"

using namespace tmc;

namespace {

double run_ms(const Graph& g, const OrbitSet& orbits, LKernel kernel, bool parallel,
              PolyMatrix& out) {
    auto start = std::chrono::steady_clock::now();
    out = build_l_entries(g, orbits, kernel, parallel);
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void bench(const std::string& name, const Graph& g) {
    OrbitSet orbits = quotient_by_automorphisms(g, color_orbits(g), automorphism_group(g));
    PolyMatrix reference, fast;
    double t_ref = run_ms(g, orbits, LKernel::enumeration, false, reference);
    double t_fast = run_ms(g, orbits, LKernel::low_color_dp, true, fast);
    std::cout << name << ": " << orbits.classes.size() << " orbit classes, "
              << orbits.sk_orbits.size() << " partitions\n"
              << "  enumeration (serial)  " << t_ref << " ms\n"
              << "  low-color DP (openmp) " << t_fast << " ms\n"
              << "  speedup               " << (t_fast > 0 ? t_ref / t_fast : 0.0) << "x\n"
              << "  matrices equal        " << (reference == fast ? "yes" : "NO") << "\n";
    if (!(reference == fast)) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    bool large = argc > 1 && std::string(argv[1]) == "--large";
    bench("P4", path_graph(4));
    bench("C4", cycle_graph(4));
    bench("C5", cycle_graph(5));
    if (large) bench("C6", cycle_graph(6));
    return 0;
}
