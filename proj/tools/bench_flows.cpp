// Benchmark of the parallel Ehrhart kernel against the serial reference.

#include <chrono>
#include <iostream>
#include <string>

#include "qtflows/flow.hpp"
#include "qtflows/graph.hpp"

using namespace qtflows;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::stoi(argv[1]) : 6;
    long a = argc > 2 ? std::stol(argv[2]) : 1;
    const ThresholdGraph g = ThresholdGraph::complete(n);
    const std::vector<long> netflow(n, a);

    std::cout << "K_" << n + 1 << ", a = " << a << ", " << count_flows(g, netflow)
              << " lattice points\n";

    QTPolynomial serial, parallel;
    const double t_serial = time_ms([&] { serial = ehrhart_qt_serial(g, netflow); });
    const double t_parallel = time_ms([&] { parallel = ehrhart_qt(g, netflow); });

    std::cout << "serial:   " << t_serial << " ms\n";
    std::cout << "parallel: " << t_parallel << " ms\n";
    std::cout << "match:    " << (serial == parallel ? "yes" : "NO") << "\n";
    return serial == parallel ? 0 : 1;
}
