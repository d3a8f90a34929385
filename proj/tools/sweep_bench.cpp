// Compares the serial reference sweeps against the OpenMP kernels on the
// heaviest oracle workloads and checks that both agree.

#include <chrono>
#include <iostream>

#include "wb/alba.hpp"
#include "wb/axioms.hpp"
#include "wb/sweep.hpp"

using namespace wb;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  std::vector<BinaryFrame> frames4 = enumerate_binary(4);
  std::vector<BinaryFrame> frames3 = enumerate_binary(3);

  std::cout << "sweep                          serial_ms  parallel_ms  agree\n";
  for (const std::string name : {"MP", "W", "Sym"}) {
    AlbaResult res = run_alba(axiom(name));
    const QuasiInequality& q = res.runs[0].result;
    const auto& frames = name == "Sym" ? frames3 : frames4;
    AgreementReport serial, parallel;
    double ts = time_ms([&] { serial = agreement_sweep(name, q, frames, ExecMode::Serial); });
    double tp = time_ms([&] { parallel = agreement_sweep(name, q, frames, ExecMode::Parallel); });
    bool agree = serial.holds == parallel.holds && serial.disagreements == parallel.disagreements;
    std::printf("agreement %-4s on %6zu frames %9.1f %12.1f  %s\n", name.c_str(), frames.size(), ts, tp,
                agree ? "yes" : "NO");
    if (!agree) return 1;
  }

  for (const std::string name : {"Tr", "Fr"}) {
    Inequality a = axiom(name);
    Inequality b = *product_correspondent(name);
    EquivalenceReport serial, parallel;
    double ts = time_ms([&] { serial = equivalence_sweep(a, b, frames3, ExecMode::Serial); });
    double tp = time_ms([&] { parallel = equivalence_sweep(a, b, frames3, ExecMode::Parallel); });
    bool agree = serial.mismatches == parallel.mismatches;
    std::printf("equivalence %-4s on %4zu duals %9.1f %12.1f  %s\n", name.c_str(), frames3.size(), ts, tp,
                agree ? "yes" : "NO");
    if (!agree) return 1;
  }
  return 0;
}
