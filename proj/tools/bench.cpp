// Compares the parallel kernels against their serial references: the
// member-certification scan inside verify_family and the decomposition
// search. Prints wall times and checks that both modes agree, which is the
// cheap way to spot a schedule-dependent bug before the test suite does.

#include <chrono>
#include <iostream>
#include <sstream>

#include "mop/gallery.hpp"
#include "mop/rotation.hpp"
#include "mop/search.hpp"
#include "mop/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string render(const mop::VerificationReport& r) {
  std::ostringstream out;
  mop::print_report(out, r);
  return out.str();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif

  {
    mop::Family f = mop::rotation_family(64);
    mop::VerifyOptions serial;
    serial.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    mop::VerificationReport a = mop::verify_family(f, serial);
    double st = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    mop::VerificationReport b = mop::verify_family(f);
    double pt = seconds_since(t0);
    std::cout << "verify t=64 n=256: serial " << st << "s, parallel " << pt << "s, reports "
              << (render(a) == render(b) ? "identical" : "DIFFER") << "\n";
  }

  {
    mop::Graph k7 = mop::complete_graph(7);
    mop::SearchOptions serial;
    serial.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    mop::SearchResult a = mop::outerthickness_exact(k7, 2, serial);
    double st = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    mop::SearchResult b = mop::outerthickness_exact(k7, 2);
    double pt = seconds_since(t0);
    bool agree = a.outcome == b.outcome && a.nodes == b.nodes;
    std::cout << "search K7 k=2: serial " << st << "s (" << a.nodes << " nodes), parallel " << pt
              << "s (" << b.nodes << " nodes), " << (agree ? "agree" : "DISAGREE") << "\n";
  }

  {
    mop::Graph k7e = mop::complete_minus_matching(7, {mop::Edge(0, 4)});
    mop::SearchOptions serial;
    serial.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    mop::SearchResult a = mop::outerthickness_exact(k7e, 2, serial);
    double st = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    mop::SearchResult b = mop::outerthickness_exact(k7e, 2);
    double pt = seconds_since(t0);
    bool agree = a.outcome == b.outcome && a.parts == b.parts;
    std::cout << "search K7-e k=2: serial " << st << "s, parallel " << pt << "s, witnesses "
              << (agree ? "agree" : "DISAGREE") << "\n";
  }

  return 0;
}
