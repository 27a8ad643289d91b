// Serial vs OpenMP timings for the parallel kernels.
#include "motsteen/koszul.hpp"
#include "motsteen/obstruction.hpp"
#include "motsteen/steenrod.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace motsteen;

namespace {

double seconds(const std::function<void()>& f, int reps)
{
    double best = 1e30;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void row(const std::string& name, const std::function<void(Execution)>& kernel, int reps)
{
    const double s = seconds([&] { kernel(Execution::serial); }, reps);
    const double p = seconds([&] { kernel(Execution::parallel); }, reps);
    std::printf("%-34s %10.4f %10.4f %8.2fx\n", name.c_str(), s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv)
{
    const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

    std::vector<Generator> base;
    for (int j = 1; j <= 6; ++j)
        base.push_back(Generator::chern(j));
    KoszulComplex cx(base, AlgebraPresentation(Prime(3), base, {"c4", "c5", "c6"}));
    row("koszul_homology GL_6/GL_3 deg<=24", [&](Execution e) { koszul_homology(cx, 24, e); }, reps);

    row("verify_axiom adem p=2 bound 14", [](Execution e) { verify_axiom(Axiom::adem, Prime(2), 14, 5, e); }, reps);
    row("verify_axiom cartan p=3 bound 14", [](Execution e) { verify_axiom(Axiom::cartan, Prime(3), 14, 5, e); },
        reps);
    row("divisibility_scan q=5 p=5 n<=2000", [](Execution e) { divisibility_scan(5, Prime(5), 2000, e); }, reps);
    return 0;
}
