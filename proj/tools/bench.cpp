// Serial-vs-OpenMP benchmark for the exact kernels. Each kernel runs with
// both execution policies; results must match bit for bit (exact rational
// arithmetic), so the table also doubles as a consistency check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "kg/approx.hpp"
#include "kg/gibbs.hpp"
#include "kg/steepness.hpp"

using namespace kg;
using Clock = std::chrono::steady_clock;

namespace {

double time_once(const std::function<void()>& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void row(const std::string& name, const std::function<bool(Exec)>& run) {
    bool ok = true;
    double serial = time_once([&] { ok &= run(Exec::Serial); });
    double parallel = time_once([&] { ok &= run(Exec::Parallel); });
    std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name.c_str(), serial, parallel,
                serial / parallel, ok ? "match" : "MISMATCH");
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env_override();
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";

    std::printf("threads: %d\n", max_threads());
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    const unsigned steep_n = quick ? 800 : 2000;
    row("steepness_exact(" + std::to_string(steep_n) + ")", [&](Exec e) {
        static QQ reference;
        QQ value = steepness_exact(steep_n, e);
        if (e == Exec::Serial) {
            reference = value;
            return true;
        }
        return value == reference;
    });

    const unsigned st_m = quick ? 120 : 260;
    row("verify_st_equality(" + std::to_string(st_m) + ")", [&](Exec e) {
        return verify_st_equality(st_m, e).all_passed;
    });

    const unsigned eq_m = quick ? 150 : 300;
    row("verify_x_recurrence(" + std::to_string(eq_m) + ")", [&](Exec e) {
        return verify_x_recurrence(eq_m, e).all_passed;
    });

    const unsigned build_n = quick ? 60 : 110;
    row("build_closed_form(" + std::to_string(build_n) + ")", [&](Exec e) {
        static Poly reference;
        Poly F = build_closed_form(build_n, e).polynomial;
        if (e == Exec::Serial) {
            reference = F;
            return true;
        }
        return F == reference;
    });

    const unsigned over_n = quick ? 40 : 80;
    row("overshoot(" + std::to_string(over_n) + ", 6)", [&](Exec e) {
        static std::string reference;
        std::string value = overshoot(over_n, 6, QQ(1, 8), e).str();
        if (e == Exec::Serial) {
            reference = value;
            return true;
        }
        return value == reference;
    });

    return 0;
}
