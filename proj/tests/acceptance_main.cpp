// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure. Run through ctest or directly from the build tree.

#include "vmkdv/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    vmkdv::verify::Options options;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;

    vmkdv::FlowTable flows(4);
    const auto t0 = std::chrono::steady_clock::now();
    const auto criteria = vmkdv::verify::run_acceptance(flows, options);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = true;
    for (const auto& cr : criteria) {
        const bool pass = cr.pass();
        ok = ok && pass;
        std::printf("criterion %2d: %s  %s\n", cr.number, pass ? "PASS" : "FAIL", cr.title.c_str());
        for (const auto& check : cr.checks) {
            std::printf("    %s  %-58s residual %.3e  tol %.3e\n", check.pass ? "ok  " : "FAIL",
                        check.name.c_str(), check.max_residual, check.tolerance);
            for (const auto& [k, v] : check.metadata)
                if (k == "slope" || k.rfind("res(h=", 0) == 0)
                    std::printf("          %s = %s\n", k.c_str(), v.c_str());
        }
    }
    std::printf("%s (%.1f s)\n", ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", elapsed);
    return ok ? 0 : 1;
}
