// Times the OpenMP campaign kernels against their serial reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "pointpair/bounds.hpp"
#include "pointpair/parallel.hpp"
#include "pointpair/report.hpp"

namespace pp = pointpair;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_witness(const pp::Witness& a, const pp::Witness& b) {
    return a.index == b.index && a.x == b.x && a.y == b.y && a.value == b.value;
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000000ULL;

    std::printf("openmp enabled: %s, threads: %d\n", pp::openmp_enabled() ? "yes" : "no",
                pp::hardware_threads());
    std::printf("%-28s %12s %12s %8s %s\n", "kernel", "parallel [s]", "serial [s]", "speedup",
                "identical");

    bool all_same = true;

    {
        pp::DomainShape d = pp::DomainShape::half_space(3);
        pp::PairSampler sampler{d, 42};
        sampler.count = samples;
        const pp::BoundRecord& b = pp::record("thm3.1");

        auto t0 = std::chrono::steady_clock::now();
        pp::ViolationReport par = pp::verify_bound(b, d, 4.0, sampler, 1e-9);
        double tp = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        pp::ViolationReport ser = pp::verify_bound_serial(b, d, 4.0, sampler, 1e-9);
        double ts = seconds_since(t0);

        bool same = par.worst_lower_margin == ser.worst_lower_margin &&
                    par.worst_upper_margin == ser.worst_upper_margin &&
                    par.max_quotient == ser.max_quotient &&
                    par.min_quotient == ser.min_quotient &&
                    same_witness(par.worst_lower, ser.worst_lower) &&
                    same_witness(par.worst_upper, ser.worst_upper);
        all_same = all_same && same;
        std::printf("%-28s %12.3f %12.3f %8.2f %s\n", "margin campaign (thm3.1)", tp, ts,
                    ts / tp, same ? "yes" : "NO");
    }

    {
        pp::DomainShape d = pp::DomainShape::half_space(2);
        pp::PairSampler sampler{d, 42};
        sampler.count = samples;

        auto t0 = std::chrono::steady_clock::now();
        pp::QuasiEstimate par = pp::estimate_quasimetric_constant(d, 4.0, sampler, false);
        double tp = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        pp::QuasiEstimate ser = pp::estimate_quasimetric_constant_serial(d, 4.0, sampler, false);
        double ts = seconds_since(t0);

        bool same = par.value == ser.value && par.witness[0] == ser.witness[0] &&
                    par.witness[1] == ser.witness[1] && par.witness[2] == ser.witness[2];
        all_same = all_same && same;
        std::printf("%-28s %12.3f %12.3f %8.2f %s\n", "quasi-metric scan", tp, ts, ts / tp,
                    same ? "yes" : "NO");
    }

    if (!all_same) {
        std::printf("MISMATCH between parallel and serial kernels\n");
        return 1;
    }
    std::printf("parallel and serial kernels agree bit for bit\n");
    return 0;
}
