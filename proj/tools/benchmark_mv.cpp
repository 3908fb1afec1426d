// Benchmark: OpenMP-parallel mixed volume vs the serial reference.
//
// Generates random support families in dimensions 3 and 4, times both
// implementations on each family, and verifies they agree exactly.
//
// Usage: benchmark_mv [families-per-dim] [points-per-support]
#include <bkk/polytope.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

using namespace bkk;

namespace {

SupportSet random_support(std::mt19937_64& rng, int dim, int npts, int box) {
    std::uniform_int_distribution<int> coord(0, box);
    std::vector<IVec> pts;
    while (static_cast<int>(pts.size()) < npts) {
        IVec p(dim);
        for (int i = 0; i < dim; ++i) p[i] = coord(rng);
        pts.push_back(p);
    }
    return SupportSet{dim, pts};
}

double seconds(std::chrono::steady_clock::time_point t0,
               std::chrono::steady_clock::time_point t1) {
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int families = argc > 1 ? std::atoi(argv[1]) : 6;
    int npts = argc > 2 ? std::atoi(argv[2]) : 10;
    std::mt19937_64 rng(20260824);

    std::printf("%-4s %-8s %12s %12s %8s\n", "dim", "family", "parallel(s)",
                "serial(s)", "speedup");
    for (int dim : {3, 4}) {
        double par_total = 0.0, ser_total = 0.0;
        // Minkowski sums blow up fast with the dimension; keep the 4-D
        // families smaller so a default run stays in the seconds range.
        int pts = dim >= 4 ? std::max(4, npts / 2) : npts;
        int box = dim >= 4 ? 3 : 6;
        for (int k = 0; k < families; ++k) {
            std::vector<SupportSet> as;
            for (int i = 0; i < dim; ++i)
                as.push_back(random_support(rng, dim, pts, box));

            auto t0 = std::chrono::steady_clock::now();
            Int par = mixed_volume(as);
            auto t1 = std::chrono::steady_clock::now();
            Int ser = mixed_volume_serial(as);
            auto t2 = std::chrono::steady_clock::now();

            if (par != ser) {
                std::fprintf(stderr, "MISMATCH dim=%d family=%d: %s vs %s\n",
                             dim, k, par.get_str().c_str(),
                             ser.get_str().c_str());
                return 1;
            }
            double tp = seconds(t0, t1), ts = seconds(t1, t2);
            par_total += tp;
            ser_total += ts;
            std::printf("%-4d %-8d %12.4f %12.4f %7.2fx\n", dim, k, tp, ts,
                        tp > 0 ? ts / tp : 0.0);
        }
        std::printf("%-4d %-8s %12.4f %12.4f %7.2fx\n\n", dim, "total",
                    par_total, ser_total,
                    par_total > 0 ? ser_total / par_total : 0.0);
    }
    std::puts("all results agree");
    return 0;
}
