// Times the serial reference walk against the integer kernel, serial and
// parallel, on the sigma weights of p(n).
//
//   bench_kernels [max_n] [repeat]

#include <bellforge/kernels.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

using namespace bellforge;

namespace
{

template <class F>
double best_ms(int repeat, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < repeat; ++i)
    {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    const auto max_n = static_cast<std::uint32_t>(argc > 1 ? std::atoi(argv[1]) : 50);
    const int repeat = argc > 2 ? std::atoi(argv[2]) : 3;
    const std::uint32_t reference_limit = 40;

    std::vector<Rational> psi;
    for (std::uint32_t j = 1; j <= max_n; ++j)
        psi.emplace_back(sigma(j));
    const auto scaled = scale_psi(psi);

    std::printf("threads=%d\n", kernel_threads());
    std::printf("n,reference_ms,serial_ms,parallel_ms,speedup,agree\n");
    bool all_agree = true;
    for (std::uint32_t n = 10; n <= max_n; n += 10)
    {
        Rational ref, ser, par;
        double ref_ms = -1;
        if (n <= reference_limit)
            ref_ms = best_ms(repeat, [&] { ref = faa_sum_reference(psi, n); });
        const double ser_ms = best_ms(repeat, [&] { ser = faa_sum(scaled, n, Execution::serial); });
        const double par_ms = best_ms(repeat, [&] { par = faa_sum(scaled, n, Execution::parallel); });
        const bool agree = ser == par && (n > reference_limit || ref == ser);
        all_agree = all_agree && agree;
        if (ref_ms < 0)
            std::printf("%u,,%.3f,%.3f,%.2f,%s\n", n, ser_ms, par_ms, ser_ms / par_ms, agree ? "true" : "false");
        else
            std::printf("%u,%.3f,%.3f,%.3f,%.2f,%s\n", n, ref_ms, ser_ms, par_ms, ser_ms / par_ms,
                        agree ? "true" : "false");
    }
    return all_agree ? 0 : 1;
}
