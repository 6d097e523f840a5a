#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "ratginv/float_linalg.hpp"
#include "ratginv/testmat.hpp"

namespace ratginv {

enum class BenchMethod { geninv, modginv };

inline BenchMethod parse_method(const std::string& name) {
    if (name == "geninv") return BenchMethod::geninv;
    if (name == "modginv") return BenchMethod::modginv;
    throw UnknownFamily("unknown method '" + name + "' (expected geninv or modginv)");
}

inline std::string method_name(BenchMethod m) {
    return m == BenchMethod::geninv ? "geninv" : "modginv";
}

struct BenchRecord {
    std::string matrix_name;                    // e.g. "S25"
    std::string method;                         // "geninv" or "modginv"
    double elapsed_seconds = 0.0;               // median over the timing runs
    std::array<double, 4> residuals{};          // max-norm Penrose defects
    bool condition_warning = false;
    bool failed = false;                        // per-cell failure, the table's '-'
    std::string error;
};

// Times each (family x size, method) cell and records the Penrose residuals
// of the produced candidate. Matrix generation and I/O sit outside the timed
// region; the median of `runs` wall-clock measurements is reported. A failing
// cell is recorded, not propagated.
inline std::vector<BenchRecord> bench_run(const std::vector<TestFamily>& families,
                                          const std::vector<std::size_t>& sizes,
                                          const std::vector<BenchMethod>& methods,
                                          double a_param = 1.0, std::size_t runs = 5) {
    std::vector<BenchRecord> records;
    for (const TestFamily fam : families) {
        for (const std::size_t n : sizes) {
            const FloatMatrix a = testmat_gen(fam, n, a_param);
            for (const BenchMethod method : methods) {
                BenchRecord rec;
                rec.matrix_name = family_name(fam) + std::to_string(n);
                rec.method = method_name(method);
                try {
                    FloatMatrix x;
                    std::vector<double> times;
                    times.reserve(runs);
                    for (std::size_t run = 0; run < std::max<std::size_t>(runs, 1); ++run) {
                        const auto t0 = std::chrono::steady_clock::now();
                        if (method == BenchMethod::geninv) {
                            x = geninv_float(a);
                        } else {
                            ModGinvResult r = modginv_float(a, a);
                            rec.condition_warning = r.condition_warning;
                            x = std::move(r.x);
                        }
                        const auto t1 = std::chrono::steady_clock::now();
                        times.push_back(std::chrono::duration<double>(t1 - t0).count());
                    }
                    std::sort(times.begin(), times.end());
                    rec.elapsed_seconds = times[times.size() / 2];
                    rec.residuals = penrose_residuals(a, x);
                } catch (const std::exception& e) {
                    rec.failed = true;
                    rec.error = e.what();
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

namespace detail {

inline std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", s);
    return buf;
}

inline std::string fmt_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", r);
    return buf;
}

}  // namespace detail

// CSV columns: matrix,method,seconds,r1,r2,r3,r4,warning. Failed cells carry
// '-' in the numeric columns.
inline void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
    os << "matrix,method,seconds,r1,r2,r3,r4,warning\n";
    for (const BenchRecord& r : records) {
        os << r.matrix_name << ',' << r.method << ',';
        if (r.failed) {
            os << "-,-,-,-,-,";
        } else {
            os << detail::fmt_seconds(r.elapsed_seconds) << ','
               << detail::fmt_residual(r.residuals[0]) << ','
               << detail::fmt_residual(r.residuals[1]) << ','
               << detail::fmt_residual(r.residuals[2]) << ','
               << detail::fmt_residual(r.residuals[3]) << ',';
        }
        os << (r.condition_warning ? "1" : "0") << '\n';
    }
}

// Aligned plain-text table; '*' marks condition warnings, '-' failed cells.
inline void write_table(std::ostream& os, const std::vector<BenchRecord>& records) {
    auto pad = [](std::string s, std::size_t w) {
        while (s.size() < w) s += ' ';
        return s;
    };
    os << pad("matrix", 8) << pad("method", 9) << pad("seconds", 12) << pad("max residual", 14)
       << "\n";
    for (const BenchRecord& r : records) {
        os << pad(r.matrix_name, 8) << pad(r.method, 9);
        if (r.failed) {
            os << pad("-", 12) << pad("-", 14);
        } else {
            double worst = 0.0;
            for (double v : r.residuals) worst = std::max(worst, v);
            std::string sec = detail::fmt_seconds(r.elapsed_seconds);
            if (r.condition_warning) sec += " *";
            os << pad(sec, 12) << pad(detail::fmt_residual(worst), 14);
        }
        os << "\n";
    }
}

}  // namespace ratginv
