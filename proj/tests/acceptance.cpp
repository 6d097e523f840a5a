// Acceptance suite: end-to-end criteria for the exact generalized-inverse
// pipeline and the float backend. Each criterion prints one line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ratginv/ratginv.hpp"
#include "testutil.hpp"

using namespace ratginv;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("criterion %d %-44s %s%s%s\n", index, name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            best = std::max(best, std::abs(a(i, j) - b(i, j)));
    return best;
}

// --- criterion 1: constant-input regression, exact equality and timing ----

void criterion_1() {
    const RatMatrix a = parse_matrix_file(fixtures::kIntA);
    const RatMatrix r = parse_matrix_file(fixtures::kIntR);
    const RatMatrix expected = parse_matrix_file(fixtures::kIntX124);

    const auto t0 = std::chrono::steady_clock::now();
    GInvTask task;
    task.a = a;
    task.helper = r;
    const GInvResult res = algorithm_2_1(task);
    const CheckReport rep = penrose_check(a, res.x);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = res.x == expected;
    ok = ok && res.x(2, 0) == RatFun(Rat(-13, 10));
    ok = ok && rep.eq1 && rep.eq2 && rep.eq4;
    ok = ok && seconds < 1.0;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "%.3fs", seconds);
    report(1, "constant 6x4 {1,2,4} regression", ok, detail);
}

// --- criterion 2: rank-2 {2,4} regression over Q(x) -----------------------

void criterion_2() {
    const RatMatrix a = parse_matrix_file(fixtures::kPolyA43);
    const RatMatrix r = parse_matrix_file(fixtures::kPolyR42);
    const GInvResult res = ginv_left(a, r);
    bool ok = res.s == 2;
    ok = ok && res.x(0, 0) == parse_ratfun_expr("(-21-30*x+4*x^2)/(49+140*x+204*x^2)");
    ok = ok && res.x == parse_matrix_file(fixtures::kPolyX24);
    report(2, "4x3 polynomial {2,4}_2 regression", ok);
}

// --- criterion 3: remaining printed regressions with classifications ------

void criterion_3() {
    bool ok = true;
    std::string detail;

    {   // right branch, {1,2,3}
        const RatMatrix a = parse_matrix_file(fixtures::kPolyA46);
        const RatMatrix t = parse_matrix_file(fixtures::kPolyT56);
        const GInvResult res = ginv_right(a, t);
        const RatMatrix expected = parse_matrix_file(fixtures::kPolyX123);
        const bool row_anchor = res.x(0, 0).is_zero() && res.x(0, 1) == RatFun(1) &&
                                res.x(0, 2) == RatFun(-1) && res.x(0, 3).is_zero();
        const bool here =
            row_anchor && res.x == expected && penrose_check(a, res.x).classification == "{1,2,3}";
        if (!here) detail += "[wide 4x6] ";
        ok = ok && here;
    }
    {   // left branch, {1,2,4}
        const RatMatrix a = parse_matrix_file(fixtures::kPolyA63);
        const RatMatrix r = parse_matrix_file(fixtures::kPolyR65);
        const GInvResult res = ginv_left(a, r);
        const RatMatrix expected = parse_matrix_file(fixtures::kPolyX124Tall);
        const bool anchor =
            res.x(0, 0) == parse_ratfun_expr("(1596-2292*x+2542*x^2)/(-41601+39942*x-27634*x^2)");
        const bool here =
            anchor && res.x == expected && penrose_check(a, res.x).classification == "{1,2,4}";
        if (!here) detail += "[tall 6x3] ";
        ok = ok && here;
    }
    {   // right branch, {2,3}_2
        const RatMatrix a = parse_matrix_file(fixtures::kPolyA43);
        const RatMatrix t = parse_matrix_file(fixtures::kPolyT23);
        const GInvResult res = ginv_right(a, t);
        const RatMatrix expected = parse_matrix_file(fixtures::kPolyX23);
        const bool anchor =
            res.x(2, 3) ==
            parse_ratfun_expr("(-18*(-1+x)^2)/(329-1168*x+984*x^2+380*x^3+35*x^4)");
        const bool here =
            anchor && res.x == expected && penrose_check(a, res.x).classification == "{2,3}_2";
        if (!here) detail += "[right 2x3] ";
        ok = ok && here;
    }
    report(3, "remaining printed regressions + classes", ok, detail);
}

// --- criteria 4 and 5: randomized exact property suite --------------------

struct PropertyOutcome {
    int failures4 = 0;
    int failures5 = 0;
    std::vector<RatMatrix> inputs;
};

PropertyOutcome run_property_suite() {
    PropertyOutcome out;
    std::mt19937 rng(160924);
    std::uniform_int_distribution<std::size_t> rows(1, 5), cols(1, 4), hdim(1, 5);

    int generated = 0;
    while (generated < 200) {
        const bool left = generated % 2 == 0;
        const RatMatrix a = testutil::random_poly_matrix(rng, rows(rng), cols(rng), 2, 5);
        if (a.is_zero()) continue;

        if (left) {
            const RatMatrix r = testutil::random_poly_matrix(rng, a.rows(), hdim(rng), 2, 5);
            const RatMatrix b = star(r) * a;
            if (b.is_zero()) continue;
            const GInvResult res = ginv_left(a, r);
            const auto eqs = testutil::penrose_direct(a, res.x);
            bool good = eqs.eq2 && eqs.eq4;
            good = good && rank(res.x) == res.s && res.s == rank(b);
            if (res.s == rank(a)) good = good && eqs.eq1;
            if (!good) ++out.failures4;
        } else {
            const RatMatrix t = testutil::random_poly_matrix(rng, hdim(rng), a.cols(), 2, 5);
            if ((a * star(t)).is_zero()) continue;
            const GInvResult res = ginv_right(a, t);
            const auto eqs = testutil::penrose_direct(a, res.x);
            bool good = eqs.eq2 && eqs.eq3;
            good = good && rank(res.x) == res.s;
            if (res.s == rank(a)) good = good && eqs.eq1;
            if (!good) ++out.failures4;
        }
        out.inputs.push_back(a);
        ++generated;
    }

    for (const RatMatrix& a : out.inputs) {
        const RatMatrix via_left = ginv_left(a, a).x;    // (A^T A)-route
        const RatMatrix via_right = ginv_right(a, a).x;  // (A A^T)-route
        const bool unique = via_left == via_right;
        const bool penrose = testutil::penrose_direct(a, via_left).all();
        if (!(unique && penrose)) ++out.failures5;
    }
    return out;
}

// --- criterion 6: reverse-order identity -----------------------------------

// The product identity (AB)^+ = B^T (A^T A B B^T)^+ A^T holds exactly when
// rank(AB) = rank(A) = rank(B); generic tall-times-wide pairs realize that
// regime, which is also the only regime the inverse pipeline relies on. The
// general-shape form is provably false - see the counterexample regression in
// test_ginv - so sampling verifies the rank precondition and skips the rare
// degenerate draw.
void criterion_6() {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<std::size_t> inner(1, 3), extra(0, 3);
    int checked = 0, failures = 0;
    while (checked < 100) {
        const std::size_t k = inner(rng);
        const RatMatrix a = testutil::random_poly_matrix(rng, k + extra(rng), k, 1, 4);
        const RatMatrix b = testutil::random_poly_matrix(rng, k, k + extra(rng), 1, 4);
        const std::size_t r = rank(a * b);
        if (r != rank(a) || r != rank(b)) continue;
        if (!reverse_order_law_check(a, b)) ++failures;
        ++checked;
    }
    report(6, "reverse-order identity on 100 pairs", failures == 0,
           failures ? std::to_string(failures) + " failures" : "");
}

// --- criterion 7: exact/float agreement on constant matrices ---------------

void criterion_7() {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<std::size_t> dim(2, 10);
    int checked = 0, failures = 0;
    double worst_exact = 0.0;
    while (checked < 50) {
        const std::size_t m = dim(rng), n = dim(rng);
        FloatMatrix af = testutil::random_int_float_matrix(rng, m, n, 9);
        if (checked % 5 == 0 && n >= 2)  // plant singular instances
            for (std::size_t i = 0; i < m; ++i) af(i, n - 1) = af(i, 0);

        RatMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = RatFun(Rat(static_cast<long>(af(i, j))));

        const FloatMatrix exact_mp = eval_at(moore_penrose(a), Rat(0));
        const FloatMatrix gen = geninv_float(af);
        const double dev = max_abs_diff(gen, exact_mp);
        worst_exact = std::max(worst_exact, dev);
        if (dev > 1e-8) ++failures;

        const ModGinvResult mod = modginv_float(af, af);
        if (!mod.condition_warning && max_abs_diff(mod.x, gen) > 1e-6) ++failures;
        ++checked;
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst geninv deviation %.2e", worst_exact);
    report(7, "float backend vs exact MP on 50 matrices", failures == 0, detail);
}

// --- criterion 8: conditioning reproduction and harness completion ---------

void criterion_8() {
    bool ok = true;
    std::string detail;
    for (TestFamily fam : {TestFamily::S, TestFamily::F, TestFamily::A}) {
        for (std::size_t n : {25UL, 50UL, 100UL}) {
            const FloatMatrix a = testmat_gen(fam, n, 1.0);
            const FloatMatrix g = geninv_float(a);
            const ModGinvResult m = modginv_float(a, a);
            double worst_gen = 0.0, worst_mod = 0.0;
            for (double v : penrose_residuals(a, g)) worst_gen = std::max(worst_gen, v);
            for (double v : penrose_residuals(a, m.x)) worst_mod = std::max(worst_mod, v);
            if (!(worst_mod > worst_gen) || !m.condition_warning) {
                ok = false;
                detail += family_name(fam) + std::to_string(n) + " ";
            }
        }
    }

    // harness completion: every cell reports residuals (timings are not compared)
    const auto records =
        bench_run({TestFamily::S, TestFamily::F, TestFamily::A}, {5, 10, 25, 50, 100},
                  {BenchMethod::geninv, BenchMethod::modginv}, 1.0, 1);
    if (records.size() != 30) ok = false;
    for (const BenchRecord& rec : records)
        if (rec.failed) {
            ok = false;
            detail += rec.matrix_name + "/" + rec.method + " failed ";
        }
    report(8, "squared-Gram conditioning reproduction", ok, detail);
}

// --- criterion 9: factorization oracle -------------------------------------

void criterion_9() {
    std::mt19937 rng(662607);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int failures = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const RatMatrix m = testutil::random_poly_matrix(rng, dim(rng), dim(rng), 2, 5);
        const RatMatrix g = star(m) * m;
        const PSDFactorization f = ldl_psd_exact(g);

        RatMatrix ld = f.l1;
        for (std::size_t k = 0; k < f.d.size(); ++k)
            for (std::size_t i = 0; i < ld.rows(); ++i) ld(i, k) *= f.d[k];
        bool good = ld * f.l1.transpose() == g;
        good = good && f.rank() == rank(m);
        good = good && testutil::penrose_direct(g, psd_pinv(f)).all();
        if (!good) ++failures;
    }
    report(9, "factorization oracle on 200 Gram matrices", failures == 0,
           failures ? std::to_string(failures) + " failures" : "");
}

}  // namespace

int main() {
    auto guarded = [](int index, const char* name, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            report(index, name, false, std::string("exception: ") + e.what());
        }
    };

    guarded(1, "constant 6x4 {1,2,4} regression", criterion_1);
    guarded(2, "4x3 polynomial {2,4}_2 regression", criterion_2);
    guarded(3, "remaining printed regressions + classes", criterion_3);

    try {
        const PropertyOutcome prop = run_property_suite();
        report(4, "exact property suite (200 instances)", prop.failures4 == 0,
               prop.failures4 ? std::to_string(prop.failures4) + " failures" : "");
        report(5, "MP uniqueness via both Gram routes", prop.failures5 == 0,
               prop.failures5 ? std::to_string(prop.failures5) + " failures" : "");
    } catch (const std::exception& e) {
        report(4, "exact property suite (200 instances)", false,
               std::string("exception: ") + e.what());
        report(5, "MP uniqueness via both Gram routes", false, "suite aborted");
    }

    guarded(6, "reverse-order identity on 100 pairs", criterion_6);
    guarded(7, "float backend vs exact MP on 50 matrices", criterion_7);
    guarded(8, "squared-Gram conditioning reproduction", criterion_8);
    guarded(9, "factorization oracle on 200 Gram matrices", criterion_9);

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
