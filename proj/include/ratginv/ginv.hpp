#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratginv/errors.hpp"
#include "ratginv/exact_linalg.hpp"
#include "ratginv/matrix.hpp"
#include "ratginv/psd_factor.hpp"

namespace ratginv {

enum class Branch { left, right, automatic };

// Request for algorithm_2_1: input matrix, helper matrix (R on the left
// branch, T on the right branch) and how to dispatch between them.
struct GInvTask {
    RatMatrix a;
    RatMatrix helper;
    Branch branch = Branch::automatic;
};

struct GInvResult {
    RatMatrix x;
    std::size_t s = 0;             // realized rank of the helper product
    Branch branch_taken = Branch::left;
    // Nonempty when the factorization pivot count disagrees with
    // min(rank A, rank helper); the pivot count always wins.
    std::string diagnostic;
};

// Outcome of testing the four Penrose equations
//   (1) AXA = A  (2) XAX = X  (3) (AX)* = AX  (4) (XA)* = XA
// by exact symbolic computation.
struct CheckReport {
    bool eq1 = false, eq2 = false, eq3 = false, eq4 = false;
    std::size_t rank_x = 0;
    std::string classification;
};

namespace detail {

inline std::string min_rank_diagnostic(const RatMatrix& a, const RatMatrix& helper,
                                       std::size_t pivot_count) {
    const std::size_t min_rank = std::min(rank(a), rank(helper));
    if (min_rank == pivot_count) return {};
    return "realized rank " + std::to_string(pivot_count) +
           " of the helper product differs from min(rank A, rank helper) = " +
           std::to_string(min_rank) + "; proceeding with the realized rank";
}

}  // namespace detail

// Left-branch representation: for B = R^T A and G = B^T B = L L^T,
//   X = G^+ B^T R^T  (the sqrt-free form of L (L^T L)^{-2} L^T (R^T A)^T R^T).
// X is always a {2,4}-inverse of A of rank s = rank(R^T A); when s = rank(A),
// X is a {1,2,4}-inverse.
inline GInvResult ginv_left(const RatMatrix& a, const RatMatrix& r) {
    if (r.rows() != a.rows())
        throw DimensionMismatch("left helper must have as many rows as the input matrix");
    const RatMatrix b = r.transpose() * a;      // n1 x n
    const RatMatrix g = b.transpose() * b;      // n x n Gram
    const PSDFactorization f = ldl_psd_exact(g);
    if (f.rank() == 0) throw RankZero("helper product R^T A is zero");
    GInvResult out;
    out.x = psd_pinv(f) * b.transpose() * r.transpose();
    out.s = f.rank();
    out.branch_taken = Branch::left;
    out.diagnostic = detail::min_rank_diagnostic(a, r, out.s);
    return out;
}

// Right-branch representation: for C = A T^T and G = C C^T = L L^T,
//   X = T^T C^T G^+. X is always a {2,3}-inverse of A of rank s = rank(A T^T);
// when s = rank(A), X is a {1,2,3}-inverse.
inline GInvResult ginv_right(const RatMatrix& a, const RatMatrix& t) {
    if (t.cols() != a.cols())
        throw DimensionMismatch("right helper must have as many columns as the input matrix");
    const RatMatrix c = a * t.transpose();      // m x m1
    const RatMatrix g = c * c.transpose();      // m x m Gram
    const PSDFactorization f = ldl_psd_exact(g);
    if (f.rank() == 0) throw RankZero("helper product A T^T is zero");
    GInvResult out;
    out.x = t.transpose() * c.transpose() * psd_pinv(f);
    out.s = f.rank();
    out.branch_taken = Branch::right;
    out.diagnostic = detail::min_rank_diagnostic(a, t, out.s);
    return out;
}

// Dispatch: a helper with the input's column count is a T (right branch);
// otherwise it must share the input's row count and acts as an R (left
// branch). A square input with an equally-sized square helper takes the right
// branch, matching the if-ordering of the dispatch rule.
inline GInvResult algorithm_2_1(const GInvTask& task) {
    switch (task.branch) {
        case Branch::left:
            return ginv_left(task.a, task.helper);
        case Branch::right:
            return ginv_right(task.a, task.helper);
        case Branch::automatic:
            if (task.helper.cols() == task.a.cols()) return ginv_right(task.a, task.helper);
            if (task.helper.rows() == task.a.rows()) return ginv_left(task.a, task.helper);
            throw DimensionMismatch("helper fits neither branch");
    }
    throw DimensionMismatch("invalid branch");
}

// Moore-Penrose inverse via the helper-free specialization R = T = A. Both
// branches are computed and must agree structurally (A^+ is unique); the zero
// matrix maps to the transposed-shape zero matrix.
inline RatMatrix moore_penrose(const RatMatrix& a) {
    if (a.is_zero()) return RatMatrix(a.cols(), a.rows());
    const RatMatrix left = ginv_left(a, a).x;
    const RatMatrix right = ginv_right(a, a).x;
    if (left != right)
        throw std::logic_error("Moore-Penrose uniqueness violated: left and right paths differ");
    return left;
}

// Exact verification and classification of a candidate inverse.
inline CheckReport penrose_check(const RatMatrix& a, const RatMatrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw DimensionMismatch("candidate must have the transposed shape of the input");
    const RatMatrix ax = a * x;
    const RatMatrix xa = x * a;
    CheckReport rep;
    rep.eq1 = (ax * a == a);
    rep.eq2 = (xa * x == x);
    rep.eq3 = (ax.transpose() == ax);
    rep.eq4 = (xa.transpose() == xa);
    rep.rank_x = rank(x);

    if (rep.eq1 && rep.eq2 && rep.eq3 && rep.eq4) {
        rep.classification = "MP";
        return rep;
    }
    std::vector<int> satisfied;
    if (rep.eq1) satisfied.push_back(1);
    if (rep.eq2) satisfied.push_back(2);
    if (rep.eq3) satisfied.push_back(3);
    if (rep.eq4) satisfied.push_back(4);
    std::string label = "{";
    for (std::size_t i = 0; i < satisfied.size(); ++i) {
        if (i) label += ",";
        label += std::to_string(satisfied[i]);
    }
    label += "}";
    // Classes without equation (1) are rank-indexed: A{2,...}_s.
    if (rep.eq2 && !rep.eq1) label += "_" + std::to_string(rep.rank_x);
    rep.classification = label;
    return rep;
}

// Reverse-order identity (AB)^+ = B^T (A^T A B B^T)^+ A^T, evaluated through
// this library's own Moore-Penrose routine on both sides. It is an identity,
// so any false verdict indicates an implementation bug.
inline bool reverse_order_law_check(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("reverse order law shape mismatch");
    const RatMatrix lhs = moore_penrose(a * b);
    const RatMatrix at = a.transpose();
    const RatMatrix bt = b.transpose();
    const RatMatrix rhs = bt * moore_penrose(at * a * b * bt) * at;
    return lhs == rhs;
}

}  // namespace ratginv
