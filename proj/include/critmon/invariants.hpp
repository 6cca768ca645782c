#pragma once

#include "critmon/northcott.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace critmon {

/// All closed-form invariants of a numerical Northcott instance.
struct InvariantReport {
    std::vector<Int> apery;  // sorted, |apery| = a_n
    Int frobenius = 0;
    std::vector<Int> pseudo_frobenius;  // sorted
    std::size_t type = 0;               // = n-1
    Int genus = 0;
    Int relation_constant = 0;  // N = sum (c_i - 1) a_i
    std::optional<long> delta_min;
    std::optional<long> delta_max;
    long catenary = 0;
    Int wilf_margin = 0;
};

namespace detail {

inline void require_numerical(const MonoidPresentation& p) {
    if (!p.is_numerical)
        throw std::invalid_argument("closed-form invariants require a numerical instance");
}

}  // namespace detail

/// Apery set of a_n without enumerating the semigroup: weighted points of the
/// box 0 <= u_i < c_i whose exponent drops below the diagonal somewhere.
inline std::vector<Int> apery_closed(const NorthcottExponents& e, const MonoidPresentation& p) {
    detail::require_numerical(p);
    const std::size_t m = static_cast<std::size_t>(e.n) - 1;
    const std::vector<Int>& a = p.weight;
    std::vector<Int> result;
    std::vector<long> u(m, 0);
    for (;;) {
        bool below_diag = false;
        for (std::size_t i = 0; i < m; ++i)
            if (u[i] < e.diag[i]) {
                below_diag = true;
                break;
            }
        if (below_diag) {
            Int v = 0;
            for (std::size_t i = 0; i < m; ++i) v += Int(u[i]) * a[i];
            result.push_back(v);
        }
        std::size_t k = 0;
        while (k < m && ++u[k] == e.c(k)) u[k++] = 0;
        if (k == m) break;
    }
    std::sort(result.begin(), result.end());
    if (std::adjacent_find(result.begin(), result.end()) != result.end())
        throw std::logic_error("apery_closed: values not distinct");
    if (Int(result.size()) != a[m])
        throw std::logic_error("apery_closed: cardinality differs from a_n");
    return result;
}

struct ClosedInvariants {
    std::vector<Int> pseudo_frobenius;
    Int frobenius = 0;
    std::size_t type = 0;
    Int genus = 0;
    Int relation_constant = 0;
};

/// PF, Frobenius number, type and genus by the closed formulas. The genus is
/// evaluated by the general sum; when mvec is all ones the simplified form is
/// evaluated too and both must agree.
inline ClosedInvariants invariants_closed(const NorthcottExponents& e,
                                          const MonoidPresentation& p) {
    detail::require_numerical(p);
    const std::size_t m = static_cast<std::size_t>(e.n) - 1;
    const std::vector<Int>& a = p.weight;
    const Int& an = a[m];

    ClosedInvariants inv;
    for (std::size_t i = 0; i < m; ++i) inv.relation_constant += Int(e.c(i) - 1) * a[i];
    std::set<Int> pf;
    for (std::size_t j = 0; j < m; ++j)
        pf.insert(inv.relation_constant - Int(e.mvec[j]) * a[j] - an);
    if (pf.size() != m) throw std::logic_error("invariants_closed: PF values not distinct");
    inv.pseudo_frobenius.assign(pf.begin(), pf.end());
    for (const Int& v : inv.pseudo_frobenius)
        if (v <= 0) throw std::logic_error("invariants_closed: PF value not positive");
    inv.frobenius = inv.pseudo_frobenius.back();
    inv.type = m;

    // genus: 2 a_n g = sum_i (c_i-1) c_i prod_{j!=i} c_j a_i
    //                - sum_i ((m_i-1) m_i + 2 d_i m_i) prod_{j!=i} m_j a_i
    //                - a_n (a_n - 1)
    Int num = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Int prod_c = 1, prod_m = 1;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) {
                prod_c *= e.c(j);
                prod_m *= e.mvec[j];
            }
        num += Int(e.c(i) - 1) * Int(e.c(i)) * prod_c * a[i];
        num -= (Int(e.mvec[i] - 1) * Int(e.mvec[i]) + 2 * Int(e.diag[i]) * Int(e.mvec[i])) *
               prod_m * a[i];
    }
    num -= an * (an - 1);
    if (num % (2 * an) != 0) throw std::logic_error("invariants_closed: genus sum not integral");
    inv.genus = num / (2 * an);

    if (e.mvec_all_ones()) {
        Int sum_xn = 0;
        for (long v : e.xn) sum_xn += v;
        if (inv.relation_constant != sum_xn * an)
            throw std::logic_error("invariants_closed: N identity fails for all-ones mvec");
        Int simplified = (an - 1) * (sum_xn - 1);
        if (simplified % 2 != 0 || simplified / 2 != inv.genus)
            throw std::logic_error("invariants_closed: simplified genus disagrees");
    }
    return inv;
}

struct FactorizationClosed {
    std::vector<long> gaps;  // per-relation length gaps, f_1..f_{n-1}, D
    std::optional<long> delta_min;
    std::optional<long> delta_max;
    long catenary = 0;
};

/// Delta-set bounds and catenary degree straight from the relation lengths;
/// valid for any Northcott monoid, numerical or not.
inline FactorizationClosed factorization_closed(const NorthcottExponents& e) {
    validate(e);
    const std::size_t m = static_cast<std::size_t>(e.n) - 1;
    FactorizationClosed fc;
    long gcd_gaps = 0, max_gap = 0;
    auto account = [&](long lhs_len, long rhs_len) {
        long gap = std::abs(lhs_len - rhs_len);
        fc.gaps.push_back(gap);
        if (gap > 0) {
            gcd_gaps = std::gcd(gcd_gaps, gap);
            max_gap = std::max(max_gap, gap);
        }
        fc.catenary = std::max(fc.catenary, std::max(lhs_len, rhs_len));
    };
    for (std::size_t i = 0; i < m; ++i)
        account(e.c(i), e.mvec[e.predecessor(i)] + e.xn[i]);
    long sum_diag = 0, sum_xn = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sum_diag += e.diag[i];
        sum_xn += e.xn[i];
    }
    account(sum_diag, sum_xn);
    if (max_gap > 0) {
        fc.delta_min = gcd_gaps;
        fc.delta_max = max_gap;
    }
    return fc;
}

/// e(S) n(S) - c(S); nonnegative for every all-ones mvec instance.
inline Int wilf_margin(const NorthcottExponents& e, const MonoidPresentation& p) {
    detail::require_numerical(p);
    const ClosedInvariants inv = invariants_closed(e, p);
    const Int conductor = inv.frobenius + 1;
    return Int(e.n) * (conductor - inv.genus) - conductor;
}

inline InvariantReport invariant_report(const NorthcottExponents& e,
                                        const MonoidPresentation& p) {
    InvariantReport r;
    r.apery = apery_closed(e, p);
    const ClosedInvariants inv = invariants_closed(e, p);
    r.frobenius = inv.frobenius;
    r.pseudo_frobenius = inv.pseudo_frobenius;
    r.type = inv.type;
    r.genus = inv.genus;
    r.relation_constant = inv.relation_constant;
    const FactorizationClosed fc = factorization_closed(e);
    r.delta_min = fc.delta_min;
    r.delta_max = fc.delta_max;
    r.catenary = fc.catenary;
    r.wilf_margin = wilf_margin(e, p);
    if (r.frobenius != r.apery.back() - p.weight.back())
        throw std::logic_error("invariant_report: F != max(Ap) - a_n");
    return r;
}

}  // namespace critmon
