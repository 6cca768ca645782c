#pragma once

#include "critmon/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace critmon {

/// Exponent family parameterizing a Northcott instance with n variables.
///
/// diag holds the exponents on the diagonal of the cyclic matrix (the powers
/// of x_1..x_{n-1} there), xn the exponents of x_n appearing below the
/// diagonal and in the corner, and mvec the exponents of the monomial vector
/// the matrix is applied to. All three have length n-1 and every entry is
/// strictly positive.
struct NorthcottExponents {
    int n = 0;
    std::vector<long> diag;
    std::vector<long> xn;
    std::vector<long> mvec;

    bool mvec_all_ones() const {
        return std::all_of(mvec.begin(), mvec.end(), [](long v) { return v == 1; });
    }

    /// c_i = diag_i + mvec_i, the x_i-exponent on the left side of relation i.
    long c(std::size_t i) const { return diag[i] + mvec[i]; }

    /// Index of the variable appearing next to x_n on the right side of
    /// relation i: i-1, wrapping to n-2 for the first relation (0-based).
    std::size_t predecessor(std::size_t i) const {
        return i == 0 ? static_cast<std::size_t>(n - 2) : i - 1;
    }
};

inline void validate(const NorthcottExponents& e) {
    if (e.n < 3)
        throw std::invalid_argument("n must be at least 3, got " + std::to_string(e.n));
    const auto expect = static_cast<std::size_t>(e.n - 1);
    auto check = [&](const char* name, const std::vector<long>& v) {
        if (v.size() != expect)
            throw std::invalid_argument(std::string(name) + " must have length " +
                                        std::to_string(e.n - 1) + ", got " +
                                        std::to_string(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] <= 0)
                throw std::invalid_argument(std::string(name) + "[" + std::to_string(i) +
                                            "]: exponent must be positive");
    };
    check("diag", e.diag);
    check("xn", e.xn);
    check("mvec", e.mvec);
}

/// One relation, stored as a disjoint-support pair of exponent vectors.
struct Relation {
    std::vector<long> lhs;
    std::vector<long> rhs;
};

/// The n relations of an instance, ordered f_1, ..., f_{n-1}, D.
struct BinomialSystem {
    std::vector<Relation> relations;
};

inline BinomialSystem binomials(const NorthcottExponents& e) {
    validate(e);
    const std::size_t n = static_cast<std::size_t>(e.n);
    BinomialSystem sys;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Relation f;
        f.lhs.assign(n, 0);
        f.rhs.assign(n, 0);
        f.lhs[i] = e.c(i);
        f.rhs[e.predecessor(i)] = e.mvec[e.predecessor(i)];
        f.rhs[n - 1] = e.xn[i];
        sys.relations.push_back(std::move(f));
    }
    Relation d;
    d.lhs.assign(n, 0);
    d.rhs.assign(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) d.lhs[i] = e.diag[i];
    d.rhs[n - 1] = std::accumulate(e.xn.begin(), e.xn.end(), 0L);
    sys.relations.push_back(std::move(d));
    return sys;
}

/// The n x n exponent matrix of the relations. Rows 1..n-1 are lhs - rhs of
/// f_1..f_{n-1}; the last row is rhs - lhs of D, so that all n rows sum to
/// zero and the last entry of the last row is positive.
inline IntMatrix defining_matrix(const NorthcottExponents& e) {
    const BinomialSystem sys = binomials(e);
    const std::size_t n = static_cast<std::size_t>(e.n);
    IntMatrix M(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M.at(i, j) = Int(sys.relations[i].lhs[j]) - Int(sys.relations[i].rhs[j]);
    for (std::size_t j = 0; j < n; ++j)
        M.at(n - 1, j) = Int(sys.relations[n - 1].rhs[j]) - Int(sys.relations[n - 1].lhs[j]);
    // postcondition: rows sum to zero
    for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += M.at(i, j);
        if (s != 0) throw std::logic_error("defining_matrix: rows do not sum to zero");
    }
    return M;
}

/// Generators of the associated monoid inside T + Z, recovered from the
/// Smith normal form of the defining matrix.
struct MonoidPresentation {
    std::vector<Int> invariant_factors;          // d_1 | ... | d_{n-1}, d_n = 0
    std::vector<std::vector<Int>> torsion_rows;  // one row per d_i > 1, entries mod d_i
    std::vector<Int> torsion_moduli;             // the corresponding d_i
    std::vector<Int> weight;                     // free coordinates a_1..a_n, positive
    bool is_numerical = false;
    Int torsion_order = 1;

    /// Generators of a numerical instance as plain integers.
    const std::vector<Int>& generators() const { return weight; }
};

inline MonoidPresentation monoid_presentation(const NorthcottExponents& e) {
    const IntMatrix M = defining_matrix(e);
    const std::size_t n = static_cast<std::size_t>(e.n);
    const SmithDecomposition snf = smith_normal_form(M);

    if (snf.rank() != n - 1)
        throw std::logic_error("monoid_presentation: defining matrix must have rank n-1");
    if (snf.invariant_factors.back() != 0)
        throw std::logic_error("monoid_presentation: d_n must be zero");

    MonoidPresentation p;
    p.invariant_factors = snf.invariant_factors;

    // Free coordinates: the last column of V spans ker M and is primitive.
    IntMatrix V = snf.V;
    IntMatrix Vinv = snf.V_inverse;
    {
        bool neg = false, pos = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (V.at(i, n - 1) < 0) neg = true;
            if (V.at(i, n - 1) > 0) pos = true;
        }
        if (neg && pos)
            throw std::logic_error("monoid_presentation: kernel vector has mixed signs");
        if (!neg && !pos)
            throw std::logic_error("monoid_presentation: kernel vector is zero");
        if (neg) {  // unit-free normalization: free coordinates nonnegative
            detail::negate_col(V, n - 1);
            detail::negate_row(Vinv, n - 1);
        }
    }
    p.weight.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.weight[i] = V.at(i, n - 1);

    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Int& d = p.invariant_factors[j];
        if (d > 1) {
            std::vector<Int> row(n);
            for (std::size_t i = 0; i < n; ++i) {
                row[i] = V.at(i, j) % d;
                if (row[i] < 0) row[i] += d;
            }
            p.torsion_rows.push_back(std::move(row));
            p.torsion_moduli.push_back(d);
            p.torsion_order *= d;
        }
    }
    p.is_numerical = p.torsion_rows.empty();

    // Congruence equality: every row of M lies in ker A, and the row lattice
    // of M equals ker A (mutual containment, via SNF solves).
    for (std::size_t i = 0; i < n; ++i) {
        Int w = 0;
        for (std::size_t j = 0; j < n; ++j) w += M.at(i, j) * p.weight[j];
        if (w != 0) throw std::logic_error("monoid_presentation: row not in ker(weight)");
        for (std::size_t t = 0; t < p.torsion_rows.size(); ++t) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j) s += M.at(i, j) * p.torsion_rows[t][j];
            if (s % p.torsion_moduli[t] != 0)
                throw std::logic_error("monoid_presentation: row not in ker(torsion)");
        }
    }
    // ker A is generated by d_j * (row j of V^{-1}) for the nonzero d_j.
    IntMatrix K(n - 1, n);
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            K.at(j, i) = p.invariant_factors[j] * Vinv.at(j, i);
    const SmithDecomposition ksnf = smith_normal_form(K);
    for (std::size_t i = 0; i < n; ++i)
        if (!row_lattice_contains(ksnf, M.row(i)))
            throw std::logic_error("monoid_presentation: row of M outside ker A");
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (!row_lattice_contains(snf, K.row(j)))
            throw std::logic_error("monoid_presentation: ker A strictly larger than row lattice");

    if (p.is_numerical) {
        Int g = 0;
        for (const Int& a : p.weight) g = gcd(g, a);
        if (g != 1) throw std::logic_error("monoid_presentation: numerical generators not coprime");
    }
    return p;
}

struct NumericalTestResult {
    bool is_numerical = false;
    std::vector<Int> invariant_factors;
    std::optional<Int> formula_gcd;  // present iff mvec is all ones
};

/// Decide numericality from the invariant factors; when mvec is all ones the
/// closed-form gcd for d_{n-1} is evaluated as well and checked against the
/// Smith normal form.
inline NumericalTestResult numerical_test(const NorthcottExponents& e) {
    validate(e);
    const MonoidPresentation p = monoid_presentation(e);
    NumericalTestResult r;
    r.invariant_factors = p.invariant_factors;
    r.is_numerical = p.is_numerical;
    if (e.mvec_all_ones()) {
        const std::size_t m = e.diag.size();
        Int lhs = 1;
        for (long d : e.diag) lhs *= d + 1;
        lhs -= 1;
        Int rhs = e.xn[0];
        Int prod = 1;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            prod *= e.diag[i] + 1;
            rhs += prod * e.xn[i + 1];
        }
        Int g = gcd(lhs, rhs);
        if (g != p.invariant_factors[m - 1])
            throw std::logic_error("numerical_test: formula gcd disagrees with d_{n-1}");
        r.formula_gcd = g;
    }
    return r;
}

/// Generators as absolute (n-1)-minors of the defining matrix; only valid
/// when mvec is all ones. The cyclic recurrence between consecutive minors is
/// asserted before returning.
inline std::vector<Int> minor_generators(const NorthcottExponents& e) {
    validate(e);
    if (!e.mvec_all_ones())
        throw std::invalid_argument("minor_generators: requires mvec = (1,...,1)");
    const IntMatrix M = defining_matrix(e);
    const std::size_t n = static_cast<std::size_t>(e.n);
    std::vector<Int> a(n);
    for (std::size_t j = 0; j < n; ++j)
        a[j] = abs(determinant(M.minor_matrix(n - 1, j)));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t prev = e.predecessor(k);
        if (Int(e.diag[k] + 1) * a[k] - a[prev] - Int(e.xn[k]) * a[n - 1] != 0)
            throw std::logic_error("minor_generators: minor recurrence violated");
    }
    return a;
}

struct SaturationResult {
    Int index = 1;  // order of Sat(M)/M
    bool is_prime = false;
};

inline SaturationResult saturation_index(const NorthcottExponents& e) {
    validate(e);
    const SmithDecomposition snf = smith_normal_form(defining_matrix(e));
    SaturationResult r;
    for (const Int& d : snf.invariant_factors)
        if (d != 0) r.index *= d;
    r.is_prime = (r.index == 1);
    return r;
}

/// Pretty-printer used by the CLI and tests: "x_1^3-x_3*x_4" style.
inline std::string relation_to_string(const Relation& rel) {
    auto side = [](const std::vector<long>& v) {
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (!first) out << "*";
            out << "x" << (i + 1);
            if (v[i] > 1) out << "^" << v[i];
            first = false;
        }
        if (first) out << "1";
        return out.str();
    };
    return side(rel.lhs) + "-" + side(rel.rhs);
}

}  // namespace critmon
