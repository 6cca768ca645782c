#pragma once

#include "critmon/northcott.hpp"

#include <optional>
#include <vector>

namespace critmon {
namespace gb {

using Monomial = std::vector<long>;  // exponent vector in N^n

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial quotient_times(const Monomial& m, const Monomial& num, const Monomial& den) {
    // m / den * num, componentwise
    Monomial r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - den[i] + num[i];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

/// Coefficient-free binomial plus - minus; zero is represented externally by
/// std::nullopt.
struct PureBinomial {
    Monomial plus;
    Monomial minus;
};

enum class TieBreak { RevLex, Lex };

/// Weighted monomial order: compare by weight first, on ties the monomial
/// with the smaller x_n exponent is the larger one, remaining ties broken on
/// x_1..x_{n-1}. Any strictly positive weight vector makes this a term order
/// on each graded piece with x_n least.
struct WeightedOrder {
    std::vector<Int> weight;
    TieBreak tie_break = TieBreak::RevLex;
};

/// -1, 0 or 1 as m1 is less than, equal to or greater than m2.
inline int compare(const WeightedOrder& ord, const Monomial& m1, const Monomial& m2) {
    const std::size_t n = ord.weight.size();
    if (m1.size() != n || m2.size() != n)
        throw std::invalid_argument("compare: dimension mismatch");
    Int w1 = 0, w2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w1 += Int(m1[i]) * ord.weight[i];
        w2 += Int(m2[i]) * ord.weight[i];
    }
    if (w1 != w2) return w1 < w2 ? -1 : 1;
    if (m1[n - 1] != m2[n - 1]) return m1[n - 1] < m2[n - 1] ? 1 : -1;  // less x_n wins
    if (ord.tie_break == TieBreak::RevLex) {
        for (std::size_t i = n - 1; i-- > 0;)
            if (m1[i] != m2[i]) return m1[i] < m2[i] ? 1 : -1;
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (m1[i] != m2[i]) return m1[i] > m2[i] ? 1 : -1;
    }
    return 0;
}

inline const Monomial& leading(const WeightedOrder& ord, const PureBinomial& f) {
    return compare(ord, f.plus, f.minus) >= 0 ? f.plus : f.minus;
}

inline const Monomial& trailing(const WeightedOrder& ord, const PureBinomial& f) {
    return compare(ord, f.plus, f.minus) >= 0 ? f.minus : f.plus;
}

/// S-polynomial of two pure binomials; again pure (or zero).
inline std::optional<PureBinomial> s_polynomial(const PureBinomial& f, const PureBinomial& g,
                                                const WeightedOrder& ord) {
    const Monomial& lf = leading(ord, f);
    const Monomial& lg = leading(ord, g);
    const Monomial l = lcm(lf, lg);
    PureBinomial s{quotient_times(l, trailing(ord, g), lg),
                   quotient_times(l, trailing(ord, f), lf)};
    if (s.plus == s.minus) return std::nullopt;
    return s;
}

/// Normal form of a pure binomial modulo a list of pure binomials: each
/// monomial is rewritten while divisible by some leading term. Terminates
/// because every rewrite strictly decreases the monomial and the graded piece
/// of its weight is finite (weights are strictly positive).
inline std::optional<PureBinomial> reduce(const PureBinomial& f,
                                          const std::vector<PureBinomial>& basis,
                                          const WeightedOrder& ord) {
    Monomial a = f.plus, b = f.minus;
    for (;;) {
        if (a == b) return std::nullopt;
        bool rewritten = false;
        for (Monomial* m : {&a, &b}) {
            for (const PureBinomial& g : basis) {
                const Monomial& lg = leading(ord, g);
                if (divides(lg, *m)) {
                    *m = quotient_times(*m, trailing(ord, g), lg);
                    rewritten = true;
                    break;
                }
            }
            if (rewritten) break;
        }
        if (!rewritten) break;
    }
    if (compare(ord, a, b) < 0) std::swap(a, b);
    return PureBinomial{a, b};
}

struct GroebnerReport {
    bool is_basis = false;
    std::vector<Monomial> initial_gens;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// Check that the instance's relations form a Groebner basis for the weighted
/// order built from its presentation, and that the initial ideal is generated
/// by the expected pure powers plus the product monomial.
inline GroebnerReport verify_groebner(const NorthcottExponents& e,
                                      TieBreak tie_break = TieBreak::RevLex) {
    const MonoidPresentation pres = monoid_presentation(e);
    const BinomialSystem sys = binomials(e);
    const std::size_t n = static_cast<std::size_t>(e.n);

    WeightedOrder ord{pres.weight, tie_break};
    std::vector<PureBinomial> basis;
    for (const Relation& rel : sys.relations) basis.push_back({rel.lhs, rel.rhs});

    GroebnerReport report;
    for (const PureBinomial& f : basis) {
        // relations are homogeneous for the weight, the stored lhs must lead
        Int w = 0;
        for (std::size_t i = 0; i < n; ++i)
            w += Int(f.plus[i] - f.minus[i]) * ord.weight[i];
        if (w != 0) throw std::logic_error("verify_groebner: relation not homogeneous");
        report.initial_gens.push_back(leading(ord, f));
    }

    report.is_basis = true;
    for (std::size_t i = 0; i < basis.size() && report.is_basis; ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto s = s_polynomial(basis[i], basis[j], ord);
            if (s && reduce(*s, basis, ord)) {
                report.is_basis = false;
                report.failing_pair = {i, j};
                break;
            }
        }
    return report;
}

/// The initial-ideal generators asserted in the closed form: x_i^{c_i} for
/// i < n together with the product of the diagonal powers.
inline std::vector<Monomial> expected_initial_gens(const NorthcottExponents& e) {
    const std::size_t n = static_cast<std::size_t>(e.n);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Monomial m(n, 0);
        m[i] = e.c(i);
        gens.push_back(std::move(m));
    }
    Monomial d(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) d[i] = e.diag[i];
    gens.push_back(std::move(d));
    return gens;
}

}  // namespace gb
}  // namespace critmon
