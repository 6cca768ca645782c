#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace critmon {
namespace numsgp {

/// Brute-force numerical semigroup: membership table filled by dynamic
/// programming, everything else derived from it by enumeration. Values are
/// immutable after construction.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<long> generators) {
        if (generators.empty())
            throw std::invalid_argument("NumericalSemigroup: empty generator list");
        for (long g : generators)
            if (g <= 0) throw std::invalid_argument("NumericalSemigroup: generators must be positive");
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        long g = 0;
        for (long v : generators) g = std::gcd(g, v);
        if (g != 1) throw std::invalid_argument("NumericalSemigroup: gcd of generators must be 1");
        gens_ = std::move(generators);
        fill_membership();
        compute_minimal_generators();
    }

    const std::vector<long>& generators() const { return gens_; }
    const std::vector<long>& minimal_generators() const { return min_gens_; }
    long frobenius() const { return frobenius_; }
    long conductor() const { return frobenius_ + 1; }
    std::size_t embedding_dimension() const { return min_gens_.size(); }

    bool contains(long s) const {
        if (s < 0) return false;
        if (s >= static_cast<long>(member_.size())) return true;  // table covers past conductor
        return member_[static_cast<std::size_t>(s)] != 0;
    }

    /// Least element of the semigroup in each residue class mod z if z is a
    /// member; otherwise the literal finite set {s in S : s - z not in S}.
    std::vector<long> apery(long z) const {
        if (z <= 0) throw std::invalid_argument("apery: z must be positive");
        std::vector<long> ap;
        if (contains(z)) {
            ap.reserve(static_cast<std::size_t>(z));
            for (long r = 0; r < z; ++r) {
                long s = r;
                while (!contains(s)) s += z;
                ap.push_back(s);
            }
        } else {
            for (long s = 0; s <= frobenius_ + z; ++s)
                if (contains(s) && !contains(s - z)) ap.push_back(s);
        }
        std::sort(ap.begin(), ap.end());
        return ap;
    }

    long genus() const {
        long g = 0;
        for (long s = 0; s < conductor(); ++s)
            if (!contains(s)) ++g;
        return g;
    }

private:
    std::vector<long> gens_;
    std::vector<long> min_gens_;
    std::vector<std::uint8_t> member_;
    long frobenius_ = -1;

    void fill_membership() {
        const long g_min = gens_.front(), g_max = gens_.back();
        long limit = 4 * g_max + 1;
        if (g_min * g_max + g_max + 1 < limit) limit = g_min * g_max + g_max + 1;
        for (;;) {
            member_.assign(static_cast<std::size_t>(limit), 0);
            member_[0] = 1;
            for (long s = 1; s < limit; ++s)
                for (long g : gens_) {
                    if (g > s) break;
                    if (member_[static_cast<std::size_t>(s - g)]) {
                        member_[static_cast<std::size_t>(s)] = 1;
                        break;
                    }
                }
            bool tail_full = true;
            for (long s = limit - g_min; s < limit; ++s)
                if (!member_[static_cast<std::size_t>(s)]) tail_full = false;
            if (tail_full) break;
            limit *= 2;  // not expected with the bound above
        }
        frobenius_ = -1;
        for (long s = limit - 1; s >= 0; --s)
            if (!member_[static_cast<std::size_t>(s)]) {
                frobenius_ = s;
                break;
            }
        member_.resize(static_cast<std::size_t>(frobenius_ + g_max + 2), 1);
    }

    void compute_minimal_generators() {
        for (long g : gens_) {
            bool reducible = false;
            for (long h : gens_) {
                if (h >= g) break;
                if (g - h > 0 && contains(g - h)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) min_gens_.push_back(g);
        }
    }
};

struct Invariants {
    long frobenius = -1;
    long genus = 0;
    std::vector<long> pseudo_frobenius;
    std::size_t type = 0;
};

/// Frobenius number and genus via Selmer's formulas on the Apery set of the
/// multiplicity; PF from the maximal Apery elements under the semigroup
/// order. PF of the full semigroup N is {-1} by convention.
inline Invariants basic_invariants(const NumericalSemigroup& s) {
    Invariants inv;
    const long m = s.minimal_generators().front();
    const std::vector<long> ap = s.apery(m);
    long max_ap = *std::max_element(ap.begin(), ap.end());
    inv.frobenius = max_ap - m;
    long sum = std::accumulate(ap.begin(), ap.end(), 0L);
    inv.genus = (2 * sum - m * (m - 1)) / (2 * m);  // Selmer, exact
    if (m == 1) {
        inv.pseudo_frobenius = {-1};
    } else {
        // gaps x with x + g in S for every minimal generator g
        for (long x = 1; x <= inv.frobenius; ++x) {
            if (s.contains(x)) continue;
            bool pf = true;
            for (long g : s.minimal_generators())
                if (!s.contains(x + g)) {
                    pf = false;
                    break;
                }
            if (pf) inv.pseudo_frobenius.push_back(x);
        }
    }
    inv.type = inv.pseudo_frobenius.size();
    return inv;
}

using Factorization = std::vector<long>;  // over minimal generators, ascending

struct FactorizationSet {
    long element = 0;
    std::vector<Factorization> factorizations;
};

namespace detail {

inline void enumerate(const std::vector<long>& gens, std::size_t k, long remainder,
                      Factorization& current, std::vector<Factorization>& out) {
    if (k == 0) {
        if (remainder % gens[0] == 0) {
            current[0] = remainder / gens[0];
            out.push_back(current);
        }
        return;
    }
    for (long q = 0; q * gens[k] <= remainder; ++q) {
        current[k] = q;
        enumerate(gens, k - 1, remainder - q * gens[k], current, out);
    }
    current[k] = 0;
}

/// Connected components of the factorization graph (edges join factorizations
/// with a common support variable). Returns the component id of each vertex.
inline std::vector<int> support_components(const std::vector<Factorization>& z) {
    std::vector<int> comp(z.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = next;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < z.size(); ++v) {
                if (comp[v] >= 0) continue;
                bool shared = false;
                for (std::size_t t = 0; t < z[u].size(); ++t)
                    if (z[u][t] > 0 && z[v][t] > 0) {
                        shared = true;
                        break;
                    }
                if (shared) {
                    comp[v] = comp[u];
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace detail

/// Complete factorization set of s over the minimal generators.
inline FactorizationSet factorizations(const NumericalSemigroup& s, long element) {
    if (!s.contains(element)) throw std::invalid_argument("factorizations: element not in semigroup");
    FactorizationSet fs;
    fs.element = element;
    const std::vector<long>& gens = s.minimal_generators();
    Factorization current(gens.size(), 0);
    detail::enumerate(gens, gens.size() - 1, element, current, fs.factorizations);
    std::sort(fs.factorizations.begin(), fs.factorizations.end());
    return fs;
}

using RelationPair = std::pair<Factorization, Factorization>;

struct Presentation {
    std::vector<long> betti_elements;
    std::vector<std::pair<long, RelationPair>> relations;
    bool uniquely_presented = false;
};

/// Betti elements and a minimal presentation. Candidates are scanned with the
/// generator graph (vertices g_i with s - g_i in S, edges where s - g_i - g_j
/// in S); for s > F + g_e + g_{e-1} that graph is complete, which bounds the
/// scan. Relations reconnect the components of the factorization graph of
/// each Betti element.
inline Presentation betti_and_presentation(const NumericalSemigroup& s) {
    Presentation pres;
    const std::vector<long>& gens = s.minimal_generators();
    const std::size_t e = gens.size();
    if (e < 2) {
        pres.uniquely_presented = true;  // S = N, empty presentation
        return pres;
    }
    const long bound = s.frobenius() + gens[e - 1] + gens[e - 2];

    pres.uniquely_presented = true;
    for (long b = 1; b <= bound; ++b) {
        if (!s.contains(b)) continue;
        std::vector<std::size_t> verts;
        for (std::size_t i = 0; i < e; ++i)
            if (s.contains(b - gens[i])) verts.push_back(i);
        if (verts.size() < 2) continue;
        // connectivity of the generator graph
        std::vector<int> comp(verts.size(), -1);
        comp[0] = 0;
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < verts.size(); ++v)
                if (comp[v] < 0 && s.contains(b - gens[verts[u]] - gens[verts[v]])) {
                    comp[v] = 0;
                    stack.push_back(v);
                }
        }
        if (std::find(comp.begin(), comp.end(), -1) == comp.end()) continue;

        // b is a Betti element; derive relations from the factorization graph
        pres.betti_elements.push_back(b);
        const FactorizationSet fs = factorizations(s, b);
        const std::vector<int> fcomp = detail::support_components(fs.factorizations);
        const int ncomp = *std::max_element(fcomp.begin(), fcomp.end()) + 1;
        if (ncomp < 2)
            throw std::logic_error("betti_and_presentation: graph methods disagree");
        std::vector<Factorization> reps(static_cast<std::size_t>(ncomp));
        std::vector<bool> seen(static_cast<std::size_t>(ncomp), false);
        for (std::size_t i = 0; i < fs.factorizations.size(); ++i) {
            auto c = static_cast<std::size_t>(fcomp[i]);
            if (!seen[c]) {  // factorizations are sorted: rep is the least one
                reps[c] = fs.factorizations[i];
                seen[c] = true;
            }
        }
        for (int c = 1; c < ncomp; ++c)
            pres.relations.emplace_back(b, RelationPair{reps[0], reps[static_cast<std::size_t>(c)]});
        if (fs.factorizations.size() != 2 || ncomp != 2) pres.uniquely_presented = false;
    }
    return pres;
}

inline long factorization_length(const Factorization& f) {
    return std::accumulate(f.begin(), f.end(), 0L);
}

inline long distance(const Factorization& u, const Factorization& v) {
    long du = 0, dv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        long m = std::min(u[i], v[i]);
        du += u[i] - m;
        dv += v[i] - m;
    }
    return std::max(du, dv);
}

struct DeltaCatenary {
    std::optional<long> delta_min;  // absent = half-factorial
    std::optional<long> delta_max;
    long catenary = 0;
};

/// Delta-set bounds and catenary degree from the Betti elements: consecutive
/// length gaps of each Betti element (max over all, gcd for the minimum) and
/// the bottleneck threshold that connects each Betti factorization graph.
inline DeltaCatenary delta_and_catenary(const NumericalSemigroup& s) {
    DeltaCatenary dc;
    const Presentation pres = betti_and_presentation(s);
    long gaps_gcd = 0, gaps_max = 0;
    for (long b : pres.betti_elements) {
        const FactorizationSet fs = factorizations(s, b);
        std::set<long> lengths;
        for (const Factorization& f : fs.factorizations) lengths.insert(factorization_length(f));
        long prev = -1;
        for (long l : lengths) {
            if (prev >= 0 && l > prev) {
                gaps_gcd = std::gcd(gaps_gcd, l - prev);
                gaps_max = std::max(gaps_max, l - prev);
            }
            prev = l;
        }
        // bottleneck connection threshold of the complete distance graph
        const std::size_t k = fs.factorizations.size();
        std::vector<std::tuple<long, std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                edges.emplace_back(distance(fs.factorizations[i], fs.factorizations[j]), i, j);
        std::sort(edges.begin(), edges.end());
        std::vector<std::size_t> parent(k);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t merged = 0;
        for (const auto& [w, i, j] : edges) {
            std::size_t a = find(i), c = find(j);
            if (a != c) {
                parent[a] = c;
                if (++merged == k - 1) {
                    dc.catenary = std::max(dc.catenary, w);
                    break;
                }
            }
        }
    }
    if (gaps_max > 0) {
        dc.delta_min = gaps_gcd;
        dc.delta_max = gaps_max;
    }
    return dc;
}

struct GluingResult {
    NumericalSemigroup semigroup;
    long degree = 0;  // lambda * mu, the degree of the added relation
    RelationPair relation;
};

/// Gluing of lambda * S1 and mu * S2; the added relation expresses
/// lambda * mu on both sides.
inline GluingResult glue(const NumericalSemigroup& s1, const NumericalSemigroup& s2, long lambda,
                         long mu) {
    if (!s2.contains(lambda))
        throw std::invalid_argument("glue: lambda=" + std::to_string(lambda) + " is not in S2");
    const auto& m2 = s2.minimal_generators();
    if (std::find(m2.begin(), m2.end(), lambda) != m2.end())
        throw std::invalid_argument("glue: lambda=" + std::to_string(lambda) +
                                    " is a minimal generator of S2");
    if (!s1.contains(mu))
        throw std::invalid_argument("glue: mu=" + std::to_string(mu) + " is not in S1");
    const auto& m1 = s1.minimal_generators();
    if (std::find(m1.begin(), m1.end(), mu) != m1.end())
        throw std::invalid_argument("glue: mu=" + std::to_string(mu) +
                                    " is a minimal generator of S1");
    if (std::gcd(lambda, mu) != 1)
        throw std::invalid_argument("glue: gcd(lambda, mu) must be 1");

    std::vector<long> gens;
    for (long g : m1) gens.push_back(lambda * g);
    for (long g : m2) gens.push_back(mu * g);
    GluingResult r{NumericalSemigroup(gens), lambda * mu, {}};

    // both sides of the relation factor lambda*mu over the combined generators
    const Factorization zmu = factorizations(s1, mu).factorizations.front();
    const Factorization zlam = factorizations(s2, lambda).factorizations.front();
    Factorization lhs(m1.size() + m2.size(), 0), rhs(m1.size() + m2.size(), 0);
    std::copy(zmu.begin(), zmu.end(), lhs.begin());
    std::copy(zlam.begin(), zlam.end(), rhs.begin() + static_cast<long>(m1.size()));
    r.relation = {lhs, rhs};
    return r;
}

struct GluingDecomposition {
    std::vector<long> part1;
    std::vector<long> part2;
};

/// All splittings of the minimal generators satisfying the gluing criterion
/// in scaled form: with A_i = d_i * B_i, require d_1 in <B_2> \ B_2,
/// d_2 in <B_1> \ B_1 and gcd(d_1, d_2) = 1.
inline std::vector<GluingDecomposition> detect_gluing(const NumericalSemigroup& s) {
    const std::vector<long>& gens = s.minimal_generators();
    const std::size_t e = gens.size();
    std::vector<GluingDecomposition> result;
    if (e < 2) return result;
    // bipartitions; the subset containing gens[0] is part1, so each unordered
    // split appears once
    for (std::uint64_t mask = 1; mask < (1ull << e); mask += 2) {
        if (mask == (1ull << e) - 1) continue;
        GluingDecomposition dec;
        for (std::size_t i = 0; i < e; ++i)
            ((mask >> i) & 1 ? dec.part1 : dec.part2).push_back(gens[i]);
        long d1 = 0, d2 = 0;
        for (long g : dec.part1) d1 = std::gcd(d1, g);
        for (long g : dec.part2) d2 = std::gcd(d2, g);
        if (std::gcd(d1, d2) != 1) continue;
        std::vector<long> b1, b2;
        for (long g : dec.part1) b1.push_back(g / d1);
        for (long g : dec.part2) b2.push_back(g / d2);
        const NumericalSemigroup sb1(b1), sb2(b2);
        auto in_but_not_gen = [](const NumericalSemigroup& t, const std::vector<long>& b, long d) {
            return t.contains(d) && std::find(b.begin(), b.end(), d) == b.end();
        };
        if (in_but_not_gen(sb2, b2, d1) && in_but_not_gen(sb1, b1, d2))
            result.push_back(std::move(dec));
    }
    return result;
}

/// c_i = least k >= 1 with k * g_i in the monoid generated by the other
/// minimal generators.
inline std::vector<long> critical_exponents(const NumericalSemigroup& s) {
    const std::vector<long>& gens = s.minimal_generators();
    if (gens.size() < 2)
        throw std::invalid_argument("critical_exponents: needs at least 2 minimal generators");
    std::vector<long> result;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<long> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        long d = 0;
        for (long g : others) d = std::gcd(d, g);
        std::vector<long> reduced;
        for (long g : others) reduced.push_back(g / d);
        const NumericalSemigroup sub(reduced);
        long k = 1;
        for (;; ++k) {
            long v = k * gens[i];
            if (v % d == 0 && sub.contains(v / d)) break;
            if (k > d * (sub.conductor() + gens[i]))
                throw std::logic_error("critical_exponents: search bound exceeded");
        }
        result.push_back(k);
    }
    return result;
}

enum class Criticality { No, Yes, Inconclusive };

/// Decide whether the semigroup ideal is generated by critical binomials: for
/// every Betti element, the relations of critical shape at that degree must
/// reconnect its factorization graph. The witness search over component
/// choices is capped; hitting the cap yields Inconclusive.
inline Criticality is_critical(const NumericalSemigroup& s,
                               std::uint64_t search_cap = 1u << 20) {
    const std::vector<long>& gens = s.minimal_generators();
    if (gens.size() < 2) return Criticality::Yes;  // zero ideal
    const std::vector<long> ce = critical_exponents(s);
    std::vector<long> degrees;
    for (std::size_t i = 0; i < gens.size(); ++i) degrees.push_back(ce[i] * gens[i]);

    const Presentation pres = betti_and_presentation(s);
    for (long b : pres.betti_elements) {
        std::vector<std::size_t> idx;  // variables whose critical degree is b
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (degrees[i] == b) idx.push_back(i);
        if (idx.empty()) return Criticality::No;

        const FactorizationSet fs = factorizations(s, b);
        const std::vector<int> comp = detail::support_components(fs.factorizations);
        const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;

        // per variable: the component of c_i e_i and the components reachable
        // by a factorization avoiding generator i
        std::vector<int> source(idx.size(), -1);
        std::vector<std::vector<int>> targets(idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const std::size_t i = idx[t];
            std::set<int> reach;
            for (std::size_t f = 0; f < fs.factorizations.size(); ++f) {
                const Factorization& z = fs.factorizations[f];
                bool pure_power = z[i] == ce[i] && factorization_length(z) == ce[i];
                if (pure_power) source[t] = comp[f];
                if (z[i] == 0) reach.insert(comp[f]);
            }
            if (source[t] < 0)
                throw std::logic_error("is_critical: pure power factorization missing");
            targets[t].assign(reach.begin(), reach.end());
            if (targets[t].empty()) return Criticality::No;
        }

        // choose one target per variable so that the edges source-target
        // connect all components
        std::uint64_t combos = 1;
        for (const auto& t : targets) {
            combos *= t.size();
            if (combos > search_cap) return Criticality::Inconclusive;
        }
        bool connected = false;
        std::vector<std::size_t> choice(idx.size(), 0);
        for (std::uint64_t it = 0; it < combos && !connected; ++it) {
            std::uint64_t code = it;
            std::vector<int> parent(static_cast<std::size_t>(ncomp));
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[static_cast<std::size_t>(x)] != x)
                    x = parent[static_cast<std::size_t>(x)] =
                        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                return x;
            };
            for (std::size_t t = 0; t < idx.size(); ++t) {
                int a = find(source[t]);
                int c = find(targets[t][code % targets[t].size()]);
                code /= targets[t].size();
                parent[static_cast<std::size_t>(a)] = c;
            }
            int root = find(0);
            connected = true;
            for (int c = 1; c < ncomp; ++c)
                if (find(c) != root) {
                    connected = false;
                    break;
                }
        }
        if (!connected) return Criticality::No;
    }
    return Criticality::Yes;
}

}  // namespace numsgp
}  // namespace critmon
