#ifndef HKADE_RING_HPP
#define HKADE_RING_HPP

#include <optional>
#include <string>
#include <vector>

#include "hkade/poly.hpp"

namespace hkade {

// Positively graded polynomial ring with integer variable weights and an
// optional single homogeneous relation.
struct RingSpec {
    std::vector<std::string> names;
    std::vector<long> weights;
    std::optional<Poly<Int>> relation;
    long relation_degree = 0;

    int nvars() const { return static_cast<int>(weights.size()); }

    static RingSpec make(std::vector<std::string> names, std::vector<long> weights,
                         std::optional<Poly<Int>> relation = std::nullopt) {
        RingSpec s;
        s.names = std::move(names);
        s.weights = std::move(weights);
        for (long w : s.weights)
            if (w < 1) throw domain_error("BadWeight", "weights must be >= 1");
        if (relation) {
            if (relation->nvars() != s.nvars())
                throw domain_error("VariableCountMismatch", "relation vs ring");
            auto d = weighted_degree(*relation, s.weights);
            if (!d)
                throw domain_error("InhomogeneousRelation",
                                   "relation is not homogeneous for the given weights");
            s.relation = std::move(relation);
            s.relation_degree = *d;
        }
        return s;
    }
};

// All exponent vectors of weighted degree exactly d, in the fixed monomial
// order. d < 0 yields the empty list.
inline std::vector<Exponents> graded_piece_basis(const std::vector<long>& weights, long d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    int n = static_cast<int>(weights.size());
    Exponents cur(n, 0);
    // depth-first over variables; weights are >= 1 so recursion is bounded
    auto rec = [&](auto&& self, int i, long rem) -> void {
        if (i == n - 1) {
            if (rem % weights[i] == 0) {
                cur[i] = static_cast<uint32_t>(rem / weights[i]);
                out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (long e = 0; e * weights[i] <= rem; ++e) {
            cur[i] = static_cast<uint32_t>(e);
            self(self, i + 1, rem - e * weights[i]);
        }
        cur[i] = 0;
    };
    if (n > 0) rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

// Number of monomials of weighted degree d, without materializing them.
inline long count_monomials(const std::vector<long>& weights, long d) {
    if (d < 0) return 0;
    std::vector<long> cnt(static_cast<size_t>(d) + 1, 0);
    cnt[0] = 1;
    for (long w : weights)
        for (long v = w; v <= d; ++v) cnt[v] += cnt[v - w];
    return cnt[d];
}

} // namespace hkade

#endif
