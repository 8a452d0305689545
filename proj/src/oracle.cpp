#include "hkade/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace hkade {

QuotientProblem QuotientProblem::make(RingSpec spec, uint32_t p, std::vector<Poly<Fp>> gens) {
    if (p < 2) throw domain_error("BadPrime", "characteristic must be a prime >= 2");
    if (gens.empty()) throw domain_error("EmptyGenerators", "need at least one generator");
    for (const auto& g : gens) {
        if (g.nvars() != spec.nvars())
            throw domain_error("VariableCountMismatch", "generator vs ring");
        if (g.is_zero()) throw domain_error("ZeroGenerator", "generators must be nonzero");
        if (!weighted_degree(g, spec.weights))
            throw domain_error("InhomogeneousGenerator",
                               "generators must be homogeneous for the given weights");
    }
    QuotientProblem prob;
    prob.spec = std::move(spec);
    prob.p = p;
    prob.gens = std::move(gens);
    return prob;
}

bool FpRankAccumulator::add_row(std::vector<uint32_t> row) {
    const uint64_t p = p_;
    for (size_t j = 0; j < cols_; ++j) {
        if (row[j] == 0) continue;
        int k = where_[j];
        if (k < 0) {
            // normalize so the pivot entry is 1
            uint64_t inv = Fp(row[j], p_).inverse().value();
            for (size_t t = j; t < cols_; ++t)
                row[t] = static_cast<uint32_t>((row[t] * inv) % p);
            where_[j] = static_cast<int>(rows_.size());
            pivot_.push_back(j);
            rows_.push_back(std::move(row));
            return true;
        }
        const std::vector<uint32_t>& piv = rows_[static_cast<size_t>(k)];
        uint64_t c = p - row[j]; // row += c * piv
        for (size_t t = j; t < cols_; ++t)
            row[t] = static_cast<uint32_t>((row[t] + c * piv[t]) % p);
    }
    return false;
}

namespace {

// Rows of the degree-d span, fed straight into the accumulator.
long span_rank_impl(const std::vector<long>& weights, uint32_t p,
                    const std::vector<Poly<Fp>>& gens, long d,
                    const std::vector<Exponents>& basis) {
    if (basis.empty()) return 0;
    std::map<Exponents, size_t, GradedLexLess> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    FpRankAccumulator acc(p, basis.size());
    std::vector<uint32_t> row(basis.size(), 0);
    for (const auto& g : gens) {
        long dg = *weighted_degree(g, weights);
        for (const Exponents& m : graded_piece_basis(weights, d - dg)) {
            std::fill(row.begin(), row.end(), 0);
            for (const auto& [e, c] : g.terms()) {
                Exponents prod(m);
                for (size_t i = 0; i < prod.size(); ++i) prod[i] += e[i];
                row[index.at(prod)] = c.value();
            }
            acc.add_row(row);
            if (acc.rank() == basis.size()) return static_cast<long>(basis.size());
        }
    }
    return static_cast<long>(acc.rank());
}

} // namespace

long span_rank(const std::vector<long>& weights, uint32_t p,
               const std::vector<Poly<Fp>>& gens, long d) {
    return span_rank_impl(weights, p, gens, d, graded_piece_basis(weights, d));
}

long default_max_degree(const QuotientProblem& prob) {
    long sum = prob.spec.relation_degree;
    for (const auto& g : prob.gens) sum += *weighted_degree(g, prob.spec.weights);
    return 4 * sum;
}

HilbertFn quotient_hilbert_function(const QuotientProblem& prob, std::optional<long> max_degree) {
    long bound = max_degree.value_or(default_max_degree(prob));
    if (const char* env = std::getenv("HK_MAX_DEGREE"); env && !max_degree)
        bound = std::atol(env);

    std::vector<Poly<Fp>> idealgens = prob.gens;
    if (prob.spec.relation) idealgens.push_back(to_fp(*prob.spec.relation, prob.p));

    long window = *std::max_element(prob.spec.weights.begin(), prob.spec.weights.end());
    HilbertFn hf;
    long zero_run = 0;
    for (long d = 0; d <= bound; ++d) {
        auto basis = graded_piece_basis(prob.spec.weights, d);
        long rank = span_rank_impl(prob.spec.weights, prob.p, idealgens, d, basis);
        long val = static_cast<long>(basis.size()) - rank;
        hf.values.push_back(val);
        zero_run = (val == 0) ? zero_run + 1 : 0;
        if (zero_run >= window) {
            hf.artinian = true;
            break;
        }
    }
    if (hf.artinian) {
        hf.total = 0;
        for (long v : hf.values) hf.total += v;
    }
    return hf;
}

Int quotient_dim(const QuotientProblem& prob, std::optional<long> max_degree) {
    HilbertFn hf = quotient_hilbert_function(prob, max_degree);
    if (!hf.artinian)
        throw domain_error("NonArtinian",
                           "no zero window found before the degree bound; "
                           "quotient may not be Artinian (raise HK_MAX_DEGREE)");
    return hf.total;
}

long syz_kernel_dim(const std::vector<long>& weights2, uint32_t p,
                    const std::vector<Poly<Fp>>& gens, long d) {
    if (weights2.size() != 2)
        throw domain_error("VariableCountMismatch", "syzygy oracle needs a 2-variable ring");
    long domain_dim = 0;
    for (const auto& g : gens) {
        long dg = *weighted_degree(g, weights2);
        domain_dim += count_monomials(weights2, d - dg);
    }
    if (domain_dim == 0) return 0;
    return domain_dim - span_rank(weights2, p, gens, d);
}

long syz_min_degree(const std::vector<long>& weights2, uint32_t p,
                    const std::vector<Poly<Fp>>& gens) {
    long bound = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) throw domain_error("ZeroGenerator", "generators must be nonzero");
        bound += *weighted_degree(g, weights2);
    }
    for (long d = 0; d <= bound; ++d)
        if (syz_kernel_dim(weights2, p, gens, d) > 0) return d;
    throw domain_error("SyzygyScanExhausted", "no syzygy within the degree bound");
}

long syz_gap(const std::vector<long>& weights2, uint32_t p,
             const std::vector<Poly<Fp>>& gens) {
    long sum = 0;
    for (const auto& g : gens) sum += *weighted_degree(g, weights2);
    return sum - 2 * syz_min_degree(weights2, p, gens);
}

std::vector<long> syz_generator_degrees(const std::vector<long>& weights2, uint32_t p,
                                        const std::vector<Poly<Fp>>& gens) {
    // The syzygy module is free over k[Y1,Y2] of rank k-1, so the degree-d
    // piece spanned by generators found so far has dimension
    // sum_g count_monomials(d - deg g).
    long bound = 0;
    for (const auto& g : gens) bound += *weighted_degree(g, weights2);
    size_t want = gens.size() - 1;
    std::vector<long> found;
    for (long d = 0; d <= bound && found.size() < want; ++d) {
        long expected = 0;
        for (long g : found) expected += count_monomials(weights2, d - g);
        long actual = syz_kernel_dim(weights2, p, gens, d);
        for (long k = 0; k < actual - expected; ++k) found.push_back(d);
    }
    if (found.size() != want)
        throw domain_error("SyzygyScanExhausted",
                           "generator scan ended before rank k-1 was reached");
    return found;
}

} // namespace hkade
