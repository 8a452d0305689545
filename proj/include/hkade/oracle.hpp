#ifndef HKADE_ORACLE_HPP
#define HKADE_ORACLE_HPP

#include <optional>
#include <vector>

#include "hkade/ring.hpp"

namespace hkade {

// Degreewise F_p linear algebra: Hilbert functions of graded quotients,
// syzygy kernel dimensions, minimal syzygy degrees and generator degrees.
// This is the independent verifier for every closed form in the library.

struct QuotientProblem {
    RingSpec spec;
    uint32_t p = 0;
    std::vector<Poly<Fp>> gens;

    static QuotientProblem make(RingSpec spec, uint32_t p, std::vector<Poly<Fp>> gens);
};

struct HilbertFn {
    std::vector<long> values; // values[d] = dim of the degree-d piece
    bool artinian = false;
    Int total = 0; // set when artinian
};

// Incremental dense row reduction over F_p; rank grows as rows are added.
class FpRankAccumulator {
public:
    FpRankAccumulator(uint32_t p, size_t cols) : p_(p), cols_(cols), where_(cols, -1) {}
    bool add_row(std::vector<uint32_t> row); // true if the rank grew
    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

private:
    uint32_t p_;
    size_t cols_;
    std::vector<std::vector<uint32_t>> rows_; // normalized pivot rows
    std::vector<size_t> pivot_;               // pivot column per stored row
    std::vector<int> where_;                  // column -> stored row index
};

// Rank of the degree-d span of { m * g : g in gens, m monomial of fitting
// degree } inside the degree-d graded piece of the ambient polynomial ring.
long span_rank(const std::vector<long>& weights, uint32_t p,
               const std::vector<Poly<Fp>>& gens, long d);

// Hilbert function of the quotient by (gens) + relation, degree by degree.
// Enumeration stops once max(weights) consecutive zero values are seen; if
// maxDegree is hit first, the partial table is returned with artinian=false.
HilbertFn quotient_hilbert_function(const QuotientProblem& prob,
                                    std::optional<long> max_degree = std::nullopt);

// Total dimension of an Artinian quotient; throws NonArtinian otherwise.
Int quotient_dim(const QuotientProblem& prob, std::optional<long> max_degree = std::nullopt);

// Dimension of the degree-d piece of the kernel of (h_i) -> sum h_i F_i
// over a 2-variable polynomial ring (no relation).
long syz_kernel_dim(const std::vector<long>& weights2, uint32_t p,
                    const std::vector<Poly<Fp>>& gens, long d);

// Smallest degree with a nonzero syzygy; the scan bound sum(deg F_i) is
// always reached (Koszul).
long syz_min_degree(const std::vector<long>& weights2, uint32_t p,
                    const std::vector<Poly<Fp>>& gens);

// d1+d2+d3 - 2 * syz_min_degree for three generators; general gens allowed.
long syz_gap(const std::vector<long>& weights2, uint32_t p,
             const std::vector<Poly<Fp>>& gens);

// Minimal generator degrees of the (free) first syzygy module, as a sorted
// multiset of k-1 degrees for k generators.
std::vector<long> syz_generator_degrees(const std::vector<long>& weights2, uint32_t p,
                                        const std::vector<Poly<Fp>>& gens);

long default_max_degree(const QuotientProblem& prob);

} // namespace hkade

#endif
