#include "hkade/series.hpp"

#include <algorithm>
#include <sstream>

namespace hkade {

namespace {

void strip_zeros(std::map<long, Int>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = (it->second == 0) ? m.erase(it) : std::next(it);
}

// Exact division of a Laurent polynomial by (1 - t^a); nullopt if not divisible.
std::optional<std::map<long, Int>> divide_by_factor(const std::map<long, Int>& num, long a) {
    if (num.empty()) return std::map<long, Int>{};
    long lo = num.begin()->first;
    long hi = num.rbegin()->first;
    if (hi - lo < a) return std::nullopt;
    std::map<long, Int> q;
    // f = (1 - t^a) q  =>  q[d] = f[d] + q[d-a]
    std::map<long, Int> carry; // running q values
    for (long d = lo; d <= hi; ++d) {
        Int c = 0;
        if (auto it = num.find(d); it != num.end()) c = it->second;
        if (auto it = carry.find(d - a); it != carry.end()) c += it->second;
        if (c != 0) carry[d] = c;
    }
    // divisibility: all q entries above hi - a must vanish
    for (const auto& [d, c] : carry) {
        if (d > hi - a) return std::nullopt;
        q[d] = c;
    }
    return q;
}

std::map<long, Int> multiply(const std::map<long, Int>& a, const std::map<long, Int>& b) {
    std::map<long, Int> r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            Int& slot = r[da + db];
            slot += ca * cb;
        }
    strip_zeros(r);
    return r;
}

std::map<long, Int> one_minus_t_pow(long a) {
    return {{0, Int(1)}, {a, Int(-1)}};
}

} // namespace

HilbertSeries::HilbertSeries(std::map<long, Int> numerator, std::multiset<long> denom_factors)
    : num_(std::move(numerator)), den_(std::move(denom_factors)) {
    strip_zeros(num_);
    canonicalize();
}

void HilbertSeries::canonicalize() {
    if (num_.empty()) {
        den_.clear();
        return;
    }
    for (auto it = den_.rbegin(); it != den_.rend();) {
        if (auto q = divide_by_factor(num_, *it)) {
            num_ = std::move(*q);
            it = std::make_reverse_iterator(den_.erase(std::next(it).base()));
        } else {
            ++it;
        }
    }
}

HilbertSeries HilbertSeries::shifted(long m) const {
    std::map<long, Int> n;
    for (const auto& [d, c] : num_) n[d + m] = c;
    HilbertSeries r;
    r.num_ = std::move(n);
    r.den_ = den_;
    return r;
}

HilbertSeries HilbertSeries::times(const std::map<long, Int>& poly) const {
    return HilbertSeries(multiply(num_, poly), den_);
}

HilbertSeries HilbertSeries::over(long a) const {
    if (a < 1) throw domain_error("BadDenominator", "denominator exponents must be >= 1");
    std::multiset<long> d = den_;
    d.insert(a);
    return HilbertSeries(num_, std::move(d));
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
    // bring b over a's denominator: multiply numerators by the missing factors
    std::multiset<long> common = a.den_;
    for (long f : b.den_) common.insert(f);
    // common = a.den  union  b.den (with multiplicity sum); cancel shared part
    // by building  lcm-denominator = a.den + (b.den - shared)
    std::multiset<long> shared;
    {
        std::multiset<long> tmp = a.den_;
        for (long f : b.den_) {
            auto it = tmp.find(f);
            if (it != tmp.end()) {
                shared.insert(f);
                tmp.erase(it);
            }
        }
    }
    std::multiset<long> denom = a.den_;
    {
        std::multiset<long> extra = b.den_;
        for (long f : shared) extra.erase(extra.find(f));
        for (long f : extra) denom.insert(f);
    }
    std::map<long, Int> na = a.num_;
    {
        std::multiset<long> need = denom;
        for (long f : a.den_) need.erase(need.find(f));
        for (long f : need) na = multiply(na, one_minus_t_pow(f));
    }
    std::map<long, Int> nb = b.num_;
    {
        std::multiset<long> need = denom;
        for (long f : b.den_) need.erase(need.find(f));
        for (long f : need) nb = multiply(nb, one_minus_t_pow(f));
    }
    for (const auto& [d, c] : nb) na[d] += c;
    return HilbertSeries(std::move(na), std::move(denom));
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
    std::map<long, Int> neg;
    for (const auto& [d, c] : b.num_) neg[d] = -c;
    HilbertSeries nb;
    nb.num_ = std::move(neg);
    nb.den_ = b.den_;
    return a + nb;
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return hs_equal_up_to_shift(a, b) == std::optional<long>(0);
}

Int HilbertSeries::numerator_at_one() const {
    Int s = 0;
    for (const auto& [d, c] : num_) s += c;
    return s;
}

std::vector<Int> HilbertSeries::expand(long up_to) const {
    if (num_.empty()) return std::vector<Int>(static_cast<size_t>(up_to) + 1, Int(0));
    if (num_.begin()->first < 0)
        throw domain_error("NegativeExponent",
                           "numerator has negative exponents beyond cancellation");
    std::vector<Int> c(static_cast<size_t>(up_to) + 1, Int(0));
    for (const auto& [d, k] : num_)
        if (d <= up_to) c[static_cast<size_t>(d)] = k;
    for (long a : den_)
        for (long d = a; d <= up_to; ++d) c[static_cast<size_t>(d)] += c[static_cast<size_t>(d - a)];
    return c;
}

std::string HilbertSeries::str() const {
    std::ostringstream out;
    if (num_.empty()) return "0";
    bool first = true;
    for (const auto& [d, c] : num_) {
        Int k = c;
        if (k > 0 && !first) out << "+";
        if (k == -1) out << "-";
        else if (k != 1) out << k.get_str() << "*";
        if (d == 0 && (k == 1 || k == -1)) out << "1";
        else if (d != 0) out << "t^" << d;
        else out << "1";
        first = false;
    }
    for (long a : den_) out << " / (1-t^" << a << ")";
    return out.str();
}

std::optional<long> hs_equal_up_to_shift(const HilbertSeries& h1, const HilbertSeries& h2) {
    if (h1.is_zero() || h2.is_zero())
        return (h1.is_zero() && h2.is_zero()) ? std::optional<long>(0) : std::nullopt;
    // cross-multiply: num2 * den1 = t^m * num1 * den2
    std::map<long, Int> lhs = h2.numerator();
    for (long f : h1.denominator_factors()) lhs = multiply(lhs, one_minus_t_pow(f));
    std::map<long, Int> rhs = h1.numerator();
    for (long f : h2.denominator_factors()) rhs = multiply(rhs, one_minus_t_pow(f));
    long m = lhs.begin()->first - rhs.begin()->first;
    if (lhs.size() != rhs.size()) return std::nullopt;
    for (auto it1 = lhs.begin(), it2 = rhs.begin(); it1 != lhs.end(); ++it1, ++it2)
        if (it1->first != it2->first + m || it1->second != it2->second) return std::nullopt;
    return m;
}

HilbertSeries hs_ring(const RingSpec& spec) {
    std::map<long, Int> num{{0, Int(1)}};
    if (spec.relation) num[spec.relation_degree] -= 1;
    std::multiset<long> den(spec.weights.begin(), spec.weights.end());
    return HilbertSeries(std::move(num), std::move(den));
}

HilbertSeries hs_syz_direct(const RingSpec& spec, const std::vector<long>& gen_degrees,
                            const HilbertFn& quotient) {
    if (!quotient.artinian)
        throw domain_error("NonArtinian", "hs_syz_direct needs an Artinian quotient");
    std::map<long, Int> front;
    front[0] = -1;
    for (long d : gen_degrees) front[d] += 1;
    strip_zeros(front);
    HilbertSeries a = hs_ring(spec).times(front);
    std::map<long, Int> hf;
    for (size_t d = 0; d < quotient.values.size(); ++d)
        if (quotient.values[d] != 0) hf[static_cast<long>(d)] = quotient.values[d];
    return a + HilbertSeries::polynomial(std::move(hf));
}

namespace {

// Relation X^d - F(Y1, Y2) for the distinguished first variable: returns
// (d, F) with F living in the 2-variable ring of the tail variables.
std::pair<long, Poly<Int>> split_relation(const RingSpec& spec) {
    if (spec.nvars() != 3 || !spec.relation)
        throw domain_error("BadRecursionSpec", "need k[X,Y1,Y2] with a relation");
    const Poly<Int>& rel = *spec.relation;
    long d = -1;
    Poly<Int> f(2);
    for (const auto& [e, c] : rel.terms()) {
        if (e[0] != 0) {
            if (e[1] != 0 || e[2] != 0 || d >= 0)
                throw domain_error("BadRecursionSpec",
                                   "relation is not of the form X^d - F(Y1,Y2)");
            d = e[0];
            if (!(c == 1 || c == -1))
                throw domain_error("BadRecursionSpec", "X^d must have coefficient +-1");
            // normalize to X^d = F
            continue;
        }
        f.add_term({e[1], e[2]}, c);
    }
    if (d <= 0)
        throw domain_error("BadRecursionSpec", "relation has no pure power of the first variable");
    // X^d + F0 = 0 (up to sign)  =>  X^d = -+ F0; the sign is irrelevant for
    // syzygy generator degrees, normalize to F = -F0 for coefficient +1.
    Int lead = rel.terms().begin()->second; // not used; sign handled below
    (void)lead;
    return {d, -f};
}

std::vector<long> syz_degrees_two_primes(const std::vector<long>& w2,
                                         const std::vector<Poly<Int>>& gens, uint32_t p1,
                                         uint32_t p2) {
    auto run = [&](uint32_t p) {
        std::vector<Poly<Fp>> g;
        g.reserve(gens.size());
        for (const auto& q : gens) g.push_back(to_fp(q, p));
        return syz_generator_degrees(w2, p, g);
    };
    std::vector<long> d1 = run(p1);
    if (p1 != p2 && run(p2) != d1)
        throw domain_error("CharacteristicArtifact",
                           "syzygy generator degrees differ between the two oracle primes");
    return d1;
}

} // namespace

MaParts hs_ma_parts(const RingSpec& spec, long a, const std::vector<Poly<Int>>& vhead,
                    const std::vector<Poly<Int>>& vtail, uint32_t prime1, uint32_t prime2) {
    if (a < 1) throw domain_error("BadExponent", "a must be >= 1");
    auto [d, f] = split_relation(spec);
    std::vector<long> w2{spec.weights[1], spec.weights[2]};
    auto project = [&](const Poly<Int>& v) {
        Poly<Int> r(2);
        for (const auto& [e, c] : v.terms()) {
            if (e[0] != 0)
                throw domain_error("BadGeneratorSplit",
                                   "V_i must not involve the distinguished variable");
            r.add_term({e[1], e[2]}, c);
        }
        if (r.is_zero()) throw domain_error("BadGeneratorSplit", "zero generator");
        return r;
    };
    MaParts parts;
    parts.q = a / d;
    parts.r = a % d;
    auto build = [&](long j) {
        std::vector<Poly<Int>> gens;
        Poly<Int> fj = f.pow(static_cast<unsigned long>(j));
        for (const auto& v : vhead) gens.push_back(fj * project(v));
        for (const auto& v : vtail) gens.push_back(project(v));
        return gens;
    };
    parts.sq_degrees = syz_degrees_two_primes(w2, build(parts.q), prime1, prime2);
    parts.sq1_degrees = syz_degrees_two_primes(w2, build(parts.q + 1), prime1, prime2);
    return parts;
}

HilbertSeries hs_ma(const RingSpec& spec, long a, const std::vector<Poly<Int>>& vhead,
                    const std::vector<Poly<Int>>& vtail, uint32_t prime1, uint32_t prime2) {
    auto [d, f] = split_relation(spec);
    (void)f;
    MaParts parts = hs_ma_parts(spec, a, vhead, vtail, prime1, prime2);
    long alpha = spec.weights[0];
    HilbertSeries ring = hs_ring(spec);
    auto gensum = [&](const std::vector<long>& degs) {
        std::map<long, Int> s;
        for (long g : degs) s[g] += 1;
        return ring.times(s);
    };
    HilbertSeries ksq = gensum(parts.sq_degrees);
    HilbertSeries ksq1 = gensum(parts.sq1_degrees);
    // ((t^(alpha r) - t^(alpha d)) K_Sq + (1 - t^(alpha r)) K_Sq1) / (1 - t^(alpha d))
    std::map<long, Int> m1{{alpha * parts.r, Int(1)}, {alpha * d, Int(-1)}};
    std::map<long, Int> m2{{0, Int(1)}, {alpha * parts.r, Int(-1)}};
    strip_zeros(m1);
    strip_zeros(m2);
    HilbertSeries numer = ksq.times(m1) + ksq1.times(m2);
    return numer.over(alpha * d);
}

} // namespace hkade
