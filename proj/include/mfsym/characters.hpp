#ifndef MFSYM_CHARACTERS_HPP
#define MFSYM_CHARACTERS_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mfsym/arith.hpp"
#include "mfsym/partition.hpp"

/* Ordinary character theory of S_n in exact arithmetic: border-strip
 * (Murnaghan-Nakayama) evaluation, hook-length degrees, and decomposition
 * of induced characters against weighted class distributions.  All values
 * are arbitrary-precision integers; any inner product that fails to come
 * out integral and non-negative is reported as an error rather than
 * rounded, since that always means the class distribution is wrong.
 */

namespace mfsym {

using CycleType = Partition;

// raised when a class distribution produces a non-integral or negative
// multiplicity
struct DistributionError : std::runtime_error {
    explicit DistributionError(const std::string& msg) : std::runtime_error(msg) {}
};

// centralizer order z(rho) = prod_l l^{m_l} m_l!
inline Integer centralizer_order(const CycleType& rho) {
    Integer z = 1;
    int run = 0;
    for (int i = 0; i < rho.length(); ++i) {
        ++run;
        z *= rho.part(i) * run;
        if (rho.part(i + 1) != rho.part(i)) run = 0;
    }
    return z;
}

inline Integer class_size(const CycleType& rho) {
    return exact_div(factorial(rho.n()), centralizer_order(rho), "class_size");
}

inline int sign_of_class(const CycleType& rho) {
    return (rho.n() - rho.length()) % 2 == 0 ? 1 : -1;
}

inline std::string pack_parts(const std::vector<int>& parts) {
    std::string key;
    key.reserve(parts.size());
    for (int p : parts) key.push_back(static_cast<char>(p));
    return key;
}

/* Border-strip recursion for a fixed cycle type, largest part removed
 * first.  Partitions are handled through their beta-sets (first-column
 * hook lengths): removing a strip of length r replaces a beta number b
 * by b-r, with sign (-1)^h where h counts beta numbers strictly between
 * them.  Sub-results are memoized on (remaining type, partition).
 */
class BorderStripEvaluator {
public:
    explicit BorderStripEvaluator(CycleType rho) : rho_(std::move(rho)) {
        if (rho_.n() > 120)
            throw std::invalid_argument("character values supported for degree <= 120");
    }

    const CycleType& rho() const { return rho_; }

    Integer value(const Partition& lambda) {
        if (lambda.n() != rho_.n())
            throw std::invalid_argument("character_value: |lambda| != |rho|");
        std::vector<int> parts = lambda.parts();
        return eval(parts, 0);
    }

private:
    CycleType rho_;
    std::unordered_map<std::string, Integer> memo_;

    Integer eval(const std::vector<int>& lambda, std::size_t idx) {
        if (idx == static_cast<std::size_t>(rho_.length())) return 1;
        std::string key;
        key.reserve(lambda.size() + 1);
        key.push_back(static_cast<char>(idx));
        for (int p : lambda) key.push_back(static_cast<char>(p));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int r = rho_.part(static_cast<int>(idx));
        int len = static_cast<int>(lambda.size());
        std::vector<int> beta(lambda.size());
        for (int j = 0; j < len; ++j) beta[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] + (len - 1 - j);

        Integer total = 0;
        for (int j = 0; j < len; ++j) {
            int b = beta[static_cast<std::size_t>(j)];
            if (b < r) break; // beta is strictly decreasing
            int target = b - r;
            int height = 0;
            bool occupied = false;
            for (int j2 = j + 1; j2 < len; ++j2) {
                int other = beta[static_cast<std::size_t>(j2)];
                if (other == target) {
                    occupied = true;
                    break;
                }
                if (other > target) ++height;
            }
            if (occupied) continue;

            std::vector<int> nb = beta;
            nb[static_cast<std::size_t>(j)] = target;
            std::sort(nb.begin(), nb.end(), std::greater<int>());
            std::vector<int> sub(nb.size());
            for (int j2 = 0; j2 < len; ++j2) sub[static_cast<std::size_t>(j2)] = nb[static_cast<std::size_t>(j2)] - (len - 1 - j2);
            while (!sub.empty() && sub.back() == 0) sub.pop_back();

            Integer term = eval(sub, idx + 1);
            if (height % 2 != 0)
                total -= term;
            else
                total += term;
        }
        memo_[key] = total;
        return total;
    }
};

/* chi^lambda(rho), memoized per cycle type within a thread. */
inline Integer character_value(const Partition& lambda, const CycleType& rho) {
    thread_local std::unordered_map<std::string, BorderStripEvaluator> engines;
    std::string key = pack_parts(rho.parts());
    key.push_back(static_cast<char>(rho.n()));
    auto it = engines.find(key);
    if (it == engines.end()) it = engines.emplace(key, BorderStripEvaluator(rho)).first;
    return it->second.value(lambda);
}

// chi^lambda(1) by the hook length formula
inline Integer degree(const Partition& lambda) {
    Integer hooks = 1;
    Partition conj = conjugate(lambda);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
    return exact_div(factorial(lambda.n()), hooks, "degree");
}

// t_n, the number of elements of S_n of order at most 2
inline Integer involution_count(int n) {
    if (n < 0) throw std::invalid_argument("involution_count: n must be >= 0");
    Integer prev2 = 1, prev1 = 1; // t_0, t_1
    if (n <= 1) return 1;
    Integer cur = 0;
    for (int i = 2; i <= n; ++i) {
        cur = prev1 + (i - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

/* Canonical list of the partitions of n with index lookup. */
class PartitionIndexer {
public:
    explicit PartitionIndexer(int n) : n_(n), list_(partitions_of(n)) {
        for (std::size_t i = 0; i < list_.size(); ++i)
            index_[pack_parts(list_[i].parts())] = static_cast<int>(i);
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(list_.size()); }
    const Partition& at(int i) const { return list_[static_cast<std::size_t>(i)]; }
    const std::vector<Partition>& list() const { return list_; }

    int index_of(const Partition& p) const {
        auto it = index_.find(pack_parts(p.parts()));
        if (it == index_.end())
            throw std::invalid_argument("partition is not a partition of " + std::to_string(n_));
        return it->second;
    }

private:
    int n_;
    std::vector<Partition> list_;
    std::unordered_map<std::string, int> index_;
};

// column of the character table: chi^lambda(rho) for every lambda of n
inline std::vector<Integer> character_column(const CycleType& rho, const PartitionIndexer& indexer) {
    BorderStripEvaluator engine(rho);
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(indexer.size()));
    for (const Partition& lambda : indexer.list()) out.push_back(engine.value(lambda));
    return out;
}

/* A character of S_n written in the irreducible basis; only nonzero
 * multiplicities are stored.
 */
class IrrDecomposition {
public:
    explicit IrrDecomposition(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("IrrDecomposition: n must be >= 0");
    }

    int n() const { return n_; }
    const std::map<Partition, Integer>& terms() const { return mult_; }
    bool empty() const { return mult_.empty(); }

    void add(const Partition& lambda, const Integer& c = 1) {
        if (lambda.n() != n_)
            throw std::invalid_argument("IrrDecomposition: partition of wrong weight");
        Integer& slot = mult_[lambda];
        slot += c;
        if (slot == 0) mult_.erase(lambda);
    }

    void add_all(const IrrDecomposition& other, const Integer& scale = 1) {
        if (other.n_ != n_)
            throw std::invalid_argument("IrrDecomposition: degree mismatch in add_all");
        for (const auto& [lambda, c] : other.mult_) add(lambda, c * scale);
    }

    Integer mult(const Partition& lambda) const {
        auto it = mult_.find(lambda);
        return it == mult_.end() ? Integer(0) : it->second;
    }

    Integer total_degree() const {
        Integer sum = 0;
        for (const auto& [lambda, c] : mult_) sum += c * degree(lambda);
        return sum;
    }

    bool operator==(const IrrDecomposition& o) const {
        return n_ == o.n_ && mult_ == o.mult_;
    }

private:
    int n_;
    std::map<Partition, Integer> mult_;
};

struct MultiplicityViolation {
    Partition lambda;
    Integer mult;
};

struct MultiplicityCheck {
    bool multiplicity_free = true;
    std::vector<MultiplicityViolation> violations;
};

inline MultiplicityCheck is_multiplicity_free(const IrrDecomposition& d) {
    MultiplicityCheck out;
    for (const auto& [lambda, c] : d.terms()) {
        if (c > 1) {
            out.multiplicity_free = false;
            out.violations.push_back({lambda, c});
        }
    }
    return out;
}

// multiply by the sign character: chi^lambda -> chi^lambda'
inline IrrDecomposition sign_twist(const IrrDecomposition& d) {
    IrrDecomposition out(d.n());
    for (const auto& [lambda, c] : d.terms()) out.add(conjugate(lambda), c);
    return out;
}

// (chi^mu x triv) induced from S_k x S_{n-k}
inline IrrDecomposition young_induce(const IrrDecomposition& d, int n) {
    if (n < d.n()) throw std::invalid_argument("young_induce: n must be >= current degree");
    IrrDecomposition out(n);
    for (const auto& [mu, c] : d.terms())
        for (const Partition& lambda : young_additions(mu, n - d.n()))
            out.add(lambda, c);
    return out;
}

// (chi^mu x sgn) induced from S_k x S_{n-k}
inline IrrDecomposition pieri_induce(const IrrDecomposition& d, int n) {
    if (n < d.n()) throw std::invalid_argument("pieri_induce: n must be >= current degree");
    IrrDecomposition out(n);
    for (const auto& [mu, c] : d.terms())
        for (const Partition& lambda : pieri_additions(mu, n - d.n()))
            out.add(lambda, c);
    return out;
}

// one-node induction to S_{n+1}
inline IrrDecomposition branch_induce(const IrrDecomposition& d) {
    return young_induce(d, d.n() + 1);
}

/* Element counts of a subgroup of S_n grouped by embedded cycle type,
 * optionally weighted by a +-1-valued linear character.  Enough data to
 * form inner products with S_n-characters.
 */
struct SignedClassDistribution {
    int n = 0;
    Integer order = 1;
    std::map<CycleType, Integer> weights;

    void add_weight(const CycleType& rho, const Integer& w) {
        if (rho.n() != n)
            throw std::invalid_argument("class distribution: cycle type of wrong degree");
        if (w == 0) return;
        Integer& slot = weights[rho];
        slot += w;
        if (slot == 0) weights.erase(rho);
    }

    Integer total_weight() const {
        Integer sum = 0;
        for (const auto& [rho, w] : weights) sum += w;
        return sum;
    }

    Integer total_abs_weight() const {
        Integer sum = 0;
        for (const auto& [rho, w] : weights) sum += abs(w);
        return sum;
    }

    bool operator==(const SignedClassDistribution& o) const {
        return n == o.n && order == o.order && weights == o.weights;
    }
};

/* Shared character-table columns for one symmetric group; lets a long
 * verification run pay for each column once across many decompositions.
 */
class ColumnCache {
public:
    explicit ColumnCache(int n) : indexer_(n) {}

    const PartitionIndexer& indexer() const { return indexer_; }

    const std::vector<Integer>& column(const CycleType& rho) {
        auto it = columns_.find(rho);
        if (it == columns_.end())
            it = columns_.emplace(rho, character_column(rho, indexer_)).first;
        return it->second;
    }

private:
    PartitionIndexer indexer_;
    std::map<CycleType, std::vector<Integer>> columns_;
};

/* Frobenius-reciprocity decomposition of the character induced from the
 * distribution: <theta up, chi^lambda> = (1/|G|) sum_rho w(rho) chi^lambda(rho).
 */
inline IrrDecomposition decompose(const SignedClassDistribution& dist, ColumnCache* cache = nullptr) {
    std::unique_ptr<ColumnCache> local;
    if (cache == nullptr) {
        local = std::make_unique<ColumnCache>(dist.n);
        cache = local.get();
    } else if (cache->indexer().n() != dist.n) {
        throw std::invalid_argument("decompose: column cache built for a different degree");
    }
    const PartitionIndexer& indexer = cache->indexer();
    std::vector<Integer> acc(static_cast<std::size_t>(indexer.size()), Integer(0));
    for (const auto& [rho, w] : dist.weights) {
        const std::vector<Integer>& col = cache->column(rho);
        for (int i = 0; i < indexer.size(); ++i) acc[static_cast<std::size_t>(i)] += w * col[static_cast<std::size_t>(i)];
    }
    IrrDecomposition out(dist.n);
    for (int i = 0; i < indexer.size(); ++i) {
        const Integer& num = acc[static_cast<std::size_t>(i)];
        Integer q = num / dist.order;
        if (q * dist.order != num)
            throw DistributionError("non-integral multiplicity at " + indexer.at(i).to_string() +
                                    ": malformed class distribution");
        if (q < 0)
            throw DistributionError("negative multiplicity at " + indexer.at(i).to_string() +
                                    ": inconsistent twist");
        if (q != 0) out.add(indexer.at(i), q);
    }
    return out;
}

} // namespace mfsym

#endif // MFSYM_CHARACTERS_HPP
