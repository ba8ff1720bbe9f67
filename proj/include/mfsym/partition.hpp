#ifndef MFSYM_PARTITION_HPP
#define MFSYM_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

/* Integer partitions as value types.  A partition is a weakly decreasing
 * sequence of positive ints; the empty sequence is the unique partition
 * of 0.  Canonical order on partitions: by weight first, partitions of
 * equal weight in decreasing lexicographic order, so that lists such as
 * partitions_of(4) read (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
 */

namespace mfsym {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            n_ += parts_[i];
        }
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based access; rows past the end read as 0.
    int part(int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // weight ascending, then decreasing lexicographic
    bool operator<(const Partition& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return parts_ > o.parts_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

/* Partition with strictly decreasing parts. */
class DistinctPartition {
public:
    DistinctPartition() = default;

    explicit DistinctPartition(std::vector<int> parts) : p_(std::move(parts)) {
        for (int i = 0; i + 1 < p_.length(); ++i)
            if (p_.part(i) <= p_.part(i + 1))
                throw std::invalid_argument("parts must be strictly decreasing");
    }

    DistinctPartition(std::initializer_list<int> parts)
        : DistinctPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return p_.parts(); }
    int n() const { return p_.n(); }
    int length() const { return p_.length(); }
    int part(int i) const { return p_.part(i); }
    const Partition& as_partition() const { return p_; }

    bool operator==(const DistinctPartition& o) const { return p_ == o.p_; }
    bool operator<(const DistinctPartition& o) const { return p_ < o.p_; }
    std::string to_string() const { return p_.to_string(); }

private:
    Partition p_;
};

/* Syntax "[5,1^4]": comma-separated parts, exponent shorthand accepted.
 * Output is always fully expanded.
 */
inline Partition parse_partition(const std::string& text) {
    std::size_t i = 0, end = text.size();
    while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i >= end || text[i] != '[' || text[end - 1] != ']')
        throw std::invalid_argument("partition must be bracketed, e.g. \"[5,1^4]\": " + text);
    ++i;
    --end;
    std::vector<int> parts;
    auto read_int = [&]() {
        std::size_t start = i;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("expected integer in partition: " + text);
        return std::stoi(text.substr(start, i - start));
    };
    while (i < end) {
        int part = read_int();
        int repeat = 1;
        if (i < end && text[i] == '^') {
            ++i;
            repeat = read_int();
        }
        if (repeat < 0) throw std::invalid_argument("negative exponent in partition");
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
        if (i < end) {
            if (text[i] != ',') throw std::invalid_argument("expected ',' in partition: " + text);
            ++i;
            if (i == end) throw std::invalid_argument("trailing ',' in partition: " + text);
        }
    }
    return Partition(std::move(parts));
}

/* All partitions of n in canonical (decreasing lexicographic) order. */
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(stack));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            stack.push_back(part);
            self(self, remaining - part, part);
            stack.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/* Streaming variant: visit(parts) for each partition of n in canonical
 * order, without materialising the list.  visit may return void or bool;
 * returning false stops the walk.
 */
template <typename F>
inline void for_each_partition(int n, F&& visit) {
    std::vector<int> stack;
    bool stop = false;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (stop) return;
        if (remaining == 0) {
            if constexpr (std::is_same_v<decltype(visit(stack)), bool>) {
                if (!visit(stack)) stop = true;
            } else {
                visit(stack);
            }
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1 && !stop; --part) {
            stack.push_back(part);
            self(self, remaining - part, part);
            stack.pop_back();
        }
    };
    rec(rec, n, n);
}

inline std::vector<DistinctPartition> distinct_partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("distinct_partitions_of: k must be >= 0");
    std::vector<DistinctPartition> out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(DistinctPartition(stack));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            stack.push_back(part);
            self(self, remaining - part, part - 1);
            stack.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

inline Partition conjugate(const Partition& p) {
    std::vector<int> cols(p.empty() ? 0 : static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i) ++cols[static_cast<std::size_t>(i)];
    return Partition(std::move(cols));
}

inline bool is_even(const Partition& p) {
    for (int part : p.parts())
        if (part % 2 != 0) return false;
    return true;
}

inline int odd_part_count(const Partition& p) {
    int count = 0;
    for (int part : p.parts())
        if (part % 2 != 0) ++count;
    return count;
}

// Durfee rank: largest r with p_r >= r.
inline int rank(const Partition& p) {
    int r = 0;
    while (r < p.length() && p.part(r) >= r + 1) ++r;
    return r;
}

/* The partition of 2|alpha| whose leading diagonal hook lengths are
 * 2*alpha_i and whose row i is alpha_i + i for i <= r.  Equivalently the
 * partition with Frobenius coordinates (alpha_i | alpha_i - 1), which is
 * how it is rebuilt here: rows i <= r directly, rows below r from the
 * column lengths alpha_j + j - 1.
 */
inline Partition double_bracket(const DistinctPartition& alpha) {
    if (alpha.length() == 0)
        throw std::invalid_argument("double_bracket: alpha must be nonempty");
    int r = alpha.length();
    std::vector<int> rows;
    for (int i = 0; i < r; ++i) rows.push_back(alpha.part(i) + i + 1);
    for (int i = r + 1; i <= alpha.part(0); ++i) {
        int count = 0;
        for (int j = 0; j < r; ++j)
            if (alpha.part(j) + j >= i) ++count;
        if (count == 0) break;
        rows.push_back(count);
    }
    return Partition(std::move(rows));
}

/* Parity of 2[alpha] read off from alpha alone: a_1, a_3, ... odd with
 * a_{2i} = a_{2i-1} - 1, and a_r = 1 when r is odd.
 */
inline bool double_even_criterion(const DistinctPartition& alpha) {
    if (alpha.length() == 0)
        throw std::invalid_argument("double_even_criterion: alpha must be nonempty");
    int r = alpha.length();
    for (int i = 0; i + 1 < r; i += 2) {
        if (alpha.part(i) % 2 != 1) return false;
        if (alpha.part(i + 1) != alpha.part(i) - 1) return false;
    }
    if (r % 2 == 1 && alpha.part(r - 1) != 1) return false;
    return true;
}

/* Parity of the conjugate of 2[alpha]: a_1, a_3, ... even with
 * a_{2i} = a_{2i-1} - 1, and r even.
 */
inline bool double_conjugate_even_criterion(const DistinctPartition& alpha) {
    if (alpha.length() == 0)
        throw std::invalid_argument("double_conjugate_even_criterion: alpha must be nonempty");
    int r = alpha.length();
    if (r % 2 != 0) return false;
    for (int i = 0; 2 * i + 2 <= r; ++i) {
        if (alpha.part(2 * i) % 2 != 0) return false;
        if (alpha.part(2 * i + 1) != alpha.part(2 * i) - 1) return false;
    }
    return true;
}

/* All partitions of |mu|+m obtained from mu by adding m nodes, no two in
 * the same column.  Built from the interleaving characterisation
 * mu_i <= lambda_i <= mu_{i-1}; node placement is kept as a test oracle.
 */
inline std::vector<Partition> young_additions(const Partition& mu, int m) {
    if (m < 0) throw std::invalid_argument("young_additions: m must be >= 0");
    std::vector<Partition> out;
    int rows = mu.length() + 1;
    std::vector<int> lambda;
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == rows) {
            if (remaining == 0) out.push_back(Partition(lambda));
            return;
        }
        int low = mu.part(i);
        int high = i == 0 ? mu.part(0) + remaining : mu.part(i - 1);
        high = std::min(high, low + remaining);
        for (int v = high; v >= low; --v) {
            if (v == 0) {
                if (remaining == 0) out.push_back(Partition(lambda));
                return;
            }
            lambda.push_back(v);
            self(self, i + 1, remaining - (v - low));
            lambda.pop_back();
        }
    };
    rec(rec, 0, m);
    std::sort(out.begin(), out.end());
    return out;
}

/* Additions with no two nodes in the same row, by conjugate transport. */
inline std::vector<Partition> pieri_additions(const Partition& mu, int m) {
    std::vector<Partition> out;
    for (const Partition& nu : young_additions(conjugate(mu), m))
        out.push_back(conjugate(nu));
    std::sort(out.begin(), out.end());
    return out;
}

// lambda contains mu with lambda/mu a horizontal strip
inline bool horizontal_strip_over(const Partition& lambda, const Partition& mu) {
    if (lambda.n() < mu.n()) return false;
    int rows = std::max(lambda.length(), mu.length() + 1);
    for (int i = 0; i < rows; ++i) {
        if (mu.part(i) > lambda.part(i)) return false;
        if (i > 0 && lambda.part(i) > mu.part(i - 1)) return false;
    }
    return true;
}

inline bool vertical_strip_over(const Partition& lambda, const Partition& mu) {
    return horizontal_strip_over(conjugate(lambda), conjugate(mu));
}

} // namespace mfsym

#endif // MFSYM_PARTITION_HPP
