#pragma once

// Integer partitions, hooks, rim hooks and multipartitions.
//
// Ordering convention: enumerate_partitions lists partitions in reverse
// lexicographic order, (n) first and (1^n) last. Character tables index
// characters in this order and classes in the opposite (lexicographic)
// order, so that the trivial character and the identity class come first.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace pconst {

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Conjugate (transposed) partition.
    Partition conjugate() const;

    /// Multiplicity of each part size, index k holds m_k (size max part + 1).
    std::vector<int> multiplicities() const;

    /// "[3,1,1]"; the empty partition renders as "∅".
    std::string str() const;

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Parses "[3,1,1]", "3,1,1", "[]" or "∅".
Partition parse_partition(const std::string& text);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// Shape (a, 1^b), or empty.
bool is_hook(const Partition& lambda);

/// Hook length of every cell, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

/// n! / prod(hook lengths).
mpz_class degree_by_hooks(const Partition& lambda);

struct RimHookRemoval {
    Partition remaining;
    int rows_occupied = 0;
    int sign = 1;  // (-1)^(rows_occupied - 1)
};

/// Every removal of a border strip of k cells from lambda, ordered by the
/// topmost row of the strip.
std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int k);

/// z_mu = prod_i i^(m_i) m_i!, the centralizer order in Sym(|mu|).
mpz_class centralizer_order(const Partition& mu);

/// n! / z_mu.
mpz_class class_size(const Partition& mu);

/// lcm of the parts (1 for the empty partition).
unsigned long element_order(const Partition& mu);

mpz_class factorial(unsigned n);

/// Ordered r-tuple of partitions.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const { return components_; }
    std::vector<Partition>& mutable_components() { return components_; }
    const Partition& operator[](std::size_t i) const { return components_[i]; }
    std::size_t size() const { return components_.size(); }
    int weight() const;

    /// "[2,1;∅]".
    std::string str() const;

    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

private:
    std::vector<Partition> components_;
};

/// Parses "[2,1;∅]" (components separated by ';').
MultiPartition parse_multipartition(const std::string& text);

/// All r-multipartitions of total weight n. Component weight vectors run in
/// reverse lexicographic order; within a weight vector the component
/// partitions vary lexicographically in their own order, which is reverse
/// lexicographic (descending) or lexicographic (ascending).
/// With descending = true the first entry is ((n),∅,...), with false it is
/// ((1^n),∅,...).
std::vector<MultiPartition> enumerate_multipartitions(int n, int r, bool descending = true);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

struct MultiPartitionHash {
    std::size_t operator()(const MultiPartition& p) const noexcept;
};

}  // namespace pconst
