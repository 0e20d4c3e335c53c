#pragma once

// Integer partitions, the expanded tuple p of a partition, and streaming
// enumeration of the distinct rearrangements of p.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "multdisc/scalar.hpp"

namespace multdisc {

/// Non-increasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws ParseError unless the parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    /// "4,2,2" (brackets and spaces are tolerated).
    static Partition parse(std::string_view text);

    std::size_t size() const { return parts_.size(); }
    int total() const;
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const { return parts_.front(); }
    int smallest() const { return parts_.back(); }
    const std::vector<int>& parts() const { return parts_; }

    std::string to_string() const;   // 4,2,2
    std::string bracketed() const;   // [4,2,2]

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions of n into exactly m parts, descending lexicographic order.
/// Throws EmptyDomain unless 1 <= m <= n.
std::vector<Partition> partitions(int n, int m);

/// Each part mu_i repeated mu_i times, in the order of the partition.
using ExpandedTuple = std::vector<int>;

ExpandedTuple expand_partition(const Partition& mu);

/// Product of the factorials of the occurrence counts of the distinct entries.
Integer repetition_constant(const ExpandedTuple& p);

/// Number of distinct rearrangements, n! / prod q_i!. Requires length <= 20.
std::uint64_t multiset_permutation_count(const ExpandedTuple& p);

/// Distinct rearrangements of a tuple in descending lexicographic order,
/// addressable by rank so that index ranges can be split across workers.
class MultisetPermutations {
public:
    explicit MultisetPermutations(ExpandedTuple p);

    std::uint64_t count() const { return count_; }
    /// The rearrangement with the given rank (0 = entries sorted descending).
    ExpandedTuple unrank(std::uint64_t rank) const;
    /// Rank of a rearrangement of the same multiset.
    std::uint64_t rank(const ExpandedTuple& t) const;

    /// Single-consumer stream over ranks [begin, end).
    class Cursor {
    public:
        bool next(ExpandedTuple& out);

    private:
        friend class MultisetPermutations;
        Cursor(ExpandedTuple start, std::uint64_t remaining) : current_(std::move(start)), remaining_(remaining) {}
        ExpandedTuple current_;
        std::uint64_t remaining_;
        bool started_ = false;
    };

    Cursor stream() const { return stream(0, count_); }
    Cursor stream(std::uint64_t begin, std::uint64_t end) const;

private:
    std::vector<int> values_;   // distinct entries, descending
    std::vector<int> counts_;   // occurrences of each distinct entry
    std::uint64_t count_ = 0;
};

}  // namespace multdisc
