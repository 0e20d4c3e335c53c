#include "multdisc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace multdisc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(Errc::parse_error, "empty partition");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) fail(Errc::parse_error, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) fail(Errc::parse_error, "partition parts must be non-increasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string digits;
    auto flush = [&] {
        if (digits.empty()) fail(Errc::parse_error, "malformed partition '" + std::string(text) + "'");
        if (digits.size() > 6) fail(Errc::parse_error, "partition part too large");
        parts.push_back(std::stoi(digits));
        digits.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            digits += c;
        } else if (c == ',') {
            flush();
        } else if (c != '[' && c != ']' && c != '(' && c != ')' && std::isspace(static_cast<unsigned char>(c)) == 0) {
            fail(Errc::parse_error, "malformed partition '" + std::string(text) + "'");
        }
    }
    flush();
    return Partition(std::move(parts));
}

int Partition::total() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::bracketed() const { return "[" + to_string() + "]"; }

namespace {

void partitions_rec(int remaining, int slots, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (slots == 0) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    // Leave at least one for each later slot.
    for (int part = std::min(cap, remaining - (slots - 1)); part >= 1; --part) {
        if (part * slots < remaining) break;
        prefix.push_back(part);
        partitions_rec(remaining - part, slots - 1, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n, int m) {
    if (m < 1 || m > n) fail(Errc::empty_domain, "no partitions of " + std::to_string(n) + " into " + std::to_string(m) + " parts");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, m, n, prefix, out);
    return out;
}

ExpandedTuple expand_partition(const Partition& mu) {
    ExpandedTuple p;
    for (int part : mu.parts()) p.insert(p.end(), static_cast<std::size_t>(part), part);
    return p;
}

Integer repetition_constant(const ExpandedTuple& p) {
    std::map<int, unsigned> occurrences;
    for (int v : p) ++occurrences[v];
    Integer c(1);
    for (const auto& [v, q] : occurrences) c *= factorial(q);
    return c;
}

std::uint64_t multiset_permutation_count(const ExpandedTuple& p) {
    if (p.size() > 20) fail(Errc::dimension_too_large, "tuples longer than 20 are not enumerable");
    return factorial(static_cast<unsigned>(p.size())).get_ui() / repetition_constant(p).get_ui();
}

namespace {

std::uint64_t arrangements(const std::vector<int>& counts) {
    unsigned total = 0;
    Integer denom(1);
    for (int c : counts) {
        total += static_cast<unsigned>(c);
        denom *= factorial(static_cast<unsigned>(c));
    }
    return Integer(factorial(total) / denom).get_ui();
}

}  // namespace

MultisetPermutations::MultisetPermutations(ExpandedTuple p) {
    std::map<int, int, std::greater<>> occurrences;
    for (int v : p) ++occurrences[v];
    for (const auto& [v, q] : occurrences) {
        values_.push_back(v);
        counts_.push_back(q);
    }
    count_ = multiset_permutation_count(p);
}

ExpandedTuple MultisetPermutations::unrank(std::uint64_t rank) const {
    if (rank >= count_) fail(Errc::precondition, "rank out of range");
    std::vector<int> counts = counts_;
    std::size_t length = 0;
    for (int c : counts) length += static_cast<std::size_t>(c);
    ExpandedTuple out;
    out.reserve(length);
    for (std::size_t pos = 0; pos < length; ++pos) {
        for (std::size_t v = 0; v < values_.size(); ++v) {
            if (counts[v] == 0) continue;
            --counts[v];
            const std::uint64_t block = arrangements(counts);
            if (rank < block) {
                out.push_back(values_[v]);
                break;
            }
            rank -= block;
            ++counts[v];
        }
    }
    return out;
}

std::uint64_t MultisetPermutations::rank(const ExpandedTuple& t) const {
    std::vector<int> counts = counts_;
    std::uint64_t r = 0;
    for (int entry : t) {
        std::size_t v = 0;
        for (; v < values_.size(); ++v) {
            if (values_[v] == entry) break;
            if (counts[v] == 0) continue;
            --counts[v];
            r += arrangements(counts);
            ++counts[v];
        }
        if (v == values_.size() || counts[v] == 0) fail(Errc::precondition, "tuple is not a rearrangement");
        --counts[v];
    }
    return r;
}

MultisetPermutations::Cursor MultisetPermutations::stream(std::uint64_t begin, std::uint64_t end) const {
    end = std::min(end, count_);
    if (begin >= end) return Cursor({}, 0);
    return Cursor(unrank(begin), end - begin);
}

bool MultisetPermutations::Cursor::next(ExpandedTuple& out) {
    if (remaining_ == 0) return false;
    if (started_) std::prev_permutation(current_.begin(), current_.end());
    started_ = true;
    --remaining_;
    out = current_;
    return true;
}

}  // namespace multdisc
