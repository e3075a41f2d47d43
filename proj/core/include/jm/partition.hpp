#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace jm {

// Weakly decreasing sequence of positive parts. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates ordering and positivity
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    // Part i (1-based) with the convention λ_i = 0 beyond the length.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    // Number of parts equal to k.
    int multiplicity(int k) const;

    Partition with_part(int k) const;     // adds a part k ≥ 1
    Partition without_part(int k) const;  // removes one part k (must be present)

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
    // Lexicographic order on part sequences.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

Partition transpose(const Partition& lambda);

// All partitions of d in reverse lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of_size(int d);

// Partition function p(d) from Euler's pentagonal-number recurrence.
std::int64_t partition_count(int d);

// True when a dominates b (equal sizes required).
bool dominates(const Partition& a, const Partition& b);

// Cells (row, col), 1-based, that can be added or removed keeping a partition.
std::vector<std::pair<int, int>> addable_cells(const Partition& lambda);
std::vector<std::pair<int, int>> removable_cells(const Partition& lambda);

// Multiset of parts -> partition (sorts decreasingly, drops zeros).
Partition partition_from_multiset(std::vector<int> parts);

}  // namespace jm
