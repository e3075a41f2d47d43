#include "jm/partition.hpp"

#include <algorithm>

#include "jm/errors.hpp"

namespace jm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive: " + str());
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing: " + str());
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::with_part(int k) const {
    if (k < 1) throw DomainError("cannot add a non-positive part");
    Partition out;
    out.parts_ = parts_;
    auto it = std::upper_bound(out.parts_.begin(), out.parts_.end(), k, std::greater<int>());
    out.parts_.insert(it, k);
    return out;
}

Partition Partition::without_part(int k) const {
    Partition out;
    out.parts_ = parts_;
    auto it = std::find(out.parts_.begin(), out.parts_.end(), k);
    if (it == out.parts_.end()) throw DomainError("part " + std::to_string(k) + " not present in " + str());
    out.parts_.erase(it);
    return out;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Partition transpose(const Partition& lambda) {
    std::vector<int> t;
    int first = lambda.part(1);
    for (int j = 1; j <= first; ++j) {
        int count = 0;
        for (int p : lambda.parts()) {
            if (p >= j) ++count;
        }
        t.push_back(count);
    }
    return Partition(std::move(t));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        generate(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of_size(int d) {
    if (d < 0) throw DomainError("partition size must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(d, d, prefix, out);
    return out;
}

std::int64_t partition_count(int d) {
    if (d < 0) return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= d; ++n) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[n - g1];
            if (g2 <= n) total += sign * p[n - g2];
        }
        p[n] = total;
    }
    return p[d];
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> addable_cells(const Partition& lambda) {
    std::vector<std::pair<int, int>> cells;
    int rows = lambda.length();
    for (int i = 1; i <= rows + 1; ++i) {
        int col = lambda.part(i) + 1;
        if (i == 1 || lambda.part(i - 1) >= col) cells.emplace_back(i, col);
    }
    return cells;
}

std::vector<std::pair<int, int>> removable_cells(const Partition& lambda) {
    std::vector<std::pair<int, int>> cells;
    int rows = lambda.length();
    for (int i = 1; i <= rows; ++i) {
        if (lambda.part(i) > lambda.part(i + 1)) cells.emplace_back(i, lambda.part(i));
    }
    return cells;
}

Partition partition_from_multiset(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace jm
