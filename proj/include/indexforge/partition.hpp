#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace indexforge {

/// Integer partition, parts stored non-increasing. The empty partition has weight 0.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws std::invalid_argument on a non-positive part.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Multiset union; weights add.
    Partition merged(const Partition& other) const;

    /// "2+1+1"; the empty partition prints as "0".
    std::string to_string() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Storage order for associative containers (not the canonical display order).
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions of k in lexicographic descending order: {k}, {k-1,1}, ..., {1,...,1}.
std::vector<Partition> partitions(int k);

/// Canonical display order: lexicographic descending on the parts.
bool canonical_before(const Partition& a, const Partition& b);

/// Index of `p` inside partitions(p.weight()).
std::size_t canonical_index(const Partition& p);

}  // namespace indexforge
