#include "indexforge/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace indexforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::merged(const Partition& other) const
{
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::to_string() const
{
    if (parts_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            out += '+';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text)
{
    if (text == "0" || text.empty()) {
        return Partition();
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t plus = std::min(text.find('+', pos), text.size());
        const std::string_view item = text.substr(pos, plus - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size() || value <= 0) {
            throw std::invalid_argument("malformed partition key '" + std::string(text) + "'");
        }
        parts.push_back(value);
        pos = plus + 1;
    }
    Partition p(std::move(parts));
    if (p.to_string() != text) {
        throw std::invalid_argument("partition key '" + std::string(text) +
                                    "' is not in non-increasing form");
    }
    return p;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int k)
{
    if (k < 0) {
        throw std::invalid_argument("partitions of a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate(k, k, current, out);
    return out;
}

bool canonical_before(const Partition& a, const Partition& b)
{
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                        b.parts().end(), std::greater<>());
}

std::size_t canonical_index(const Partition& p)
{
    const auto all = partitions(p.weight());
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), p) - all.begin());
}

}  // namespace indexforge
