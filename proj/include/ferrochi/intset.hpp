#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ferrochi/errors.hpp"

namespace ferrochi {

// Finite set of distinct positive integers, stored strictly increasing.  The
// universal index object for graphs, permutations and staircases; parity
// accessors split it into its odd and even parts.
class PositiveIntSet {
public:
    PositiveIntSet() = default;
    PositiveIntSet(std::initializer_list<int> xs) : PositiveIntSet(std::vector<int>(xs)) {}
    explicit PositiveIntSet(std::vector<int> elements);

    static PositiveIntSet interval(int n);  // {1, ..., n}

    const std::vector<int>& elements() const { return elems_; }
    bool empty() const { return elems_.empty(); }
    int size() const { return static_cast<int>(elems_.size()); }
    int min() const;
    int max() const;
    bool contains(int v) const;

    std::vector<int> odd_part() const;
    std::vector<int> even_part() const;

    PositiveIntSet united_with(const PositiveIntSet& other) const;

    // The set with its top row removed: drops the maximum (which must be
    // even) together with every odd element above the second-largest even
    // element.  With a single even element the result is empty.
    PositiveIntSet top_row_removed() const;

    std::string to_string() const;

    friend bool operator==(const PositiveIntSet& a, const PositiveIntSet& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const PositiveIntSet& a, const PositiveIntSet& b) { return !(a == b); }
    friend bool operator<(const PositiveIntSet& a, const PositiveIntSet& b) { return a.elems_ < b.elems_; }

private:
    std::vector<int> elems_;
};

}  // namespace ferrochi
