#include "ferrochi/intset.hpp"

#include <algorithm>
#include <sstream>

namespace ferrochi {

PositiveIntSet::PositiveIntSet(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] <= 0) throw DomainError("set elements must be positive");
        if (i > 0 && elems_[i] == elems_[i - 1]) throw DomainError("set elements must be distinct");
    }
}

PositiveIntSet PositiveIntSet::interval(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return PositiveIntSet(std::move(v));
}

int PositiveIntSet::min() const {
    if (elems_.empty()) throw DomainError("min of empty set");
    return elems_.front();
}

int PositiveIntSet::max() const {
    if (elems_.empty()) throw DomainError("max of empty set");
    return elems_.back();
}

bool PositiveIntSet::contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::vector<int> PositiveIntSet::odd_part() const {
    std::vector<int> out;
    for (int v : elems_)
        if (v % 2 == 1) out.push_back(v);
    return out;
}

std::vector<int> PositiveIntSet::even_part() const {
    std::vector<int> out;
    for (int v : elems_)
        if (v % 2 == 0) out.push_back(v);
    return out;
}

PositiveIntSet PositiveIntSet::united_with(const PositiveIntSet& other) const {
    std::vector<int> merged;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(merged));
    return PositiveIntSet(std::move(merged));
}

PositiveIntSet PositiveIntSet::top_row_removed() const {
    if (empty() || max() % 2 != 0) throw DomainError("top row removal requires an even maximum");
    const auto evens = even_part();
    if (evens.size() == 1) return PositiveIntSet{};
    const int second = evens[evens.size() - 2];
    std::vector<int> kept;
    for (int v : elems_) {
        if (v == max()) continue;
        if (v % 2 == 1 && v > second) continue;
        kept.push_back(v);
    }
    return PositiveIntSet(std::move(kept));
}

std::string PositiveIntSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

}  // namespace ferrochi
