#include "ferrochi/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ferrochi {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

IntegerPartition IntegerPartition::conjugate() const {
    std::vector<int> conj;
    for (int col = 1; col <= largest(); ++col) {
        int count = 0;
        for (int p : parts_)
            if (p >= col) ++count;
        conj.push_back(count);
    }
    return IntegerPartition(std::move(conj));
}

std::string IntegerPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("composition must have length >= 1");
    for (int p : parts_)
        if (p < 0) throw DomainError("composition entries must be nonnegative");
}

int WeakComposition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string WeakComposition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

IntegerPartition partition_type(const PositiveIntSet& v) {
    if (v.empty()) throw DomainError("partition type of empty set");
    const auto odds = v.odd_part();
    const auto evens = v.even_part();
    if (evens.empty()) throw DomainError("partition type requires an even element");
    std::vector<int> parts;
    for (auto it = evens.rbegin(); it != evens.rend(); ++it) {
        const int count = static_cast<int>(
            std::lower_bound(odds.begin(), odds.end(), *it) - odds.begin());
        if (count > 0) parts.push_back(count);
    }
    return IntegerPartition(std::move(parts));
}

PositiveIntSet v_from_partition(const IntegerPartition& lambda) {
    if (lambda.empty()) throw DomainError("walk requires a nonempty partition");
    // Row widths from the bottom of the diagram up, i.e. parts reversed.
    std::vector<int> widths(lambda.parts().rbegin(), lambda.parts().rend());
    std::vector<int> v;
    int next = 0;  // last label used
    int reached = 0;
    for (int w : widths) {
        for (int e = reached; e < w; ++e) {
            next += (next % 2 == 0) ? 1 : 2;  // smallest odd above next
            v.push_back(next);
        }
        reached = w;
        next += (next % 2 == 1) ? 1 : 2;  // smallest even above next
        v.push_back(next);
    }
    return PositiveIntSet(std::move(v));
}

IntegerPartition lambda_of_composition(const WeakComposition& nu) {
    if (nu.parts().front() < 1) throw DomainError("composition must have nu_1 >= 1");
    std::vector<int> parts;
    int acc = 0;
    for (int p : nu.parts()) {
        acc += p;
        parts.push_back(acc);
    }
    std::reverse(parts.begin(), parts.end());
    return IntegerPartition(std::move(parts));
}

bool ferrers_isomorphic(const IntegerPartition& a, const IntegerPartition& b) {
    return a == b || a == b.conjugate();
}

}  // namespace ferrochi
