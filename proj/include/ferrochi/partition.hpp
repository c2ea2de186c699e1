#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ferrochi/intset.hpp"

namespace ferrochi {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is allowed.
class IntegerPartition {
public:
    IntegerPartition() = default;
    IntegerPartition(std::initializer_list<int> xs) : IntegerPartition(std::vector<int>(xs)) {}
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    IntegerPartition conjugate() const;

    std::string to_string() const;

    friend bool operator==(const IntegerPartition& a, const IntegerPartition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const IntegerPartition& a, const IntegerPartition& b) { return !(a == b); }
    friend bool operator<(const IntegerPartition& a, const IntegerPartition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// Weak composition nu = (nu_1, ..., nu_n), nonnegative entries, length >= 1.
class WeakComposition {
public:
    WeakComposition(std::initializer_list<int> xs) : WeakComposition(std::vector<int>(xs)) {}
    explicit WeakComposition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const;

    std::string to_string() const;

    friend bool operator==(const WeakComposition& a, const WeakComposition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
};

// Partition type lambda(V): for each even element of V, the number of smaller
// odd elements of V, sorted decreasingly with zero counts dropped.  Rejects a
// set without even elements.
IntegerPartition partition_type(const PositiveIntSet& v);

// Walks the lower border of the diagram of lambda, labeling east steps with
// the next unused odd integer and north steps with the next even one.  The
// resulting set V satisfies partition_type(V) = lambda, has odd minimum and
// even maximum, and uses the smallest admissible label at every step.
PositiveIntSet v_from_partition(const IntegerPartition& lambda);

// lambda(nu) = (nu_1 + ... + nu_n, ..., nu_1 + nu_2, nu_1); requires nu_1 >= 1.
IntegerPartition lambda_of_composition(const WeakComposition& nu);

// Ferrers graphs are isomorphic exactly when their partitions agree up to
// conjugation.
bool ferrers_isomorphic(const IntegerPartition& a, const IntegerPartition& b);

}  // namespace ferrochi
