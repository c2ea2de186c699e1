#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ferrochi/bigint.hpp"
#include "ferrochi/intset.hpp"
#include "ferrochi/partition.hpp"
#include "ferrochi/poly.hpp"
#include "ferrochi/poset.hpp"

namespace ferrochi {

inline constexpr int kDefaultDPermBound = 12;

// Permutation of a finite set V with sigma(i) >= i on odd i and
// sigma(i) <= i on even i, stored in canonical cycle form: each cycle is
// written starting from its largest element, and cycles are sorted by their
// largest elements.
class DPermutation {
public:
    DPermutation(const PositiveIntSet& v, const std::map<int, int>& image);

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    int cycle_count() const { return static_cast<int>(cycles_.size()); }
    int size() const;
    int image(int i) const;

    // Cycles of length one on an even element.
    int even_fixed_point_count() const;

    // The cycles as a set partition over positions 0..|V|-1 of the listed
    // element order, for Moebius cross-checks.
    SetPartition cycle_partition(const PositiveIntSet& v) const;

    std::string to_string() const;

    friend bool operator==(const DPermutation& a, const DPermutation& b) { return a.cycles_ == b.cycles_; }
    friend bool operator<(const DPermutation& a, const DPermutation& b) { return a.cycles_ < b.cycles_; }

private:
    std::vector<std::vector<int>> cycles_;
};

// All D-permutations of V in canonical order.  Backtracks over images with
// the excedence/anti-excedence constraint applied at assignment time.
std::vector<DPermutation> enumerate_dperms(const PositiveIntSet& v, int bound = kDefaultDPermBound);

// Characteristic polynomial of the bond lattice of the graph on V whose
// edges are {odd, even} with odd < even, read off cycle counts:
//   chi(t) = (-1)^|V| * sum_sigma (-1)^(cyc sigma) t^(cyc sigma - 1).
// The global sign makes the leading coefficient +1.
UniPoly char_poly_via_dperms(const PositiveIntSet& v, int bound = kDefaultDPermBound);

// Chromatic polynomial of the same graph: (-1)^|V| * sum_sigma (-t)^(cyc sigma).
UniPoly chromatic_via_dperms(const PositiveIntSet& v, int bound = kDefaultDPermBound);

// Joint distribution of (even fixed points, remaining cycles) over all
// D-permutations of V.
std::map<std::pair<int, int>, BigInt> dperm_cycle_statistics(const PositiveIntSet& v,
                                                             int bound = kDefaultDPermBound);

// D-permutation on V inside the ambient range [2r], with labels in
// {0, ..., q-1} on a subset of its entries.  Per cycle the labeling rules
// are:
//   - the largest entry of the cycle is labeled 0;
//   - in the cycle containing 2r, written as (w . 2r), exactly the
//     right-to-left minima of the word w stay unlabeled and every other
//     entry of w is labeled freely;
//   - in a cycle avoiding 2r every entry is labeled (maximum by 0, the
//     rest freely).
// The word w lists the cycle starting right after 2r and stopping just
// before it.  Worked example with 2r = 4: the cycle sending 1 -> 4 -> 2 -> 1
// is written (2 1 . 4), so w = 21; the right-to-left minimum of w is 1,
// hence 1 is unlabeled, 4 is labeled 0, and 2 takes any of the q labels.
class QLabeledDPermutation {
public:
    QLabeledDPermutation(DPermutation perm, int two_r, std::map<int, int> labels);

    const DPermutation& permutation() const { return perm_; }
    int ambient_even_bound() const { return two_r_; }
    const std::map<int, int>& labels() const { return labels_; }
    std::optional<int> label_of(int entry) const;
    int cycle_count() const { return perm_.cycle_count(); }

    friend bool operator<(const QLabeledDPermutation& a, const QLabeledDPermutation& b) {
        if (a.perm_ < b.perm_) return true;
        if (b.perm_ < a.perm_) return false;
        return a.labels_ < b.labels_;
    }

private:
    DPermutation perm_;
    int two_r_;
    std::map<int, int> labels_;
};

std::vector<QLabeledDPermutation> enumerate_qlabeled_dperms(const PositiveIntSet& v, int r, int q,
                                                            int bound = kDefaultDPermBound);

// Forest on V whose edges join an odd element to a larger even element, each
// component passing the increasing-decreasing test when rooted at its largest
// vertex: odd internal vertices lie below all their descendants and have only
// even children, even internal vertices lie above all their descendants and
// have only odd children.  Edges not incident to 2r carry a label in
// {0, ..., q-1}.
struct IDForest {
    std::vector<std::pair<int, int>> edges;     // (odd, even), sorted
    std::map<std::pair<int, int>, int> labels;  // labeled edges only
    int component_count = 0;

    friend bool operator<(const IDForest& a, const IDForest& b) {
        if (a.edges != b.edges) return a.edges < b.edges;
        return a.labels < b.labels;
    }
};

std::vector<IDForest> enumerate_qlabeled_id_forests(const PositiveIntSet& v, int r, int q,
                                                    int bound = kDefaultDPermBound);

// Characteristic polynomial of the composition's Dowling-type arrangement of
// order q, by enumerating q-labeled D-permutations on the canonical vertex
// set of lambda(nu):
//   chi(t) = (-1)^|V| * sum (-1)^(cyc) t^(cyc - 1)  over labeled permutations.
UniPoly dowling_char_via_enumeration(const WeakComposition& nu, int q, int bound = kDefaultDPermBound);

// Canonical V for a composition: the border walk of lambda(nu).
PositiveIntSet canonical_v_of_composition(const WeakComposition& nu);

}  // namespace ferrochi
