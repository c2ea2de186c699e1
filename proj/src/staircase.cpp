#include "ferrochi/staircase.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ferrochi/dperm.hpp"

namespace ferrochi {

StaircaseSet::StaircaseSet(PositiveIntSet s) : s_(std::move(s)) {
    if (s_.empty()) throw DomainError("staircase set must be nonempty");
    if (s_.max() % 2 != 0) throw DomainError("staircase set must have an even maximum");
}

PositiveIntSet StaircaseSet::s_double_prime() const {
    const PositiveIntSet p = s_prime();
    if (p.empty()) return p;
    return p.top_row_removed();
}

int StaircaseSet::ell_recurrence() const {
    const PositiveIntSet p = s_prime();
    if (p.empty()) return 0;
    const PositiveIntSet pp = p.top_row_removed();
    int count = 0;
    for (int e : p.elements())
        if (e % 2 == 1 && !pp.contains(e)) ++count;
    return count;
}

int StaircaseSet::ell_top() const {
    const auto evens = s_.even_part();
    if (evens.size() == 1) return static_cast<int>(s_.odd_part().size());
    const int second = evens[evens.size() - 2];
    int count = 0;
    for (int e : s_.elements())
        if (e % 2 == 1 && e > second) ++count;
    return count;
}

SurjectiveStaircase::SurjectiveStaircase(PositiveIntSet domain, std::vector<int> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.elements().size()) throw DomainError("staircase value count mismatch");
    const auto evens = domain_.even_part();
    std::set<int> image;
    for (size_t i = 0; i < values_.size(); ++i) {
        const int a = domain_.elements()[i], fa = values_[i];
        if (fa < a) throw DomainError("staircase map must be excedent");
        if (fa % 2 != 0 || !domain_.contains(fa)) throw DomainError("staircase values must be even elements");
        image.insert(fa);
    }
    if (image.size() != evens.size()) throw DomainError("staircase map must be surjective onto the evens");
}

int SurjectiveStaircase::value_at(int element) const {
    const auto& es = domain_.elements();
    const auto it = std::lower_bound(es.begin(), es.end(), element);
    if (it == es.end() || *it != element) throw DomainError("element not in staircase domain");
    return values_[static_cast<size_t>(it - es.begin())];
}

std::string SurjectiveStaircase::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ' ';
        os << domain_.elements()[i] << "->" << values_[i];
    }
    os << ']';
    return os.str();
}

SixVarPoly StaircaseStats::weight() const {
    return SixVarPoly::monomial({mo, fd, si, me, fi, sd}, 1);
}

namespace {

void staircase_backtrack(const std::vector<int>& elems, const std::vector<int>& evens, size_t pos,
                         std::vector<int>& values, std::vector<int>& hit, int missing,
                         const PositiveIntSet& domain, std::vector<SurjectiveStaircase>& out) {
    const size_t remaining = elems.size() - pos;
    if (static_cast<size_t>(missing) > remaining) return;  // surjectivity unreachable
    if (pos == elems.size()) {
        out.emplace_back(domain, values);
        return;
    }
    const int a = elems[pos];
    for (size_t j = 0; j < evens.size(); ++j) {
        if (evens[j] < a) continue;
        values[pos] = evens[j];
        const bool first = hit[j] == 0;
        ++hit[j];
        staircase_backtrack(elems, evens, pos + 1, values, hit, missing - (first ? 1 : 0), domain, out);
        --hit[j];
    }
}

}  // namespace

std::vector<SurjectiveStaircase> enumerate_staircases(const StaircaseSet& s, int bound) {
    const PositiveIntSet& dom = s.set();
    if (dom.size() > bound)
        throw BoundError("staircase enumeration limited to " + std::to_string(bound) + " elements");
    const auto evens = dom.even_part();
    std::vector<int> values(dom.elements().size(), 0), hit(evens.size(), 0);
    std::vector<SurjectiveStaircase> out;
    staircase_backtrack(dom.elements(), evens, 0, values, hit, static_cast<int>(evens.size()), dom, out);
    std::sort(out.begin(), out.end());
    return out;
}

StaircaseStats staircase_stats(const SurjectiveStaircase& f) {
    const PositiveIntSet& s = f.domain();
    const StaircaseSet dom(s);
    const PositiveIntSet sp = dom.s_prime();
    const int top = s.max();
    const auto evens = s.even_part();

    // Preimage multiplicities over the whole domain.
    std::map<int, int> preimage_count;
    for (int val : f.values()) ++preimage_count[val];

    StaircaseStats st;
    for (int a : sp.elements()) {
        const int fa = f.value_at(a);
        if (a % 2 == 1) {
            if (fa == top) {
                ++st.mo;
                continue;
            }
            const auto it = std::upper_bound(evens.begin(), evens.end(), a);
            if (it != evens.end() && fa == *it) {
                if (preimage_count[fa] == 1)
                    ++st.si;
                else
                    ++st.sd;
            }
        } else {
            if (fa == top) {
                ++st.me;
            } else if (fa == a) {
                if (preimage_count[a] == 1)
                    ++st.fi;
                else
                    ++st.fd;
            }
        }
    }
    return st;
}

SixVarPoly lambda_enum(const StaircaseSet& s, int bound) {
    SixVarPoly sum;
    for (const auto& f : enumerate_staircases(s, bound)) sum += staircase_stats(f).weight();
    return sum;
}

SixVarPoly lambda_rec(const StaircaseSet& s) {
    const PositiveIntSet sp = s.s_prime();
    if (sp.empty()) return SixVarPoly(1);
    const int ell = s.ell_recurrence();
    const SixVarPoly inner = lambda_rec(StaircaseSet(sp));
    const SixVarPoly inner_shift = sixvar_shift(inner);

    const SixVarPoly x = SixVarPoly::x(), y = SixVarPoly::y(), z = SixVarPoly::z();
    const SixVarPoly xb = SixVarPoly::xb(), yb = SixVarPoly::yb(), zb = SixVarPoly::zb();

    SixVarPoly result = (y + xb) * (x + zb).pow(ell) * inner_shift;
    SixVarPoly bracket = x.pow(ell) * (yb - y - xb);
    if (ell > 0) bracket += SixVarPoly(ell) * x.pow(ell - 1) * xb * (z - zb);
    result += bracket * inner;
    return result;
}

StaircaseSet augment_with_rk(const PositiveIntSet& v, int k) {
    if (v.empty() || v.max() % 2 != 0) throw DomainError("augmentation requires an even maximum");
    if (k < 1) throw DomainError("augmentation requires k >= 1");
    std::vector<int> extra;
    for (int j = 0; j < k; ++j) extra.push_back(v.max() + 1 + 2 * j);
    extra.push_back(v.max() + 2 * k);
    return StaircaseSet(v.united_with(PositiveIntSet(std::move(extra))));
}

std::optional<std::string> top_row_bijection_failure(const StaircaseSet& s, int bound) {
    const PositiveIntSet sp = s.s_prime();
    if (sp.empty()) return std::nullopt;  // singleton target, nothing to pair

    const auto target = enumerate_staircases(s, bound);
    const std::set<SurjectiveStaircase> target_set(target.begin(), target.end());
    const int top = s.set().max();
    const int inner_top = sp.max();

    std::set<SurjectiveStaircase> produced;
    for (const auto& f : enumerate_staircases(StaircaseSet(sp), bound)) {
        std::vector<int> preimage;
        for (int a : sp.elements())
            if (f.value_at(a) == inner_top) preimage.push_back(a);
        // Proper subsets X of the preimage.
        const size_t psize = preimage.size();
        for (size_t mask = 0; mask + 1 < (size_t{1} << psize); ++mask) {
            std::set<int> x;
            for (size_t i = 0; i < psize; ++i)
                if (mask & (size_t{1} << i)) x.insert(preimage[i]);
            std::vector<int> values;
            for (int a : s.set().elements()) {
                if (!sp.contains(a) || x.count(a))
                    values.push_back(top);
                else
                    values.push_back(f.value_at(a));
            }
            SurjectiveStaircase lifted(s.set(), std::move(values));
            if (!target_set.count(lifted))
                return "lifted staircase " + lifted.to_string() + " is not a staircase of S";
            if (!produced.insert(lifted).second)
                return "pair collision at " + lifted.to_string();
        }
    }
    if (produced.size() != target_set.size())
        return "image has " + std::to_string(produced.size()) + " staircases, expected " +
               std::to_string(target_set.size());
    return std::nullopt;
}

bool lemma66_check(const PositiveIntSet& v, int k, int bound) {
    UniPoly lhs;
    for (const auto& sigma : enumerate_dperms(v, bound))
        lhs += UniPoly::monomial(sigma.cycle_count(), 1);

    const StaircaseSet augmented = augment_with_rk(v, k);
    const SixVarPoly lam = lambda_enum(augmented, bound);
    const UniPoly t = UniPoly::variable();
    const std::array<UniPoly, SixVarPoly::kVars> at = {t, t, UniPoly(1), UniPoly(0), t, UniPoly(1)};
    return lhs == lam.eval(at);
}

}  // namespace ferrochi
