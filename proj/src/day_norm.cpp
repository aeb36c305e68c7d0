#include "fiberosc/day_norm.hpp"

#include <algorithm>
#include <set>

namespace fiberosc {

void SparseVector::set(const std::string& index, const Rational& value) {
    if (value.is_zero()) entries_.erase(index);
    else entries_[index] = value;
}

Rational SparseVector::at(const std::string& index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseVector SparseVector::plus(const SparseVector& o) const {
    SparseVector out = *this;
    for (const auto& [i, v] : o.entries_) out.set(i, out.at(i) + v);
    return out;
}

SparseVector SparseVector::scaled(const Rational& c) const {
    SparseVector out;
    if (c.is_zero()) return out;
    for (const auto& [i, v] : entries_) out.entries_.emplace(i, c * v);
    return out;
}

Rational SparseVector::sup_abs() const {
    Rational best(0);
    for (const auto& [i, v] : entries_) best = max(best, v.abs());
    return best;
}

std::size_t SparseVector::union_support_size(const SparseVector& o) const {
    std::set<std::string> u;
    for (const auto& [i, v] : entries_) u.insert(i);
    for (const auto& [i, v] : o.entries_) u.insert(i);
    return u.size();
}

Rational day_norm_squared(const SparseVector& x) {
    std::vector<std::pair<Rational, std::string>> sorted;
    sorted.reserve(x.entries().size());
    for (const auto& [i, v] : x.entries()) sorted.emplace_back(v.abs(), i);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    Rational sum(0), weight(1, 4);
    for (const auto& [mag, idx] : sorted) {
        sum += weight * mag * mag;
        weight *= Rational(1, 4);
    }
    return sum;
}

Rational lur_deficiency(const SparseVector& x, const SparseVector& y) {
    Rational two(2);
    return two * day_norm_squared(x) + two * day_norm_squared(y) -
           day_norm_squared(x.plus(y));
}

ProbeReport lur_probe(const SparseVector& x, const std::vector<SparseVector>& sequence,
                      const Rational& tol) {
    ProbeReport report;
    report.tol = tol;
    report.empirical_modulus_sq = Rational(0);
    const Rational half(1, 2);
    for (const SparseVector& xn : sequence) {
        ProbeEntry e;
        e.norm_sq = day_norm_squared(xn);
        e.mid_norm_sq = day_norm_squared(xn.plus(x).scaled(half));
        SparseVector diff = xn.minus(x);
        e.dev_inf = diff.sup_abs();
        e.deficiency = lur_deficiency(x, xn);
        e.union_support = x.union_support_size(xn);
        Rational four_n(1);
        for (std::size_t k = 0; k < e.union_support; ++k) four_n *= Rational(4);
        e.modulus_sq = four_n * tol;
        e.premise = e.deficiency <= tol;

        if (e.deficiency.is_negative()) report.consistent = false;
        if (e.dev_inf * e.dev_inf > four_n * e.deficiency) report.consistent = false;
        if (e.premise)
            report.empirical_modulus_sq = max(report.empirical_modulus_sq,
                                              e.dev_inf * e.dev_inf);
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace fiberosc
