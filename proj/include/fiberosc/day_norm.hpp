#pragma once

#include <map>
#include <string>
#include <vector>

#include "fiberosc/rational.hpp"

namespace fiberosc {

// Finitely supported element of c_0(Gamma); indices are strings, stored
// values nonzero. Index order (for norm tie-breaking) is the lexicographic
// string order.
class SparseVector {
public:
    SparseVector() = default;
    static SparseVector unit(const std::string& index) {
        SparseVector v;
        v.set(index, Rational(1));
        return v;
    }

    void set(const std::string& index, const Rational& value);
    Rational at(const std::string& index) const;
    const std::map<std::string, Rational>& entries() const { return entries_; }

    SparseVector plus(const SparseVector& o) const;
    SparseVector scaled(const Rational& c) const;
    SparseVector minus(const SparseVector& o) const { return plus(o.scaled(Rational(-1))); }

    Rational sup_abs() const;
    std::size_t support_size() const { return entries_.size(); }
    std::size_t union_support_size(const SparseVector& o) const;

    bool operator==(const SparseVector&) const = default;

private:
    std::map<std::string, Rational> entries_;
};

// Squared Day norm: sum over k of 4^{-k} x(gamma_k)^2 with the support
// sorted by decreasing |value| (ties by index order). The greedy order
// realizes the supremum over all support enumerations, so the square root
// is a norm; everything here stays rational by working with the square.
Rational day_norm_squared(const SparseVector& x);

// Convexity defect 2||x||^2 + 2||y||^2 - ||x+y||^2, always >= 0; it
// vanishes only at x = y and controls the sup deviation through
// D(x,y) >= 4^{-N} ||x-y||_inf^2 with N the union support size.
Rational lur_deficiency(const SparseVector& x, const SparseVector& y);

struct ProbeEntry {
    Rational norm_sq;        // ||x_n||^2
    Rational mid_norm_sq;    // ||(x_n + x)/2||^2
    Rational dev_inf;        // ||x_n - x||_inf
    Rational deficiency;     // D(x, x_n)
    Rational modulus_sq;     // 4^N * tol, the bound dev^2 must obey under the premise
    bool premise = false;    // D <= tol
    std::size_t union_support = 0;
};

struct ProbeReport {
    Rational tol;
    std::vector<ProbeEntry> entries;
    Rational empirical_modulus_sq;  // max dev^2 among premise entries
    bool consistent = true;
};

// Falsification harness for the rotundity of the Day norm: asserts the
// exact inequality dev^2 <= 4^N * D per entry, which forces dev to vanish
// whenever the deficiency does.
ProbeReport lur_probe(const SparseVector& x, const std::vector<SparseVector>& sequence,
                      const Rational& tol);

}  // namespace fiberosc
