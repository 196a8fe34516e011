#ifndef PLUCKER_CHOWRING_HPP
#define PLUCKER_CHOWRING_HPP

#include "plucker/rational.hpp"

#include <vector>

namespace plucker {

/// Chow ring of M = P(T*P^n + O), generated by the base hyperplane class h
/// and the relative hyperplane class z, with
///   h^(n+1) = 0,   z^(n+1) + c1 z^n + ... + cn z = 0,
/// where c(T*P^n) = (1 - h)^(n+1) truncated at h^(n+1).
class ChowRing {
public:
    explicit ChowRing(unsigned n);

    unsigned n() const { return n_; }
    /// c_i(T*P^n) as the integer coefficient of h^i.
    const std::vector<BigInt>& chern() const { return chern_; }

private:
    unsigned n_;
    std::vector<BigInt> chern_;
};

ChowRing ring_presentation(unsigned n);

/// Element in the basis h^i z^j, 0 <= i, j <= n, always kept reduced.
class ChowElt {
public:
    explicit ChowElt(const ChowRing& ring);

    static ChowElt one(const ChowRing& ring);
    /// h^i z^j, reduced.
    static ChowElt monomial(const ChowRing& ring, unsigned i, unsigned j, const BigInt& c = 1);

    unsigned n() const { return n_; }
    const BigInt& coeff(unsigned i, unsigned j) const { return coeffs_[i][j]; }

    ChowElt& operator+=(const ChowElt& o);
    ChowElt& operator-=(const ChowElt& o);
    friend ChowElt operator+(ChowElt a, const ChowElt& b) { return a += b; }
    friend ChowElt operator-(ChowElt a, const ChowElt& b) { return a -= b; }
    ChowElt scaled(const BigInt& c) const;

    friend bool operator==(const ChowElt& a, const ChowElt& b) { return a.coeffs_ == b.coeffs_; }

private:
    friend ChowElt chow_mul(const ChowElt& a, const ChowElt& b, const ChowRing& ring);

    unsigned n_;
    std::vector<std::vector<BigInt>> coeffs_;
};

ChowElt chow_mul(const ChowElt& a, const ChowElt& b, const ChowRing& ring);

/// [P] = c_n(E (x) O(1)) = sum_i c_i(E) z^(n-i), E = T*P^n.
ChowElt zero_section_class(const ChowRing& ring);

/// Coefficient of h^n z^n (the point class, normalised to 1).
BigInt degree_map(const ChowElt& a, const ChowRing& ring);

/// deg([P]^2); equals (-1)^n (n+1).
BigInt p_self_intersection(unsigned n);

struct ExtIdentity {
    Rat expanded;  // (n+1)^2 (-1)^n (C1 + x1 P).(C2 + x2 P)
    Rat bracket;   // (n+1)^2 (-1)^n [a + (-1)^(n+1) p1 p2 / (n+1)]
    bool equal = false;
};

/// Expands the Euler pairing of the modified classes with the pairing data
/// C1.C2 = a, Ci.P = pi and P.P from the Chow ring, and compares it with the
/// closed bracket form.
ExtIdentity ext_identity(unsigned n, const Rat& a, const Rat& p1, const Rat& p2);

bool ext_identity_check(unsigned n, const Rat& a, const Rat& p1, const Rat& p2);

} // namespace plucker

#endif
