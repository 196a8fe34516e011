#ifndef PLUCKER_POLY_HPP
#define PLUCKER_POLY_HPP

#include "plucker/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plucker {

/// Upper bound on the number of variables of any polynomial ring. Conormal
/// computations in P^3 need 8 variables plus two tag variables.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector over a fixed variable list, with cached total degree.
class Mono {
public:
    Mono() = default;
    explicit Mono(std::size_t nvars);
    Mono(std::initializer_list<unsigned> exps);
    explicit Mono(std::span<const unsigned> exps);

    std::size_t size() const { return nvars_; }
    unsigned operator[](std::size_t i) const { return exp_[i]; }
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    void set(std::size_t i, unsigned e);

    bool divides(const Mono& other) const;
    /// this / other; requires other | this.
    Mono quotient(const Mono& other) const;
    Mono lcm(const Mono& other) const;
    Mono gcd(const Mono& other) const;
    bool coprime(const Mono& other) const;

    friend Mono operator*(const Mono& a, const Mono& b);
    friend bool operator==(const Mono& a, const Mono& b)
    {
        return a.nvars_ == b.nvars_ && a.deg_ == b.deg_ && a.exp_ == b.exp_;
    }

private:
    std::array<std::uint16_t, kMaxVars> exp_{};
    std::uint8_t nvars_ = 0;
    std::uint32_t deg_ = 0;
};

enum class OrderKind { Lex, GrevLex, ElimBlock };

/// Monomial order. ElimBlock(k) compares the first k variables by GrevLex,
/// and only on a tie compares the remaining ones by GrevLex, so any monomial
/// involving the first block beats every monomial free of it.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder elim_block(std::size_t k) { return {OrderKind::ElimBlock, k}; }

    std::strong_ordering compare(const Mono& a, const Mono& b) const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering monomial_compare(const MonomialOrder& order, const Mono& a, const Mono& b);

std::string to_string(const MonomialOrder& order);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ordered variable list together with the active monomial order.
class PolyRing {
public:
    static RingPtr make(std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex());
    /// Variables "<prefix>0" .. "<prefix>(count-1)".
    static std::vector<std::string> numbered(const std::string& prefix, std::size_t count);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const MonomialOrder& order() const { return order_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    RingPtr with_order(MonomialOrder order) const;
    /// A fresh variable name not clashing with any existing one.
    std::string fresh_name(const std::string& stem) const;

    bool same_as(const PolyRing& other) const
    {
        return this == &other || (order_ == other.order_ && vars_ == other.vars_);
    }

private:
    PolyRing(std::vector<std::string> vars, MonomialOrder order)
        : vars_(std::move(vars)), order_(order)
    {
    }

    std::vector<std::string> vars_;
    MonomialOrder order_;
};

struct Term {
    Mono mono;
    Rat coeff;
};

/// Sparse polynomial with rational coefficients. Terms are kept strictly
/// decreasing under the ring's order, with no zero coefficients.
class Poly {
public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Term> terms);

    static Poly constant(RingPtr ring, const Rat& c);
    static Poly variable(RingPtr ring, std::size_t index);
    static Poly monomial(RingPtr ring, const Mono& m, const Rat& c = Rat(1));

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Leading term accessors; the polynomial must be nonzero.
    const Term& leading() const { return terms_.front(); }
    const Mono& leading_mono() const { return terms_.front().mono; }
    const Rat& leading_coeff() const { return terms_.front().coeff; }

    /// Removes and returns the leading term.
    Term take_leading();

    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;

    /// Re-expresses the polynomial in another ring, matching variables by
    /// name. Used for explicit order changes and ring extensions.
    Poly in(const RingPtr& target) const;
    /// Positional relabelling into a ring with the same number of variables.
    Poly relabel(const RingPtr& target) const;

    Poly scaled(const Rat& c) const;
    Poly monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient.
    Poly primitive() const;
    Poly mul_term(const Mono& m, const Rat& c) const;
    /// this - c*m*g, merged in one pass.
    Poly sub_mul_term(const Rat& c, const Mono& m, const Poly& g) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b);

    std::string str() const;

private:
    void check_same_ring(const Poly& o) const;
    Poly merged(const Poly& o, const Rat& factor) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

enum class ArithOp { Add, Mul, Pow, Neg };

/// Checked ring operation; `b` is ignored for Neg, `exponent` used only for Pow.
Poly poly_arith(ArithOp op, const Poly& a, const Poly* b = nullptr, long exponent = 0);

Poly pow(const Poly& base, long exponent);

Poly partial_derivative(const Poly& f, std::size_t var);

/// Common total degree of all terms, or nullopt when f is not homogeneous.
/// Throws ZeroPolynomial for f = 0.
std::optional<unsigned> homogeneity_degree(const Poly& f);

/// Sets the chart variable to 1; the result lives in the ring without it.
Poly dehomogenize(const Poly& f, std::size_t chart);

Rat evaluate(const Poly& f, std::span<const Rat> point);

/// Replaces variable `var` by `value` (a polynomial in the same ring).
Poly substitute(const Poly& f, std::size_t var, const Poly& value);

/// Scalar multiple test: true when a = c*b for some nonzero rational c.
bool proportional(const Poly& a, const Poly& b);

} // namespace plucker

#endif
