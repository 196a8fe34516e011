#include "plucker/poly.hpp"

#include "plucker/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace plucker {

// ---------------------------------------------------------------- Mono

Mono::Mono(std::size_t nvars)
{
    if (nvars > kMaxVars)
        throw Error(ErrorKind::InvalidArgument, "too many variables (" + std::to_string(nvars) + ")");
    nvars_ = static_cast<std::uint8_t>(nvars);
}

Mono::Mono(std::initializer_list<unsigned> exps) : Mono(std::span<const unsigned>(exps.begin(), exps.size())) {}

Mono::Mono(std::span<const unsigned> exps) : Mono(exps.size())
{
    for (std::size_t i = 0; i < exps.size(); ++i)
        set(i, exps[i]);
}

void Mono::set(std::size_t i, unsigned e)
{
    deg_ = deg_ - exp_[i] + e;
    exp_[i] = static_cast<std::uint16_t>(e);
}

bool Mono::divides(const Mono& other) const
{
    if (deg_ > other.deg_)
        return false;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exp_[i] > other.exp_[i])
            return false;
    return true;
}

Mono Mono::quotient(const Mono& other) const
{
    Mono r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
        r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
    r.deg_ = deg_ - other.deg_;
    return r;
}

Mono Mono::lcm(const Mono& other) const
{
    Mono r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        r.exp_[i] = std::max(exp_[i], other.exp_[i]);
        r.deg_ += r.exp_[i];
    }
    return r;
}

Mono Mono::gcd(const Mono& other) const
{
    Mono r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        r.exp_[i] = std::min(exp_[i], other.exp_[i]);
        r.deg_ += r.exp_[i];
    }
    return r;
}

bool Mono::coprime(const Mono& other) const
{
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exp_[i] != 0 && other.exp_[i] != 0)
            return false;
    return true;
}

Mono operator*(const Mono& a, const Mono& b)
{
    Mono r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i)
        r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
}

// ---------------------------------------------------------------- orders

namespace {

std::strong_ordering grevlex_range(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi)
{
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i])
            return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrder::compare(const Mono& a, const Mono& b) const
{
    switch (kind) {
    case OrderKind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] <=> b[i];
        return std::strong_ordering::equal;
    case OrderKind::GrevLex:
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        return grevlex_range(a, b, 0, a.size());
    case OrderKind::ElimBlock: {
        const std::size_t k = std::min(block, a.size());
        if (auto c = grevlex_range(a, b, 0, k); c != 0)
            return c;
        return grevlex_range(a, b, k, a.size());
    }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering monomial_compare(const MonomialOrder& order, const Mono& a, const Mono& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::VariableMismatch, "monomials over different variable counts");
    return order.compare(a, b);
}

std::string to_string(const MonomialOrder& order)
{
    switch (order.kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::ElimBlock: return "elim(" + std::to_string(order.block) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- PolyRing

RingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder order)
{
    if (vars.empty())
        throw Error(ErrorKind::InvalidArgument, "empty variable list");
    if (vars.size() > kMaxVars)
        throw Error(ErrorKind::InvalidArgument, "too many variables");
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::InvalidArgument, "duplicate variable names");
    return RingPtr(new PolyRing(std::move(vars), order));
}

std::vector<std::string> PolyRing::numbered(const std::string& prefix, std::size_t count)
{
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(vars_, order); }

std::string PolyRing::fresh_name(const std::string& stem) const
{
    if (!index_of(stem))
        return stem;
    for (int i = 0;; ++i) {
        auto candidate = stem + "tag" + std::to_string(i);
        if (!index_of(candidate))
            return candidate;
    }
}

// ---------------------------------------------------------------- Poly

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms))
{
    const auto& ord = ring_->order();
    for (const auto& t : terms_)
        if (t.mono.size() != ring_->nvars())
            throw Error(ErrorKind::VariableMismatch, "term arity differs from ring");
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
        if (merged.back().coeff.is_zero())
            merged.pop_back();
    }
    terms_ = std::move(merged);
}

Poly Poly::constant(RingPtr ring, const Rat& c)
{
    Poly p(ring);
    if (!c.is_zero())
        p.terms_.push_back({Mono(ring->nvars()), c});
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index)
{
    if (index >= ring->nvars())
        throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    Mono m(ring->nvars());
    m.set(index, 1);
    return monomial(std::move(ring), m);
}

Poly Poly::monomial(RingPtr ring, const Mono& m, const Rat& c)
{
    Poly p(std::move(ring));
    if (!c.is_zero())
        p.terms_.push_back({m, c});
    return p;
}

Term Poly::take_leading()
{
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
}

unsigned Poly::total_degree() const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

unsigned Poly::degree_in(std::size_t var) const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono[var]);
    return d;
}

bool Poly::involves(std::size_t var) const { return degree_in(var) > 0; }

Poly Poly::in(const RingPtr& target) const
{
    std::vector<std::optional<std::size_t>> map(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
        map[i] = target->index_of(ring_->vars()[i]);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Mono m(target->nvars());
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0)
                continue;
            if (!map[i])
                throw Error(ErrorKind::VariableMismatch,
                            "variable '" + ring_->vars()[i] + "' absent from target ring");
            m.set(*map[i], t.mono[i]);
        }
        out.push_back({m, t.coeff});
    }
    return Poly(target, std::move(out));
}

Poly Poly::relabel(const RingPtr& target) const
{
    if (target->nvars() != ring_->nvars())
        throw Error(ErrorKind::VariableMismatch, "relabel needs equal variable counts");
    return Poly(target, terms_);
}

Poly Poly::scaled(const Rat& c) const
{
    if (c.is_zero())
        return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_)
        t.coeff *= c;
    return r;
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    return scaled(leading_coeff().inverse());
}

Poly Poly::primitive() const
{
    if (is_zero())
        return *this;
    BigInt den = 1;
    for (const auto& t : terms_)
        den = lcm(den, t.coeff.den());
    BigInt content = 0;
    for (const auto& t : terms_)
        content = gcd(content, t.coeff.num() * (den / t.coeff.den()));
    Rat factor(den, content);
    if (leading_coeff().sign() < 0)
        factor = -factor;
    return scaled(factor);
}

Poly Poly::mul_term(const Mono& m, const Rat& c) const
{
    if (c.is_zero())
        return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return r;
}

Poly Poly::sub_mul_term(const Rat& c, const Mono& m, const Poly& g) const
{
    const auto& ord = ring_->order();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end()) {
            r.terms_.push_back(*a++);
            continue;
        }
        Mono bm = b->mono * m;
        if (a == terms_.end()) {
            r.terms_.push_back({bm, -(c * b->coeff)});
            ++b;
            continue;
        }
        auto cmpv = ord.compare(a->mono, bm);
        if (cmpv > 0) {
            r.terms_.push_back(*a++);
        } else if (cmpv < 0) {
            r.terms_.push_back({bm, -(c * b->coeff)});
            ++b;
        } else {
            Rat v = a->coeff - c * b->coeff;
            if (!v.is_zero())
                r.terms_.push_back({bm, std::move(v)});
            ++a;
            ++b;
        }
    }
    return r;
}

void Poly::check_same_ring(const Poly& o) const
{
    if (!ring_->same_as(*o.ring_))
        throw Error(ErrorKind::VariableMismatch, "polynomials over different rings");
}

Poly Poly::merged(const Poly& o, const Rat& factor) const
{
    check_same_ring(o);
    return sub_mul_term(-factor, Mono(ring_->nvars()), o);
}

Poly& Poly::operator+=(const Poly& o) { return *this = merged(o, Rat(1)); }
Poly& Poly::operator-=(const Poly& o) { return *this = merged(o, Rat(-1)); }

Poly& Poly::operator*=(const Poly& o)
{
    check_same_ring(o);
    Poly acc(ring_);
    const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& large = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_)
        acc = acc.sub_mul_term(-t.coeff, t.mono, large);
    return *this = std::move(acc);
}

Poly Poly::operator-() const { return scaled(Rat(-1)); }

bool operator==(const Poly& a, const Poly& b)
{
    if (!a.ring_->same_as(*b.ring_) || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string Poly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        first = false;
        bool need_star = false;
        if (!c.is_one() || t.mono.is_one()) {
            os << c.str();
            need_star = true;
        }
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0)
                continue;
            if (need_star)
                os << "*";
            os << ring_->vars()[i];
            if (t.mono[i] > 1)
                os << "^" << t.mono[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// ---------------------------------------------------------------- free functions

Poly pow(const Poly& base, long exponent)
{
    if (exponent < 0)
        throw Error(ErrorKind::NegativeExponent, "negative exponent " + std::to_string(exponent));
    Poly result = Poly::constant(base.ring(), Rat(1));
    Poly b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1u)
            result *= b;
        e >>= 1u;
        if (e > 0)
            b *= b;
    }
    return result;
}

Poly poly_arith(ArithOp op, const Poly& a, const Poly* b, long exponent)
{
    switch (op) {
    case ArithOp::Neg: return -a;
    case ArithOp::Pow: return pow(a, exponent);
    case ArithOp::Add:
    case ArithOp::Mul:
        if (b == nullptr)
            throw Error(ErrorKind::InvalidArgument, "binary operation needs two operands");
        return op == ArithOp::Add ? a + *b : a * *b;
    }
    return a;
}

Poly partial_derivative(const Poly& f, std::size_t var)
{
    if (var >= f.ring()->nvars())
        throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        const unsigned e = t.mono[var];
        if (e == 0)
            continue;
        Mono m = t.mono;
        m.set(var, e - 1);
        out.push_back({m, t.coeff * Rat(static_cast<long>(e))});
    }
    return Poly(f.ring(), std::move(out));
}

std::optional<unsigned> homogeneity_degree(const Poly& f)
{
    if (f.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "homogeneity of the zero polynomial");
    const unsigned d = f.leading_mono().degree();
    for (const auto& t : f.terms())
        if (t.mono.degree() != d)
            return std::nullopt;
    return d;
}

Poly dehomogenize(const Poly& f, std::size_t chart)
{
    const auto& vars = f.ring()->vars();
    if (chart >= vars.size())
        throw Error(ErrorKind::InvalidArgument, "chart index out of range");
    if (vars.size() == 1)
        throw Error(ErrorKind::InvalidArgument, "cannot dehomogenize a univariate ring");
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (i != chart)
            rest.push_back(vars[i]);
    auto target = PolyRing::make(rest, f.ring()->order());
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Mono m(rest.size());
        for (std::size_t i = 0, j = 0; i < vars.size(); ++i)
            if (i != chart)
                m.set(j++, t.mono[i]);
        out.push_back({m, t.coeff});
    }
    return Poly(target, std::move(out));
}

Rat evaluate(const Poly& f, std::span<const Rat> point)
{
    if (point.size() != f.ring()->nvars())
        throw Error(ErrorKind::VariableMismatch, "point dimension differs from ring");
    Rat acc;
    for (const auto& t : f.terms()) {
        Rat v = t.coeff;
        for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i)
            if (t.mono[i] > 0)
                v *= point[i].pow(t.mono[i]);
        acc += v;
    }
    return acc;
}

Poly substitute(const Poly& f, std::size_t var, const Poly& value)
{
    if (!f.ring()->same_as(*value.ring()))
        throw Error(ErrorKind::VariableMismatch, "substitution value from a different ring");
    const unsigned top = f.degree_in(var);
    std::vector<Poly> powers{Poly::constant(f.ring(), Rat(1))};
    for (unsigned e = 1; e <= top; ++e)
        powers.push_back(powers.back() * value);
    Poly acc(f.ring());
    for (const auto& t : f.terms()) {
        Mono m = t.mono;
        const unsigned e = m[var];
        m.set(var, 0);
        acc = acc.sub_mul_term(-t.coeff, m, powers[e]);
    }
    return acc;
}

bool proportional(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    if (!a.ring()->same_as(*b.ring()))
        return false;
    return a.monic() == b.monic();
}

} // namespace plucker
