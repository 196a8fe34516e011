#include "plucker/groebner.hpp"

#include "plucker/error.hpp"

#include <algorithm>
#include <cassert>

namespace plucker {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring))
{
    for (auto& g : gens) {
        if (!g.ring()->same_as(*ring_))
            throw Error(ErrorKind::VariableMismatch, "generator from a different ring");
        if (!g.is_zero())
            gens_.push_back(std::move(g));
    }
}

Ideal Ideal::in(const RingPtr& target) const
{
    std::vector<Poly> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_)
        out.push_back(g.in(target));
    return Ideal(target, std::move(out));
}

bool ReducedBasis::contains(const Poly& f) const { return normal_form(f, *this).is_zero(); }

bool operator==(const ReducedBasis& a, const ReducedBasis& b)
{
    if (a.basis_.size() != b.basis_.size())
        return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        if (!(a.basis_[i] == b.basis_[i]))
            return false;
    return true;
}

// ---------------------------------------------------------------- reduction

namespace {

const Poly* find_divisor(const Mono& m, std::span<const Poly> divisors)
{
    for (const auto& g : divisors)
        if (!g.is_zero() && g.leading_mono().divides(m))
            return &g;
    return nullptr;
}

const Poly* find_divisor(const Mono& m, const std::vector<Poly>& polys, const std::vector<char>& active)
{
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (active[i] && polys[i].leading_mono().divides(m))
            return &polys[i];
    return nullptr;
}

template <class Finder>
Poly reduce_full(Poly p, Finder&& finder)
{
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lt = p.leading();
        if (const Poly* g = finder(lt.mono)) {
            Rat c = lt.coeff / g->leading_coeff();
            Mono q = lt.mono.quotient(g->leading_mono());
            p = p.sub_mul_term(c, q, *g);
        } else {
            remainder.push_back(p.take_leading());
        }
    }
    return Poly(p.ring(), std::move(remainder));
}

} // namespace

Poly normal_form(const Poly& f, std::span<const Poly> divisors)
{
    for (const auto& g : divisors)
        if (!g.ring()->same_as(*f.ring()))
            throw Error(ErrorKind::VariableMismatch, "normal form across rings");
    return reduce_full(f, [&](const Mono& m) { return find_divisor(m, divisors); });
}

Poly normal_form(const Poly& f, const ReducedBasis& basis)
{
    return normal_form(f.in(basis.ring()), std::span<const Poly>(basis.basis()));
}

Poly s_polynomial(const Poly& f, const Poly& g)
{
    const Mono l = f.leading_mono().lcm(g.leading_mono());
    Poly a = f.mul_term(l.quotient(f.leading_mono()), f.leading_coeff().inverse());
    return a.sub_mul_term(g.leading_coeff().inverse(), l.quotient(g.leading_mono()), g);
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Pair {
    std::size_t i;
    std::size_t j;
    Mono lcm;
};

class Buchberger {
public:
    explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

    void add(Poly h)
    {
        h = reduce_full(std::move(h), [&](const Mono& m) { return find_divisor(m, polys_, active_); });
        if (h.is_zero())
            return;
        insert(h.monic());
    }

    void run()
    {
        const auto& ord = ring_->order();
        while (!pairs_.empty()) {
            auto best = pairs_.begin();
            for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
                if (it->lcm.degree() < best->lcm.degree() ||
                    (it->lcm.degree() == best->lcm.degree() && ord.compare(it->lcm, best->lcm) < 0))
                    best = it;
            }
            Pair p = *best;
            *best = pairs_.back();
            pairs_.pop_back();
            Poly s = s_polynomial(polys_[p.i], polys_[p.j]);
            s = reduce_full(std::move(s), [&](const Mono& m) { return find_divisor(m, polys_, active_); });
            if (!s.is_zero())
                insert(s.monic());
        }
    }

    ReducedBasis reduced() const
    {
        std::vector<Poly> minimal;
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (!active_[i])
                continue;
            bool redundant = false;
            for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
                if (j == i || !active_[j])
                    continue;
                if (polys_[j].leading_mono().divides(polys_[i].leading_mono()))
                    redundant = !(polys_[j].leading_mono() == polys_[i].leading_mono()) || j < i;
            }
            if (!redundant)
                minimal.push_back(polys_[i]);
        }
        std::vector<Poly> out;
        out.reserve(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            const Term lt = minimal[i].leading();
            Poly tail = minimal[i] - Poly::monomial(ring_, lt.mono, lt.coeff);
            Poly r = Poly::monomial(ring_, lt.mono, lt.coeff) + normal_form(tail, others);
            out.push_back(r.monic());
        }
        const auto& ord = ring_->order();
        std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
            return ord.compare(a.leading_mono(), b.leading_mono()) < 0;
        });
        return ReducedBasis(ring_, std::move(out));
    }

private:
    // Gebauer-Moeller update for the new element h.
    void insert(Poly h)
    {
        const std::size_t hi = polys_.size();
        const Mono hm = h.leading_mono();
        polys_.push_back(std::move(h));
        active_.push_back(1);

        std::vector<Pair> cand;
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g])
                cand.push_back({g, hi, polys_[g].leading_mono().lcm(hm)});

        // Among new pairs: keep a pair if h and g are coprime, or if no other
        // remaining or already kept pair has an lcm dividing its lcm.
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            const Mono& la = cand[a].lcm;
            bool keep = polys_[cand[a].i].leading_mono().coprime(hm);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
                    if (cand[b].lcm.divides(la))
                        keep = false;
                for (std::size_t b = 0; b < kept.size() && keep; ++b)
                    if (kept[b].lcm.divides(la))
                        keep = false;
            }
            if (keep)
                kept.push_back(cand[a]);
        }
        // Product criterion.
        std::vector<Pair> fresh;
        for (const auto& p : kept)
            if (!polys_[p.i].leading_mono().coprime(hm))
                fresh.push_back(p);

        // Chain criterion on old pairs.
        std::vector<Pair> old;
        old.reserve(pairs_.size());
        for (const auto& p : pairs_) {
            const Mono& l = p.lcm;
            if (hm.divides(l) && !(polys_[p.i].leading_mono().lcm(hm) == l) &&
                !(polys_[p.j].leading_mono().lcm(hm) == l))
                continue;
            old.push_back(p);
        }
        pairs_ = std::move(old);
        pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g] && hm.divides(polys_[g].leading_mono()))
                active_[g] = 0;
    }

    RingPtr ring_;
    std::vector<Poly> polys_;
    std::vector<char> active_;
    std::vector<Pair> pairs_;
};

} // namespace

ReducedBasis groebner_basis(const Ideal& ideal)
{
    Buchberger bb(ideal.ring());
    std::vector<Poly> gens = ideal.gens();
    const auto& ord = ideal.ring()->order();
    std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
        return ord.compare(a.leading_mono(), b.leading_mono()) < 0;
    });
    for (auto& g : gens) {
        if (g.is_constant())
            return ReducedBasis(ideal.ring(), {Poly::constant(ideal.ring(), Rat(1))});
        bb.add(g);
    }
    bb.run();
    return bb.reduced();
}

bool certify_groebner(const ReducedBasis& basis)
{
    const auto& b = basis.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!normal_form(s_polynomial(b[i], b[j]), std::span<const Poly>(b)).is_zero())
                return false;
    for (const auto& g : b)
        if (!g.leading_coeff().is_one())
            return false;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& t : b[j].terms())
                if (b[i].leading_mono().divides(t.mono))
                    return false;
        }
    return true;
}

// ---------------------------------------------------------------- elimination

Ideal eliminate(const Ideal& ideal, std::size_t k)
{
    const auto& vars = ideal.ring()->vars();
    if (k >= vars.size())
        throw Error(ErrorKind::InvalidArgument, "cannot eliminate every variable");
    auto elim_ring = ideal.ring()->with_order(MonomialOrder::elim_block(k));
    auto basis = groebner_basis(ideal.in(elim_ring));
    std::vector<std::string> rest(vars.begin() + static_cast<long>(k), vars.end());
    auto target = PolyRing::make(rest, MonomialOrder::grevlex());
    std::vector<Poly> kept;
    for (const auto& g : basis.basis()) {
        bool free = true;
        for (std::size_t v = 0; v < k && free; ++v)
            free = !g.involves(v);
        if (free)
            kept.push_back(g.in(target));
    }
    return Ideal(target, std::move(kept));
}

namespace {

RingPtr with_tag(const RingPtr& ring, std::string& tag)
{
    tag = ring->fresh_name("t");
    std::vector<std::string> vars{tag};
    vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
    return PolyRing::make(vars, MonomialOrder::elim_block(1));
}

} // namespace

Ideal saturate_by(const Ideal& ideal, const Poly& g)
{
    if (g.is_zero())
        throw Error(ErrorKind::InvalidArgument, "saturation by zero");
    if (g.is_constant())
        return ideal;
    std::string tag;
    auto ext = with_tag(ideal.ring(), tag);
    std::vector<Poly> gens;
    for (const auto& f : ideal.gens())
        gens.push_back(f.in(ext));
    Poly t = Poly::variable(ext, 0);
    gens.push_back(Poly::constant(ext, Rat(1)) - t * g.in(ext));
    return eliminate(Ideal(ext, std::move(gens)), 1).in(ideal.ring());
}

Ideal intersect(const Ideal& a, const Ideal& b)
{
    if (!a.ring()->same_as(*b.ring()))
        throw Error(ErrorKind::VariableMismatch, "intersection across rings");
    if (a.is_zero() || b.is_zero())
        return Ideal(a.ring());
    std::string tag;
    auto ext = with_tag(a.ring(), tag);
    Poly t = Poly::variable(ext, 0);
    Poly one_minus_t = Poly::constant(ext, Rat(1)) - t;
    std::vector<Poly> gens;
    for (const auto& f : a.gens())
        gens.push_back(t * f.in(ext));
    for (const auto& f : b.gens())
        gens.push_back(one_minus_t * f.in(ext));
    return eliminate(Ideal(ext, std::move(gens)), 1).in(a.ring());
}

Ideal saturate(const Ideal& ideal, const Ideal& by)
{
    if (by.is_zero())
        throw Error(ErrorKind::InvalidArgument, "saturation by the zero ideal");
    const auto& J = by.in(ideal.ring());
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        Ideal s = saturate_by(ideal, g);
        acc = acc ? intersect(*acc, s) : s;
    }
    return *acc;
}

bool ideal_equal(const Ideal& a, const Ideal& b)
{
    auto ring = a.ring()->with_order(MonomialOrder::grevlex());
    return groebner_basis(a.in(ring)) == groebner_basis(b.in(ring));
}

// ---------------------------------------------------------------- Hilbert series

namespace {

std::vector<Mono> minimalize(std::vector<Mono> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) { return a.degree() < b.degree(); });
    std::vector<Mono> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& o : out)
            if (o.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(m);
    }
    return out;
}

void add_shifted(std::vector<BigInt>& acc, const std::vector<BigInt>& p, unsigned shift, int sign)
{
    if (acc.size() < p.size() + shift)
        acc.resize(p.size() + shift, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        acc[i + shift] += sign * p[i];
}

// Numerator N with HS = N(t) / (1-t)^nvars for the monomial ideal.
std::vector<BigInt> hilbert_numerator(std::vector<Mono> gens)
{
    gens = minimalize(std::move(gens));
    if (gens.empty())
        return {BigInt(1)};
    if (gens.front().is_one())
        return {BigInt(0)};
    // Pairwise coprime generators give a product of (1 - t^d).
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            coprime = gens[i].coprime(gens[j]);
    if (coprime) {
        std::vector<BigInt> acc{BigInt(1)};
        for (const auto& g : gens) {
            std::vector<BigInt> next = acc;
            add_shifted(next, acc, g.degree(), -1);
            acc = std::move(next);
        }
        return acc;
    }
    Mono last = gens.back();
    gens.pop_back();
    std::vector<Mono> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens)
        colon.push_back(g.quotient(g.gcd(last)));
    std::vector<BigInt> acc = hilbert_numerator(gens);
    add_shifted(acc, hilbert_numerator(std::move(colon)), last.degree(), -1);
    return acc;
}

} // namespace

HilbertData hilbert_data(const Ideal& ideal)
{
    for (const auto& g : ideal.gens())
        if (!homogeneity_degree(g))
            throw Error(ErrorKind::NotHomogeneous, "hilbert series of a non-homogeneous ideal");
    auto ring = ideal.ring()->with_order(MonomialOrder::grevlex());
    std::vector<Mono> leads;
    if (!ideal.is_zero()) {
        auto basis = groebner_basis(ideal.in(ring));
        for (const auto& g : basis.basis())
            leads.push_back(g.leading_mono());
    }
    std::vector<BigInt> num = hilbert_numerator(std::move(leads));
    while (!num.empty() && num.back() == 0)
        num.pop_back();

    HilbertData out;
    if (num.empty()) {
        out.projdim = -1;
        out.degree = 0;
        return out;
    }
    long pole = static_cast<long>(ring->nvars());
    for (;;) {
        BigInt at_one = 0;
        for (const auto& c : num)
            at_one += c;
        if (at_one != 0 || pole == 0)
            break;
        // num = (1 - t) * q
        std::vector<BigInt> q(num.size() - 1);
        BigInt run = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            run += num[i];
            q[i] = run;
        }
        num = std::move(q);
        --pole;
    }
    out.numerator = num;
    out.projdim = pole - 1;
    for (const auto& c : num)
        out.degree += c;
    return out;
}

// ---------------------------------------------------------------- gcd / squarefree

std::optional<Poly> divide_exact(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
    if (!a.ring()->same_as(*b.ring()))
        throw Error(ErrorKind::VariableMismatch, "division across rings");
    Poly r = a;
    Poly q(a.ring());
    while (!r.is_zero()) {
        if (!b.leading_mono().divides(r.leading_mono()))
            return std::nullopt;
        const Mono m = r.leading_mono().quotient(b.leading_mono());
        const Rat c = r.leading_coeff() / b.leading_coeff();
        q += Poly::monomial(a.ring(), m, c);
        r = r.sub_mul_term(c, m, b);
    }
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    if (a.is_constant() || b.is_constant())
        return Poly::constant(a.ring(), Rat(1));
    Ideal inter = intersect(Ideal(a.ring(), {a}), Ideal(b.ring(), {b}));
    auto basis = groebner_basis(inter);
    assert(basis.size() == 1);
    auto g = divide_exact(a * b, basis.basis().front());
    if (!g)
        throw Error(ErrorKind::InvalidArgument, "gcd: lcm does not divide the product");
    return g->primitive();
}

Poly squarefree_part(const Poly& f)
{
    if (f.is_zero() || f.is_constant())
        return f.primitive();
    Poly g = f;
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
        if (g.is_constant())
            break;
        Poly d = partial_derivative(f, v);
        if (!d.is_zero())
            g = poly_gcd(g, d);
    }
    auto q = divide_exact(f, g);
    return q->primitive();
}

} // namespace plucker
