#include "algebra/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace newforms {

IntPoly IntPoly::constant(const Integer &v) {
    return IntPoly(std::vector<Integer>{v});
}

IntPoly IntPoly::x_power(long k) {
    std::vector<Integer> c(static_cast<size_t>(k) + 1, Integer(0));
    c.back() = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly &o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly &o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly &o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> r(c_);
    for (auto &x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Integer &s) const {
    if (s == 0) return IntPoly();
    std::vector<Integer> r(c_);
    for (auto &x : r) x *= s;
    return IntPoly(std::move(r));
}

Integer IntPoly::eval(const Integer &x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational &x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

Integer content(const IntPoly &p) {
    Integer g = 0;
    for (const auto &x : p.coeffs()) g = int_gcd(g, x);
    if (!p.is_zero() && p.leading() < 0) g = -g;
    return g;
}

IntPoly primitive_part(const IntPoly &p) {
    if (p.is_zero()) return p;
    Integer c = content(p);
    std::vector<Integer> r(p.coeffs());
    for (auto &x : r) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        x = q;
    }
    return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly &p) {
    if (p.degree() < 1) return IntPoly();
    std::vector<Integer> r(static_cast<size_t>(p.degree()));
    for (long i = 1; i <= p.degree(); ++i) r[static_cast<size_t>(i) - 1] = Integer(i) * p.coeff(i);
    return IntPoly(std::move(r));
}

bool divides(const IntPoly &a, const IntPoly &b, IntPoly &q) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        q = IntPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Integer> rem(a.coeffs());
    std::vector<Integer> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Integer(0));
    const Integer &lb = b.leading();
    for (long d = a.degree(); d >= b.degree();) {
        Integer &top = rem[static_cast<size_t>(d)];
        if (top != 0) {
            Integer c, r;
            mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
            if (r != 0) return false;
            long shift = d - b.degree();
            quot[static_cast<size_t>(shift)] = c;
            for (long i = 0; i <= b.degree(); ++i)
                rem[static_cast<size_t>(shift + i)] -= c * b.coeff(i);
        }
        --d;
    }
    for (long i = 0; i < b.degree(); ++i)
        if (rem[static_cast<size_t>(i)] != 0) return false;
    q = IntPoly(std::move(quot));
    return true;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + rem, deg rem < deg b.
IntPoly pseudo_rem(const IntPoly &a, const IntPoly &b) {
    IntPoly rem = a;
    const Integer &lb = b.leading();
    long steps = a.degree() - b.degree() + 1;
    for (long s = 0; s < steps && rem.degree() >= b.degree(); ++s) {
        long shift = rem.degree() - b.degree();
        Integer top = rem.leading();
        std::vector<Integer> r(rem.coeffs());
        for (auto &x : r) x *= lb;
        for (long i = 0; i <= b.degree(); ++i)
            r[static_cast<size_t>(shift + i)] -= top * b.coeff(i);
        rem = IntPoly(std::move(r));
    }
    return rem;
}

// Exact division, throws if not divisible. For internal quotients that are
// guaranteed exact.
IntPoly exact_div(const IntPoly &a, const IntPoly &b) {
    IntPoly q;
    if (!divides(a, b, q)) throw std::logic_error("polynomial division expected to be exact");
    return q;
}

} // namespace

IntPoly poly_gcd(const IntPoly &a, const IntPoly &b) {
    IntPoly r0 = primitive_part(a), r1 = primitive_part(b);
    if (r0.is_zero()) return r1;
    if (r1.is_zero()) return r0;
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        IntPoly r2 = primitive_part(pseudo_rem(r0, r1));
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly &p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = primitive_part(p);
    if (f.degree() < 1) return out;
    // Yun: f = prod a_i^i with a_i squarefree and pairwise coprime.
    IntPoly fp = derivative(f);
    IntPoly u = poly_gcd(f, fp);
    IntPoly v = exact_div(f, u);
    IntPoly w = exact_div(fp, u);
    int i = 1;
    while (v.degree() > 0) {
        IntPoly z = w - derivative(v);
        IntPoly s = poly_gcd(v, z);
        if (s.degree() > 0) out.emplace_back(s, i);
        v = exact_div(v, s);
        w = exact_div(z, s);
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly &p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
    IntPoly f = primitive_part(p);
    if (f.degree() < 1) return IntPoly::constant(1);
    IntPoly u = poly_gcd(f, derivative(f));
    return exact_div(f, u);
}

std::string poly_to_string(const IntPoly &p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        Integer c = p.coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Integer a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly clear_denominators(const std::vector<Rational> &coeffs, Rational &scale) {
    Integer den = 1;
    for (const auto &q : coeffs) den = int_lcm(den, q.get_den());
    std::vector<Integer> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Rational s = coeffs[i] * Rational(den);
        c[i] = s.get_num();
    }
    IntPoly z(std::move(c));
    if (z.is_zero()) {
        scale = 0;
        return z;
    }
    Integer cont = content(z);
    scale = make_rational(cont, den);
    return primitive_part(z);
}

} // namespace newforms
