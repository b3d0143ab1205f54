/*
 * poly.hpp
 * --------
 * Sparse multivariate polynomials over exact rationals, with the
 * calculus operations the resolution algorithm needs: iterated partial
 * derivatives, Taylor shift, orders of vanishing (at a point and along
 * a coordinate hyperplane), composition, monomial content, and
 * multiplicity equalization.
 *
 * A polynomial is a map from exponent vectors to nonzero rational
 * coefficients, kept in graded-lexicographic order (by variable index)
 * so that iteration, rendering and serialization are deterministic.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desing/rational.hpp"

namespace desing {

// Exponent vector of a power product; length equals the ambient
// dimension of the owning polynomial.
using Monomial = std::vector<int>;

// Monomial with nonnegative rational exponents, e.g. exceptional
// factors like z1^(3/2) * z2^2.
struct FracMonomial {
    std::vector<Rat> exps;

    bool is_trivial() const {
        for (const auto& e : exps)
            if (!e.is_zero()) return false;
        return true;
    }
    Rat total() const {
        Rat s = 0;
        for (const auto& e : exps) s += e;
        return s;
    }
};

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d = checked_add(d, e);
    return d;
}

// Graded lexicographic order by variable index, highest term first.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponent vectors, x1 heaviest
    }
};

struct Point {
    std::vector<Rat> coords;

    Point() = default;
    explicit Point(std::vector<Rat> c) : coords(std::move(c)) {}
    size_t dim() const { return coords.size(); }
    bool is_origin() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const Point& o) const { return coords == o.coords; }
    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += coords[i].to_string();
        }
        return s + ")";
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GradedLexGreater>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars, std::vector<std::string> names = {})
        : nvars_(nvars), names_(std::move(names)) {
        check_names();
    }

    static Poly zero(int nvars, std::vector<std::string> names = {}) {
        return Poly(nvars, std::move(names));
    }
    static Poly constant(int nvars, const Rat& c, std::vector<std::string> names = {}) {
        Poly p(nvars, std::move(names));
        if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    static Poly variable(int nvars, int var, std::vector<std::string> names = {}) {
        if (var < 0 || var >= nvars) throw dim_error("variable index out of range");
        Poly p(nvars, std::move(names));
        Monomial m(nvars, 0);
        m[var] = 1;
        p.terms_[m] = Rat(1);
        return p;
    }
    static Poly monomial(int nvars, const Monomial& m, const Rat& c,
                         std::vector<std::string> names = {}) {
        if (static_cast<int>(m.size()) != nvars) throw dim_error("monomial length mismatch");
        Poly p(nvars, std::move(names));
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    const std::vector<std::string>& names() const { return names_; }
    void set_names(std::vector<std::string> names) {
        names_ = std::move(names);
        check_names();
    }
    std::string var_name(int i) const {
        if (!names_.empty()) return names_[static_cast<size_t>(i)];
        return "x" + std::to_string(i + 1);
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(Monomial(nvars_, 0)); }
    // Leading coefficient in the canonical term order.
    Rat leading_coeff() const {
        if (terms_.empty()) return Rat(0);
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        require_same_dim(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        require_same_dim(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        require_same_dim(o);
        Poly r(nvars_, names_.empty() ? o.names_ : names_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(nvars_);
                for (int i = 0; i < nvars_; ++i)
                    m[i] = checked_add(ma[i], mb[i]);
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    Poly operator*(const Rat& s) const {
        Poly r(nvars_, names_);
        if (s.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }
    Poly pow(int k) const {
        if (k < 0) throw error("negative polynomial power");
        Poly r = Poly::constant(nvars_, Rat(1), names_);
        Poly base(*this);
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // k-fold partial derivative with respect to one variable.
    Poly derivative(int var, int k = 1) const {
        if (var < 0 || var >= nvars_) throw dim_error("derivative: variable out of range");
        if (k < 0) throw error("derivative: negative order");
        Poly r(nvars_, names_);
        for (const auto& [m, c] : terms_) {
            if (m[var] < k) continue;
            Rat f = c;
            for (int j = 0; j < k; ++j) f *= Rat(m[var] - j);
            Monomial mm = m;
            mm[var] -= k;
            r.add_term(mm, f);
        }
        return r;
    }

    Rat evaluate(const Point& a) const {
        if (static_cast<int>(a.dim()) != nvars_) throw dim_error("evaluate: dimension mismatch");
        Rat total = 0;
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < nvars_; ++i)
                if (m[i] > 0) t *= a.coords[static_cast<size_t>(i)].pow(m[i]);
            total += t;
        }
        return total;
    }

    // f(x + a), exactly.
    Poly taylor_shift(const Point& a) const {
        if (static_cast<int>(a.dim()) != nvars_) throw dim_error("taylor_shift: dimension mismatch");
        std::vector<Poly> images;
        images.reserve(static_cast<size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) {
            Poly xi = Poly::variable(nvars_, i, names_);
            images.push_back(xi + Poly::constant(nvars_, a.coords[static_cast<size_t>(i)], names_));
        }
        return substitute(images);
    }

    // Exact composition f(images); all images must share one target
    // variable set.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw dim_error("substitute: wrong number of images");
        int tn = nvars_;
        std::vector<std::string> tnames = names_;
        if (!images.empty()) {
            tn = images[0].nvars();
            tnames = images[0].names();
            for (const auto& im : images)
                if (im.nvars() != tn) throw dim_error("substitute: images disagree on dimension");
        }
        Poly r(tn, tnames);
        // cache powers of each image as needed
        std::vector<std::vector<Poly>> pows(images.size());
        auto power = [&](int var, int k) -> const Poly& {
            auto& table = pows[static_cast<size_t>(var)];
            if (table.empty()) table.push_back(Poly::constant(tn, Rat(1), tnames));
            while (static_cast<int>(table.size()) <= k)
                table.push_back(table.back() * images[static_cast<size_t>(var)]);
            return table[static_cast<size_t>(k)];
        };
        for (const auto& [m, c] : terms_) {
            Poly t = Poly::constant(tn, c, tnames);
            for (int i = 0; i < nvars_; ++i)
                if (m[i] > 0) t = t * power(i, m[i]);
            r = r + t;
        }
        return r;
    }

    // mu_a(f): minimal total degree of a term of f(x + a); infinite iff
    // f is the zero polynomial.
    OrdVal order_at_point(const Point& a) const {
        if (is_zero()) return OrdVal::infinity();
        const Poly g = a.is_origin() ? *this : taylor_shift(a);
        int best = -1;
        for (const auto& [m, c] : g.terms_) {
            int d = total_degree(m);
            if (best < 0 || d < best) best = d;
        }
        return OrdVal(best);
    }

    OrdVal order_at_origin() const { return order_at_point(Point(std::vector<Rat>(nvars_, Rat(0)))); }

    // Largest k with x_var^k dividing f; infinite iff f = 0.
    OrdVal order_along_var(int var) const {
        if (var < 0 || var >= nvars_) throw dim_error("order_along_var: variable out of range");
        if (is_zero()) return OrdVal::infinity();
        int best = -1;
        for (const auto& [m, c] : terms_) {
            if (best < 0 || m[var] < best) best = m[var];
            if (best == 0) break;
        }
        return OrdVal(best);
    }

    // Exact division by x_var^k; throws unless every term is divisible.
    Poly div_var_power(int var, int k) const {
        Poly r(nvars_, names_);
        for (const auto& [m, c] : terms_) {
            if (m[var] < k) throw error("div_var_power: not divisible");
            Monomial mm = m;
            mm[var] -= k;
            r.terms_[mm] = c;
        }
        return r;
    }

    // Exact division by a monomial x^e.
    Poly div_monomial(const Monomial& e) const {
        if (static_cast<int>(e.size()) != nvars_) throw dim_error("div_monomial: length mismatch");
        Poly r(nvars_, names_);
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            for (int i = 0; i < nvars_; ++i) {
                if (mm[i] < e[i]) throw error("div_monomial: not divisible");
                mm[i] -= e[i];
            }
            r.terms_[mm] = c;
        }
        return r;
    }

    // f = x^m * g with no variable dividing g; requires f != 0.
    std::pair<Monomial, Poly> monomial_content() const {
        if (is_zero()) throw error("monomial_content of the zero polynomial");
        Monomial m(nvars_, 0);
        bool first = true;
        for (const auto& [mm, c] : terms_) {
            for (int i = 0; i < nvars_; ++i)
                m[i] = first ? mm[i] : std::min(m[i], mm[i]);
            first = false;
        }
        return {m, div_monomial(m)};
    }

    // Substitute x_var := 0.
    Poly restrict_var(int var) const {
        Poly r(nvars_, names_);
        for (const auto& [m, c] : terms_)
            if (m[var] == 0) r.terms_[m] = c;
        return r;
    }

    // Collect coefficients of powers of one variable: f = sum_k c_k(rest) * x_var^k.
    std::vector<Poly> coeffs_in_var(int var) const {
        std::vector<Poly> cs(static_cast<size_t>(degree_in(var)) + 1, Poly(nvars_, names_));
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            int k = mm[var];
            mm[var] = 0;
            cs[static_cast<size_t>(k)].add_term(mm, c);
        }
        return cs;
    }

    // Divide by the leading coefficient.
    Poly monic() const {
        if (is_zero()) return *this;
        Rat lc = leading_coeff();
        return *this * (Rat(1) / lc);
    }

    // Integer-primitive form with positive leading coefficient: scale
    // by a positive rational so the coefficients are coprime integers.
    Poly primitive() const {
        if (is_zero()) return *this;
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            mpz_class n = c.num(), d = c.den();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        mpq_class scale(den_lcm, num_gcd);
        scale.canonicalize();
        Poly r = *this * Rat(scale);
        if (r.leading_coeff().is_negative()) r = -r;
        return r;
    }

    // Extend to a larger ambient space; existing variables keep their
    // indices, new ones are appended.
    Poly extend(int new_nvars, std::vector<std::string> new_names = {}) const {
        if (new_nvars < nvars_) throw dim_error("extend: shrinking dimension");
        Poly r(new_nvars, std::move(new_names));
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            mm.resize(static_cast<size_t>(new_nvars), 0);
            r.terms_[mm] = c;
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a.is_negative()) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += a.is_negative() ? "-" : "+";
                if (a.is_negative()) a = -a;
            }
            first = false;
            std::string mono = mono_string(m);
            if (mono.empty()) {
                s += a.to_string();
            } else {
                if (a != Rat(1)) s += a.to_string() + "*";
                s += mono;
            }
        }
        return s;
    }

private:
    void check_names() const {
        if (!names_.empty() && static_cast<int>(names_.size()) != nvars_)
            throw dim_error("variable name list has wrong length");
    }
    void require_same_dim(const Poly& o) const {
        if (nvars_ != o.nvars_) throw dim_error("polynomial dimension mismatch");
    }
    std::string mono_string(const Monomial& m) const {
        std::string s;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += var_name(i);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

    int nvars_;
    TermMap terms_;
    std::vector<std::string> names_;
};

// Replace each (g, mu_g) by (g^(e/mu_g), e) for the least e in N that
// is an integer multiple of every mu_g; preserves mu_a(g)/mu_g at
// every point.
struct EqualizedCollection {
    long common;  // e
    std::vector<std::pair<Poly, long>> items;
};

inline EqualizedCollection equalize_multiplicities(const std::vector<std::pair<Poly, Rat>>& coll) {
    std::vector<Rat> mus;
    mus.reserve(coll.size());
    for (const auto& [g, mu] : coll) {
        if (!mu.is_positive()) throw error("equalize_multiplicities: nonpositive multiplicity");
        mus.push_back(mu);
    }
    mpz_class e = common_multiplicity(mus);
    if (!e.fits_slong_p()) throw error("equalize_multiplicities: common multiplicity overflow");
    long el = e.get_si();
    EqualizedCollection out;
    out.common = el;
    for (const auto& [g, mu] : coll) {
        Rat k = Rat(e) / mu;
        if (!k.is_integer()) throw error("equalize_multiplicities: internal non-integer power");
        out.items.emplace_back(g.pow(static_cast<int>(k.to_long())), el);
    }
    return out;
}

}  // namespace desing
