/*
 * groebner.hpp
 * ------------
 * Buchberger-based ideal computations: reduced Groebner bases, normal
 * forms, lex elimination, rational points of zero-dimensional ideals,
 * and a smoothness certificate for hypersurfaces.
 *
 * Instances are tiny (n <= 4, low degree), so this is the plain
 * normal-strategy Buchberger with both classical criteria and
 * primitive-coefficient intermediates; no F4/F5.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "desing/poly.hpp"

namespace desing {

class posdim_error : public error {
public:
    using error::error;
};

enum class OrderKind { Lex, GrevLex };

struct MonomialOrder {
    OrderKind kind = OrderKind::Lex;
    // perm[0] is the heaviest variable.  Empty means identity.
    std::vector<int> perm;

    static MonomialOrder lex(int nvars) {
        MonomialOrder o;
        o.kind = OrderKind::Lex;
        o.perm.resize(static_cast<size_t>(nvars));
        for (int i = 0; i < nvars; ++i) o.perm[static_cast<size_t>(i)] = i;
        return o;
    }
    static MonomialOrder grevlex(int nvars) {
        MonomialOrder o = lex(nvars);
        o.kind = OrderKind::GrevLex;
        return o;
    }

    // true if a > b in this order
    bool greater(const Monomial& a, const Monomial& b) const {
        if (kind == OrderKind::GrevLex) {
            int da = total_degree(a), db = total_degree(b);
            if (da != db) return da > db;
            // reverse lex: smaller exponent on the lightest variable wins
            for (size_t i = perm.size(); i-- > 0;) {
                int va = a[static_cast<size_t>(perm[i])], vb = b[static_cast<size_t>(perm[i])];
                if (va != vb) return va < vb;
            }
            return false;
        }
        for (int p : perm) {
            int va = a[static_cast<size_t>(p)], vb = b[static_cast<size_t>(p)];
            if (va != vb) return va > vb;
        }
        return false;
    }
};

struct IdealBasis {
    std::vector<Poly> gens;
    MonomialOrder order;
    bool reduced = false;
};

namespace detail {

inline std::optional<Monomial> leading_mono(const Poly& f, const MonomialOrder& ord) {
    if (f.is_zero()) return std::nullopt;
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || ord.greater(m, *best)) best = &m;
    return *best;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

inline Monomial mono_quot(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
    return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace detail

// Multivariate division remainder of f against the basis.
inline Poly normal_form(const Poly& f, const IdealBasis& basis) {
    if (basis.gens.empty()) throw error("normal_form: empty basis");
    struct LT {
        Monomial m;
        Rat c;
    };
    std::vector<LT> lts;
    for (const auto& g : basis.gens) {
        auto lm = detail::leading_mono(g, basis.order);
        if (!lm) continue;
        lts.push_back({*lm, g.coeff(*lm)});
    }
    Poly rem(f.nvars(), f.names());
    Poly work = f;
    while (!work.is_zero()) {
        Monomial lm = *detail::leading_mono(work, basis.order);
        bool divided = false;
        for (size_t i = 0; i < lts.size(); ++i) {
            if (detail::divides(lts[i].m, lm)) {
                Rat factor = work.coeff(lm) / lts[i].c;
                Poly mult = Poly::monomial(f.nvars(), detail::mono_quot(lm, lts[i].m), factor, f.names());
                work = work - mult * basis.gens[i];
                divided = true;
                break;
            }
        }
        if (!divided) {
            Rat c = work.coeff(lm);
            rem.add_term(lm, c);
            work.add_term(lm, -c);
        }
    }
    return rem;
}

// Reduced Groebner basis (monic, autoreduced); idempotent on its own
// output.  Normal pair selection, both Buchberger criteria.
inline IdealBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order) {
    IdealBasis basis;
    basis.order = order;
    std::vector<Poly> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(p.primitive());
    if (g.empty()) {
        basis.reduced = true;
        return basis;
    }
    int nvars = g[0].nvars();

    auto lm_of = [&](const Poly& p) { return *detail::leading_mono(p, order); };

    struct Pair {
        size_t i, j;
        Monomial lcm;
        int deg;
    };
    auto make_pair = [&](size_t i, size_t j) {
        Monomial l = detail::mono_lcm(lm_of(g[i]), lm_of(g[j]));
        return Pair{i, j, l, total_degree(l)};
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return !order.greater(a.lcm, b.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };

    std::vector<Pair> queue;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) queue.push_back(make_pair(i, j));

    auto spoly = [&](const Poly& a, const Poly& b) {
        Monomial la = lm_of(a), lb = lm_of(b);
        Monomial l = detail::mono_lcm(la, lb);
        Poly ma = Poly::monomial(nvars, detail::mono_quot(l, la), Rat(1) / a.coeff(la), a.names());
        Poly mb = Poly::monomial(nvars, detail::mono_quot(l, lb), Rat(1) / b.coeff(lb), b.names());
        return ma * a - mb * b;
    };

    std::set<std::pair<size_t, size_t>> done;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        done.insert({p.i, p.j});
        // first Buchberger criterion: coprime leading monomials
        if (detail::coprime(lm_of(g[p.i]), lm_of(g[p.j]))) continue;
        // chain criterion: some g[k] with lm dividing lcm, both mixed
        // pairs already handled
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!detail::divides(lm_of(g[k]), p.lcm)) continue;
            auto key = [&](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(p.i, k)) && done.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;

        IdealBasis cur{g, order, false};
        Poly r = normal_form(spoly(g[p.i], g[p.j]), cur);
        if (r.is_zero()) continue;
        r = r.primitive();
        g.push_back(r);
        for (size_t k = 0; k + 1 < g.size(); ++k) queue.push_back(make_pair(k, g.size() - 1));
    }

    // autoreduce to the unique reduced basis
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i < g.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < g.size(); ++j)
                if (j != i && !g[j].is_zero()) others.push_back(g[j]);
            if (others.empty()) continue;
            Poly r = normal_form(g[i], IdealBasis{others, order, false});
            if (r != g[i]) {
                g[i] = r;
                changed = true;
            }
        }
        g.erase(std::remove_if(g.begin(), g.end(), [](const Poly& p) { return p.is_zero(); }), g.end());
        if (!changed) break;
    }
    for (auto& p : g) p = p.monic();
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
        return !order.greater(lm_of(a), lm_of(b)) && lm_of(a) != lm_of(b);
    });
    basis.gens = g;
    basis.reduced = true;
    return basis;
}

// Generators of the elimination ideal in the kept variables.  The
// basis must be a lex basis whose permutation puts every eliminated
// variable before every kept one.
inline std::vector<Poly> eliminate(const IdealBasis& basis, const std::set<int>& keep) {
    if (basis.order.kind != OrderKind::Lex) throw error("eliminate: requires a lex order");
    bool seen_kept = false;
    for (int p : basis.order.perm) {
        bool kept = keep.count(p) > 0;
        if (kept) seen_kept = true;
        else if (seen_kept) throw error("eliminate: order does not eliminate the complement of keep");
    }
    std::vector<Poly> out;
    for (const auto& gpoly : basis.gens) {
        bool ok = true;
        for (const auto& [m, c] : gpoly.terms()) {
            for (size_t i = 0; i < m.size() && ok; ++i)
                if (m[i] > 0 && !keep.count(static_cast<int>(i))) ok = false;
            if (!ok) break;
        }
        if (ok) out.push_back(gpoly);
    }
    return out;
}

namespace detail {

// All rational roots of a nonzero univariate polynomial (given in an
// ambient space, supported on variable `var` only).
inline std::vector<Rat> rational_roots(const Poly& f, int var) {
    std::vector<Rat> roots;
    Poly g = f.primitive();
    // factor out powers of var: root 0
    OrdVal v = g.order_along_var(var);
    if (!v.is_infinite() && v.value() > 0) {
        roots.push_back(Rat(0));
        g = g.div_var_power(var, static_cast<int>(v.value()));
    }
    if (g.is_constant()) return roots;
    int deg = g.degree_in(var);
    mpz_class lead, trail;
    for (const auto& [m, c] : g.terms()) {
        if (m[var] == deg) lead = c.num();
        if (m[var] == 0) trail = c.num();
    }
    if (trail == 0) return roots;  // already handled var = 0
    auto divisors = [](mpz_class n) {
        n = ::abs(n);
        std::vector<mpz_class> ds;
        for (mpz_class d = 1; d * d <= n; ++d) {
            if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    for (const auto& p : divisors(trail)) {
        for (const auto& q : divisors(lead)) {
            for (int s : {1, -1}) {
                mpq_class cand(s * p, q);
                cand.canonicalize();
                Rat r(cand);
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                Point pt(std::vector<Rat>(static_cast<size_t>(f.nvars()), Rat(0)));
                pt.coords[static_cast<size_t>(var)] = r;
                // evaluate only in var: other vars are absent from g
                if (g.evaluate(pt).is_zero()) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline bool is_pure_power(const Monomial& m, int var) {
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0 && static_cast<int>(i) != var) return false;
    return m[static_cast<size_t>(var)] > 0;
}

inline void solve_triangular(const std::vector<Poly>& gens, std::vector<int> vars,
                             Point partial, std::vector<Point>& out, int degree_bound);

}  // namespace detail

// All points with all-rational coordinates of a zero-dimensional ideal,
// via lex triangularization and rational-root extraction.  Throws
// posdim_error when the ideal is not zero-dimensional over the closure.
inline std::vector<Point> rational_points_zero_dim(const std::vector<Poly>& gens,
                                                   int degree_bound = 64) {
    if (gens.empty()) throw error("rational_points_zero_dim: no generators");
    int nvars = gens[0].nvars();
    MonomialOrder lex = MonomialOrder::lex(nvars);
    IdealBasis gb = buchberger(gens, lex);
    if (gb.gens.empty()) throw posdim_error("rational_points_zero_dim: zero ideal");
    if (gb.gens.size() == 1 && gb.gens[0].is_constant() && !gb.gens[0].is_zero()) return {};
    // finiteness criterion: every variable has a pure-power leading monomial
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : gb.gens) {
            auto lm = detail::leading_mono(g, lex);
            if (lm && detail::is_pure_power(*lm, v)) {
                found = true;
                break;
            }
        }
        if (!found) throw posdim_error("ideal is not zero-dimensional");
    }
    std::vector<int> vars;
    for (int v = nvars - 1; v >= 0; --v) vars.push_back(v);  // lightest first
    std::vector<Point> out;
    Point partial(std::vector<Rat>(static_cast<size_t>(nvars), Rat(0)));
    detail::solve_triangular(gb.gens, vars, partial, out, degree_bound);
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
        for (size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        }
        return false;
    });
    return out;
}

namespace detail {

inline void solve_triangular(const std::vector<Poly>& gens, std::vector<int> vars,
                             Point partial, std::vector<Point>& out, int degree_bound) {
    if (vars.empty()) {
        for (const auto& g : gens)
            if (!g.is_zero()) return;
        out.push_back(partial);
        return;
    }
    int nvars = gens.empty() ? 0 : gens[0].nvars();
    // find a univariate generator in the lightest remaining variable
    int var = vars[0];
    Poly uni(nvars);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        bool only_var = true;
        for (const auto& [m, c] : g.terms())
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0 && static_cast<int>(i) != var) only_var = false;
        if (only_var && !g.is_constant()) {
            uni = g;
            break;
        }
        if (only_var && g.is_constant() && !g.is_zero()) return;  // unit: no points
    }
    if (uni.is_zero()) throw posdim_error("triangular solve: no univariate eliminant");
    if (uni.degree_in(var) > degree_bound) throw error("triangular solve: degree bound exceeded");
    for (const Rat& root : rational_roots(uni, var)) {
        // substitute var := root into all generators
        std::vector<Poly> next;
        std::vector<Poly> images;
        for (int i = 0; i < nvars; ++i) images.push_back(Poly::variable(nvars, i));
        images[static_cast<size_t>(var)] = Poly::constant(nvars, root);
        bool unit = false;
        for (const auto& g : gens) {
            Poly s = g.substitute(images);
            if (!s.is_zero()) {
                if (s.is_constant()) {
                    unit = true;
                    break;
                }
                next.push_back(s);
            }
        }
        if (unit) continue;
        Point p2 = partial;
        p2.coords[static_cast<size_t>(var)] = root;
        std::vector<int> rest(vars.begin() + 1, vars.end());
        if (next.empty()) {
            // remaining variables unconstrained: not zero-dimensional
            throw posdim_error("triangular solve: free variables after substitution");
        }
        // recompute a lex basis for the smaller system
        MonomialOrder lex = MonomialOrder::lex(nvars);
        IdealBasis gb = buchberger(next, lex);
        if (gb.gens.size() == 1 && gb.gens[0].is_constant()) continue;
        solve_triangular(gb.gens, rest, p2, out, degree_bound);
    }
}

}  // namespace detail

// True iff 1 lies in (f, grad f): the hypersurface f = 0 is smooth
// everywhere over the algebraic closure.  False means singular
// somewhere over the closure, possibly at no rational point.
inline bool smooth_certificate(const Poly& f) {
    if (f.is_zero()) throw error("smooth_certificate of the zero polynomial");
    std::vector<Poly> gens{f};
    for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
    IdealBasis gb = buchberger(gens, MonomialOrder::grevlex(f.nvars()));
    return gb.gens.size() == 1 && gb.gens[0].is_constant() && !gb.gens[0].is_zero();
}

}  // namespace desing
