#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/errors.hpp"
#include "orbichi/group.hpp"

namespace orbichi {

/// Element of G wr S_n: a vector of n base-group elements and a permutation
/// (image array). Multiplication:
///   ((g_1..g_n), s)((g'_1..g'_n), s') = ((g_1 g'_{s^-1(1)} .. g_n g'_{s^-1(n)}), ss').
struct WreathElement {
    std::vector<int> g;
    std::vector<int> perm;
};

/// The wreath product G_n = G wr S_n = G^n ⋊ S_n as an indexed group plus the
/// element codec. Index layout: idx = vec_rank * n! + perm_rank, where
/// vec_rank reads the g-vector as a big-endian base-|G| number and perm_rank
/// is the lexicographic rank, so indices are lexicographic in (g, perm).
class WreathGroup {
public:
    WreathGroup(FiniteGroup base, int n) : base_(std::move(base)), n_(n) {
        if (n <= 0) throw validation_error("wreath product: n must be positive");
        long long ord = perm::factorial(n);
        for (int i = 0; i < n; ++i) {
            ord *= base_.order();
            if (ord > kOrderCap)
                throw budget_error("wreath product: order exceeds cap");
        }
        order_ = ord;
        nfact_ = perm::factorial(n);

        FiniteGroup grp = base_; // self-contained copies for the closures
        int nn = n_;
        long long nfact = nfact_;
        auto decode = [grp, nn, nfact](long long idx) {
            WreathElement w;
            w.perm = perm::unrank(nn, idx % nfact);
            long long v = idx / nfact;
            w.g.resize(nn);
            for (int i = nn - 1; i >= 0; --i) {
                w.g[i] = (int)(v % grp.order());
                v /= grp.order();
            }
            return w;
        };
        auto encode = [grp, nn, nfact](const WreathElement& w) {
            long long v = 0;
            for (int i = 0; i < nn; ++i) v = v * grp.order() + w.g[i];
            return v * nfact + perm::rank(w.perm);
        };
        auto op = [grp, nn, decode, encode](int lhs, int rhs) {
            WreathElement x = decode(lhs), y = decode(rhs);
            WreathElement z;
            z.perm = perm::compose(x.perm, y.perm);
            auto xinv = perm::inverse(x.perm);
            z.g.resize(nn);
            for (int i = 0; i < nn; ++i) z.g[i] = grp.mul(x.g[i], y.g[xinv[i]]);
            return (int)encode(z);
        };
        auto inv = [grp, nn, decode, encode](int a) {
            WreathElement x = decode(a);
            WreathElement z;
            z.perm = perm::inverse(x.perm);
            z.g.resize(nn);
            for (int i = 0; i < nn; ++i) z.g[i] = grp.inv(x.g[z.perm[i]]);
            return (int)encode(z);
        };
        int e = (int)encode(WreathElement{std::vector<int>(nn, base_.identity()),
                                          perm::unrank(nn, 0)});
        group_ = FiniteGroup::from_op((int)order_, op, e, inv,
                                      "wreath(" + base_.label() + "," + std::to_string(n) + ")");
    }

    const FiniteGroup& group() const { return group_; }
    const FiniteGroup& base() const { return base_; }
    int n() const { return n_; }
    long long order() const { return order_; }

    WreathElement decode(int idx) const {
        WreathElement w;
        w.perm = perm::unrank(n_, idx % nfact_);
        long long v = idx / nfact_;
        w.g.resize(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            w.g[i] = (int)(v % base_.order());
            v /= base_.order();
        }
        return w;
    }

    int encode(const WreathElement& w) const {
        if ((int)w.g.size() != n_ || (int)w.perm.size() != n_)
            throw validation_error("wreath element: wrong arity");
        long long v = 0;
        for (int i = 0; i < n_; ++i) v = v * base_.order() + w.g[i];
        return (int)(v * nfact_ + perm::rank(w.perm));
    }

private:
    FiniteGroup base_;
    int n_;
    long long order_ = 0;
    long long nfact_ = 1;
    FiniteGroup group_;
};

/// G wr S_n as a plain FiniteGroup.
inline FiniteGroup wreath_group(const FiniteGroup& g, int n) {
    return WreathGroup(g, n).group();
}

/// Cycles of a permutation (image array). Each cycle starts at its minimal
/// index and lists the forward orbit i, s(i), s(s(i)), ...
inline std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    int n = (int)perm.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        int j = i;
        do {
            seen[j] = true;
            c.push_back(j);
            j = perm[j];
        } while (j != i);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

/// Product of the g-entries along one cycle of a.perm, taken in the order
/// that makes it transform by conjugation when the wreath element is
/// conjugated (start at the cycle's first entry, then follow s^-1). Returns
/// the conjugacy-class representative of the product in the base group; the
/// class is independent of the chosen starting point.
inline int cycle_product_class(const WreathGroup& w, const WreathElement& a,
                               const std::vector<int>& cycle) {
    if (cycle.empty()) throw validation_error("cycle product: empty cycle");
    for (size_t j = 0; j < cycle.size(); ++j) {
        int from = cycle[j], to = cycle[(j + 1) % cycle.size()];
        if (from < 0 || from >= w.n() || a.perm[from] != to)
            throw validation_error("cycle product: not a cycle of the permutation");
    }
    const FiniteGroup& g = w.base();
    int p = a.g[cycle[0]];
    for (size_t j = cycle.size() - 1; j >= 1; --j) p = g.mul(p, a.g[cycle[j]]);
    int best = p;
    for (int h = 0; h < g.order(); ++h) best = std::min(best, g.conjugate(h, p));
    return best;
}

/// The type {m_r(c)} of a wreath element: for every cycle length r and base
/// conjugacy class [c], the number of r-cycles whose cycle product lies in
/// [c]. Satisfies sum r*m_r(c) = n.
struct WreathType {
    int n = 0;
    std::map<std::pair<int, int>, long long> counts; // (r, class representative) -> m

    friend bool operator==(const WreathType& a, const WreathType& b) {
        return a.n == b.n && a.counts == b.counts;
    }
    friend bool operator<(const WreathType& a, const WreathType& b) {
        return a.counts < b.counts;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (auto& [key, m] : counts) {
            if (!first) s += ", ";
            first = false;
            s += "m_" + std::to_string(key.first) + "(" + std::to_string(key.second) +
                 ")=" + std::to_string(m);
        }
        return s + "}";
    }
};

inline WreathType type_of(const WreathGroup& w, const WreathElement& a) {
    WreathType t;
    t.n = w.n();
    for (const auto& cycle : cycles_of(a.perm)) {
        int c = cycle_product_class(w, a, cycle);
        t.counts[{(int)cycle.size(), c}] += 1;
    }
    return t;
}

inline WreathType type_of(const WreathGroup& w, int element) {
    return type_of(w, w.decode(element));
}

/// Order of the centralizer of any element of the given type:
///   prod over (r, c) of (r * |C_G(c)|)^{m_r(c)} * m_r(c)!
/// which is the order of the product of wreath factors
/// (C_G(c)·<a_{r,c}>) wr S_{m_r(c)} in the centralizer decomposition.
inline long long centralizer_order_by_type(const WreathType& t, const FiniteGroup& g) {
    auto classes = conjugacy_classes(g);
    std::map<int, long long> cent_of_rep;
    for (const auto& cls : classes)
        cent_of_rep[cls.representative] = g.order() / (long long)cls.members.size();
    long long weight = 0, result = 1;
    for (auto& [key, m] : t.counts) {
        auto [r, rep] = key;
        if (m < 0 || r <= 0 || !cent_of_rep.count(rep))
            throw validation_error("wreath type: inconsistent entry " + t.str());
        weight += (long long)r * m;
        long long factor = r * cent_of_rep[rep];
        for (long long i = 0; i < m; ++i) result *= factor * (i + 1);
    }
    if (weight != t.n)
        throw validation_error("wreath type: weights sum to " + std::to_string(weight) +
                               ", expected " + std::to_string(t.n));
    return result;
}

namespace detail {

/// All functions assigning a partition to each conjugacy class of G with
/// total size n, i.e. the types of G wr S_n.
inline void enumerate_types(const std::vector<int>& class_reps, int n, size_t which, int left,
                            WreathType& current, std::vector<WreathType>& out) {
    if (which == class_reps.size()) {
        if (left == 0) out.push_back(current);
        return;
    }
    // Distribute part-multiplicities m_r onto class_reps[which], spending at
    // most `left` total weight; whatever is unspent goes to later classes.
    std::function<void(int, int)> assign = [&](int maxPart, int remaining) {
        if (maxPart == 0) {
            enumerate_types(class_reps, n, which + 1, remaining, current, out);
            return;
        }
        for (int m = 0; m * maxPart <= remaining; ++m) {
            if (m > 0) current.counts[{maxPart, class_reps[which]}] = m;
            assign(maxPart - 1, remaining - m * maxPart);
            if (m > 0) current.counts.erase({maxPart, class_reps[which]});
        }
    };
    assign(left, left);
}

} // namespace detail

/// One entry per conjugacy class of G wr S_n: the class's type and its size
/// |G_n| / centralizer_order_by_type. Sorted by type key; sizes sum to |G_n|.
inline std::vector<std::pair<WreathType, long long>>
conjugacy_classes_by_type(const FiniteGroup& g, int n) {
    std::vector<int> reps;
    for (const auto& cls : conjugacy_classes(g)) reps.push_back(cls.representative);
    std::vector<WreathType> types;
    WreathType scratch;
    scratch.n = n;
    detail::enumerate_types(reps, n, 0, n, scratch, types);
    std::sort(types.begin(), types.end());
    long long order = perm::factorial(n);
    for (int i = 0; i < n; ++i) order *= g.order();
    std::vector<std::pair<WreathType, long long>> out;
    out.reserve(types.size());
    for (auto& t : types) {
        long long c = centralizer_order_by_type(t, g);
        out.push_back({std::move(t), order / c});
    }
    return out;
}

/// The group C·<a> from the centralizer decomposition: C extended by a
/// central element a with a^r equal to the given central element c of C
/// (so <a> ∩ C = <a^r> and the order is r·|C|). Index layout: (h, j) -> h*r + j
/// with h in C and j the power of a.
inline FiniteGroup cyclic_extension(const FiniteGroup& c_group, int c, int r) {
    if (r <= 0) throw validation_error("cyclic extension: r must be positive");
    for (int h = 0; h < c_group.order(); ++h)
        if (c_group.mul(h, c) != c_group.mul(c, h))
            throw validation_error("cyclic extension: c must be central");
    if (r == 1) return c_group;
    long long ord = (long long)c_group.order() * r;
    if (ord > kOrderCap) throw budget_error("cyclic extension: order exceeds cap");
    std::vector<int32_t> t((size_t)ord * ord);
    auto enc = [r](int h, int j) { return h * r + j; };
    for (int h1 = 0; h1 < c_group.order(); ++h1)
        for (int j1 = 0; j1 < r; ++j1)
            for (int h2 = 0; h2 < c_group.order(); ++h2)
                for (int j2 = 0; j2 < r; ++j2) {
                    int carry = (j1 + j2) / r;
                    int h = c_group.mul(c_group.mul(h1, h2), c_group.power(c, carry));
                    t[(size_t)enc(h1, j1) * ord + enc(h2, j2)] = enc(h, (j1 + j2) % r);
                }
    return FiniteGroup::from_table(std::move(t), c_group.label() + "-ext" + std::to_string(r));
}

} // namespace orbichi
