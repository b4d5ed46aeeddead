#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/errors.hpp"

namespace orbichi {

/// Hard cap on group orders the library will construct (wreath products of
/// catalog groups stay well below this at desk scale).
inline constexpr long long kOrderCap = 200000;
/// Orders up to this get a materialized multiplication table; larger groups
/// stay functional with on-demand multiplication.
inline constexpr int kTableCap = 2048;
/// Orders up to this get the full O(n^3) associativity check on construction.
inline constexpr int kValidateCap = 512;

namespace perm {

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Lexicographic rank of a permutation given as an image array.
inline long long rank(const std::vector<int>& p) {
    int n = (int)p.size();
    long long r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        r += smaller * factorial(n - 1 - i);
    }
    return r;
}

inline std::vector<int> unrank(int n, long long r) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) {
        long long f = factorial(n - 1 - i);
        int idx = (int)(r / f);
        r %= f;
        p[i] = pool[idx];
        pool.erase(pool.begin() + idx);
    }
    return p;
}

/// compose(s, t) = s after t:  result(i) = s(t(i)).
inline std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
    return r;
}

inline std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
    return r;
}

} // namespace perm

/// A finite group on dense element indices 0..order-1. Small groups carry an
/// explicit multiplication table; large ones (wreath products past the table
/// cap) multiply through a stored closure. Copies share the representation.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_table(std::vector<int32_t> table, std::string label) {
        auto rep = std::make_shared<Rep>();
        int n = 0;
        while ((long long)n * n < (long long)table.size()) ++n;
        if ((long long)n * n != (long long)table.size())
            throw validation_error("group table: size is not a perfect square");
        rep->order = n;
        rep->label = std::move(label);
        rep->table = std::move(table);
        validate_table(*rep);
        finish_table(*rep);
        return FiniteGroup(std::move(rep));
    }

    /// Functional group; identity and inverses are trusted as supplied.
    static FiniteGroup from_op(int order, std::function<int(int, int)> op, int identity,
                               std::function<int(int)> inv, std::string label) {
        if (order <= 0 || order > kOrderCap)
            throw budget_error("group: order " + std::to_string(order) + " exceeds cap");
        auto rep = std::make_shared<Rep>();
        rep->order = order;
        rep->identity = identity;
        rep->label = std::move(label);
        if (order <= kTableCap) {
            rep->table.resize((size_t)order * order);
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b) rep->table[(size_t)a * order + b] = op(a, b);
            finish_table(*rep);
        } else {
            rep->op = std::move(op);
            rep->op_inv = std::move(inv);
        }
        return FiniteGroup(std::move(rep));
    }

    int order() const { return rep_->order; }
    int identity() const { return rep_->identity; }
    const std::string& label() const { return rep_->label; }
    bool has_table() const { return !rep_->table.empty(); }

    int mul(int a, int b) const {
        check_index(a);
        check_index(b);
        const Rep& r = *rep_;
        return r.table.empty() ? r.op(a, b) : r.table[(size_t)a * r.order + b];
    }

    int inv(int a) const {
        check_index(a);
        const Rep& r = *rep_;
        return r.inv_table.empty() ? r.op_inv(a) : r.inv_table[a];
    }

    int conjugate(int h, int x) const { // h^-1 x h
        return mul(mul(inv(h), x), h);
    }

    int power(int a, long long e) const {
        if (e < 0) return power(inv(a), -e);
        int r = identity(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    int element_order(int a) const {
        int x = a, n = 1;
        while (x != identity()) {
            x = mul(x, a);
            ++n;
        }
        return n;
    }

    /// Same underlying representation (element indices are interchangeable).
    bool same_object(const FiniteGroup& o) const { return rep_ == o.rep_; }

private:
    struct Rep {
        int order = 1;
        int identity = 0;
        std::string label;
        std::vector<int32_t> table;     // row-major, empty when functional
        std::vector<int32_t> inv_table; // empty when functional
        std::function<int(int, int)> op;
        std::function<int(int)> op_inv;
    };

    explicit FiniteGroup(std::shared_ptr<Rep> rep) : rep_(std::move(rep)) {}

    void check_index(int a) const {
        if (a < 0 || a >= rep_->order)
            throw validation_error("group: element index out of range");
    }

    static void validate_table(Rep& rep) {
        int n = rep.order;
        auto at = [&](int a, int b) { return rep.table[(size_t)a * n + b]; };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (at(a, b) < 0 || at(a, b) >= n)
                    throw validation_error("group table: entry out of range at (" +
                                           std::to_string(a) + "," + std::to_string(b) + ")");
        int e = -1;
        for (int c = 0; c < n && e < 0; ++c) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
            if (ok) e = c;
        }
        if (e < 0) throw validation_error("group table: no two-sided identity");
        rep.identity = e;
        for (int a = 0; a < n; ++a) {
            bool found = false;
            for (int b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
            if (!found)
                throw validation_error("group table: element " + std::to_string(a) +
                                       " has no two-sided inverse");
        }
        if (n <= kValidateCap) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (at(at(a, b), c) != at(a, at(b, c)))
                            throw validation_error(
                                "group table: associativity fails at triple (" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
        }
    }

    static void finish_table(Rep& rep) {
        int n = rep.order;
        rep.inv_table.assign(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rep.table[(size_t)a * n + b] == rep.identity) {
                    rep.inv_table[a] = b;
                    break;
                }
        rep.op = nullptr;
        rep.op_inv = nullptr;
    }

    std::shared_ptr<const Rep> rep_ = default_rep();

    static std::shared_ptr<const Rep> default_rep() {
        static const std::shared_ptr<const Rep> trivial = [] {
            auto r = std::make_shared<Rep>();
            r->table = {0};
            r->inv_table = {0};
            r->label = "trivial";
            return r;
        }();
        return trivial;
    }
};

// ---------------------------------------------------------------------------
// Catalog constructors. Element orderings are fixed and documented so that
// identical specs always produce identical tables.
// ---------------------------------------------------------------------------

inline FiniteGroup trivial_group() {
    return FiniteGroup::from_table({0}, "trivial");
}

/// Z_n, element i = i-th power of the generator; mul = addition mod n.
inline FiniteGroup cyclic_group(int n) {
    if (n <= 0) throw validation_error("cyclic group: order must be positive");
    if (n > kTableCap) throw budget_error("cyclic group: order exceeds table cap");
    std::vector<int32_t> t((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[(size_t)a * n + b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(t), "cyclic:" + std::to_string(n));
}

/// S_n on {0..n-1}; element i is the permutation of lexicographic rank i
/// (as an image array), and mul(s,t) = s∘t (apply t first).
inline FiniteGroup symmetric_group(int n) {
    if (n <= 0) throw validation_error("symmetric group: n must be positive");
    long long ord = perm::factorial(n);
    if (ord > kOrderCap) throw budget_error("symmetric group: order exceeds cap");
    std::vector<std::vector<int>> elems((size_t)ord);
    for (long long i = 0; i < ord; ++i) elems[i] = perm::unrank(n, i);
    auto op = [elems](int a, int b) {
        return (int)perm::rank(perm::compose(elems[a], elems[b]));
    };
    auto inv = [elems](int a) { return (int)perm::rank(perm::inverse(elems[a])); };
    return FiniteGroup::from_op((int)ord, op, 0, inv, "symmetric:" + std::to_string(n));
}

/// Dihedral group of order 2n (symmetries of the n-gon). Indices 0..n-1 are
/// rotations r^i, n..2n-1 are reflections r^(i-n)·f, with f r f = r^-1.
inline FiniteGroup dihedral_group(int n) {
    if (n <= 0) throw validation_error("dihedral group: n must be positive");
    if (2 * n > kTableCap) throw budget_error("dihedral group: order exceeds table cap");
    int m = 2 * n;
    std::vector<int32_t> t((size_t)m * m);
    auto enc = [n](int rot, int flip) { return ((rot % n + n) % n) + (flip ? n : 0); };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int ra = a % n, fa = a / n, rb = b % n, fb = b / n;
            // (r^ra f^fa)(r^rb f^fb) = r^(ra + rb or ra - rb) f^(fa xor fb)
            int rot = fa ? ra - rb : ra + rb;
            t[(size_t)a * m + b] = enc(rot, fa ^ fb);
        }
    return FiniteGroup::from_table(std::move(t), "dihedral:" + std::to_string(n));
}

/// G1 x G2 with componentwise multiplication; element index = i1*|G2| + i2.
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
    long long ord = (long long)g1.order() * g2.order();
    if (ord > kOrderCap) throw budget_error("direct product: order exceeds cap");
    int n2 = g2.order();
    auto op = [g1, g2, n2](int a, int b) {
        return g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2);
    };
    auto inv = [g1, g2, n2](int a) { return g1.inv(a / n2) * n2 + g2.inv(a % n2); };
    int e = g1.identity() * n2 + g2.identity();
    return FiniteGroup::from_op((int)ord, op, e, inv,
                                "product(" + g1.label() + "," + g2.label() + ")");
}

// ---------------------------------------------------------------------------
// Subgroups and conjugacy classes.
// ---------------------------------------------------------------------------

/// Subgroup stored as the full sorted element list plus a membership bitmap.
class Subgroup {
public:
    Subgroup(FiniteGroup parent, std::vector<int> elements)
        : parent_(std::move(parent)), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        member_.assign(parent_.order(), false);
        for (int x : elements_) {
            if (x < 0 || x >= parent_.order())
                throw validation_error("subgroup: element index out of range");
            member_[x] = true;
        }
        validate();
    }

    static Subgroup trivial(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

    static Subgroup whole(const FiniteGroup& g) {
        std::vector<int> all(g.order());
        for (int i = 0; i < g.order(); ++i) all[i] = i;
        return Subgroup(g, std::move(all));
    }

    /// Closure of `gens` under multiplication and inverse.
    static Subgroup generated(const FiniteGroup& g, std::span<const int> gens) {
        std::vector<bool> seen(g.order(), false);
        std::vector<int> stack = {g.identity()}, elems;
        seen[g.identity()] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            elems.push_back(x);
            for (int s : gens) {
                for (int y : {g.mul(x, s), g.mul(x, g.inv(s))}) {
                    if (!seen[y]) {
                        seen[y] = true;
                        stack.push_back(y);
                    }
                }
            }
        }
        return Subgroup(g, std::move(elems));
    }

    const FiniteGroup& parent() const { return parent_; }
    const std::vector<int>& elements() const { return elements_; }
    int size() const { return (int)elements_.size(); }
    bool contains(int x) const { return x >= 0 && x < (int)member_.size() && member_[x]; }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_.same_object(b.parent_) && a.elements_ == b.elements_;
    }

    /// Materialize as a standalone group; second result maps the new dense
    /// index (position in the sorted element list) back to the parent index.
    std::pair<FiniteGroup, std::vector<int>> as_group() const {
        int n = size();
        if (n > kTableCap)
            throw budget_error("subgroup: too large to materialize as a table group");
        std::vector<int> to_sub(parent_.order(), -1);
        for (int i = 0; i < n; ++i) to_sub[elements_[i]] = i;
        std::vector<int32_t> t((size_t)n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                t[(size_t)a * n + b] = to_sub[parent_.mul(elements_[a], elements_[b])];
        return {FiniteGroup::from_table(std::move(t), parent_.label() + "-sub"), elements_};
    }

private:
    void validate() const {
        if (!contains(parent_.identity()))
            throw validation_error("subgroup: missing identity");
        for (int a : elements_) {
            if (!contains(parent_.inv(a)))
                throw validation_error("subgroup: not closed under inverse");
            for (int b : elements_)
                if (!contains(parent_.mul(a, b)))
                    throw validation_error("subgroup: not closed under multiplication");
        }
        if (parent_.order() % size() != 0)
            throw validation_error("subgroup: size does not divide group order");
    }

    FiniteGroup parent_;
    std::vector<int> elements_;
    std::vector<bool> member_;
};

struct ConjugacyClass {
    int representative = 0;     // minimal element index in the class
    std::vector<int> members;   // sorted
};

/// All conjugacy classes, sorted by (minimal) representative.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<ConjugacyClass> classes;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        ConjugacyClass cls;
        cls.representative = x;
        for (int h = 0; h < n; ++h) {
            int y = g.conjugate(h, x);
            if (!seen[y]) {
                seen[y] = true;
                cls.members.push_back(y);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

inline Subgroup centralizer(const FiniteGroup& g, int x) {
    std::vector<int> elems;
    for (int h = 0; h < g.order(); ++h)
        if (g.mul(h, x) == g.mul(x, h)) elems.push_back(h);
    return Subgroup(g, std::move(elems));
}

/// Centralizer of a set of elements (all h commuting with every one of them).
inline Subgroup centralizer_of_set(const FiniteGroup& g, std::span<const int> xs) {
    std::vector<int> elems;
    for (int h = 0; h < g.order(); ++h) {
        bool ok = true;
        for (int x : xs)
            if (g.mul(h, x) != g.mul(x, h)) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(h);
    }
    return Subgroup(g, std::move(elems));
}

inline Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> gens) {
    return Subgroup::generated(g, gens);
}

} // namespace orbichi
