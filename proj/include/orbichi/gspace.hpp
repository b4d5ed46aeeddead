#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbichi/errors.hpp"
#include "orbichi/group.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

/// One orbit of cells sigma^q x (G/K) with an integer multiplicity
/// (negative multiplicities are first-class; dimension only enters through
/// the sign (-1)^q).
struct Cell {
    int dim = 0;
    Subgroup stabilizer;
    long long multiplicity = 1;
};

/// Formal integer combination of cell orbits over a fixed group — the virtual
/// model of a G-invariant union of cells.
class VirtualGSpace {
public:
    explicit VirtualGSpace(FiniteGroup group) : group_(std::move(group)) {}
    VirtualGSpace(FiniteGroup group, std::vector<Cell> cells)
        : group_(std::move(group)), cells_(std::move(cells)) {
        for (const auto& c : cells_)
            if (!c.stabilizer.parent().same_object(group_))
                throw validation_error("virtual space: cell stabilizer has wrong parent group");
    }

    const FiniteGroup& group() const { return group_; }
    const std::vector<Cell>& cells() const { return cells_; }
    void add_cell(Cell c) {
        if (!c.stabilizer.parent().same_object(group_))
            throw validation_error("virtual space: cell stabilizer has wrong parent group");
        cells_.push_back(std::move(c));
    }

private:
    FiniteGroup group_;
    std::vector<Cell> cells_;
};

/// pt = G/G, the one-point space.
inline VirtualGSpace point_space(const FiniteGroup& g) {
    return VirtualGSpace(g, {Cell{0, Subgroup::whole(g), 1}});
}

/// One free orbit G/{e}.
inline VirtualGSpace free_orbit_space(const FiniteGroup& g) {
    return VirtualGSpace(g, {Cell{0, Subgroup::trivial(g), 1}});
}

/// The coset space G/K as 0-cells.
inline VirtualGSpace coset_space(const FiniteGroup& g, Subgroup k) {
    return VirtualGSpace(g, {Cell{0, std::move(k), 1}});
}

/// A space over the trivial group with the prescribed Euler characteristic,
/// as a single 0-cell with (possibly negative) multiplicity.
inline VirtualGSpace virtual_space(const FiniteGroup& trivial, long long chi) {
    VirtualGSpace x(trivial);
    if (chi != 0) x.add_cell(Cell{0, Subgroup::whole(trivial), chi});
    return x;
}

namespace detail {

/// Coset bookkeeping for K <= G: representative (minimal element) of every
/// left coset gK, plus the list of representatives.
struct Cosets {
    std::vector<int> rep_of;  // element -> minimal element of its coset
    std::vector<int> reps;    // ascending
};

inline Cosets left_cosets(const FiniteGroup& g, const Subgroup& k) {
    Cosets c;
    c.rep_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (c.rep_of[x] >= 0) continue;
        c.reps.push_back(x);
        for (int s : k.elements()) c.rep_of[g.mul(x, s)] = x;
    }
    return c;
}

} // namespace detail

/// Euler characteristic of the fixed locus of the subgroup generated by
/// `gens`: sum over cells of multiplicity * (-1)^dim * #{gK : g^-1<gens>g ⊆ K}.
inline long long fixed_euler_gens(const VirtualGSpace& x, std::span<const int> gens) {
    const FiniteGroup& g = x.group();
    long long total = 0;
    for (const auto& cell : x.cells()) {
        auto cosets = detail::left_cosets(g, cell.stabilizer);
        long long fixed = 0;
        for (int r : cosets.reps) {
            bool ok = true;
            int rinv = g.inv(r);
            for (int s : gens)
                if (!cell.stabilizer.contains(g.mul(g.mul(rinv, s), r))) {
                    ok = false;
                    break;
                }
            if (ok) ++fixed;
        }
        long long sign = cell.dim % 2 == 0 ? 1 : -1;
        total += cell.multiplicity * sign * fixed;
    }
    return total;
}

inline long long fixed_euler(const VirtualGSpace& x, const Subgroup& h) {
    if (!h.parent().same_object(x.group()))
        throw validation_error("fixed_euler: subgroup of a different group");
    return fixed_euler_gens(x, h.elements());
}

/// chi(X) = fixed locus of the trivial subgroup.
inline long long euler(const VirtualGSpace& x) {
    return fixed_euler_gens(x, std::span<const int>{});
}

inline VirtualGSpace disjoint_union(const VirtualGSpace& a, const VirtualGSpace& b) {
    if (!a.group().same_object(b.group()))
        throw validation_error("disjoint union: spaces live over different groups");
    std::vector<Cell> cells = a.cells();
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return VirtualGSpace(a.group(), std::move(cells));
}

/// The fixed locus of <gens> re-expressed as a space over the centralizer of
/// `gens`: fixed cosets decompose into centralizer orbits, one cell each.
struct RestrictedSpace {
    FiniteGroup group;           // the centralizer, as a standalone group
    std::vector<int> to_parent;  // centralizer index -> parent element
    VirtualGSpace space;         // over `group`
};

inline RestrictedSpace restrict_to_fixed_set(const VirtualGSpace& x, std::span<const int> gens) {
    const FiniteGroup& g = x.group();
    Subgroup cent = centralizer_of_set(g, gens);
    auto [cgroup, to_parent] = cent.as_group();
    std::vector<int> to_sub(g.order(), -1);
    for (int i = 0; i < (int)to_parent.size(); ++i) to_sub[to_parent[i]] = i;

    VirtualGSpace out(cgroup);
    for (const auto& cell : x.cells()) {
        auto cosets = detail::left_cosets(g, cell.stabilizer);
        std::vector<int> fixed;
        for (int r : cosets.reps) {
            bool ok = true;
            int rinv = g.inv(r);
            for (int s : gens)
                if (!cell.stabilizer.contains(g.mul(g.mul(rinv, s), r))) {
                    ok = false;
                    break;
                }
            if (ok) fixed.push_back(r);
        }
        std::vector<bool> used(g.order(), false);
        for (int r : fixed) {
            if (used[r]) continue;
            // centralizer orbit of the coset rK and its stabilizer in the centralizer
            std::vector<int> stab_sub;
            for (int ci = 0; ci < (int)to_parent.size(); ++ci) {
                int moved = cosets.rep_of[g.mul(to_parent[ci], r)];
                used[moved] = true;
                if (moved == r) stab_sub.push_back(ci);
            }
            out.add_cell(Cell{cell.dim, Subgroup(cgroup, std::move(stab_sub)),
                              cell.multiplicity});
        }
    }
    return {cgroup, to_parent, std::move(out)};
}

/// X^<g> over the centralizer of g.
inline RestrictedSpace restrict_to_fixed(const VirtualGSpace& x, int g) {
    int gens[1] = {g};
    return restrict_to_fixed_set(x, gens);
}

/// Validated injective homomorphism G -> H given as the full image array.
inline void validate_embedding(const FiniteGroup& g, const FiniteGroup& h,
                               const std::vector<int>& img) {
    if ((int)img.size() != g.order())
        throw validation_error("embedding: image array has wrong size");
    std::vector<bool> hit(h.order(), false);
    for (int v : img) {
        if (v < 0 || v >= h.order() || hit[v])
            throw validation_error("embedding: not injective");
        hit[v] = true;
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (img[g.mul(a, b)] != h.mul(img[a], img[b]))
                throw validation_error("embedding: not a homomorphism at (" +
                                       std::to_string(a) + "," + std::to_string(b) + ")");
}

/// ind_G^H Z = (H x Z)/~ : every cell sigma^q x (G/K) becomes
/// sigma^q x (H/K') with K' the image of K, realizing Z x (H/G).
inline VirtualGSpace induce(const VirtualGSpace& z, const FiniteGroup& h,
                            const std::vector<int>& embedding) {
    validate_embedding(z.group(), h, embedding);
    VirtualGSpace out(h);
    for (const auto& cell : z.cells()) {
        std::vector<int> image;
        image.reserve(cell.stabilizer.size());
        for (int s : cell.stabilizer.elements()) image.push_back(embedding[s]);
        out.add_cell(Cell{cell.dim, Subgroup(h, std::move(image)), cell.multiplicity});
    }
    return out;
}

/// Search for an injective homomorphism G -> H by extending generator images
/// through G's Cayley graph; deterministic (first in lexicographic order).
inline std::vector<int> find_embedding(const FiniteGroup& g, const FiniteGroup& h) {
    // Greedy generating set of G.
    std::vector<int> gens;
    {
        Subgroup span = Subgroup::trivial(g);
        for (int x = 0; x < g.order(); ++x)
            if (!span.contains(x)) {
                gens.push_back(x);
                std::vector<int> all = span.elements();
                all.push_back(x);
                span = Subgroup::generated(g, all);
            }
    }
    // Express every element as a word in the generators (BFS).
    std::vector<std::vector<int>> word_of(g.order()); // generator positions
    std::vector<bool> seen(g.order(), false);
    std::vector<int> queue = {g.identity()};
    seen[g.identity()] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = g.mul(x, gens[gi]);
            if (!seen[y]) {
                seen[y] = true;
                word_of[y] = word_of[x];
                word_of[y].push_back((int)gi);
                queue.push_back(y);
            }
        }
    }

    std::vector<int> choice(gens.size(), 0);
    std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
        if (depth == gens.size()) {
            std::vector<int> img(g.order());
            for (int x = 0; x < g.order(); ++x) {
                int v = h.identity();
                for (int gi : word_of[x]) v = h.mul(v, choice[gi]);
                img[x] = v;
            }
            try {
                validate_embedding(g, h, img);
            } catch (const validation_error&) {
                return false;
            }
            return true;
        }
        for (int v = 0; v < h.order(); ++v) {
            if (h.order() % g.order() != 0) break; // Lagrange rules it out entirely
            if (g.element_order(gens[depth]) != h.element_order(v)) continue;
            choice[depth] = v;
            if (rec(depth + 1)) return true;
        }
        return false;
    };
    if (gens.empty()) return std::vector<int>{h.identity()};
    if (!rec(0))
        throw validation_error("no injective homomorphism from " + g.label() + " into " +
                               h.label());
    std::vector<int> img(g.order());
    for (int x = 0; x < g.order(); ++x) {
        int v = h.identity();
        for (int gi : word_of[x]) v = h.mul(v, choice[gi]);
        img[x] = v;
    }
    return img;
}

// ---------------------------------------------------------------------------
// Honest finite G-sets.
// ---------------------------------------------------------------------------

/// A finite set with an explicit G-action table.
class FiniteGSet {
public:
    FiniteGSet(FiniteGroup group, int size, std::vector<int> action, bool validate = false)
        : group_(std::move(group)), size_(size), action_(std::move(action)) {
        if ((long long)group_.order() * size_ != (long long)action_.size())
            throw validation_error("G-set: action table has wrong size");
        for (int v : action_)
            if (v < 0 || v >= size_) throw validation_error("G-set: action entry out of range");
        if (validate) validate_axioms();
    }

    const FiniteGroup& group() const { return group_; }
    int size() const { return size_; }

    int act(int g, int x) const { return action_[(size_t)g * size_ + x]; }

    /// Both G-set axioms, checked exhaustively (quadratic in |G|).
    void validate_axioms() const {
        for (int x = 0; x < size_; ++x)
            if (act(group_.identity(), x) != x)
                throw validation_error("G-set: identity does not act trivially");
        for (int a = 0; a < group_.order(); ++a)
            for (int b = 0; b < group_.order(); ++b) {
                int ab = group_.mul(a, b);
                for (int x = 0; x < size_; ++x)
                    if (act(a, act(b, x)) != act(ab, x))
                        throw validation_error("G-set: action is not compatible at (" +
                                               std::to_string(a) + "," + std::to_string(b) + ")");
            }
    }

    std::vector<std::vector<int>> orbits() const {
        std::vector<bool> seen(size_, false);
        std::vector<std::vector<int>> out;
        for (int x = 0; x < size_; ++x) {
            if (seen[x]) continue;
            std::vector<int> orbit;
            for (int g = 0; g < group_.order(); ++g) {
                int y = act(g, x);
                if (!seen[y]) {
                    seen[y] = true;
                    orbit.push_back(y);
                }
            }
            std::sort(orbit.begin(), orbit.end());
            out.push_back(std::move(orbit));
        }
        return out;
    }

    Subgroup stabilizer(int x) const {
        std::vector<int> elems;
        for (int g = 0; g < group_.order(); ++g)
            if (act(g, x) == x) elems.push_back(g);
        return Subgroup(group_, std::move(elems));
    }

    /// Number of points fixed by every one of `gens`.
    long long fixed_count(std::span<const int> gens) const {
        long long count = 0;
        for (int x = 0; x < size_; ++x) {
            bool ok = true;
            for (int s : gens)
                if (act(s, x) != x) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
        }
        return count;
    }

    /// The same G-set as a virtual space of 0-cells, one per orbit.
    VirtualGSpace to_virtual() const {
        VirtualGSpace out(group_);
        for (const auto& orbit : orbits())
            out.add_cell(Cell{0, stabilizer(orbit.front()), 1});
        return out;
    }

private:
    FiniteGroup group_;
    int size_;
    std::vector<int> action_;
};

inline FiniteGSet point_gset(const FiniteGroup& g) {
    return FiniteGSet(g, 1, std::vector<int>((size_t)g.order(), 0));
}

/// G acting on itself by left multiplication.
inline FiniteGSet regular_gset(const FiniteGroup& g) {
    std::vector<int> action((size_t)g.order() * g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < g.order(); ++x) action[(size_t)a * g.order() + x] = g.mul(a, x);
    return FiniteGSet(g, g.order(), std::move(action));
}

/// G/K with points indexed by ascending coset representatives.
inline FiniteGSet coset_gset(const FiniteGroup& g, const Subgroup& k) {
    auto cosets = detail::left_cosets(g, k);
    std::vector<int> index_of(g.order(), -1);
    for (int i = 0; i < (int)cosets.reps.size(); ++i) index_of[cosets.reps[i]] = i;
    int m = (int)cosets.reps.size();
    std::vector<int> action((size_t)g.order() * m);
    for (int a = 0; a < g.order(); ++a)
        for (int i = 0; i < m; ++i)
            action[(size_t)a * m + i] = index_of[cosets.rep_of[g.mul(a, cosets.reps[i])]];
    return FiniteGSet(g, m, std::move(action));
}

inline FiniteGSet disjoint_union(const FiniteGSet& a, const FiniteGSet& b) {
    if (!a.group().same_object(b.group()))
        throw validation_error("disjoint union: G-sets over different groups");
    int m = a.size() + b.size();
    const FiniteGroup& g = a.group();
    std::vector<int> action((size_t)g.order() * m);
    for (int h = 0; h < g.order(); ++h) {
        for (int x = 0; x < a.size(); ++x) action[(size_t)h * m + x] = a.act(h, x);
        for (int x = 0; x < b.size(); ++x) action[(size_t)h * m + a.size() + x] = a.size() + b.act(h, x);
    }
    return FiniteGSet(g, m, std::move(action));
}

/// X^n with the wreath action ((g_1..g_n), s)(x_1..x_n) = (g_1 x_{s^-1(1)}, ...).
/// Points are n-tuples read as big-endian base-|X| numbers.
inline FiniteGSet cartesian_power_gset(const FiniteGSet& x, const WreathGroup& w,
                                       long long entry_cap = 5'000'000) {
    int n = w.n();
    if (!x.group().same_object(w.base()))
        throw validation_error("cartesian power: G-set and wreath base differ");
    long long points = 1;
    for (int i = 0; i < n; ++i) {
        points *= x.size();
        if (points * w.order() > entry_cap)
            throw budget_error("cartesian power: action table exceeds budget");
    }
    std::vector<int> action((size_t)w.order() * points);
    std::vector<int> tuple(n), moved(n);
    for (int gi = 0; gi < (int)w.order(); ++gi) {
        WreathElement e = w.decode(gi);
        auto sinv = perm::inverse(e.perm);
        for (long long p = 0; p < points; ++p) {
            long long v = p;
            for (int i = n - 1; i >= 0; --i) {
                tuple[i] = (int)(v % x.size());
                v /= x.size();
            }
            for (int i = 0; i < n; ++i) moved[i] = x.act(e.g[i], tuple[sinv[i]]);
            long long q = 0;
            for (int i = 0; i < n; ++i) q = q * x.size() + moved[i];
            action[(size_t)gi * points + p] = (int)q;
        }
    }
    return FiniteGSet(w.group(), (int)points, std::move(action));
}

} // namespace orbichi
