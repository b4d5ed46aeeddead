#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbichi/errors.hpp"
#include "orbichi/group.hpp"

namespace orbichi {

/// Counts work done while enumerating homomorphisms; throws once the limit is
/// hit so callers can fall back to a smarter route.
struct EnumerationBudget {
    long long limit = 100'000'000; // relator-symbol evaluations
    mutable long long used = 0;

    void charge(long long amount) const {
        used += amount;
        if (used > limit)
            throw budget_error("enumeration budget exceeded (" + std::to_string(limit) + ")");
    }
};

/// Structural knowledge about a presentation, used to pick fast evaluation
/// routes. The generic word-evaluation route stays valid regardless.
struct StructureHint {
    enum class Kind { none, free_abelian, cyclic, product };
    Kind kind = Kind::none;
    int parameter = 0; // rank (free_abelian) or modulus (cyclic)
    std::shared_ptr<const StructureHint> left, right; // product factors
};

/// Finitely generated group given by generators and relator words. Words are
/// lists of signed 1-based generator indices (negative = inverse).
class FgPresentation {
public:
    static FgPresentation free_abelian(int rank) {
        if (rank < 0) throw validation_error("free-abelian: negative rank");
        FgPresentation p;
        p.generators_ = rank;
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j)
                p.relators_.push_back({i, j, -i, -j});
        p.label_ = "free-abelian:" + std::to_string(rank);
        p.hint_.kind = StructureHint::Kind::free_abelian;
        p.hint_.parameter = rank;
        return p;
    }

    static FgPresentation cyclic(int m) {
        if (m <= 0) throw validation_error("cyclic presentation: modulus must be positive");
        FgPresentation p;
        p.generators_ = 1;
        std::vector<int> w(m, 1);
        p.relators_.push_back(std::move(w));
        p.label_ = "cyclic:" + std::to_string(m);
        p.hint_.kind = StructureHint::Kind::cyclic;
        p.hint_.parameter = m;
        return p;
    }

    /// A1 x A2: concatenated generators, both relator sets, plus commutators
    /// between every pair of generators across the factors.
    static FgPresentation product(const FgPresentation& a, const FgPresentation& b) {
        FgPresentation p;
        p.generators_ = a.generators_ + b.generators_;
        p.relators_ = a.relators_;
        for (const auto& w : b.relators_) {
            std::vector<int> shifted(w.size());
            for (size_t i = 0; i < w.size(); ++i)
                shifted[i] = w[i] > 0 ? w[i] + a.generators_ : w[i] - a.generators_;
            p.relators_.push_back(std::move(shifted));
        }
        for (int i = 1; i <= a.generators_; ++i)
            for (int j = a.generators_ + 1; j <= p.generators_; ++j)
                p.relators_.push_back({i, j, -i, -j});
        p.label_ = "product(" + a.label_ + "," + b.label_ + ")";
        p.hint_.kind = StructureHint::Kind::product;
        p.hint_.left = std::make_shared<StructureHint>(a.hint_);
        p.hint_.right = std::make_shared<StructureHint>(b.hint_);
        return p;
    }

    static FgPresentation from_relators(int generators, std::vector<std::vector<int>> relators,
                                        std::string label) {
        if (generators <= 0) throw validation_error("presentation: need at least one generator");
        for (const auto& w : relators)
            for (int s : w)
                if (s == 0 || std::abs(s) > generators)
                    throw validation_error("presentation: relator references invalid generator");
        FgPresentation p;
        p.generators_ = generators;
        p.relators_ = std::move(relators);
        p.label_ = std::move(label);
        return p;
    }

    int generators() const { return generators_; }
    const std::vector<std::vector<int>>& relators() const { return relators_; }
    const std::string& label() const { return label_; }
    const StructureHint& hint() const { return hint_; }

    int free_abelian_rank() const {
        return hint_.kind == StructureHint::Kind::free_abelian ? hint_.parameter : -1;
    }

    /// True when the structure hint guarantees a Z direct factor.
    bool has_z_factor() const { return hint_has_z(hint_); }

    /// The presentation left after peeling one Z factor off, when the hint
    /// shows one. Pairs with hom_orbits over A1 = Z in the product reduction.
    std::optional<FgPresentation> without_one_z_factor() const {
        return peel_z(*this);
    }

    int evaluate_word(const FiniteGroup& g, std::span<const int> images,
                      const std::vector<int>& word) const {
        int x = g.identity();
        for (int s : word) {
            int im = images[std::abs(s) - 1];
            x = g.mul(x, s > 0 ? im : g.inv(im));
        }
        return x;
    }

private:
    static bool hint_has_z(const StructureHint& h) {
        switch (h.kind) {
        case StructureHint::Kind::free_abelian: return h.parameter >= 1;
        case StructureHint::Kind::product:
            return (h.left && hint_has_z(*h.left)) || (h.right && hint_has_z(*h.right));
        default: return false;
        }
    }

    static std::optional<FgPresentation> peel_z(const FgPresentation& p) {
        const StructureHint& h = p.hint_;
        if (h.kind == StructureHint::Kind::free_abelian && h.parameter >= 1)
            return free_abelian(h.parameter - 1);
        if (h.kind == StructureHint::Kind::product) {
            auto rebuild = [](const StructureHint& hh) { return rebuild_from_hint(hh); };
            auto l = rebuild(*h.left), r = rebuild(*h.right);
            if (!l || !r) return std::nullopt;
            if (hint_has_z(*h.left)) {
                auto lp = peel_z(*l);
                if (!lp) return std::nullopt;
                if (lp->generators_ == 0) return r;
                return product(*lp, *r);
            }
            if (hint_has_z(*h.right)) {
                auto rp = peel_z(*r);
                if (!rp) return std::nullopt;
                if (rp->generators_ == 0) return l;
                return product(*l, *rp);
            }
        }
        return std::nullopt;
    }

    static std::optional<FgPresentation> rebuild_from_hint(const StructureHint& h) {
        switch (h.kind) {
        case StructureHint::Kind::free_abelian: return free_abelian(h.parameter);
        case StructureHint::Kind::cyclic: return cyclic(h.parameter);
        case StructureHint::Kind::product: {
            auto l = rebuild_from_hint(*h.left), r = rebuild_from_hint(*h.right);
            if (!l || !r) return std::nullopt;
            return product(*l, *r);
        }
        default: return std::nullopt;
        }
    }

    int generators_ = 0;
    std::vector<std::vector<int>> relators_;
    std::string label_;
    StructureHint hint_;
};

struct Homomorphism {
    FiniteGroup target;
    std::vector<int> images; // one element index per generator
};

namespace detail {

/// Backtracking enumeration in lexicographic order of image tuples. Each
/// relator is checked as soon as its last referenced generator is assigned.
/// Structure hints prune candidates early; `force_generic` disables that for
/// cross-checking.
template <typename Visitor>
void for_each_hom(const FgPresentation& a, const FiniteGroup& g, const EnumerationBudget& budget,
                  bool force_generic, Visitor&& visit) {
    int gens = a.generators();
    if (gens == 0) { // one empty-tuple homomorphism
        std::vector<int> none;
        visit(none);
        return;
    }
    int n = g.order();

    std::vector<std::vector<int>> relators_at(gens);
    for (const auto& w : a.relators()) {
        int last = 0;
        for (int s : w) last = std::max(last, std::abs(s));
        if (last == 0) continue; // empty word, trivially satisfied
        relators_at[last - 1].push_back((int)(&w - a.relators().data()));
    }

    const auto& hint = a.hint();
    bool fa_fast = !force_generic && hint.kind == StructureHint::Kind::free_abelian;
    std::vector<int> cyclic_candidates;
    if (!force_generic && hint.kind == StructureHint::Kind::cyclic) {
        for (int x = 0; x < n; ++x)
            if (g.power(x, hint.parameter) == g.identity()) cyclic_candidates.push_back(x);
    }

    std::vector<int> images(gens, 0);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == gens) {
            visit(images);
            return;
        }
        if (!cyclic_candidates.empty() && depth == 0) {
            for (int x : cyclic_candidates) {
                budget.charge(1);
                images[0] = x;
                rec(1);
            }
            return;
        }
        for (int x = 0; x < n; ++x) {
            budget.charge(1);
            images[depth] = x;
            if (fa_fast) {
                bool commutes = true;
                for (int i = 0; i < depth && commutes; ++i)
                    commutes = g.mul(images[i], x) == g.mul(x, images[i]);
                if (!commutes) continue;
            } else {
                bool ok = true;
                for (int ri : relators_at[depth]) {
                    const auto& w = a.relators()[ri];
                    budget.charge((long long)w.size());
                    if (a.evaluate_word(g, images, w) != g.identity()) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
            }
            rec(depth + 1);
        }
    };
    rec(0);
}

} // namespace detail

/// Complete duplicate-free list of homomorphisms A -> G, lexicographic in the
/// image tuples.
inline std::vector<Homomorphism> enumerate_homs(const FgPresentation& a, const FiniteGroup& g,
                                                const EnumerationBudget& budget = {},
                                                bool force_generic = false) {
    std::vector<Homomorphism> out;
    detail::for_each_hom(a, g, budget, force_generic,
                         [&](const std::vector<int>& images) { out.push_back({g, images}); });
    return out;
}

inline long long count_homs(const FgPresentation& a, const FiniteGroup& g,
                            const EnumerationBudget& budget = {}, bool force_generic = false) {
    long long count = 0;
    detail::for_each_hom(a, g, budget, force_generic, [&](const std::vector<int>&) { ++count; });
    return count;
}

struct HomOrbit {
    Homomorphism representative; // lexicographically minimal in its orbit
    long long size = 0;
};

/// Orbits of the conjugation action (h·φ)(x) = hφ(x)h⁻¹ on Hom(A,G),
/// sorted by representative image tuple.
inline std::vector<HomOrbit> hom_orbits(const FgPresentation& a, const FiniteGroup& g,
                                        const EnumerationBudget& budget = {}) {
    auto homs = enumerate_homs(a, g, budget);
    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < (int)homs.size(); ++i) index_of[homs[i].images] = i;

    std::vector<bool> assigned(homs.size(), false);
    std::vector<HomOrbit> orbits;
    for (int i = 0; i < (int)homs.size(); ++i) {
        if (assigned[i]) continue;
        long long size = 0;
        // Enumeration is lexicographic, so the first unassigned member is the
        // minimal representative of its orbit.
        std::vector<int> stack = {i};
        assigned[i] = true;
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            ++size;
            for (int h = 0; h < g.order(); ++h) {
                std::vector<int> conj(homs[j].images.size());
                for (size_t t = 0; t < conj.size(); ++t)
                    conj[t] = g.mul(g.mul(h, homs[j].images[t]), g.inv(h));
                auto it = index_of.find(conj);
                if (it == index_of.end())
                    throw validation_error("hom_orbits: conjugate is not a homomorphism");
                if (!assigned[it->second]) {
                    assigned[it->second] = true;
                    stack.push_back(it->second);
                }
            }
        }
        orbits.push_back({homs[i], size});
    }
    return orbits;
}

} // namespace orbichi
