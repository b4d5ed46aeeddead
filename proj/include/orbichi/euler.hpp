#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "orbichi/errors.hpp"
#include "orbichi/gspace.hpp"
#include "orbichi/group.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/rational.hpp"
#include "orbichi/series.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

using EulerValue = Rational;

/// chi^(A)(X, G) = (1/|G|) * sum over Hom(A,G) of chi(X^<φ(A)>).
inline Rational chi_A(const VirtualGSpace& x, const FgPresentation& a,
                      const EnumerationBudget& budget = {}) {
    const FiniteGroup& g = x.group();
    Rational total(0);
    detail::for_each_hom(a, g, budget, false, [&](const std::vector<int>& images) {
        total += Rational(fixed_euler_gens(x, images));
    });
    return total / Rational(g.order());
}

/// Same average on an honest G-set: fixed sets are literal point counts.
inline Rational chi_A(const FiniteGSet& x, const FgPresentation& a,
                      const EnumerationBudget& budget = {}) {
    const FiniteGroup& g = x.group();
    Rational total(0);
    detail::for_each_hom(a, g, budget, false, [&](const std::vector<int>& images) {
        total += Rational(x.fixed_count(images));
    });
    return total / Rational(g.order());
}

/// chi^(k)(X, G) by the conjugacy-class recursion
///   chi^(k)(X,G) = sum over [g] of chi^(k-1)(X^<g>, C_G(g)),
/// bottoming out at chi^(0)(X,G) = (1/|G|) sum_g chi(X^<g>) = chi(X/G).
inline Rational chi_k_recursive(const VirtualGSpace& x, int k) {
    const FiniteGroup& g = x.group();
    if (k < 0) throw validation_error("chi_k_recursive: negative order");
    if (k == 0) {
        Rational total(0);
        for (int e = 0; e < g.order(); ++e) {
            int gens[1] = {e};
            total += Rational(fixed_euler_gens(x, gens));
        }
        return total / Rational(g.order());
    }
    Rational total(0);
    for (const auto& cls : conjugacy_classes(g)) {
        RestrictedSpace rs = restrict_to_fixed(x, cls.representative);
        total += chi_k_recursive(rs.space, k - 1);
    }
    return total;
}

/// chi^(k)(pt, G) = |Hom(Z^{k+1}, G)| / |G| on a materialized group, via the
/// same class recursion specialised to the one-point space. Always an integer.
inline long long chi_k_point(const FiniteGroup& g, int k) {
    if (k < 0) throw validation_error("chi_k_point: negative order");
    if (k == 0) return 1;
    long long total = 0;
    for (const auto& cls : conjugacy_classes(g)) {
        auto [cg, to_parent] = centralizer(g, cls.representative).as_group();
        total += chi_k_point(cg, k - 1);
    }
    return total;
}

/// chi^(k)(pt, G wr S_n) through the conjugacy census of the wreath product:
/// classes are types {m_r(c)}, and the centralizer of a class splits as the
/// product over (r, c) of (C_G(c)·<a_{r,c}>) wr S_{m_r(c)}, whose base factor
/// is the cyclic extension of C_G(c) by an r-th root of c. No element of the
/// wreath product is ever materialized.
inline long long chi_k_point_wreath(const FiniteGroup& g, int n, int k) {
    if (k < 0) throw validation_error("chi_k_point_wreath: negative order");
    if (n == 0 || k == 0) return 1;
    long long total = 0;
    for (const auto& [type, size] : conjugacy_classes_by_type(g, n)) {
        long long product = 1;
        for (const auto& [key, m] : type.counts) {
            auto [r, rep] = key;
            auto [cg, to_parent] = centralizer(g, rep).as_group();
            int c_in_sub = (int)(std::lower_bound(to_parent.begin(), to_parent.end(), rep) -
                                 to_parent.begin());
            FiniteGroup ext = cyclic_extension(cg, c_in_sub, r);
            product *= chi_k_point_wreath(ext, (int)m, k - 1);
        }
        total += product;
    }
    return total;
}

/// Proposition-style product reduction:
///   chi^(A1 x A2)(X,G) = sum over [φ] in Hom(A1,G)/G of
///                        chi^(A2)(X^<φ(A1)>, C_G(φ(A1))).
inline Rational reduce_product(const VirtualGSpace& x, const FgPresentation& a1,
                               const FgPresentation& a2, const EnumerationBudget& budget = {}) {
    Rational total(0);
    for (const auto& orbit : hom_orbits(a1, x.group(), budget)) {
        RestrictedSpace rs = restrict_to_fixed_set(x, orbit.representative.images);
        total += chi_A(rs.space, a2, budget);
    }
    return total;
}

/// Direct engine: coefficient of t^n is chi^(A)(X^n, G_n), computed in the
/// explicit wreath group by enumerating Hom(A, G_n) and counting fixed tuples.
inline RationalSeries zeta_direct(const FiniteGSet& x, const FgPresentation& a, int order,
                                  const EnumerationBudget& budget = {}) {
    RationalSeries zeta = RationalSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        WreathGroup w(x.group(), n);
        FiniteGSet power = cartesian_power_gset(x, w);
        zeta.set(n, chi_A(power, a, budget));
    }
    return zeta;
}

namespace detail {

/// chi^(A)(pt, L wr S_m) by materializing the wreath product and counting
/// homomorphisms into it.
inline Rational chi_A_point_wreath_brute(const FiniteGroup& l, int m, const FgPresentation& a,
                                         const EnumerationBudget& budget) {
    if (m == 0) return Rational(1);
    WreathGroup w(l, m);
    return Rational(count_homs(a, w.group(), budget), w.order());
}

} // namespace detail

/// One-point series zeta^(A)_(K/K, K): coefficient n is |Hom(A, K_n)| / |K_n|.
/// Routing: free-abelian presentations go through the type census
/// (chi_k_point_wreath); presentations with a Z direct factor peel it and sum
/// chi^(A')(pt, centralizer) over the classes-by-type of K_n; everything else
/// (and brute_force = true) counts homomorphisms in the materialized wreath
/// product.
inline RationalSeries zeta_one_point(const FiniteGroup& k, const FgPresentation& a, int order,
                                     const EnumerationBudget& budget = {},
                                     bool brute_force = false) {
    RationalSeries zeta = RationalSeries::one(order);
    int rank = a.free_abelian_rank();
    for (int n = 1; n <= order; ++n) {
        if (brute_force) {
            zeta.set(n, detail::chi_A_point_wreath_brute(k, n, a, budget));
            continue;
        }
        if (rank == 0) { // A trivial: |Hom| = 1
            long long ord = perm::factorial(n);
            for (int i = 0; i < n; ++i) ord *= k.order();
            zeta.set(n, Rational(1, ord));
            continue;
        }
        if (rank > 0) {
            zeta.set(n, Rational(chi_k_point_wreath(k, n, rank - 1)));
            continue;
        }
        if (auto rest = a.without_one_z_factor()) {
            Rational coeff(0);
            for (const auto& [type, size] : conjugacy_classes_by_type(k, n)) {
                Rational product(1);
                for (const auto& [key, m] : type.counts) {
                    auto [r, rep] = key;
                    auto [cg, to_parent] = centralizer(k, rep).as_group();
                    int c_in_sub =
                        (int)(std::lower_bound(to_parent.begin(), to_parent.end(), rep) -
                              to_parent.begin());
                    FiniteGroup ext = cyclic_extension(cg, c_in_sub, r);
                    product *= detail::chi_A_point_wreath_brute(ext, (int)m, *rest, budget);
                }
                coeff += product;
            }
            zeta.set(n, coeff);
            continue;
        }
        zeta.set(n, detail::chi_A_point_wreath_brute(k, n, a, budget));
    }
    return zeta;
}

/// Cellwise engine: zeta of the whole space is the product over cell orbits
/// (q, K, m) of the one-point series over K raised to m * (-1)^q. This is the
/// computational content of the multiplicativity lemma plus the reduction of
/// (G/K)^n to (K/K)^n by induction.
inline RationalSeries zeta_cellwise(const VirtualGSpace& x, const FgPresentation& a, int order,
                                    const EnumerationBudget& budget = {},
                                    bool brute_force = false) {
    RationalSeries result = RationalSeries::one(order);
    for (const auto& cell : x.cells()) {
        auto [kg, to_parent] = cell.stabilizer.as_group();
        RationalSeries base = zeta_one_point(kg, a, order, budget, brute_force);
        long long e = cell.multiplicity * (cell.dim % 2 == 0 ? 1 : -1);
        result = result * pow_integer(base, e);
    }
    return result;
}

} // namespace orbichi
