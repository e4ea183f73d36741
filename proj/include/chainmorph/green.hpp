#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "partial_map.hpp"
#include "transforms.hpp"

namespace chainmorph {

inline constexpr std::size_t max_bijection_rank = 8;

// theta with theta(a) = x(beta) for any x in a(alpha^-1); requires Ker(alpha) = Ker(beta).
inline PartialMap canonical_bijection(const PartialMap& a, const PartialMap& b) {
    require_same_chain(a, b);
    if (!a.same_kernel(b)) throw Error(ErrorKind::KernelMismatch, a.to_string() + " and " + b.to_string() + " have different kernels");
    PartialMap theta(a.n());
    for (int x : a.domain()) theta.set(a(x), b(x));
    return theta;
}

// A full extension of theta lying in OP (or O), by depth-first search over the
// undefined points. Branches whose value prefix already has two cyclic descents
// are cut; every candidate is re-checked against the class definition.
inline std::optional<PartialMap> is_completable(const PartialMap& theta, ClassTag tag,
                                                std::uint64_t max_nodes = configured_max_candidates()) {
    if (tag != ClassTag::OP && tag != ClassTag::O)
        throw Error(ErrorKind::NotInClass, "completions are searched in OP or O only");
    const int n = theta.n();
    std::vector<int> vals(static_cast<std::size_t>(n), 0);
    std::uint64_t nodes = 0;
    std::optional<PartialMap> found;
    std::function<void(int, int)> dfs = [&](int x, int descents) {
        if (found) return;
        if (++nodes > max_nodes) throw Error(ErrorKind::SizeLimit, "completion search exceeded " + std::to_string(max_nodes) + " nodes");
        if (x > n) {
            auto ext = PartialMap::full(vals);
            if (is_member(ext, tag)) found = ext;
            return;
        }
        int lo = 1, hi = n;
        if (theta.defined(x)) lo = hi = theta(x);
        for (int v = lo; v <= hi && !found; ++v) {
            int d = descents;
            if (x > 1) {
                int prev = vals[static_cast<std::size_t>(x - 2)];
                if (prev > v) ++d;
                if (tag == ClassTag::O && d > 0) continue;
                if (d > 1 || (d == 1 && v > vals[0])) continue;
            }
            vals[static_cast<std::size_t>(x - 1)] = v;
            dfs(x + 1, d);
        }
    };
    dfs(1, 0);
    return found;
}

inline bool is_bicompletable(const PartialMap& theta, ClassTag tag = ClassTag::OP,
                             std::uint64_t max_nodes = configured_max_candidates()) {
    if (!theta.is_injective()) throw Error(ErrorKind::NotInjective, theta.to_string() + " is not injective");
    return is_completable(theta, tag, max_nodes) && is_completable(invert(theta), tag, max_nodes);
}

enum class InjectionFlavor { Order, Orientation };

// Sorted matching of A into the first |A| elements of B.
inline std::optional<PartialMap> injection_exists(int n, const Subset& a, const Subset& b, InjectionFlavor flavor) {
    if (a.size() > b.size()) return std::nullopt;
    PartialMap w(n);
    for (std::size_t i = 0; i < a.size(); ++i) w.set(a[i], b[i]);
    bool ok = w.is_injective() && (flavor == InjectionFlavor::Order ? is_order_preserving(w) : is_orientation_preserving(w));
    if (!ok) return std::nullopt;
    return w;
}

struct Witness {
    std::string role;
    PartialMap map;
    bool verified = false;
};

struct GreenVerdict {
    Relation relation = Relation::L;
    bool holds = false;
    std::vector<Witness> witnesses;

    bool witnesses_verified() const {
        return std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.verified; });
    }
};

namespace detail {

inline bool in_op(const PartialMap& m) { return m.is_full() && is_orientation_preserving(m); }

inline bool extends(const PartialMap& ext, const PartialMap& part) { return restrict(ext, part.domain()) == part; }

inline int smallest_in(const Subset& candidates, const std::function<bool(int)>& pred) {
    for (int x : candidates)
        if (pred(x)) return x;
    return 0;
}

// gamma with a = gamma * b, for full OP maps with equal images.
inline PartialMap left_factor(const PartialMap& a, const PartialMap& b) {
    auto bideal = find_ideals(b).front();
    auto bb = b.image_of(bideal);
    auto in_b = [&](int x) { return std::binary_search(bideal.begin(), bideal.end(), x); };
    PartialMap g(a.n());
    for (int x = 1; x <= a.n(); ++x) {
        int y = a(x);
        auto pre = b.preimage(y);
        int z = std::binary_search(bb.begin(), bb.end(), y) ? smallest_in(pre, in_b) : pre.front();
        g.set(x, z);
    }
    return g;
}

// Section of b on Im(b) preferring preimages outside an ideal B for values in (X \ B)b.
inline PartialMap bar_section(const PartialMap& b) {
    auto bideal = find_ideals(b).front();
    auto rest = complement_in_domain(b, bideal);
    auto c = b.image_of(rest);
    auto in_b = [&](int x) { return std::binary_search(bideal.begin(), bideal.end(), x); };
    PartialMap s(b.n());
    for (int v : b.image()) {
        auto pre = b.preimage(v);
        int z = std::binary_search(c.begin(), c.end(), v) ? smallest_in(pre, [&](int x) { return !in_b(x); })
                                                            : smallest_in(pre, in_b);
        s.set(v, z);
    }
    return s;
}

inline void add_l_witnesses(const PartialMap& a, const PartialMap& b, GreenVerdict& v) {
    auto g = left_factor(a, b);
    auto l = left_factor(b, a);
    v.witnesses.push_back({"gamma: alpha = gamma beta", g, in_op(g) && compose(g, b) == a});
    v.witnesses.push_back({"lambda: beta = lambda alpha", l, in_op(l) && compose(l, a) == b});
}

inline bool add_r_witnesses(const PartialMap& a, const PartialMap& b, GreenVerdict& v) {
    auto theta = canonical_bijection(a, b);
    auto lam = is_completable(theta, ClassTag::OP);
    auto gam = lam ? is_completable(invert(theta), ClassTag::OP) : std::nullopt;
    if (!lam || !gam) return false;
    v.witnesses.push_back({"theta: canonical bijection", theta, compose(a, theta) == b && compose(b, invert(theta)) == a});
    v.witnesses.push_back({"lambda: beta = alpha lambda", *lam, in_op(*lam) && compose(a, *lam) == b});
    v.witnesses.push_back({"gamma: alpha = beta gamma", *gam, in_op(*gam) && compose(b, *gam) == a});
    return true;
}

// Calls f on injections A -> B in lexicographic order until f returns true.
inline bool search_injections(int n, const Subset& a, const Subset& b, const std::function<bool(const PartialMap&)>& f) {
    if (a.size() > b.size()) return false;
    if (b.size() > max_bijection_rank) throw Error(ErrorKind::SizeLimit, "image rank above " + std::to_string(max_bijection_rank));
    std::vector<char> used(b.size(), 0);
    PartialMap theta(n);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == a.size()) return is_orientation_preserving(theta) && f(theta);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            theta.set(a[i], b[j]);
            // Restrictions of an orientation-preserving map stay orientation-preserving.
            if (is_orientation_preserving(theta) && rec(i + 1)) return true;
            used[j] = 0;
        }
        theta.unset(a[i]);
        return false;
    };
    return rec(0);
}

// A full OP lambda and gamma with a = lambda b gamma, built from an injection theta: Im(a) -> Im(b).
inline bool add_j_witnesses(const PartialMap& a, const PartialMap& b, const std::string& label, GreenVerdict& v) {
    std::optional<PartialMap> theta, gam;
    search_injections(a.n(), a.image(), b.image(), [&](const PartialMap& t) {
        auto g = is_completable(invert(t), ClassTag::OP);
        if (!g) return false;
        theta = t;
        gam = g;
        return true;
    });
    if (!theta) return false;
    auto lam = compose(compose(a, *theta), bar_section(b));
    v.witnesses.push_back({"theta: injection " + label, *theta, theta->is_injective() && is_orientation_preserving(invert(*theta))});
    v.witnesses.push_back({"completion of theta^-1 " + label, *gam, in_op(*gam) && extends(*gam, invert(*theta))});
    v.witnesses.push_back({"lambda " + label, lam, in_op(lam) && compose(compose(lam, b), *gam) == a});
    return true;
}

} // namespace detail

inline void require_full_op(const PartialMap& m) {
    if (!m.is_full()) throw Error(ErrorKind::NotFull, m.to_string() + " is not full");
    if (!is_orientation_preserving(m)) throw Error(ErrorKind::NotInClass, m.to_string() + " is not in OP");
}

// Green's relations of OP(X_n) decided by the image/kernel/completability criteria.
inline GreenVerdict green_check_op(const PartialMap& a, const PartialMap& b, Relation rel) {
    require_same_chain(a, b);
    require_full_op(a);
    require_full_op(b);
    GreenVerdict v;
    v.relation = rel;
    switch (rel) {
    case Relation::L:
        v.holds = a.image() == b.image();
        if (v.holds) detail::add_l_witnesses(a, b, v);
        break;
    case Relation::R:
        v.holds = a.same_kernel(b) && detail::add_r_witnesses(a, b, v);
        break;
    case Relation::H:
        v.holds = a.image() == b.image() && a.same_kernel(b) && detail::add_r_witnesses(a, b, v);
        if (v.holds) detail::add_l_witnesses(a, b, v);
        break;
    case Relation::D: {
        auto ia = a.image(), ib = b.image();
        if (ia.size() != ib.size()) break;
        detail::search_injections(a.n(), ia, ib, [&](const PartialMap& theta) {
            auto xi = is_completable(theta, ClassTag::OP);
            if (!xi) return false;
            auto eta = is_completable(invert(theta), ClassTag::OP);
            if (!eta) return false;
            auto g = compose(a, *xi);
            v.holds = true;
            v.witnesses.push_back({"theta: bicompletable bijection", theta, theta.is_injective()});
            v.witnesses.push_back({"xi: completion of theta", *xi, detail::in_op(*xi) && detail::extends(*xi, theta)});
            v.witnesses.push_back({"eta: completion of theta^-1", *eta, detail::in_op(*eta) && detail::extends(*eta, invert(theta))});
            v.witnesses.push_back({"gamma = alpha xi, alpha R gamma", g, detail::in_op(g) && compose(g, *eta) == a});
            auto u = detail::left_factor(g, b);
            auto w = detail::left_factor(b, g);
            bool l_ok = g.image() == b.image() && detail::in_op(u) && detail::in_op(w) && compose(u, b) == g && compose(w, g) == b;
            v.witnesses.push_back({"gamma L beta: gamma = u beta", u, l_ok});
            return true;
        });
        break;
    }
    case Relation::J:
        v.holds = detail::add_j_witnesses(a, b, "alpha->beta", v) && detail::add_j_witnesses(b, a, "beta->alpha", v);
        if (!v.holds) v.witnesses.clear();
        break;
    }
    return v;
}

// Green's relations in PO, POP, POI or POPI (all regular monoids).
inline GreenVerdict green_check_regular(const PartialMap& a, const PartialMap& b, Relation rel, ClassTag tag) {
    if (tag != ClassTag::PO && tag != ClassTag::POP && tag != ClassTag::POI && tag != ClassTag::POPI)
        throw Error(ErrorKind::NotInClass, std::string(tag_name(tag)) + " is not handled by the regular-class criteria");
    require_same_chain(a, b);
    if (!is_member(a, tag)) throw Error(ErrorKind::NotInClass, a.to_string() + " is not in " + std::string(tag_name(tag)));
    if (!is_member(b, tag)) throw Error(ErrorKind::NotInClass, b.to_string() + " is not in " + std::string(tag_name(tag)));
    const bool injective = tag == ClassTag::POI || tag == ClassTag::POPI;
    const auto flavor = (tag == ClassTag::PO || tag == ClassTag::POI) ? InjectionFlavor::Order : InjectionFlavor::Orientation;
    auto same_image = a.image() == b.image();
    auto same_kernel = injective ? a.domain() == b.domain() : a.same_kernel(b);
    GreenVerdict v;
    v.relation = rel;
    auto add_injection = [&](const PartialMap& from, const PartialMap& to, const std::string& role) {
        auto w = injection_exists(a.n(), from.image(), to.image(), flavor);
        if (!w) return false;
        bool ok = w->domain() == from.image() && is_member(*w, ClassTag::POI);
        v.witnesses.push_back({role, *w, ok});
        return true;
    };
    switch (rel) {
    case Relation::L: v.holds = same_image; break;
    case Relation::R: v.holds = same_kernel; break;
    case Relation::H: v.holds = same_image && same_kernel; break;
    case Relation::D:
        v.holds = a.rank() == b.rank() && add_injection(a, b, "bijection Im(alpha) -> Im(beta)");
        break;
    case Relation::J:
        v.holds = add_injection(a, b, "injection Im(alpha) -> Im(beta)") && add_injection(b, a, "injection Im(beta) -> Im(alpha)");
        if (!v.holds) v.witnesses.clear();
        break;
    }
    return v;
}

} // namespace chainmorph
