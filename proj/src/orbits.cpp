#include "spherelift/orbits.hpp"

#include "spherelift/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace slift {

namespace {

// Next subset of the same popcount (Gosper's hack); masks enumerate in
// increasing numeric order.
uint64_t next_subset(uint64_t v) {
    uint64_t c = v & (~v + 1);
    uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

uint64_t lowest_bit(uint64_t v) { return v & (~v + 1); }

std::vector<Rational> tag_vector(uint64_t set, uint64_t neg, int d) {
    std::vector<Rational> w(static_cast<size_t>(d), Rational(0));
    for (int i = 0; i < d; ++i) {
        uint64_t bit = 1ULL << i;
        if (set & bit) w[static_cast<size_t>(i)] = (neg & bit) ? Rational(-1) : Rational(1);
    }
    return w;
}

}  // namespace

void OrbitUnion::validate() const {
    if (parts.empty()) throw std::domain_error("OrbitUnion: empty");
    for (const auto& [a, b] : parts) OrbitParams{d, a, b}.validate();
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i] == parts[j]) throw std::domain_error("OrbitUnion: repeated part");
}

BigInt orbit_size(const OrbitParams& p) {
    p.validate();
    BigInt count = binom(p.d, p.a) * binom(p.d - p.a, p.b) * (BigInt(1) << (p.a + p.b - 2));
    if (p.a == p.b) count /= 2;
    return count;
}

void for_each_orbit_tag(const OrbitParams& p, const std::function<void(const OrbitTag&)>& fn) {
    p.validate();
    if (p.d > 64) throw std::domain_error("orbit enumeration supports d <= 64");
    const int d = p.d;
    const uint64_t full = d == 64 ? ~0ULL : (1ULL << d) - 1;

    // Counted loop: next_subset past the last a-subset would wrap at d = 64.
    BigInt remaining_a = binom(d, p.a);
    uint64_t ma = (1ULL << p.a) - 1;  // smallest a-subset
    for (; remaining_a > 0; --remaining_a, ma = next_subset(ma)) {
        uint64_t rest = full & ~ma;
        // b-subsets of the complement: enumerate b-subsets of [d] and keep
        // those disjoint from A by building them inside `rest` directly.
        // Walk subsets of `rest` with popcount b via compressed indexing.
        std::vector<int> free_idx;
        for (int i = 0; i < d; ++i)
            if (rest & (1ULL << i)) free_idx.push_back(i);
        int nfree = static_cast<int>(free_idx.size());
        if (nfree < p.b) continue;
        uint64_t mb_c = (1ULL << p.b) - 1;  // subset in compressed coordinates
        uint64_t top_c = (1ULL << nfree) - 1;
        for (; (mb_c & ~top_c) == 0; mb_c = next_subset(mb_c)) {
            uint64_t mb = 0;
            for (int i = 0; i < nfree; ++i)
                if (mb_c & (1ULL << i)) mb |= 1ULL << free_idx[static_cast<size_t>(i)];
            // canonical requirement when a = b: min(A) < min(B)
            if (p.a == p.b && lowest_bit(ma) > lowest_bit(mb)) {
                if (mb_c == top_c) break;
                continue;
            }
            // signs: the entry at min(A) and min(B) is +; others free
            uint64_t free_a = ma & ~lowest_bit(ma);
            uint64_t free_b = mb & ~lowest_bit(mb);
            // iterate subsets of free_a (the minus signs on A)
            uint64_t na = 0;
            while (true) {
                uint64_t nb = 0;
                while (true) {
                    fn(OrbitTag{ma, mb, na, nb});
                    if (nb == free_b) break;
                    nb = (nb - free_b) & free_b;
                }
                if (na == free_a) break;
                na = (na - free_a) & free_a;
            }
            if (mb_c == top_c) break;
        }
    }
}

std::vector<OrbitTag> enumerate_orbit_tags(const OrbitParams& p, uint64_t cap) {
    BigInt n = orbit_size(p);
    if (n > cap) throw std::domain_error("enumerate_orbit: size exceeds cap");
    std::vector<OrbitTag> tags;
    tags.reserve(n.convert_to<size_t>());
    for_each_orbit_tag(p, [&](const OrbitTag& t) { tags.push_back(t); });
    std::sort(tags.begin(), tags.end());
    return tags;
}

Subspace subspace_from_tag(const OrbitParams& p, const OrbitTag& tag) {
    return Subspace::plane_from_orthogonal_pair(tag_vector(tag.set_a, tag.neg_a, p.d),
                                                tag_vector(tag.set_b, tag.neg_b, p.d), p.d);
}

std::vector<Subspace> enumerate_orbit(const OrbitParams& p, uint64_t cap) {
    auto tags = enumerate_orbit_tags(p, cap);
    std::vector<Subspace> out;
    out.reserve(tags.size());
    for (const auto& t : tags) out.push_back(subspace_from_tag(p, t));
    return out;
}

Rational orbit_fourth_moment(const OrbitParams& p, Probe probe) {
    p.validate();
    long long a = p.a, b = p.b, d = p.d;
    if (probe == Probe::E1) return Rational(a + b, a * b * d);
    return Rational(8 * a * b + (d - 4) * (a + b), 2 * a * b * d * (d - 1));
}

Rational orbit_fourth_moment_brute(const OrbitParams& p, Probe probe, uint64_t cap) {
    BigInt n = orbit_size(p);
    if (n > cap) throw std::domain_error("orbit_fourth_moment_brute: size exceeds cap");
    size_t d = static_cast<size_t>(p.d);
    // xx^T for the probe; rational in both cases.
    RatMat xxt(d, d);
    if (probe == Probe::E1) {
        xxt(0, 0) = Rational(1);
    } else {
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) xxt(i, j) = Rational(1, 2);
    }
    Rational acc(0);
    for_each_orbit_tag(p, [&](const OrbitTag& tag) {
        Subspace w = subspace_from_tag(p, tag);
        // ||P x||^2 = x^T P x = tr(P xx^T) by idempotence; fourth power is its square
        Rational q = sym_product_trace(*w.projector, xxt);
        acc += q * q;
    });
    return acc / Rational(n);
}

Rational orbit_defect(const OrbitParams& p) {
    p.validate();
    long long a = p.a, b = p.b, d = p.d;
    return Rational((d + 2) * (a + b) - 8 * a * b, 2 * a * b * d * (d - 1));
}

namespace {

Rational union_fourth_moment_from_points(const std::vector<EnumeratedOrbit>& orbits,
                                         Probe probe) {
    size_t d = static_cast<size_t>(orbits.front().params.d);
    RatMat xxt(d, d);
    if (probe == Probe::E1) {
        xxt(0, 0) = Rational(1);
    } else {
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) xxt(i, j) = Rational(1, 2);
    }
    Rational acc(0);
    BigInt count = 0;
    for (const auto& orb : orbits) {
        for (const auto& w : orb.subspaces) {
            Rational q = sym_product_trace(*w.projector, xxt);
            acc += q * q;
            ++count;
        }
    }
    return acc / Rational(count);
}

}  // namespace

Certificate two_point_test(const std::vector<EnumeratedOrbit>& orbits) {
    if (orbits.empty()) throw std::domain_error("two_point_test: empty union");
    int d = orbits.front().params.d;
    for (const auto& orb : orbits) {
        orb.params.validate();
        if (orb.params.d != d) throw std::invalid_argument("two_point_test: mixed dimension");
        // Reject partial orbits: invariance under signed permutations relies
        // on each orbit being complete.
        if (BigInt(orb.subspaces.size()) != orbit_size(orb.params))
            throw std::domain_error("two_point_test: partial orbit input rejected");
        for (const auto& s : orb.subspaces)
            if (!s.has_exact())
                throw std::domain_error("two_point_test: exact projectors required");
    }
    for (size_t i = 0; i < orbits.size(); ++i)
        for (size_t j = i + 1; j < orbits.size(); ++j)
            if (std::pair(orbits[i].params.a, orbits[i].params.b) ==
                std::pair(orbits[j].params.a, orbits[j].params.b))
                throw std::domain_error("two_point_test: repeated orbit");

    Rational f1 = union_fourth_moment_from_points(orbits, Probe::E1);
    Rational f2 = union_fourth_moment_from_points(orbits, Probe::E1PlusE2);

    Certificate cert;
    cert.criterion = "two-point-tff2";
    cert.mode = Mode::Exact;
    cert.tolerance = 0.0;
    cert.degrees = {2};
    cert.items.push_back(exact_residual("moment-gap", f1 - f2));
    cert.finalize();
    return cert;
}

Certificate two_point_test(const OrbitUnion& u, uint64_t cap) {
    u.validate();
    std::vector<EnumeratedOrbit> orbits;
    for (const auto& [a, b] : u.parts) {
        OrbitParams p{u.d, a, b};
        orbits.push_back({p, enumerate_orbit(p, cap)});
    }
    return two_point_test(orbits);
}

UnionCondition union_condition(const OrbitUnion& u) {
    u.validate();
    UnionCondition out;
    out.weighted_defect_sum = Rational(0);
    for (const auto& [a, b] : u.parts) {
        OrbitParams p{u.d, a, b};
        out.weighted_defect_sum += Rational(orbit_size(p)) * orbit_defect(p);
    }
    out.pass = out.weighted_defect_sum.is_zero();
    return out;
}

std::vector<std::pair<int, int>> single_orbit_solutions(int d) {
    if (d < 2) throw std::domain_error("single_orbit_solutions: need d >= 2");
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= d; ++a)
        for (int b = a; a + b <= d; ++b)
            if (static_cast<long long>(d + 2) * (a + b) == 8LL * a * b) out.emplace_back(a, b);
    return out;
}

OrbitParams scale_solution(int d0, int a0, int b0, int s) {
    if (s < 1) throw std::domain_error("scale_solution: need s >= 1");
    OrbitParams seed{d0, a0, b0};
    seed.validate();
    if (static_cast<long long>(d0 + 2) * (a0 + b0) != 8LL * a0 * b0)
        throw std::domain_error("scale_solution: seed is not a single-orbit solution");
    OrbitParams out{(d0 + 2) * s - 2, a0 * s, b0 * s};
    out.validate();
    if (!orbit_defect(out).is_zero())
        throw std::logic_error("scale_solution: scaled defect nonzero");
    return out;
}

std::vector<TwoOrbitSolution> two_orbit_solutions(int d) {
    if (d < 2) throw std::domain_error("two_orbit_solutions: need d >= 2");
    struct Entry {
        std::pair<int, int> ab;
        Rational weighted;  // N * defect
    };
    std::vector<Entry> entries;
    for (int a = 1; a <= d; ++a)
        for (int b = a; a + b <= d; ++b) {
            OrbitParams p{d, a, b};
            entries.push_back({{a, b}, Rational(orbit_size(p)) * orbit_defect(p)});
        }

    // Index by value so the pairing scan is near-linear.
    std::map<Rational, std::vector<size_t>> by_value;
    for (size_t i = 0; i < entries.size(); ++i) by_value[entries[i].weighted].push_back(i);

    std::vector<TwoOrbitSolution> out;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& ei = entries[i];
        auto it = by_value.find(-ei.weighted);
        if (it == by_value.end()) continue;
        for (size_t j : it->second) {
            if (j <= i) continue;  // unordered pairs once
            out.push_back({ei.ab, entries[j].ab, !ei.weighted.is_zero()});
        }
    }
    std::sort(out.begin(), out.end(), [](const TwoOrbitSolution& x, const TwoOrbitSolution& y) {
        return std::tie(x.first, x.second) < std::tie(y.first, y.second);
    });
    return out;
}

}  // namespace slift
