#include "icr/classify.hpp"

#include <algorithm>

namespace icr {

namespace {

// Conjugation with the inverse supplied, avoiding recomputation per member.
EndoPair conjugate_pair_with_inverse(const FiniteGroup& G, const Endomorphism& alpha,
                                     const Endomorphism& alpha_inv, const EndoPair& p) {
    EndoPair out;
    out.left.map.resize(G.n);
    out.right.map.resize(G.n);
    for (int x = 0; x < G.n; ++x) {
        const int xi = alpha_inv.map[x];
        out.left.map[x] = alpha.map[p.left.map[xi]];
        out.right.map[x] = alpha.map[p.right.map[xi]];
    }
    return out;
}

std::vector<Endomorphism> inverses_of(const FiniteGroup& G,
                                      const std::vector<Endomorphism>& autos) {
    std::vector<Endomorphism> inv;
    inv.reserve(autos.size());
    for (const Endomorphism& a : autos) inv.push_back(inverse_automorphism(G, a));
    return inv;
}

void guard_workload(const FiniteGroup& G, std::uint64_t pair_count) {
    if (pair_count > kEndoEnumLimit)
        throw CapError("pair list of " + G.name + " has " + std::to_string(pair_count) +
                       " entries, above materialization limit " + std::to_string(kEndoEnumLimit));
}

}  // namespace

std::vector<EndoPair> orbit_of_pair(const FiniteGroup& G, const std::vector<Endomorphism>& autos,
                                    const EndoPair& p) {
    std::vector<EndoPair> members;
    members.reserve(autos.size());
    for (const Endomorphism& a : autos)
        members.push_back(conjugate_pair_with_inverse(G, a, inverse_automorphism(G, a), p));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool similar_pairs(const FiniteGroup& G, const std::vector<Endomorphism>& autos,
                   const EndoPair& a, const EndoPair& b) {
    for (const Endomorphism& al : autos)
        if (conjugate_pair_with_inverse(G, al, inverse_automorphism(G, al), a) == b) return true;
    return false;
}

std::vector<Orbit> orbit_decomposition(const FiniteGroup& G,
                                       const std::vector<Endomorphism>& autos,
                                       const std::vector<EndoPair>& pairs) {
    if (!std::is_sorted(pairs.begin(), pairs.end()))
        throw ValidationError("orbit decomposition requires an ascending pair list");
    const std::vector<Endomorphism> inv = inverses_of(G, autos);

    std::vector<Orbit> orbits;
    std::vector<std::uint8_t> visited(pairs.size(), 0);
    // The sweep costs one conjugation per (orbit, automorphism), which cannot
    // be bounded ahead of time: it collapses to |Aut| total conjugations when
    // one orbit covers everything and grows to |pairs| * |Aut| when every
    // orbit is a singleton. Meter the work as it accrues.
    std::uint64_t work = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (visited[i]) continue;
        work += autos.size() * static_cast<std::uint64_t>(G.n) * 2;
        if (work > kClassifyPairLimit)
            throw CapError("classification sweep of " + G.name + " passed " +
                           std::to_string(orbits.size()) + " orbits and exceeded the work limit " +
                           std::to_string(kClassifyPairLimit));
        // Orbits partition the list, so the least unvisited index starts a
        // fresh orbit and is its least member.
        Orbit orb;
        orb.rep = pairs[i];
        std::vector<std::size_t> idxs;
        for (std::size_t a = 0; a < autos.size(); ++a) {
            const EndoPair q = conjugate_pair_with_inverse(G, autos[a], inv[a], pairs[i]);
            const auto it = std::lower_bound(pairs.begin(), pairs.end(), q);
            if (it == pairs.end() || !(*it == q))
                throw InternalCheckError("conjugate escaped the pair list: it is not closed");
            idxs.push_back(static_cast<std::size_t>(it - pairs.begin()));
        }
        std::sort(idxs.begin(), idxs.end());
        idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
        for (std::size_t j : idxs) {
            visited[j] = 1;
            orb.members.push_back(pairs[j]);
        }
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

ClassCounts tally_orbits(const FiniteGroup& G, const std::vector<Orbit>& orbits,
                         std::uint64_t pair_count) {
    ClassCounts c;
    c.pairs = pair_count;
    c.classes = orbits.size();
    for (const Orbit& o : orbits) {
        const RingProperties p = pair_properties(G, o.rep);
        c.associative += p.associative;
        c.commutative += p.commutative;
        c.commutative_associative += p.commutative && p.associative;
        c.idempotent_product += p.idempotent_product;
        c.band += p.band;
        c.proper += p.proper;
        c.zero_semigroup += p.zero_semigroup;
        c.essential += p.essential != EssentialKind::none;
    }
    c.inessential = c.classes - c.essential;
    return c;
}

Classification classify_all_pairs(const FiniteGroup& G) {
    const auto endos = enumerate_endomorphisms(G);
    const auto autos = enumerate_automorphisms(G);
    const std::uint64_t e = endos.size();

    std::vector<EndoPair> pairs;
    if (G.abelian) {
        guard_workload(G, e * e);
        pairs.reserve(e * e);
        for (const Endomorphism& f : endos)
            for (const Endomorphism& g : endos) pairs.push_back(EndoPair{f, g});
    } else {
        guard_workload(G, e * e);  // bound before filtering
        for (const Endomorphism& f : endos)
            for (const Endomorphism& g : endos)
                if (is_image_commuting(G, f, g)) pairs.push_back(EndoPair{f, g});
    }
    // Construction order is ascending because the endomorphism list is.
    Classification out;
    out.orbits = orbit_decomposition(G, autos, pairs);
    out.counts = tally_orbits(G, out.orbits, pairs.size());
    return out;
}

Classification classify_associative(const FiniteGroup& G) {
    const auto autos = enumerate_automorphisms(G);
    const std::uint64_t count = count_associative_pairs(G);
    guard_workload(G, count);

    std::vector<EndoPair> pairs;
    pairs.reserve(count);
    for_each_associative_pair(G, [&](const EndoPair& p) { pairs.push_back(p); });
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw InternalCheckError("duplicate commuting idempotent pairs streamed");

    Classification out;
    out.orbits = orbit_decomposition(G, autos, pairs);
    out.counts = tally_orbits(G, out.orbits, pairs.size());
    return out;
}

std::uint64_t burnside_all_pairs_class_count(const FiniteGroup& G) {
    const auto endos = enumerate_endomorphisms(G);
    const auto autos = enumerate_automorphisms(G);

    std::uint64_t total = 0;
    for (const Endomorphism& a : autos) {
        std::vector<const Endomorphism*> cent;
        for (const Endomorphism& f : endos)
            if (compose(G, a, f) == compose(G, f, a)) cent.push_back(&f);
        if (G.abelian) {
            total += static_cast<std::uint64_t>(cent.size()) * cent.size();
        } else {
            for (const Endomorphism* f : cent)
                for (const Endomorphism* g : cent)
                    if (is_image_commuting(G, *f, *g)) ++total;
        }
    }
    if (total % autos.size() != 0)
        throw InternalCheckError("fixed-pair total is not divisible by the automorphism count");
    return total / autos.size();
}

}  // namespace icr
