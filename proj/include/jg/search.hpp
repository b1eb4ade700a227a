#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jg/errors.hpp"
#include "jg/group.hpp"
#include "jg/jstructure.hpp"

namespace jg {

enum class WitnessFilter { All, CentralizerPruned };
enum class EnumerationOrder { Canonical, Reversed };

struct SearchOptions {
    Variant variant = Variant::J2;
    WitnessFilter witness_filter = WitnessFilter::CentralizerPruned;
    std::uint64_t max_results = 0;  // 0 = unlimited
    EnumerationOrder enumeration_order = EnumerationOrder::Canonical;
    double time_budget_seconds = 60.0;
    std::uint32_t max_group_order = 64;
    std::uint64_t max_seeds_per_witness = 100000000;
    // Search the identity witness on nontrivial groups too (normally pruned:
    // only the trivial group admits it).
    bool allow_identity_witness = false;
};

struct SearchOutcome {
    std::vector<JStructure> structures;
    bool exhaustive = true;
    std::uint64_t witnesses_pruned = 0;
    std::uint64_t seeds_tested = 0;
};

namespace detail {

// Cycles of the permutation x -> x*w (or x -> w*x), each listed in step order
// starting from its least element. Every cycle has length order(w).
inline std::vector<std::vector<element_t>> witness_orbits(const FiniteGroup& g, element_t w,
                                                          bool left_step) {
    std::uint32_t n = g.order();
    std::vector<bool> visited(n, false);
    std::vector<std::vector<element_t>> orbits;
    for (element_t x = 0; x < n; ++x) {
        if (visited[x]) continue;
        std::vector<element_t> orbit;
        element_t cur = x;
        do {
            visited[cur] = true;
            orbit.push_back(cur);
            cur = left_step ? g.compose(w, cur) : g.compose(cur, w);
        } while (cur != x);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// Propagation along one orbit: with seed s at the representative,
//   right accumulation (J2/J4): f(orbit[k]) = s * A_k,  A_{k+1} = A_k * orbit[k]
//   left accumulation  (J1/J3): f(orbit[k]) = B_k * s,  B_{k+1} = orbit[k] * B_k
// The cycle closes for some (equivalently any) seed iff the full product A_d
// (resp. B_d) is the identity; that wrap-around test is seed-independent.
struct OrbitChain {
    std::vector<element_t> members;
    std::vector<element_t> acc;  // A_0..A_{d-1} (or B_0..B_{d-1})
    bool wraps = false;
};

inline OrbitChain build_chain(const FiniteGroup& g, std::vector<element_t> orbit, bool left_acc) {
    OrbitChain chain;
    chain.acc.reserve(orbit.size());
    element_t a = g.identity();
    for (element_t x : orbit) {
        chain.acc.push_back(a);
        a = left_acc ? g.compose(x, a) : g.compose(a, x);
    }
    chain.wraps = a == g.identity();
    chain.members = std::move(orbit);
    return chain;
}

}  // namespace detail

// Extend one seed value per orbit of right w-multiplication into a full map
// via f(x*w) := f(x)*x. Keys must be the least element of each orbit. Returns
// nothing when the wrap-around constraint fails.
inline std::optional<std::vector<element_t>> extend_from_seed(
    const FiniteGroup& g, element_t w, const std::map<element_t, element_t>& seeds) {
    g.at(w);
    auto orbits = detail::witness_orbits(g, w, false);
    if (seeds.size() != orbits.size())
        throw ValidationError("extend: expected exactly one seed per orbit, got " +
                              std::to_string(seeds.size()) + " for " + std::to_string(orbits.size()) +
                              " orbits (missing or duplicate seed)");
    std::vector<element_t> fmap(g.order());
    bool consistent = true;
    for (auto& orbit : orbits) {
        auto it = seeds.find(orbit[0]);
        if (it == seeds.end())
            throw ValidationError("extend: missing seed for the orbit of element " +
                                  std::to_string(orbit[0]));
        element_t s = it->second;
        g.at(s);
        auto chain = detail::build_chain(g, std::move(orbit), false);
        if (!chain.wraps) consistent = false;
        for (std::size_t k = 0; k < chain.members.size(); ++k)
            fmap[chain.members[k]] = g.compose(s, chain.acc[k]);
    }
    if (!consistent) return std::nullopt;
    return fmap;
}

// Enumerate all structures for each admissible witness by propagating seed
// values along witness orbits. The seed space per witness is
// |G|^(number of orbits); the wrap-around test runs first and is
// seed-independent, so a failing witness costs O(|G|) and cannot affect
// exhaustiveness.
inline SearchOutcome search_coset(GroupPtr group, const SearchOptions& opts = {}) {
    if (!group) throw ValidationError("search: missing group");
    if (!(opts.time_budget_seconds > 0)) throw ValidationError("search: time budget must be > 0");
    const FiniteGroup& g = *group;
    std::uint32_t n = g.order();
    if (n > opts.max_group_order)
        throw ValidationError("search: group order " + std::to_string(n) + " exceeds bound " +
                              std::to_string(opts.max_group_order));
    bool left_step = opts.variant == Variant::J3 || opts.variant == Variant::J4;
    bool left_acc = opts.variant == Variant::J1 || opts.variant == Variant::J3;
    auto t0 = std::chrono::steady_clock::now();
    auto expired = [&] {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        return dt.count() > opts.time_budget_seconds;
    };

    SearchOutcome out;
    JStructure cand;
    cand.group = group;
    cand.variant = opts.variant;
    cand.fmap.resize(n);
    for (element_t w = 0; w < n; ++w) {
        if (w == g.identity() && n > 1 && !opts.allow_identity_witness) {
            ++out.witnesses_pruned;
            continue;
        }
        if (opts.witness_filter == WitnessFilter::CentralizerPruned &&
            !check_witness_necessary(g, w).admissible) {
            ++out.witnesses_pruned;
            continue;
        }

        auto orbits = detail::witness_orbits(g, w, left_step);
        std::vector<detail::OrbitChain> chains;
        chains.reserve(orbits.size());
        bool wraps = true;
        for (auto& orbit : orbits) {
            chains.push_back(detail::build_chain(g, std::move(orbit), left_acc));
            if (!chains.back().wraps) {
                wraps = false;
                break;
            }
        }
        if (!wraps) continue;  // no seed assignment can close the cycles

        std::size_t k = chains.size();
        std::uint64_t seed_space = 1;
        bool too_big = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (seed_space > opts.max_seeds_per_witness / n) {
                too_big = true;
                break;
            }
            seed_space *= n;
        }
        if (too_big || seed_space > opts.max_seeds_per_witness) {
            out.exhaustive = false;
            continue;
        }

        cand.witness = w;
        std::vector<element_t> digits(k);
        for (std::uint64_t t = 0; t < seed_space; ++t) {
            if ((t & 0x1fff) == 0 && expired()) {
                out.exhaustive = false;
                return out;
            }
            std::uint64_t code = opts.enumeration_order == EnumerationOrder::Canonical
                                     ? t
                                     : seed_space - 1 - t;
            for (std::size_t i = k; i-- > 0;) {
                digits[i] = static_cast<element_t>(code % n);
                code /= n;
            }
            for (std::size_t i = 0; i < k; ++i) {
                const auto& chain = chains[i];
                element_t s = digits[i];
                for (std::size_t kk = 0; kk < chain.members.size(); ++kk)
                    cand.fmap[chain.members[kk]] = left_acc ? g.compose(chain.acc[kk], s)
                                                            : g.compose(s, chain.acc[kk]);
            }
            ++out.seeds_tested;
            cand.verified = false;
            if (verify_axiom(cand).valid) {
                cand.verified = true;
                out.structures.push_back(cand);
                if (opts.max_results != 0 && out.structures.size() >= opts.max_results) {
                    out.exhaustive = false;
                    return out;
                }
            }
        }
    }
    return out;
}

// Independent oracle: test every (witness, map) pair directly against the
// axiom. Cost |G|^(|G|+1), so the order is capped at 8.
inline SearchOutcome search_bruteforce(GroupPtr group, Variant variant = Variant::J2) {
    if (!group) throw ValidationError("search: missing group");
    const FiniteGroup& g = *group;
    std::uint32_t n = g.order();
    if (n > 8)
        throw ValidationError("brute force: group order " + std::to_string(n) + " exceeds bound 8");
    SearchOutcome out;
    JStructure cand;
    cand.group = group;
    cand.variant = variant;
    cand.fmap.assign(n, 0);
    bool left_arg = variant == Variant::J3 || variant == Variant::J4;
    bool left_inc = variant == Variant::J1 || variant == Variant::J3;
    for (element_t w = 0; w < n; ++w) {
        cand.witness = w;
        cand.fmap.assign(n, 0);
        for (;;) {
            ++out.seeds_tested;
            bool ok = true;
            for (element_t x = 0; x < n; ++x) {
                element_t arg = left_arg ? g.compose(w, x) : g.compose(x, w);
                element_t rhs = left_inc ? g.compose(x, cand.fmap[x]) : g.compose(cand.fmap[x], x);
                if (cand.fmap[arg] != rhs) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                cand.verified = false;
                if (verify_axiom(cand).valid) {
                    cand.verified = true;
                    out.structures.push_back(cand);
                }
            }
            std::uint32_t pos = n;
            bool rolled_over = false;
            for (;;) {
                if (pos == 0) {
                    rolled_over = true;
                    break;
                }
                --pos;
                if (++cand.fmap[pos] < n) break;
                cand.fmap[pos] = 0;
            }
            if (rolled_over) break;
        }
    }
    return out;
}

struct CertifyResult {
    bool certified = false;
    // meaningful when certified
    enum class Method { NecessaryCondition, ExhaustiveSearch } method = Method::NecessaryCondition;
    std::string detail;
    // structures found when certification fails
    std::vector<JStructure> structures_found;
    // false when the search was truncated and nothing was found
    bool conclusive = true;
};

inline const char* certify_method_name(CertifyResult::Method m) {
    return m == CertifyResult::Method::NecessaryCondition ? "necessary-condition"
                                                          : "exhaustive-search";
}

// Prove no structure exists: first by the witness necessary conditions alone,
// else by exhaustive search. Finding structures means certification fails.
inline CertifyResult certify_non_jgroup(GroupPtr group, SearchOptions opts = {}) {
    if (!group) throw ValidationError("certify: missing group");
    const FiniteGroup& g = *group;
    CertifyResult res;
    bool any_admissible = false;
    std::string first_reason;
    for (element_t w = 0; w < g.order(); ++w) {
        auto rep = check_witness_necessary(g, w);
        if (rep.admissible) {
            any_admissible = true;
            break;
        }
        if (first_reason.empty() && w != g.identity())
            first_reason = "w=" + std::to_string(w) + ": " + rep.reason;
    }
    if (!any_admissible) {
        res.certified = true;
        res.method = CertifyResult::Method::NecessaryCondition;
        res.detail = "none of the " + std::to_string(g.order()) +
                     " witness candidates passes the necessary conditions (first: " + first_reason +
                     ")";
        return res;
    }
    opts.max_results = 0;
    auto outcome = search_coset(group, opts);
    if (!outcome.structures.empty()) {
        res.certified = false;
        res.conclusive = true;
        res.structures_found = std::move(outcome.structures);
        res.detail = "search found " + std::to_string(res.structures_found.size()) + " structures";
        return res;
    }
    if (outcome.exhaustive) {
        res.certified = true;
        res.method = CertifyResult::Method::ExhaustiveSearch;
        res.detail = "exhaustive search over all admissible witnesses found no structure (" +
                     std::to_string(outcome.seeds_tested) + " seed assignments tested, " +
                     std::to_string(outcome.witnesses_pruned) + " witnesses pruned)";
        return res;
    }
    res.certified = false;
    res.conclusive = false;
    res.detail = "search was truncated before covering the space; no conclusion";
    return res;
}

}  // namespace jg
