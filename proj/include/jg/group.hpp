#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "jg/errors.hpp"
#include "jg/numeric.hpp"

namespace jg {

using element_t = std::uint32_t;

// A finite group as a validated Cayley table. Element 0 is always the
// identity; values are immutable after construction.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::string name, std::vector<std::vector<element_t>> rows,
                                  bool force_assoc_check = false) {
        std::size_t n = rows.size();
        if (n == 0) throw ValidationError("group: empty table");
        std::vector<element_t> flat;
        flat.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw ValidationError("group: table is not square");
            for (element_t v : row) {
                if (v >= n) throw ValidationError("group: table entry out of range");
                flat.push_back(v);
            }
        }
        return FiniteGroup(std::move(name), static_cast<std::uint32_t>(n), std::move(flat),
                           force_assoc_check);
    }

    std::uint32_t order() const { return n_; }
    const std::string& name() const { return name_; }
    element_t identity() const { return 0; }
    element_t compose(element_t a, element_t b) const { return table_[a * n_ + b]; }
    element_t inverse(element_t x) const { return inverses_[x]; }

    element_t at(element_t x) const {
        if (x >= n_) throw ValidationError("group: element index out of range");
        return x;
    }

    // x^k for any integer k, via the element's order.
    element_t power(element_t x, const Int& k) const {
        std::uint32_t d = element_order(x);
        Int r = mod_floor(k, Int(d));
        element_t out = 0;
        for (Int i = 0; i < r; ++i) out = compose(out, x);
        return out;
    }

    std::uint32_t element_order(element_t x) const {
        at(x);
        std::uint32_t k = 1;
        element_t acc = x;
        while (acc != 0) {
            acc = compose(acc, x);
            ++k;
        }
        return k;
    }

    bool is_abelian() const {
        for (element_t a = 0; a < n_; ++a)
            for (element_t b = a + 1; b < n_; ++b)
                if (compose(a, b) != compose(b, a)) return false;
        return true;
    }

    std::vector<std::vector<element_t>> table_rows() const {
        std::vector<std::vector<element_t>> rows(n_, std::vector<element_t>(n_));
        for (element_t i = 0; i < n_; ++i)
            for (element_t j = 0; j < n_; ++j) rows[i][j] = compose(i, j);
        return rows;
    }

private:
    FiniteGroup(std::string name, std::uint32_t n, std::vector<element_t> flat, bool force_check)
        : name_(std::move(name)), n_(n), table_(std::move(flat)) {
        for (element_t j = 0; j < n_; ++j)
            if (compose(0, j) != j || compose(j, 0) != j)
                throw ValidationError("group: element 0 is not an identity");
        inverses_.assign(n_, 0);
        for (element_t i = 0; i < n_; ++i) {
            bool found = false;
            for (element_t j = 0; j < n_; ++j) {
                if (compose(i, j) == 0 && compose(j, i) == 0) {
                    inverses_[i] = j;
                    found = true;
                    break;
                }
            }
            if (!found) throw ValidationError("group: element has no two-sided inverse");
        }
        if (n_ <= 256 || force_check) {
            for (element_t i = 0; i < n_; ++i)
                for (element_t j = 0; j < n_; ++j)
                    for (element_t k = 0; k < n_; ++k)
                        if (compose(compose(i, j), k) != compose(i, compose(j, k)))
                            throw ValidationError("group: table is not associative");
        }
    }

    std::string name_;
    std::uint32_t n_;
    std::vector<element_t> table_;
    std::vector<element_t> inverses_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// A subset of a group's elements, as a membership mask. Non-owning: valid
// while the referenced group lives.
class ElementSet {
public:
    ElementSet(const FiniteGroup& g, std::vector<bool> mask) : group_(&g), mask_(std::move(mask)) {
        if (mask_.size() != g.order()) throw ValidationError("element set: mask length mismatch");
    }

    const FiniteGroup& group() const { return *group_; }
    bool contains(element_t x) const { return x < mask_.size() && mask_[x]; }
    std::uint32_t size() const {
        return static_cast<std::uint32_t>(std::count(mask_.begin(), mask_.end(), true));
    }
    std::vector<element_t> elements() const {
        std::vector<element_t> out;
        for (element_t i = 0; i < mask_.size(); ++i)
            if (mask_[i]) out.push_back(i);
        return out;
    }

private:
    const FiniteGroup* group_;
    std::vector<bool> mask_;
};

inline FiniteGroup make_cyclic(std::uint32_t n) {
    if (n == 0) throw ValidationError("cyclic: order must be >= 1");
    std::vector<std::vector<element_t>> rows(n, std::vector<element_t>(n));
    for (element_t i = 0; i < n; ++i)
        for (element_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    return FiniteGroup::from_table("Z/" + std::to_string(n), std::move(rows));
}

inline FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                       std::uint64_t max_order = 1000000) {
    std::uint64_t n = std::uint64_t(g.order()) * h.order();
    if (n > max_order)
        throw ValidationError("product: order " + std::to_string(n) + " exceeds maximum " +
                              std::to_string(max_order));
    std::uint32_t nh = h.order();
    std::uint32_t nn = static_cast<std::uint32_t>(n);
    std::vector<std::vector<element_t>> rows(nn, std::vector<element_t>(nn));
    for (element_t a = 0; a < g.order(); ++a)
        for (element_t b = 0; b < nh; ++b)
            for (element_t c = 0; c < g.order(); ++c)
                for (element_t d = 0; d < nh; ++d)
                    rows[a * nh + b][c * nh + d] = g.compose(a, c) * nh + h.compose(b, d);
    return FiniteGroup::from_table(g.name() + " x " + h.name(), std::move(rows));
}

inline FiniteGroup make_symmetric(std::uint32_t n) {
    if (n < 1 || n > 5) throw ValidationError("symmetric: n must be in 1..5");
    std::vector<std::vector<element_t>> perms;
    std::vector<element_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<element_t>& q) {
        return static_cast<element_t>(
            std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::uint32_t order = static_cast<std::uint32_t>(perms.size());
    std::vector<std::vector<element_t>> rows(order, std::vector<element_t>(order));
    std::vector<element_t> comp(n);
    for (element_t i = 0; i < order; ++i)
        for (element_t j = 0; j < order; ++j) {
            for (std::uint32_t k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            rows[i][j] = index_of(comp);
        }
    return FiniteGroup::from_table("S" + std::to_string(n), std::move(rows));
}

// Order 2n: indices k in [0,n) are rotations r^k, n+k are reflections r^k s,
// with s r = r^-1 s.
inline FiniteGroup make_dihedral(std::uint32_t n) {
    if (n < 3) throw ValidationError("dihedral: n must be >= 3");
    std::uint32_t order = 2 * n;
    auto enc = [n](std::uint32_t flip, std::uint32_t rot) { return flip * n + rot % n; };
    std::vector<std::vector<element_t>> rows(order, std::vector<element_t>(order));
    for (std::uint32_t e = 0; e < 2; ++e)
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t d = 0; d < 2; ++d)
                for (std::uint32_t b = 0; b < n; ++b) {
                    std::uint32_t rot = e == 0 ? a + b : a + (n - b % n) % n;
                    rows[enc(e, a)][enc(d, b)] = enc((e + d) % 2, rot);
                }
    return FiniteGroup::from_table("D" + std::to_string(n), std::move(rows));
}

// Unit upper triangular n x n matrices over Z/p. The index encodes the strict
// upper entries in row-major order, least significant base-p digit first.
inline FiniteGroup make_unitriangular_mod(std::uint32_t n, std::uint32_t p) {
    if (n < 2 || n > 4) throw ValidationError("unitriangular: n must be in 2..4");
    if (!is_prime(Int(p))) throw ValidationError("unitriangular: p must be prime");
    std::uint32_t cells = n * (n - 1) / 2;
    std::uint64_t order64 = 1;
    for (std::uint32_t i = 0; i < cells; ++i) {
        order64 *= p;
        if (order64 > 1000000) throw ValidationError("unitriangular: order exceeds maximum");
    }
    std::uint32_t order = static_cast<std::uint32_t>(order64);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) pos.emplace_back(i, j);

    auto decode = [&](element_t idx) {
        std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
        for (std::uint32_t i = 0; i < n; ++i) m[i][i] = 1;
        for (auto [i, j] : pos) {
            m[i][j] = idx % p;
            idx /= p;
        }
        return m;
    };
    auto encode = [&](const std::vector<std::vector<std::uint32_t>>& m) {
        element_t idx = 0;
        for (std::uint32_t k = cells; k-- > 0;) idx = idx * p + m[pos[k].first][pos[k].second];
        return idx;
    };

    std::vector<std::vector<element_t>> rows(order, std::vector<element_t>(order));
    for (element_t a = 0; a < order; ++a) {
        auto ma = decode(a);
        for (element_t b = 0; b < order; ++b) {
            auto mb = decode(b);
            std::vector<std::vector<std::uint32_t>> mc(n, std::vector<std::uint32_t>(n, 0));
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i; j < n; ++j) {
                    std::uint32_t s = 0;
                    for (std::uint32_t k = i; k <= j; ++k) s += ma[i][k] * mb[k][j];
                    mc[i][j] = s % p;
                }
            rows[a][b] = encode(mc);
        }
    }
    return FiniteGroup::from_table("UT" + std::to_string(n) + "(" + std::to_string(p) + ")",
                                   std::move(rows));
}

inline std::uint32_t element_order(const FiniteGroup& g, element_t x) { return g.element_order(x); }

inline ElementSet centralizer(const FiniteGroup& g, element_t x) {
    g.at(x);
    std::vector<bool> mask(g.order(), false);
    for (element_t y = 0; y < g.order(); ++y) mask[y] = g.compose(x, y) == g.compose(y, x);
    return ElementSet(g, std::move(mask));
}

}  // namespace jg
