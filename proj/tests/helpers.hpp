#pragma once

#include <cstdint>
#include <vector>

#include "jg/group.hpp"

namespace jgtest {

// The nonabelian group of order 21: pairs (i mod 7, j mod 3) with
// (i1,j1)*(i2,j2) = (i1 + 2^j1 * i2, j1 + j2), indexed as i*3 + j.
inline jg::FiniteGroup make_frobenius21() {
    auto twist = [](std::uint32_t j) -> std::uint32_t { return j == 0 ? 1 : (j == 1 ? 2 : 4); };
    std::vector<std::vector<jg::element_t>> rows(21, std::vector<jg::element_t>(21));
    for (std::uint32_t i1 = 0; i1 < 7; ++i1)
        for (std::uint32_t j1 = 0; j1 < 3; ++j1)
            for (std::uint32_t i2 = 0; i2 < 7; ++i2)
                for (std::uint32_t j2 = 0; j2 < 3; ++j2) {
                    std::uint32_t i = (i1 + twist(j1) * i2) % 7;
                    std::uint32_t j = (j1 + j2) % 3;
                    rows[i1 * 3 + j1][i2 * 3 + j2] = i * 3 + j;
                }
    return jg::FiniteGroup::from_table("F21", std::move(rows));
}

}  // namespace jgtest
