#pragma once

#include <set>
#include <string>
#include <utility>

#include "onedep/errors.hpp"

namespace onedep {

/// Alphabet {0, .., m-1} with a set B of ordered adjacent pairs.
class PairSet {
public:
    PairSet(int m, std::set<std::pair<int, int>> pairs) : m_(m), pairs_(std::move(pairs)) {
        if (m_ < 1) throw ValidationError("PairSet: alphabet size must be positive");
        for (auto [x, y] : pairs_)
            if (x < 0 || y < 0 || x >= m_ || y >= m_)
                throw ValidationError("PairSet: pair (" + std::to_string(x) + "," + std::to_string(y) +
                                      ") outside alphabet");
    }

    static PairSet all(int m) {
        std::set<std::pair<int, int>> b;
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) b.emplace(x, y);
        return {m, std::move(b)};
    }
    static PairSet descents(int m) {
        std::set<std::pair<int, int>> b;
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < x; ++y) b.emplace(x, y);
        return {m, std::move(b)};
    }

    int alphabet() const { return m_; }
    const std::set<std::pair<int, int>>& pairs() const { return pairs_; }
    bool contains(int x, int y) const { return pairs_.count({x, y}) != 0; }

private:
    int m_;
    std::set<std::pair<int, int>> pairs_;
};

}  // namespace onedep
