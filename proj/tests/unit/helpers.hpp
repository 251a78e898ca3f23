#pragma once

#include "catcoh/json_io.hpp"

#include "../oracles/corpus.hpp"
#include "../oracles/oracles.hpp"

#include "doctest.h"

#include <functional>
#include <optional>

namespace testing {

using namespace catcoh;

inline HomologyGroup Z(std::size_t r = 1)
{
    return HomologyGroup{r, {}};
}

inline HomologyGroup torsion(long d)
{
    return HomologyGroup{0, {Integer(d)}};
}

inline ExactMatrix mat(std::vector<std::vector<long>> rows, std::size_t cols_if_empty = 0)
{
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long v : row)
            r.back().emplace_back(v);
    }
    return ExactMatrix::from_rows(r, cols_if_empty);
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n)
{
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return t;
}

inline std::size_t mor(const FinCat& c, const std::string& name)
{
    auto m = c.find_morphism(name);
    REQUIRE(m.has_value());
    return *m;
}

inline std::size_t obj(const FinCat& c, const std::string& name)
{
    auto o = c.find_object(name);
    REQUIRE(o.has_value());
    return *o;
}

inline std::optional<ErrorKind> error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

} // namespace testing
