#pragma once

// Fixture loading and independent reference computations shared by the
// unit and acceptance suites. Nothing here calls the codec under test.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperoct/numeral.hpp"
#include "hyperoct/sigperm.hpp"

#ifndef HYPEROCT_TEST_DATA_DIR
#error "HYPEROCT_TEST_DATA_DIR must point at tests/data"
#endif

namespace hyperoct::testing {

inline std::string data_path(std::string const& name)
{
    return std::string(HYPEROCT_TEST_DATA_DIR) + "/" + name;
}

inline std::vector<std::string> read_lines(std::string const& name)
{
    std::ifstream in(data_path(name));
    if (!in)
        throw std::runtime_error("cannot open fixture " + name);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            lines.push_back(line);
    return lines;
}

inline std::string read_file(std::string const& name)
{
    std::ifstream in(data_path(name));
    if (!in)
        throw std::runtime_error("cannot open fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Table of the first ninety integers: value -> compact numeral.
inline std::map<unsigned, std::string> numeral_table()
{
    std::map<unsigned, std::string> rows;
    for (auto const& line : read_lines("numeral_table.txt"))
    {
        std::istringstream ss(line);
        unsigned value = 0;
        std::string numeral;
        ss >> value >> numeral;
        rows[value] = numeral;
    }
    return rows;
}

struct B2Row
{
    std::vector<int> window;
    unsigned inv1;
    unsigned inv2;
};

inline std::vector<B2Row> b2_table()
{
    std::vector<B2Row> rows;
    for (auto const& line : read_lines("b2_table.txt"))
    {
        std::istringstream ss(line);
        B2Row row{{0, 0}, 0, 0};
        ss >> row.window[0] >> row.window[1] >> row.inv1 >> row.inv2;
        rows.push_back(row);
    }
    return rows;
}

struct B3Row
{
    unsigned rank;
    std::vector<int> window;
    std::vector<unsigned> code;
};

inline std::vector<B3Row> b3_table()
{
    std::vector<B3Row> rows;
    for (auto const& line : read_lines("b3_table.txt"))
    {
        std::istringstream ss(line);
        B3Row row{0, std::vector<int>(3), std::vector<unsigned>(3)};
        char colon = 0;
        ss >> row.rank >> row.window[0] >> row.window[1] >> row.window[2] >> row.code[0] >> colon
            >> row.code[1] >> colon >> row.code[2];
        rows.push_back(row);
    }
    return rows;
}

//---------------------------------------------------------------------------//
// Independent references
//---------------------------------------------------------------------------//

/// Positional sum of d_i * 2^i * i!, with the place values built by plain
/// repeated multiplication.
inline BigCount positional_value(std::vector<unsigned> const& msd_first)
{
    BigCount total = 0;
    BigCount place = 1;
    std::size_t const k = msd_first.size();
    for (std::size_t i = 0; i < k; ++i)
    {
        if (i > 0)
            place = place * 2 * i;
        total += place * msd_first[k - 1 - i];
    }
    return total;
}

/// Signed permutation as an explicit function table over [-n, n].
struct FunctionTable
{
    int n;
    std::map<int, int> image;

    explicit FunctionTable(std::vector<int> const& window) : n(static_cast<int>(window.size()))
    {
        for (int i = 1; i <= n; ++i)
        {
            image[i] = window[i - 1];
            image[-i] = -window[i - 1];
        }
    }

    std::vector<int> window() const
    {
        std::vector<int> w;
        for (int i = 1; i <= n; ++i)
            w.push_back(image.at(i));
        return w;
    }
};

inline std::vector<int> compose_by_table(std::vector<int> const& p, std::vector<int> const& q)
{
    FunctionTable const tp(p);
    FunctionTable const tq(q);
    std::vector<int> w;
    for (int i = 1; i <= tq.n; ++i)
        w.push_back(tp.image.at(tq.image.at(i)));
    return w;
}

/// Inverse found by searching for the preimage of each value.
inline std::vector<int> inverse_by_search(std::vector<int> const& p)
{
    FunctionTable const t(p);
    std::vector<int> w;
    for (int v = 1; v <= t.n; ++v)
        for (auto const& [arg, img] : t.image)
            if (img == v)
                w.push_back(arg);
    return w;
}

/// Signed permutation matrix (column k has sign(p(k)) in row |p(k)|) times a dense vector.
inline std::vector<int> matrix_action(std::vector<int> const& p, std::vector<int> const& dense)
{
    std::size_t const n = p.size();
    std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        matrix[static_cast<std::size_t>(std::abs(p[k])) - 1][k] = p[k] > 0 ? 1 : -1;
    std::vector<int> out(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r] += matrix[r][c] * dense[c];
    return out;
}

/// Plain inversion table: later, smaller entries for each position.
inline std::vector<std::size_t> inversion_table(std::vector<int> const& sigma)
{
    std::vector<std::size_t> table(sigma.size(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                ++table[i];
    return table;
}

inline std::vector<int> random_window(std::size_t n, std::mt19937_64& rng)
{
    std::vector<int> w(n);
    for (std::size_t k = 0; k < n; ++k)
        w[k] = static_cast<int>(k + 1);
    std::shuffle(w.begin(), w.end(), rng);
    std::bernoulli_distribution flip(0.5);
    for (auto& v : w)
        if (flip(rng))
            v = -v;
    return w;
}

inline SignedPermutation random_element(std::size_t n, std::mt19937_64& rng)
{
    return SignedPermutation(random_window(n, rng));
}

/// Uniform decimal string with exactly `digits` digits (no leading zero).
inline std::string random_decimal(std::size_t digits, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(0, 9);
    std::uniform_int_distribution<int> lead(1, 9);
    std::string s(1, static_cast<char>('0' + lead(rng)));
    while (s.size() < digits)
        s.push_back(static_cast<char>('0' + d(rng)));
    return s;
}

} // namespace hyperoct::testing
