#pragma once

#include <json.hpp>

#include <string>

#include "matrix.hpp"
#include "ratfunc.hpp"

namespace qbruhat {

template <class S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) { return Rational::parse(text); }

template <>
inline Quaternion parse_scalar<Quaternion>(std::string_view text) { return Quaternion::parse(text); }

/// {"n": rows, "m": cols, "entries": [["1/2-i", ...], ...]}.
template <DivisionRing S>
nlohmann::json to_json(const Matrix<S>& x)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= x.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= x.cols(); ++j)
            row.push_back(to_string(x(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", x.rows()}, {"m", x.cols()}, {"entries", std::move(rows)}};
}

template <DivisionRing S>
Matrix<S> matrix_from_json(const nlohmann::json& j)
{
    try {
        const int n = j.at("n").get<int>();
        const int m = j.at("m").get<int>();
        const auto& entries = j.at("entries");
        if (n < 0 || m < 0 || !entries.is_array() || static_cast<int>(entries.size()) != n)
            throw ParseError("matrix JSON: entries do not match n");
        Matrix<S> x(n, m);
        for (int i = 1; i <= n; ++i) {
            const auto& row = entries[static_cast<std::size_t>(i - 1)];
            if (!row.is_array() || static_cast<int>(row.size()) != m)
                throw ParseError("matrix JSON: row " + std::to_string(i) + " does not match m");
            for (int c = 1; c <= m; ++c) {
                const auto& e = row[static_cast<std::size_t>(c - 1)];
                x(i, c) = e.is_number_integer() ? S(e.get<int>()) : parse_scalar<S>(e.get<std::string>());
            }
        }
        return x;
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

template <DivisionRing S>
Matrix<S> parse_matrix(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    return matrix_from_json<S>(j);
}

} // namespace qbruhat
