#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace qbruhat {

/// Permutation of [1, n] stored by images; (uv)(a) = u(v(a)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int a : images_) {
            if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
                throw InvalidWord("not a permutation: " + str());
            seen[static_cast<std::size_t>(a)] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// s_i swaps i and i+1.
    static Permutation simple(int i, int n)
    {
        if (i < 1 || i >= n)
            throw InvalidWord("s_" + std::to_string(i) + " in S_" + std::to_string(n));
        auto p = identity(n);
        std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
        return p;
    }

    /// Reverses [i, n] and fixes [1, i-1]; i = 1 gives the longest element.
    static Permutation longest_in_range(int i, int n)
    {
        if (i < 1 || i > n)
            throw IndexOutOfRange("longest_in_range(" + std::to_string(i) + ", " + std::to_string(n) + ")");
        auto p = identity(n);
        std::reverse(p.images_.begin() + (i - 1), p.images_.end());
        return p;
    }

    static Permutation longest(int n) { return longest_in_range(1, n); }

    /// s_{w_1} s_{w_2} ... ; letters must lie in [1, n-1].
    static Permutation from_word(std::span<const int> word, int n)
    {
        auto p = identity(n);
        for (int i : word)
            p = p * simple(i, n);
        return p;
    }

    /// Every permutation of [1, n] in lexicographic order of images.
    static std::vector<Permutation> all(int n)
    {
        std::vector<Permutation> out;
        auto p = identity(n).images_;
        do
            out.emplace_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int a) const { return images_.at(static_cast<std::size_t>(a - 1)); }
    std::span<const int> images() const noexcept { return images_; }

    bool is_identity() const
    {
        for (int a = 1; a <= size(); ++a)
            if ((*this)(a) != a)
                return false;
        return true;
    }

    /// Number of inversions.
    int length() const
    {
        int l = 0;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                l += images_[static_cast<std::size_t>(a)] > images_[static_cast<std::size_t>(b)];
        return l;
    }

    Permutation inverse() const
    {
        std::vector<int> r(images_.size());
        for (int a = 1; a <= size(); ++a)
            r[static_cast<std::size_t>((*this)(a) - 1)] = a;
        return Permutation(std::move(r));
    }

    friend Permutation operator*(const Permutation& u, const Permutation& v)
    {
        if (u.size() != v.size())
            throw ShapeMismatch("composing permutations of different degree");
        std::vector<int> r(u.images_.size());
        for (int a = 1; a <= u.size(); ++a)
            r[static_cast<std::size_t>(a - 1)] = u(v(a));
        return Permutation(std::move(r));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

    /// Deterministic reduced word: peel off the smallest right descent.
    std::vector<int> reduced_word() const
    {
        std::vector<int> word;
        Permutation w = *this;
        for (;;) {
            int i = w.first_descent();
            if (i == 0)
                break;
            word.push_back(i);
            w = w * simple(i, size());
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    /// All reduced words, sorted lexicographically.
    std::vector<std::vector<int>> all_reduced_words() const
    {
        std::vector<std::vector<int>> out;
        if (length() == 0) {
            out.emplace_back();
            return out;
        }
        for (int i = 1; i < size(); ++i) {
            if ((*this)(i) < (*this)(i + 1))
                continue;
            for (auto& w : (*this * simple(i, size())).all_reduced_words()) {
                w.push_back(i);
                out.push_back(std::move(w));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// One-line notation, e.g. "[2,3,1,4]".
    std::string str() const
    {
        std::string s = "[";
        for (std::size_t k = 0; k < images_.size(); ++k)
            s += (k ? "," : "") + std::to_string(images_[k]);
        return s + "]";
    }

    /// Parses "[2,3,1]" or "2,3,1".
    static Permutation parse(std::string_view text)
    {
        std::string s;
        for (char c : text)
            if (c != '[' && c != ']' && c != ' ')
                s += c;
        std::vector<int> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                v.push_back(std::stoi(tok));
            }
            catch (const std::exception&) {
                throw ParseError("permutation '" + std::string(text) + "'");
            }
        }
        return Permutation(std::move(v));
    }

private:
    int first_descent() const
    {
        for (int i = 1; i < size(); ++i)
            if ((*this)(i) > (*this)(i + 1))
                return i;
        return 0;
    }

    std::vector<int> images_;
};

/// phi_i applied to the 2x2 block [[a, b], [c, d]] in rows/columns i, i+1.
template <DivisionRing S>
Matrix<S> embed_block(int n, int i, const S& a, const S& b, const S& c, const S& d)
{
    if (i < 1 || i >= n)
        throw IndexOutOfRange("block index " + std::to_string(i) + " in GL_" + std::to_string(n));
    auto m = Matrix<S>::identity(n);
    m(i, i) = a;
    m(i, i + 1) = b;
    m(i + 1, i) = c;
    m(i + 1, i + 1) = d;
    return m;
}

/// Signed simple reflection phi_i([[0,-1],[1,0]]).
template <DivisionRing S>
Matrix<S> sbar(int i, int n)
{
    return embed_block<S>(n, i, S(0), S(-1), S(1), S(0));
}

/// Signed representative: product of sbar along a reduced word.
template <DivisionRing S>
Matrix<S> representative(const Permutation& w)
{
    auto m = Matrix<S>::identity(w.size());
    for (int i : w.reduced_word())
        m = m * sbar<S>(i, w.size());
    return m;
}

/// Unsigned permutation matrix with P e_a = e_{w(a)}.
template <DivisionRing S>
Matrix<S> permutation_matrix(const Permutation& w)
{
    Matrix<S> m(w.size(), w.size());
    for (int a = 1; a <= w.size(); ++a)
        m(w(a), a) = S(1);
    return m;
}

/// Prefix and suffix permutations of a double word at position k.
struct SubwordPerms {
    Permutation u_ge; // s_{-i_m} ... s_{-i_k}
    Permutation u_gt; // s_{-i_m} ... s_{-i_{k+1}}
    Permutation v_le; // s_{i_1} ... s_{i_k}
    Permutation v_lt; // s_{i_1} ... s_{i_{k-1}}
};

/// Shuffle of a reduced word for u (negated letters) with one for v.
class DoubleWord {
public:
    DoubleWord() = default;
    DoubleWord(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n)
    {
        if (n < 1)
            throw InvalidWord("degree must be positive");
        for (int l : letters_)
            if (l == 0 || std::abs(l) >= n)
                throw InvalidWord("letter " + std::to_string(l) + " outside [-(n-1), n-1] for n = " +
                                  std::to_string(n));
        if (u().length() != static_cast<int>(negative_part().size()))
            throw InvalidWord("negative letters of " + str() + " are not reduced");
        if (v().length() != static_cast<int>(positive_part().size()))
            throw InvalidWord("positive letters of " + str() + " are not reduced");
    }

    /// Concatenation of -u_word and v_word.
    static DoubleWord standard(const Permutation& u, const Permutation& v)
    {
        std::vector<int> w;
        for (int i : u.reduced_word())
            w.push_back(-i);
        for (int i : v.reduced_word())
            w.push_back(i);
        return DoubleWord(std::move(w), u.size());
    }

    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(letters_.size()); }
    int operator[](int k) const { return letters_.at(static_cast<std::size_t>(k - 1)); } // 1-based
    std::span<const int> letters() const noexcept { return letters_; }

    std::vector<int> negative_part() const
    {
        std::vector<int> r;
        for (int l : letters_)
            if (l < 0)
                r.push_back(-l);
        return r;
    }
    std::vector<int> positive_part() const
    {
        std::vector<int> r;
        for (int l : letters_)
            if (l > 0)
                r.push_back(l);
        return r;
    }

    Permutation u() const { return Permutation::from_word(negative_part(), n_); }
    Permutation v() const { return Permutation::from_word(positive_part(), n_); }

    SubwordPerms subword_perms(int k) const
    {
        const int m = size();
        if (k < 1 || k > m)
            throw IndexOutOfRange("position " + std::to_string(k) + " in word of length " + std::to_string(m));
        auto e = Permutation::identity(n_);
        SubwordPerms r{e, e, e, e};
        for (int j = m; j >= k; --j) {
            int l = (*this)[j];
            if (l < 0) {
                r.u_ge = r.u_ge * Permutation::simple(-l, n_);
                if (j > k)
                    r.u_gt = r.u_gt * Permutation::simple(-l, n_);
            }
        }
        for (int j = 1; j <= k; ++j) {
            int l = (*this)[j];
            if (l > 0) {
                r.v_le = r.v_le * Permutation::simple(l, n_);
                if (j < k)
                    r.v_lt = r.v_lt * Permutation::simple(l, n_);
            }
        }
        return r;
    }

    /// Comma-separated signed letters, e.g. "-2,1,-3".
    std::string str() const
    {
        std::string s;
        for (std::size_t k = 0; k < letters_.size(); ++k)
            s += (k ? "," : "") + std::to_string(letters_[k]);
        return s;
    }

    static DoubleWord parse(std::string_view text, int n)
    {
        std::vector<int> letters;
        std::string s;
        for (char c : text)
            if (c != ' ')
                s += c;
        if (!s.empty()) {
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                std::size_t used = 0;
                int l = 0;
                try {
                    l = std::stoi(tok, &used);
                }
                catch (const std::exception&) {
                    throw ParseError("word '" + std::string(text) + "'");
                }
                if (used != tok.size())
                    throw ParseError("word '" + std::string(text) + "'");
                letters.push_back(l);
            }
        }
        return DoubleWord(std::move(letters), n);
    }

    friend bool operator==(const DoubleWord&, const DoubleWord&) = default;

private:
    std::vector<int> letters_;
    int n_ = 0;
};

/// Every interleaving of -neg (in order) with pos (in order), lexicographic.
inline std::vector<std::vector<int>> shuffles(std::span<const int> neg, std::span<const int> pos)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t a, std::size_t b) -> void {
        if (a == neg.size() && b == pos.size()) {
            out.push_back(cur);
            return;
        }
        if (a < neg.size()) {
            cur.push_back(-neg[a]);
            self(self, a + 1, b);
            cur.pop_back();
        }
        if (b < pos.size()) {
            cur.push_back(pos[b]);
            self(self, a, b + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// All double reduced words for (u, v).
inline std::vector<DoubleWord> double_reduced_words(const Permutation& u, const Permutation& v)
{
    std::vector<DoubleWord> out;
    for (const auto& wu : u.all_reduced_words())
        for (const auto& wv : v.all_reduced_words())
            for (auto& w : shuffles(wu, wv))
                out.emplace_back(std::move(w), u.size());
    return out;
}

} // namespace qbruhat
