#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bethe {

inline constexpr int kMaxSymbols = 16;

/// Element of S_n in one-line notation: image(i) for i = 1..n.
/// Products follow function composition: (p * q)(i) = p(q(i)), so the right factor acts first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : n_(check_degree(n)) {
        for (int i = 0; i < n_; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
    /// From 1-based images.
    static Permutation from_images(const std::vector<int>& images) {
        Permutation p(static_cast<int>(images.size()));
        std::array<bool, kMaxSymbols> seen{};
        for (std::size_t i = 0; i < images.size(); ++i) {
            int v = images[i];
            if (v < 1 || v > p.n_ || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[static_cast<std::size_t>(v - 1)] = true;
            p.img_[i] = static_cast<std::uint8_t>(v - 1);
        }
        return p;
    }
    static Permutation identity(int n) { return Permutation(n); }
    /// Transposition of symbols a and b (1-based).
    static Permutation transposition(int n, int a, int b) {
        Permutation p(n);
        p.check_symbol(a);
        p.check_symbol(b);
        std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
        return p;
    }
    /// The cycle c_1 -> c_2 -> ... -> c_k -> c_1 (1-based symbols).
    static Permutation cycle(int n, const std::vector<int>& c) {
        Permutation p(n);
        for (int s : c) p.check_symbol(s);
        for (std::size_t i = 0; i < c.size(); ++i)
            p.img_[static_cast<std::size_t>(c[i] - 1)] = static_cast<std::uint8_t>(c[(i + 1) % c.size()] - 1);
        if (!p.valid()) throw std::invalid_argument("Permutation::cycle: repeated symbol");
        return p;
    }
    /// Product of disjoint cycles.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p(n);
        for (const auto& c : cycles) p = p * cycle(n, c);
        return p;
    }

    int degree() const { return n_; }
    /// Image of symbol i (1-based).
    int operator()(int i) const {
        check_symbol(i);
        return img_[static_cast<std::size_t>(i - 1)] + 1;
    }
    std::vector<int> images() const {
        std::vector<int> out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
        return out;
    }
    // 0-based raw access for hot loops
    int at0(int i) const { return img_[static_cast<std::size_t>(i)]; }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            if (img_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.n_ != q.n_) throw std::invalid_argument("Permutation: degree mismatch in composition");
        Permutation r;
        r.n_ = p.n_;
        for (int i = 0; i < p.n_; ++i) r.img_[static_cast<std::size_t>(i)] = p.img_[q.img_[static_cast<std::size_t>(i)]];
        return r;
    }
    Permutation inverse() const {
        Permutation r;
        r.n_ = n_;
        for (int i = 0; i < n_; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return r;
    }

    /// Disjoint cycles including fixed points; each cycle starts at its smallest symbol,
    /// cycles ordered by first symbol.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::array<bool, kMaxSymbols> seen{};
        for (int i = 0; i < n_; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            std::vector<int> c;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                c.push_back(j + 1);
            }
            out.push_back(std::move(c));
        }
        return out;
    }
    int orbit_count() const {
        std::array<bool, kMaxSymbols> seen{};
        int c = 0;
        for (int i = 0; i < n_; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            ++c;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
        }
        return c;
    }
    int sign() const { return (n_ - orbit_count()) % 2 == 0 ? 1 : -1; }
    /// Cycle type as a partition (weakly decreasing cycle lengths).
    std::vector<int> cycle_type() const {
        std::vector<int> t;
        for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
        std::sort(t.rbegin(), t.rend());
        return t;
    }

    /// Extend to S_m (m >= n) fixing the new symbols.
    Permutation extend(int m) const {
        if (m < n_) throw std::invalid_argument("Permutation::extend: smaller degree");
        Permutation r(m);
        for (int i = 0; i < n_; ++i) r.img_[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)];
        return r;
    }

    std::uint64_t code() const {
        std::uint64_t c = 0;
        for (int i = 0; i < n_; ++i) c |= static_cast<std::uint64_t>(img_[static_cast<std::size_t>(i)]) << (4 * i);
        return c ^ (static_cast<std::uint64_t>(n_) << 60);
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.n_ == b.n_ && std::equal(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin());
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    /// Lexicographic on one-line notation (degree first).
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return std::lexicographical_compare(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin(), b.img_.begin() + b.n_);
    }

    /// Cycle notation such as "(1 3 7)(2 5 6)"; "()" for the identity.
    std::string cycle_string() const {
        std::string s;
        for (const auto& c : cycles()) {
            if (c.size() < 2) continue;
            s += "(";
            for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.cycle_string(); }

private:
    static int check_degree(int n) {
        if (n < 0 || n > kMaxSymbols) throw std::invalid_argument("Permutation: degree out of range");
        return n;
    }
    void check_symbol(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("Permutation: symbol out of range");
    }
    bool valid() const {
        std::array<bool, kMaxSymbols> seen{};
        for (int i = 0; i < n_; ++i) {
            if (seen[img_[static_cast<std::size_t>(i)]]) return false;
            seen[img_[static_cast<std::size_t>(i)]] = true;
        }
        return true;
    }

    int n_ = 0;
    std::array<std::uint8_t, kMaxSymbols> img_{};
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::uint64_t x = p.code();
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

/// Cycle structure of a permutation.
struct CycleData {
    std::vector<std::vector<int>> cycles;
    int orbit_count = 0;
    int sign = 1;
};

inline CycleData cycle_data(const Permutation& p) {
    CycleData d;
    d.cycles = p.cycles();
    d.orbit_count = static_cast<int>(d.cycles.size());
    d.sign = (p.degree() - d.orbit_count) % 2 == 0 ? 1 : -1;
    return d;
}

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

/// All permutations of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// gamma(i) = i + 1, gamma(n) = 1.
inline Permutation shift_cycle(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    return Permutation::from_images(img);
}

/// Order reversal i -> n + 1 - i.
inline Permutation reversal(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - i;
    return Permutation::from_images(img);
}

}  // namespace bethe
