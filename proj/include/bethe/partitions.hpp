#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace bethe {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

/// lambda_i with the convention lambda_i = 0 past the last part (1-based i).
inline int part(const Partition& p, int i) {
    return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0;
}

inline std::string partition_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    for (int j = 1; j <= (p.empty() ? 0 : p[0]); ++j) {
        int len = 0;
        for (int x : p)
            if (x >= j) ++len;
        c.push_back(len);
    }
    return c;
}

/// Standard Young tableau; entries 1..n placed in rows.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    std::vector<int> row_of;  // 1-based row of entry k (index k)
    std::vector<int> col_of;  // 1-based column of entry k

    int content(int k) const { return col_of[static_cast<std::size_t>(k)] - row_of[static_cast<std::size_t>(k)]; }
    int size() const { return partition_size(shape); }

    static StandardTableau from_rows(const std::vector<std::vector<int>>& rows) {
        StandardTableau t;
        t.rows = rows;
        int n = 0;
        for (const auto& r : rows) {
            t.shape.push_back(static_cast<int>(r.size()));
            n += static_cast<int>(r.size());
        }
        t.row_of.assign(static_cast<std::size_t>(n) + 1, 0);
        t.col_of.assign(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                int k = rows[i][j];
                t.row_of[static_cast<std::size_t>(k)] = static_cast<int>(i) + 1;
                t.col_of[static_cast<std::size_t>(k)] = static_cast<int>(j) + 1;
            }
        return t;
    }

    /// Swap entries i and i+1; the result may fail to be standard.
    std::vector<std::vector<int>> swapped_rows(int i) const {
        auto r = rows;
        for (auto& row : r)
            for (auto& x : row) {
                if (x == i) x = i + 1;
                else if (x == i + 1) x = i;
            }
        return r;
    }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows == b.rows; }
};

inline bool is_standard(const std::vector<std::vector<int>>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j && rows[i][j] <= rows[i][j - 1]) return false;
            if (i && rows[i][j] <= rows[i - 1][j]) return false;
        }
    return true;
}

/// Last-letter order: compare the rows of n, n-1, ...; at the first difference the
/// tableau holding that letter in the lower row comes first.
inline bool last_letter_less(const StandardTableau& a, const StandardTableau& b) {
    for (int k = a.size(); k >= 1; --k) {
        int ra = a.row_of[static_cast<std::size_t>(k)], rb = b.row_of[static_cast<std::size_t>(k)];
        if (ra != rb) return ra > rb;
    }
    return false;
}

inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    if (!is_partition(shape)) throw std::invalid_argument("standard_tableaux: not a partition");
    const int n = partition_size(shape);
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(shape.size());
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            out.push_back(StandardTableau::from_rows(rows));
            return;
        }
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (static_cast<int>(rows[i].size()) >= shape[i]) continue;
            if (i && rows[i].size() >= rows[i - 1].size()) continue;
            rows[i].push_back(k);
            self(self, k + 1);
            rows[i].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), last_letter_less);
    return out;
}

/// Number of standard tableaux via the hook length formula.
inline long hook_dimension(const Partition& shape) {
    const int n = partition_size(shape);
    Partition conj = conjugate(shape);
    Rational d = factorial(n);
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) {
            int hook = (shape[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
            d /= Rational(hook);
        }
    return std::stol(d.numerator_str());
}

namespace detail {

// Border strips are removed via the beta-set (first-column hook lengths) encoding.
inline long mn_character(const Partition& lambda, const Partition& mu, std::size_t start,
                         std::map<std::pair<Partition, Partition>, long>& memo) {
    if (start >= mu.size()) return lambda.empty() ? 1 : 0;
    Partition rest(mu.begin() + static_cast<long>(start), mu.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[start];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
    long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<std::size_t>(i)] - r;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        // sign = (-1)^{number of beta entries strictly between b and beta_i}
        int between = 0;
        for (int x : beta)
            if (x > b && x < beta[static_cast<std::size_t>(i)]) ++between;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = b;
        std::sort(nb.rbegin(), nb.rend());
        Partition nl;
        for (int k = 0; k < len; ++k) {
            int part_k = nb[static_cast<std::size_t>(k)] - (len - 1 - k);
            if (part_k > 0) nl.push_back(part_k);
        }
        long sub = mn_character(nl, mu, start + 1, memo);
        total += (between % 2 == 0 ? 1 : -1) * sub;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace detail

/// Irreducible character chi^lambda at the class of cycle type mu (Murnaghan-Nakayama).
inline Rational character(const Partition& lambda, const Partition& mu) {
    if (partition_size(lambda) != partition_size(mu)) throw std::invalid_argument("character: size mismatch");
    static std::mutex mtx;
    static std::map<std::pair<Partition, Partition>, long> memo;
    std::lock_guard<std::mutex> lock(mtx);
    Partition m = mu;
    std::sort(m.rbegin(), m.rend());
    return Rational(detail::mn_character(lambda, m, 0, memo));
}

/// Pi_lambda(v) = prod over boxes (i, j) of (v + i - j).
inline UPoly<Rational> content_poly(const Partition& lambda) {
    UPoly<Rational> p(Rational(1));
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) p *= UPoly<Rational>::linear(Rational(j - static_cast<int>(i) - 1));
    return p;
}

}  // namespace bethe
