#pragma once

// Root-system data for the five classical families, dominant-weight
// enumeration, Casimir numbers and Weyl dimensions.
//
// Conventions: a group of type X_r acts on matrices of size n, where
//   UnitaryTilde   (A~_r)  U(r)        n = r      beta = 2
//   SpecialUnitary (A_r)   SU(r+1)     n = r+1    beta = 2
//   OddOrthogonal  (B_r)   SO(2r+1)    n = 2r+1   beta = 1
//   Symplectic     (C_r)   Sp(r)       n = 2r     beta = 4
//   EvenOrthogonal (D_r)   SO(2r)      n = 2r     beta = 1
// The invariant metric on the Lie algebra is <X,Y> = (beta*n/2) Tr(X*Y);
// all Casimir numbers below are taken with respect to it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ym2d {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { UnitaryTilde, SpecialUnitary, OddOrthogonal, Symplectic, EvenOrthogonal };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::UnitaryTilde:   return "A~";
        case Family::SpecialUnitary: return "A";
        case Family::OddOrthogonal:  return "B";
        case Family::Symplectic:     return "C";
        case Family::EvenOrthogonal: return "D";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    if (s == "A~" || s == "At" || s == "U") return Family::UnitaryTilde;
    if (s == "A" || s == "SU") return Family::SpecialUnitary;
    if (s == "B" || s == "SO_odd") return Family::OddOrthogonal;
    if (s == "C" || s == "Sp") return Family::Symplectic;
    if (s == "D" || s == "SO_even") return Family::EvenOrthogonal;
    throw std::invalid_argument("unknown family: " + s);
}

struct GroupDescriptor {
    Family family;
    int rank;         // r >= 1
    int matrix_size;  // n
    int dyson_beta;   // 1, 2 or 4
};

inline GroupDescriptor make_group(Family family, int rank) {
    if (rank < 1) throw std::invalid_argument("make_group: rank must be >= 1");
    int n = 0, beta = 0;
    switch (family) {
        case Family::UnitaryTilde:   n = rank;         beta = 2; break;
        case Family::SpecialUnitary: n = rank + 1;     beta = 2; break;
        case Family::OddOrthogonal:  n = 2 * rank + 1; beta = 1; break;
        case Family::Symplectic:     n = 2 * rank;     beta = 4; break;
        case Family::EvenOrthogonal: n = 2 * rank;     beta = 1; break;
    }
    return GroupDescriptor{family, rank, n, beta};
}

// A dominant weight. parts.size() == rank, except for SpecialUnitary where
// the gauge-fixed representative (lambda_{r+1} = 0) of length rank+1 is kept.
struct DominantWeight {
    std::vector<std::int64_t> parts;

    bool is_trivial() const {
        return std::all_of(parts.begin(), parts.end(), [](std::int64_t p) { return p == 0; });
    }
    bool operator==(const DominantWeight& o) const { return parts == o.parts; }
    bool operator<(const DominantWeight& o) const { return parts < o.parts; }
};

inline std::size_t weight_vector_length(const GroupDescriptor& g) {
    return g.family == Family::SpecialUnitary ? std::size_t(g.rank + 1) : std::size_t(g.rank);
}

inline bool is_dominant(const GroupDescriptor& g, const DominantWeight& w) {
    if (w.parts.size() != weight_vector_length(g)) return false;
    const auto& p = w.parts;
    const std::size_t L = p.size();
    for (std::size_t i = 0; i + 1 < L; ++i)
        if (p[i] < p[i + 1]) {
            // D_r allows lambda_r < 0 as long as |lambda_r| <= lambda_{r-1}
            if (g.family == Family::EvenOrthogonal && i + 2 == L && p[i] >= -p[i + 1]) continue;
            return false;
        }
    switch (g.family) {
        case Family::UnitaryTilde:
            return true;
        case Family::SpecialUnitary:
            return p.back() == 0;
        case Family::OddOrthogonal:
        case Family::Symplectic:
            return p.back() >= 0;
        case Family::EvenOrthogonal:
            return L == 1 || p[L - 2] >= std::llabs(p[L - 1]);
    }
    return false;
}

inline void require_dominant(const GroupDescriptor& g, const DominantWeight& w, const char* op) {
    if (!is_dominant(g, w))
        throw std::invalid_argument(std::string(op) + ": weight is not dominant for this group");
}

// 2*rho as an integer vector (rho is half-integral for B_r).
inline std::vector<std::int64_t> rho_doubled(const GroupDescriptor& g) {
    const int r = g.rank;
    std::vector<std::int64_t> v;
    switch (g.family) {
        case Family::UnitaryTilde:
            for (int i = 1; i <= r; ++i) v.push_back(r + 1 - 2 * i);
            break;
        case Family::SpecialUnitary:
            for (int i = 1; i <= r + 1; ++i) v.push_back(r + 2 - 2 * i);
            break;
        case Family::OddOrthogonal:
            for (int i = 1; i <= r; ++i) v.push_back(2 * r + 1 - 2 * i);
            break;
        case Family::Symplectic:
            for (int i = 1; i <= r; ++i) v.push_back(2 * (r + 1 - i));
            break;
        case Family::EvenOrthogonal:
            for (int i = 1; i <= r; ++i) v.push_back(2 * (r - i));
            break;
    }
    return v;
}

// |lambda| = sum of |parts| (absolute values matter only for A~_r and D_r).
inline std::int64_t weight_size(const DominantWeight& w) {
    std::int64_t s = 0;
    for (auto p : w.parts) s += std::llabs(p);
    return s;
}

inline int weight_length(const DominantWeight& w) {
    int l = 0;
    for (auto p : w.parts) l += (p != 0);
    return l;
}

// Exact Casimir c_lambda = <lambda + 2 rho, lambda> as a rational num/den.
// Per-family closed forms from the classical root data; everything stays in
// 64-bit integers for the sizes this engine handles.
struct Rational64 {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double to_double() const { return double(num) / double(den); }
};

inline Rational64 casimir_exact(const GroupDescriptor& g, const DominantWeight& w) {
    require_dominant(g, w, "casimir");
    const std::int64_t r = g.rank;
    const auto& p = w.parts;
    std::int64_t s1 = 0;  // sum lambda_i (lambda_i + (2 rho)_i)
    switch (g.family) {
        case Family::UnitaryTilde:
            for (std::int64_t i = 1; i <= r; ++i) s1 += p[i - 1] * (p[i - 1] + r + 1 - 2 * i);
            return {s1, r};
        case Family::SpecialUnitary: {
            const std::int64_t N = r + 1;
            std::int64_t tot = 0;
            for (std::int64_t i = 1; i <= N; ++i) {
                s1 += p[i - 1] * (p[i - 1] + N + 1 - 2 * i);
                tot += p[i - 1];
            }
            return {N * s1 - tot * tot, N * N};
        }
        case Family::OddOrthogonal:
            for (std::int64_t i = 1; i <= r; ++i) s1 += p[i - 1] * (p[i - 1] + 2 * r + 1 - 2 * i);
            return {s1, 2 * r + 1};
        case Family::Symplectic:
            for (std::int64_t i = 1; i <= r; ++i) s1 += p[i - 1] * (p[i - 1] + 2 * r + 2 - 2 * i);
            return {s1, 2 * r};
        case Family::EvenOrthogonal:
            for (std::int64_t i = 1; i <= r; ++i) s1 += p[i - 1] * (p[i - 1] + 2 * r - 2 * i);
            return {s1, 2 * r};
    }
    return {0, 1};
}

inline double casimir(const GroupDescriptor& g, const DominantWeight& w) {
    return casimir_exact(g, w).to_double();
}

// Weyl dimension, exact. Computed as a product over positive roots of
// <lambda+rho, alpha> / <rho, alpha> on doubled integers; the division is
// exact and asserted.
inline BigInt weyl_dim_exact(const GroupDescriptor& g, const DominantWeight& w) {
    require_dominant(g, w, "weyl_dim");
    const int r = g.rank;
    const auto& p = w.parts;
    BigInt num = 1, den = 1;
    auto mul_pair = [&](std::int64_t a, std::int64_t b) { num *= a; den *= b; };
    switch (g.family) {
        case Family::UnitaryTilde:
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) mul_pair(p[i - 1] - p[j - 1] + j - i, j - i);
            break;
        case Family::SpecialUnitary:
            for (int i = 1; i <= r + 1; ++i)
                for (int j = i + 1; j <= r + 1; ++j) mul_pair(p[i - 1] - p[j - 1] + j - i, j - i);
            break;
        case Family::OddOrthogonal:
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) mul_pair(p[i - 1] - p[j - 1] + j - i, j - i);
            for (int i = 1; i <= r; ++i)
                for (int j = i; j <= r; ++j)
                    mul_pair(p[i - 1] + p[j - 1] + 2 * r + 1 - i - j, 2 * r + 1 - i - j);
            break;
        case Family::Symplectic:
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) mul_pair(p[i - 1] - p[j - 1] + j - i, j - i);
            for (int i = 1; i <= r; ++i)
                for (int j = i; j <= r; ++j)
                    mul_pair(p[i - 1] + p[j - 1] + 2 * r + 2 - i - j, 2 * r + 2 - i - j);
            break;
        case Family::EvenOrthogonal:
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) {
                    mul_pair(p[i - 1] - p[j - 1] + j - i, j - i);
                    mul_pair(p[i - 1] + p[j - 1] + 2 * r - i - j, 2 * r - i - j);
                }
            break;
    }
    if (num % den != 0)
        throw std::logic_error("weyl_dim: Weyl product is not an integer (internal error)");
    BigInt d = num / den;
    if (d <= 0) throw std::logic_error("weyl_dim: non-positive dimension (internal error)");
    return d;
}

inline double weyl_dim(const GroupDescriptor& g, const DominantWeight& w) {
    return weyl_dim_exact(g, w).convert_to<double>();
}

inline double weyl_log_dim(const GroupDescriptor& g, const DominantWeight& w) {
    // log of the dimension accumulated factor-by-factor; safe for weights far
    // beyond double overflow.
    require_dominant(g, w, "weyl_dim");
    const int r = g.rank;
    const auto& p = w.parts;
    double s = 0.0;
    auto add_pair = [&](std::int64_t a, std::int64_t b) {
        if (a != b) s += std::log(double(a) / double(b));
    };
    switch (g.family) {
        case Family::UnitaryTilde:
        case Family::SpecialUnitary: {
            const int L = int(p.size());
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j) add_pair(p[i - 1] - p[j - 1] + j - i, j - i);
            break;
        }
        case Family::OddOrthogonal:
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) add_pair(p[i - 1] - p[j - 1] + j - i, j - i);
            for (int i = 1; i <= r; ++i)
                for (int j = i; j <= r; ++j)
                    add_pair(p[i - 1] + p[j - 1] + 2 * r + 1 - i - j, 2 * r + 1 - i - j);
            break;
        case Family::Symplectic:
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) add_pair(p[i - 1] - p[j - 1] + j - i, j - i);
            for (int i = 1; i <= r; ++i)
                for (int j = i; j <= r; ++j)
                    add_pair(p[i - 1] + p[j - 1] + 2 * r + 2 - i - j, 2 * r + 2 - i - j);
            break;
        case Family::EvenOrthogonal:
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) {
                    add_pair(p[i - 1] - p[j - 1] + j - i, j - i);
                    add_pair(p[i - 1] + p[j - 1] + 2 * r - i - j, 2 * r - i - j);
                }
            break;
    }
    return s;
}

struct WeightStats {
    double casimir = 0.0;
    BigInt dimension = 1;
    std::int64_t size = 0;
    int length = 0;
};

inline WeightStats weight_stats(const GroupDescriptor& g, const DominantWeight& w) {
    WeightStats st;
    st.casimir = casimir(g, w);
    st.dimension = weyl_dim_exact(g, w);
    st.size = weight_size(w);
    st.length = weight_length(w);
    return st;
}

namespace detail {

// Visit all partitions of every m <= max_size with at most max_len parts,
// in non-decreasing |.| order, descending lexicographic within a stratum.
// f receives the partition as a vector of positive parts.
template <typename F>
void for_each_partition_upto(std::int64_t max_size, int max_len, F&& f) {
    std::vector<std::int64_t> parts;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining,
                                                              std::int64_t cap) {
        if (remaining == 0) {
            f(parts);
            return;
        }
        if (int(parts.size()) == max_len) return;
        for (std::int64_t q = std::min(remaining, cap); q >= 1; --q) {
            parts.push_back(q);
            rec(remaining - q, q);
            parts.pop_back();
        }
    };
    for (std::int64_t m = 0; m <= max_size; ++m) rec(m, m);
}

// Partitions of exactly m with at most max_len parts.
template <typename F>
void for_each_partition_of(std::int64_t m, int max_len, F&& f) {
    std::vector<std::int64_t> parts;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining,
                                                              std::int64_t cap) {
        if (remaining == 0) {
            f(parts);
            return;
        }
        if (int(parts.size()) == max_len) return;
        for (std::int64_t q = std::min(remaining, cap); q >= 1; --q) {
            parts.push_back(q);
            rec(remaining - q, q);
            parts.pop_back();
        }
    };
    rec(m, m);
}

}  // namespace detail

// Stream every dominant weight with |lambda| <= max_size, exactly once, in
// non-decreasing |lambda| order. For D_r both signs of lambda_r are emitted;
// for A~_r signed vectors are emitted (as a positive partition block on top,
// zeros, and a negated reversed partition at the bottom).
template <typename F>
void for_each_dominant(const GroupDescriptor& g, std::int64_t max_size, F&& f) {
    const int r = g.rank;
    switch (g.family) {
        case Family::OddOrthogonal:
        case Family::Symplectic: {
            detail::for_each_partition_upto(max_size, r, [&](const std::vector<std::int64_t>& a) {
                DominantWeight w;
                w.parts = a;
                w.parts.resize(r, 0);
                f(w);
            });
            break;
        }
        case Family::EvenOrthogonal: {
            detail::for_each_partition_upto(max_size, r, [&](const std::vector<std::int64_t>& a) {
                DominantWeight w;
                w.parts = a;
                w.parts.resize(r, 0);
                f(w);
                if (int(a.size()) == r && a.back() > 0) {
                    w.parts.back() = -w.parts.back();
                    f(w);
                }
            });
            break;
        }
        case Family::SpecialUnitary: {
            detail::for_each_partition_upto(max_size, r, [&](const std::vector<std::int64_t>& a) {
                DominantWeight w;
                w.parts = a;
                w.parts.resize(r + 1, 0);
                f(w);
            });
            break;
        }
        case Family::UnitaryTilde: {
            // pairs (alpha, beta): lambda = [alpha, 0...0, -reverse(beta)],
            // l(alpha) + l(beta) <= r, |alpha| + |beta| = stratum size.
            for (std::int64_t m = 0; m <= max_size; ++m) {
                for (std::int64_t sa = m; sa >= 0; --sa) {
                    const std::int64_t sb = m - sa;
                    detail::for_each_partition_of(sa, r, [&](const std::vector<std::int64_t>& a) {
                        detail::for_each_partition_of(
                            sb, r - int(a.size()), [&](const std::vector<std::int64_t>& b) {
                                DominantWeight w;
                                w.parts = a;
                                w.parts.resize(r - b.size(), 0);
                                for (auto it = b.rbegin(); it != b.rend(); ++it)
                                    w.parts.push_back(-*it);
                                f(w);
                            });
                    });
                }
            }
            break;
        }
    }
}

inline std::vector<DominantWeight> enumerate_dominant(const GroupDescriptor& g,
                                                      std::int64_t max_size) {
    std::vector<DominantWeight> out;
    for_each_dominant(g, max_size, [&](const DominantWeight& w) { out.push_back(w); });
    return out;
}

// Stream the dominant weights of one size stratum |lambda| = m.
template <typename F>
void for_each_dominant_of_size(const GroupDescriptor& g, std::int64_t m, F&& f) {
    const int r = g.rank;
    switch (g.family) {
        case Family::OddOrthogonal:
        case Family::Symplectic:
            detail::for_each_partition_of(m, r, [&](const std::vector<std::int64_t>& a) {
                DominantWeight w;
                w.parts = a;
                w.parts.resize(r, 0);
                f(w);
            });
            break;
        case Family::EvenOrthogonal:
            detail::for_each_partition_of(m, r, [&](const std::vector<std::int64_t>& a) {
                DominantWeight w;
                w.parts = a;
                w.parts.resize(r, 0);
                f(w);
                if (int(a.size()) == r && a.back() > 0) {
                    w.parts.back() = -w.parts.back();
                    f(w);
                }
            });
            break;
        case Family::SpecialUnitary:
            detail::for_each_partition_of(m, r, [&](const std::vector<std::int64_t>& a) {
                DominantWeight w;
                w.parts = a;
                w.parts.resize(r + 1, 0);
                f(w);
            });
            break;
        case Family::UnitaryTilde:
            for (std::int64_t sa = m; sa >= 0; --sa) {
                const std::int64_t sb = m - sa;
                detail::for_each_partition_of(sa, r, [&](const std::vector<std::int64_t>& a) {
                    detail::for_each_partition_of(
                        sb, r - int(a.size()), [&](const std::vector<std::int64_t>& b) {
                            DominantWeight w;
                            w.parts = a;
                            w.parts.resize(r - b.size(), 0);
                            for (auto it = b.rbegin(); it != b.rend(); ++it) w.parts.push_back(-*it);
                            f(w);
                        });
                });
            }
            break;
    }
}

// Number of dominant weights at each size 0..max_size (exact, by DP over
// bounded-length partitions). Used by truncation-tail certificates.
inline std::vector<double> weight_count_by_size(const GroupDescriptor& g, std::int64_t max_size) {
    const int r = g.rank;
    const std::int64_t M = max_size;
    // q[len-bound indexing]: partitions of m with at most L parts
    auto bounded_partition_counts = [&](int L) {
        std::vector<double> cnt(M + 1, 0.0);
        cnt[0] = 1.0;
        // DP over part sizes 1..M, each usable at most L times total length:
        // use the standard "at most L parts" recurrence via conjugates: parts <= L
        // count(m, parts each <= L) == count(m, at most L parts).
        std::vector<double> dp(M + 1, 0.0);
        dp[0] = 1.0;
        for (int k = 1; k <= L && k <= M; ++k)
            for (std::int64_t m = k; m <= M; ++m) dp[m] += dp[m - k];
        return dp;
    };
    std::vector<double> out(M + 1, 0.0);
    switch (g.family) {
        case Family::OddOrthogonal:
        case Family::Symplectic:
        case Family::SpecialUnitary: {
            out = bounded_partition_counts(r);
            break;
        }
        case Family::EvenOrthogonal: {
            auto le_r = bounded_partition_counts(r);
            auto le_rm1 = bounded_partition_counts(r - 1);
            for (std::int64_t m = 0; m <= M; ++m)
                out[m] = 2.0 * le_r[m] - le_rm1[m];  // full-length partitions doubled
            break;
        }
        case Family::UnitaryTilde: {
            // pairs (alpha, beta) with l(a)+l(b) <= r: bound by all pairs of
            // partitions (an over-count only when l(a)+l(b) > r, still valid
            // as an upper bound for tail purposes; exact for m <= r).
            auto pa = bounded_partition_counts(r);
            for (std::int64_t m = 0; m <= M; ++m) {
                double s = 0.0;
                for (std::int64_t k = 0; k <= m; ++k) s += pa[k] * pa[m - k];
                out[m] = s;
            }
            break;
        }
    }
    return out;
}

}  // namespace ym2d
