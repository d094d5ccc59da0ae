#include "hyperfv/series.hpp"

#include <omp.h>

#include <string>

namespace hyperfv::series {

namespace {

constexpr int kCapGuard = 64;

void require_caps(int cap_n, int cap_t) {
    if (cap_n < 0 || cap_t < 0) {
        throw std::invalid_argument("series caps must be nonnegative");
    }
    if (cap_n > kCapGuard || cap_t > kCapGuard) {
        throw ResourceLimitError("series degree cap " + std::to_string(std::max(cap_n, cap_t)) +
                                 " exceeds the guard (" + std::to_string(kCapGuard) + ")");
    }
}

void require_same_caps(const TruncatedSeries3& a, const TruncatedSeries3& b) {
    if (a.cap_n() != b.cap_n() || a.cap_t() != b.cap_t()) {
        throw std::invalid_argument("series operands have different caps");
    }
}

} // namespace

TruncatedSeries3::TruncatedSeries3(int cap_n, int cap_t) : cap_n_(cap_n), cap_t_(cap_t) {
    require_caps(cap_n, cap_t);
    pairs_.reserve(static_cast<std::size_t>(cap_n + 1) * (cap_n + 2) / 2);
    for (int a = 0; a <= cap_n; ++a)
        for (int b = 0; a + b <= cap_n; ++b) pairs_.emplace_back(a, b);
    coef_.assign(pairs_.size() * static_cast<std::size_t>(cap_t + 1), Integer(0));
}

std::size_t TruncatedSeries3::index(int a, int b, int c) const {
    // Row a starts after rows 0..a-1, which hold (cap_n+1) + ... entries.
    std::size_t row_offset = static_cast<std::size_t>(a) * (cap_n_ + 1) -
                             static_cast<std::size_t>(a) * (a - 1) / 2;
    return (row_offset + static_cast<std::size_t>(b)) * (cap_t_ + 1) + static_cast<std::size_t>(c);
}

const Integer& TruncatedSeries3::coefficient(int a, int b, int c) const {
    if (a < 0 || b < 0 || c < 0 || a + b > cap_n_ || c > cap_t_) {
        throw std::out_of_range("coefficient (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ") is outside caps (a+b <= " +
                                std::to_string(cap_n_) + ", c <= " + std::to_string(cap_t_) + ")");
    }
    return coef_[index(a, b, c)];
}

void TruncatedSeries3::set_coefficient(int a, int b, int c, Integer v) {
    coefficient(a, b, c); // bounds check
    coef_[index(a, b, c)] = std::move(v);
}

TruncatedSeries3 TruncatedSeries3::from_terms(int cap_n, int cap_t,
                                              const std::vector<Term3>& terms) {
    TruncatedSeries3 s(cap_n, cap_t);
    for (const auto& t : terms) {
        if (t.a < 0 || t.b < 0 || t.c < 0) {
            throw std::invalid_argument("from_terms: negative exponent");
        }
        if (t.a + t.b > cap_n || t.c > cap_t) continue; // truncated away
        s.coef_[s.index(t.a, t.b, t.c)] += t.v;
    }
    return s;
}

std::vector<Term3> TruncatedSeries3::nonzero_terms() const {
    std::vector<Term3> terms;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        for (int c = 0; c <= cap_t_; ++c) {
            const Integer& v = coef_[p * (cap_t_ + 1) + c];
            if (v != 0) terms.push_back(Term3{pairs_[p].first, pairs_[p].second, c, v});
        }
    }
    return terms;
}

TruncatedSeries3 mul(const TruncatedSeries3& a, const TruncatedSeries3& b) {
    require_same_caps(a, b);
    const auto terms = a.nonzero_terms();
    TruncatedSeries3 out(a.cap_n(), a.cap_t());
    const auto& pairs = out.xy_pairs();
    const std::int64_t npairs = static_cast<std::int64_t>(pairs.size());
    const int cap_t = out.cap_t();
    #pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t p = 0; p < npairs; ++p) {
        const int oa = pairs[p].first, ob = pairs[p].second;
        for (int oc = 0; oc <= cap_t; ++oc) {
            Integer acc = 0;
            for (const auto& t : terms) {
                if (t.a <= oa && t.b <= ob && t.c <= oc) {
                    acc += t.v * b.coefficient(oa - t.a, ob - t.b, oc - t.c);
                }
            }
            if (acc != 0) out.set_coefficient(oa, ob, oc, std::move(acc));
        }
    }
    return out;
}

TruncatedSeries3 mul_reference(const TruncatedSeries3& a, const TruncatedSeries3& b) {
    require_same_caps(a, b);
    TruncatedSeries3 out(a.cap_n(), a.cap_t());
    for (const auto& ta : a.nonzero_terms()) {
        for (const auto& tb : b.nonzero_terms()) {
            const int oa = ta.a + tb.a, ob = ta.b + tb.b, oc = ta.c + tb.c;
            if (oa + ob > out.cap_n() || oc > out.cap_t()) continue;
            out.set_coefficient(oa, ob, oc, out.coefficient(oa, ob, oc) + ta.v * tb.v);
        }
    }
    return out;
}

TruncatedSeries3 inverse_unit_series(const TruncatedSeries3& d) {
    if (d.coefficient(0, 0, 0) != 1) {
        throw std::invalid_argument("inverse_unit_series: constant coefficient must be 1");
    }
    std::vector<Term3> terms;
    for (auto& t : d.nonzero_terms()) {
        if (t.a || t.b || t.c) terms.push_back(std::move(t));
    }
    TruncatedSeries3 s(d.cap_n(), d.cap_t());
    s.set_coefficient(0, 0, 0, 1);
    const auto& pairs = s.xy_pairs();
    const std::int64_t npairs = static_cast<std::int64_t>(pairs.size());
    // Each coefficient depends only on strictly smaller total degree, so the
    // layer for total degree deg can be filled in parallel.
    for (int deg = 1; deg <= d.cap_n() + d.cap_t(); ++deg) {
        #pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t p = 0; p < npairs; ++p) {
            const int a = pairs[p].first, b = pairs[p].second;
            const int c = deg - a - b;
            if (c < 0 || c > d.cap_t()) continue;
            Integer acc = 0;
            for (const auto& t : terms) {
                if (t.a <= a && t.b <= b && t.c <= c) {
                    acc += t.v * s.coefficient(a - t.a, b - t.b, c - t.c);
                }
            }
            if (acc != 0) s.set_coefficient(a, b, c, -acc);
        }
    }
    return s;
}

namespace {

TruncatedSeries3 expand_gf(int cap_n, const std::vector<Term3>& numerator) {
    if (cap_n < 1) {
        throw std::invalid_argument("generating-function expansion requires cap_n >= 1");
    }
    const int cap_t = cap_n;
    auto poly = [&](const std::vector<Term3>& ts) {
        return TruncatedSeries3::from_terms(cap_n, cap_t, ts);
    };
    TruncatedSeries3 d1 = poly({{0, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 0, -1}});
    TruncatedSeries3 d2 = poly({{0, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {1, 0, 1, -1}});
    TruncatedSeries3 d3 = poly({{0, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 1, 1, -1}});
    TruncatedSeries3 inv = inverse_unit_series(mul(d1, mul(d2, d3)));
    return mul(poly(numerator), inv);
}

} // namespace

TruncatedSeries3 expand_half_open_gf(int cap_n) {
    // numerator (1-x)xt = xt - x^2 t
    return expand_gf(cap_n, {{1, 0, 1, 1}, {2, 0, 1, -1}});
}

TruncatedSeries3 expand_closed_gf(int cap_n) {
    return expand_gf(cap_n, {{1, 0, 1, 1}});
}

TruncatedSeries1::TruncatedSeries1(int cap) : cap_(cap) {
    if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
    coef_.assign(static_cast<std::size_t>(cap) + 1, Integer(0));
}

TruncatedSeries1 TruncatedSeries1::from_terms(int cap,
                                              const std::vector<std::pair<int, Integer>>& terms) {
    TruncatedSeries1 s(cap);
    for (const auto& [e, v] : terms) {
        if (e < 0) throw std::invalid_argument("from_terms: negative exponent");
        if (e <= cap) s.coef_[e] += v;
    }
    return s;
}

const Integer& TruncatedSeries1::coefficient(int i) const {
    if (i < 0 || i > cap_) {
        throw std::out_of_range("coefficient x^" + std::to_string(i) + " is outside cap " +
                                std::to_string(cap_));
    }
    return coef_[i];
}

void TruncatedSeries1::set_coefficient(int i, Integer v) {
    coefficient(i);
    coef_[i] = std::move(v);
}

TruncatedSeries1 mul(const TruncatedSeries1& a, const TruncatedSeries1& b) {
    if (a.cap() != b.cap()) throw std::invalid_argument("series operands have different caps");
    TruncatedSeries1 out(a.cap());
    for (int i = 0; i <= a.cap(); ++i) {
        if (a.coefficient(i) == 0) continue;
        for (int j = 0; i + j <= a.cap(); ++j) {
            if (b.coefficient(j) == 0) continue;
            out.set_coefficient(i + j, out.coefficient(i + j) + a.coefficient(i) * b.coefficient(j));
        }
    }
    return out;
}

TruncatedSeries1 inverse_unit_series(const TruncatedSeries1& d) {
    if (d.coefficient(0) != 1) {
        throw std::invalid_argument("inverse_unit_series: constant coefficient must be 1");
    }
    TruncatedSeries1 s(d.cap());
    s.set_coefficient(0, 1);
    for (int i = 1; i <= d.cap(); ++i) {
        Integer acc = 0;
        for (int e = 1; e <= i; ++e) {
            if (d.coefficient(e) != 0) acc += d.coefficient(e) * s.coefficient(i - e);
        }
        s.set_coefficient(i, -acc);
    }
    return s;
}

TruncatedSeries1 expand_column_sum_gf(int j, int cap) {
    if (j < 1) throw std::invalid_argument("expand_column_sum_gf requires j >= 1");
    if (cap < 0 || cap > 4 * kCapGuard) {
        throw ResourceLimitError("univariate cap " + std::to_string(cap) + " exceeds the guard (" +
                                 std::to_string(4 * kCapGuard) + ")");
    }
    TruncatedSeries1 base = TruncatedSeries1::from_terms(cap, {{0, Integer(1)}, {1, Integer(-2)}});
    TruncatedSeries1 denom = TruncatedSeries1::from_terms(cap, {{0, Integer(1)}});
    for (int e = 0; e < j + 2; ++e) denom = mul(denom, base);
    TruncatedSeries1 num =
        TruncatedSeries1::from_terms(cap, {{j, Integer(j)}, {j + 1, Integer(-j)}});
    return mul(num, inverse_unit_series(denom));
}

} // namespace hyperfv::series
