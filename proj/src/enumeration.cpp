#include "tandem/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tandem/errors.hpp"
#include "squares.hpp"

namespace tandem {

namespace {

using detail::ends_with_square;

std::size_t count_dfs(std::vector<Symbol>& w, std::size_t remaining, const DupSystem& sys)
{
    if (remaining == 0) return 1;
    std::size_t total = 0;
    for (int a = 0; a < sys.q(); ++a) {
        w.push_back(static_cast<Symbol>(a));
        if (!ends_with_square(w, sys.k())) total += count_dfs(w, remaining - 1, sys);
        w.pop_back();
    }
    return total;
}

void canonical_dfs(std::vector<Symbol>& w, int used, std::size_t length, const DupSystem& sys,
                   std::vector<Word>& out)
{
    if (w.size() == length) {
        out.emplace_back(w, sys.q());
        return;
    }
    const int limit = std::min(used + 1, sys.q());
    for (int a = 0; a < limit; ++a) {
        w.push_back(static_cast<Symbol>(a));
        if (!ends_with_square(w, sys.k())) canonical_dfs(w, std::max(used, a + 1), length, sys, out);
        w.pop_back();
    }
}

// ceil(x) that forgives rounding noise when x is mathematically an integer.
std::size_t ceil_tolerant(double x)
{
    const double c = std::ceil(x - 1e-9);
    return c < 1.0 ? 1 : static_cast<std::size_t>(c);
}

BigInt poly(const BigInt& q, std::initializer_list<long> coeffs_high_to_low)
{
    BigInt acc = 0;
    for (long c : coeffs_high_to_low) acc = acc * q + c;
    return acc;
}

}  // namespace

std::vector<int> recurrence_coefficients(const DupSystem& sys)
{
    const int q = sys.q();
    if (sys.k() == 2) return {q - 2, q - 2};
    return {q - 2, q - 3, q - 2};
}

std::size_t recursion_start(const DupSystem& sys) { return 2 * static_cast<std::size_t>(sys.k()); }

CountTable::CountTable(DupSystem sys, std::size_t max_n) : sys_(sys)
{
    const BigInt q = sys.q();
    values_.resize(max_n + 1);
    const auto coeffs = recurrence_coefficients(sys);
    const std::size_t start = recursion_start(sys);
    for (std::size_t n = 0; n <= max_n; ++n) {
        BigInt& v = values_[n];
        if (n < start) {
            switch (n) {
            case 0: v = 1; break;
            case 1: v = q; break;
            case 2: v = q * (q - 1); break;
            case 3: v = q * (q - 1) * (q - 1); break;
            case 4: v = q * q * (q - 1) * (q - 2); break;                 // k = 3 only
            case 5: v = q * (q - 1) * (q - 2) * (q * q - q - 1); break;  // k = 3 only
            }
            continue;
        }
        v = 0;
        for (std::size_t r = 1; r <= coeffs.size(); ++r) v += coeffs[r - 1] * values_[n - r];
    }
}

const BigInt& CountTable::operator[](std::size_t n) const
{
    if (n >= values_.size()) throw DomainError("length beyond count table");
    return values_[n];
}

BigInt count_irr(std::size_t n, const DupSystem& sys) { return CountTable(sys, n)[n]; }

PrefixCountTable::PrefixCountTable(DupSystem sys, Word prefix, std::size_t max_n)
    : sys_(sys), prefix_(std::move(prefix))
{
    if (prefix_.alphabet() != sys.q()) throw DomainError("alphabet mismatch");
    if (max_n < prefix_.size()) throw DomainError("table length shorter than prefix");
    const std::size_t p = prefix_.size();
    const auto k = static_cast<std::size_t>(sys.k());
    first_recursive_ = std::max(p + k, recursion_start(sys));
    values_.assign(max_n - p + 1, BigInt(0));
    if (!is_irreducible(prefix_, k)) return;

    const auto coeffs = recurrence_coefficients(sys);
    for (std::size_t n = p; n <= max_n; ++n) {
        BigInt& v = values_[n - p];
        if (n < first_recursive_) {
            v = count_extensions_direct(prefix_.symbols(), n - p, sys);
            continue;
        }
        for (std::size_t r = 1; r <= coeffs.size(); ++r) v += coeffs[r - 1] * values_[n - p - r];
    }
}

const BigInt& PrefixCountTable::operator[](std::size_t n) const
{
    if (n < prefix_.size() || n > max_length()) throw DomainError("length outside prefix table");
    return values_[n - prefix_.size()];
}

BigInt count_irr_prefix(const Word& p, std::size_t n, const DupSystem& sys)
{
    if (n < p.size()) throw DomainError("length shorter than prefix");
    return PrefixCountTable(sys, p, n)[n];
}

std::size_t count_extensions_direct(std::span<const Symbol> context, std::size_t d,
                                    const DupSystem& sys)
{
    std::vector<Symbol> w(context.begin(), context.end());
    return count_dfs(w, d, sys);
}

ExtensionCounter::ExtensionCounter(DupSystem sys, std::size_t max_extension)
    : sys_(sys), max_extension_(max_extension)
{
    const auto coeffs = recurrence_coefficients(sys);
    const std::size_t k = coeffs.size();
    basis_.assign(k, std::vector<BigInt>(max_extension + 1, BigInt(0)));
    for (std::size_t i = 0; i < k; ++i) {
        auto& e = basis_[i];
        for (std::size_t d = 0; d <= max_extension; ++d) {
            if (d < k) {
                e[d] = (d == i) ? 1 : 0;
                continue;
            }
            for (std::size_t r = 1; r <= k; ++r) e[d] += coeffs[r - 1] * e[d - r];
        }
    }
}

BigInt ExtensionCounter::count(std::span<const Symbol> context, std::size_t d) const
{
    const auto k = static_cast<std::size_t>(sys_.k());
    if (context.size() < k) throw DomainError("extension context shorter than k");
    if (d > max_extension_) throw DomainError("extension longer than counter table");
    const std::size_t window = std::min(context.size(), 2 * k - 1);
    const auto tail = context.subspan(context.size() - window);
    if (d < k) return count_extensions_direct(tail, d, sys_);
    BigInt total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t base = count_extensions_direct(tail, i, sys_);
        if (base != 0) total += base * basis_[i][d];
    }
    return total;
}

std::size_t ExtensionCounter::table_entries() const noexcept
{
    std::size_t n = 0;
    for (const auto& e : basis_) n += e.size();
    return n;
}

std::vector<Word> canonical_irreducible_words(std::size_t length, const DupSystem& sys)
{
    std::vector<Word> out;
    std::vector<Symbol> w;
    canonical_dfs(w, 0, length, sys, out);
    return out;
}

std::pair<std::size_t, std::size_t> delta_base_range(const DupSystem& sys)
{
    if (sys.k() == 2) return {3, 4};
    return {5, 7};
}

BigInt delta_by_windows(std::size_t m, const DupSystem& sys)
{
    const std::size_t window = 2 * static_cast<std::size_t>(sys.k()) - 1;
    if (m < window) throw DomainError("state length below 2k-1");
    const ExtensionCounter counter(sys, m);
    std::optional<BigInt> best;
    for (const Word& s : canonical_irreducible_words(window, sys)) {
        BigInt c = counter.count(s.symbols(), m);
        if (!best || c < *best) best = std::move(c);
    }
    return *best;
}

BigInt delta_min_degree(std::size_t m, const DupSystem& sys)
{
    const auto [lo, hi] = delta_base_range(sys);
    if (m < lo)
        throw DomainError("Delta is defined for m >= " + std::to_string(lo) + ", got " +
                          std::to_string(m));
    std::vector<BigInt> values;
    for (std::size_t b = lo; b <= std::min(m, hi); ++b) values.push_back(delta_by_windows(b, sys));
    const auto coeffs = recurrence_coefficients(sys);
    for (std::size_t cur = hi + 1; cur <= m; ++cur) {
        BigInt v = 0;
        for (std::size_t r = 1; r <= coeffs.size(); ++r) v += coeffs[r - 1] * values[values.size() - r];
        values.push_back(std::move(v));
    }
    return values.back();
}

std::optional<BigInt> printed_delta_formula(std::size_t m, const DupSystem& sys)
{
    const BigInt q = sys.q();
    if (sys.k() == 2) {
        if (m == 3) return q * (q - 2) * (q - 2);
        if (m == 4) return (q - 2) * (q - 2) * (q * q - q - 1);
        return std::nullopt;
    }
    switch (m) {
    case 5: return (q - 2) * poly(q, {1, -2, -1}) * poly(q, {1, -2, -1});
    case 6: return (q - 1) * poly(q, {1, -6, 9, 4, -8, -9});
    // Literal reading of "-8q-10q+3": the two linear terms are summed.
    case 7: return (q - 2) * poly(q, {1, 0, -6, 9, 4, -18, 3});
    default: return std::nullopt;
    }
}

double dominant_root(const DupSystem& sys)
{
    const double q = sys.q();
    if (sys.k() == 2) return (q - 2 + std::sqrt(q * q - 4)) / 2;
    auto f = [q](double x) { return ((x - (q - 2)) * x - (q - 3)) * x - (q - 2); };
    // f(1) = 8 - 3q < 0 and f(q) = q^2 + 2q + 2 > 0.
    double lo = 1.0, hi = q;
    while (hi - lo > 1e-14 * hi) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

RateInfo asymptotic_rate(const DupSystem& sys)
{
    const double lambda = dominant_root(sys);
    const double log_lambda = std::log(lambda);
    double kappa = std::numeric_limits<double>::infinity();
    const auto [lo, hi] = delta_base_range(sys);
    for (std::size_t m = lo; m <= hi; ++m) {
        const double log_ratio = log_bigint(delta_min_degree(m, sys)) - m * log_lambda;
        kappa = std::min(kappa, std::exp(log_ratio));
    }
    return RateInfo{sys, lambda, log_lambda / std::log(static_cast<double>(sys.q())), kappa};
}

FseParams make_fse_params(const DupSystem& sys, std::size_t ell, std::size_t m)
{
    if (ell == 0) throw DomainError("ell must be positive");
    const auto [lo, hi] = delta_base_range(sys);
    (void)hi;
    if (m < lo) throw DomainError("m must be at least " + std::to_string(lo));
    if (pow_bigint(sys.q(), static_cast<unsigned>(ell)) > delta_min_degree(m, sys))
        throw DomainError("q^ell exceeds the minimum out-degree Delta(m)");
    return FseParams{sys, 0.0, ell, m};
}

FseParams choose_params(double epsilon, const DupSystem& sys)
{
    const RateInfo info = asymptotic_rate(sys);
    const double c = info.rate;
    if (!(epsilon > 0) || epsilon >= c)
        throw DomainError("epsilon must lie in (0, rate) = (0, " + std::to_string(c) + ")");
    const double log_kappa = std::log(info.kappa) / std::log(static_cast<double>(sys.q()));
    const std::size_t ell = ceil_tolerant((c - epsilon) * (c - log_kappa) / epsilon);
    std::size_t m = ceil_tolerant((static_cast<double>(ell) - log_kappa) / c);
    m = std::max(m, delta_base_range(sys).first);

    FseParams params{sys, epsilon, ell, m};
    if (pow_bigint(sys.q(), static_cast<unsigned>(ell)) > delta_min_degree(m, sys))
        throw std::logic_error("parameter choice violates q^ell <= Delta(m)");
    if (params.rate() < c - epsilon)
        throw std::logic_error("parameter choice violates ell/m >= rate - epsilon");
    return params;
}

BigInt code_size(std::size_t n, const DupSystem& sys)
{
    if (n == 0) throw DomainError("code length must be positive");
    const CountTable table(sys, n);
    BigInt total = 0;
    for (std::size_t i = 1; i <= n; ++i) total += table[i];
    return total;
}

}  // namespace tandem
