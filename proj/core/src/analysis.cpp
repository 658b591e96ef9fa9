#include "gapcode/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gapcode/error.hpp"

namespace gapcode {

BigInt binom(std::uint64_t n, std::uint64_t w)
{
    if (w > n) return 0;
    w = std::min(w, n - w);
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= w; ++i) {
        out *= n - w + i;
        out /= i;
    }
    return out;
}

int floor_log2(const BigInt& v)
{
    if (v <= 0) throw Error(ErrorKind::domain, "floor_log2 needs a positive argument");
    return static_cast<int>(boost::multiprecision::msb(v));
}

int floor_log2_binom(std::uint64_t n, std::uint64_t w)
{
    const auto b = binom(n, w);
    if (b == 0) {
        throw Error(ErrorKind::domain, "C(" + std::to_string(n) + ", " + std::to_string(w) + ") is zero");
    }
    return floor_log2(b);
}

double stirling_upper_bound(int ell)
{
    // log2 of (2^l e / l)^l / sqrt(2 pi l)
    const double l = ell;
    const double ln2 = std::numbers::ln2;
    return l * l - l * std::log2(l) + l / ln2 - 0.5 * std::log2(l) - std::log(2 * std::numbers::pi) / (2 * ln2);
}

double stirling_short_form(int ell)
{
    const double l = ell;
    const double ln2 = std::numbers::ln2;
    return l * l - l * std::log2(l) + l / ln2 - 0.5 * std::log2(l) - std::log(2 * std::numbers::pi) / ln2;
}

int moebius(std::uint64_t n)
{
    if (n == 0) throw Error(ErrorKind::domain, "moebius(0) is undefined");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0) throw Error(ErrorKind::domain, "euler_phi(0) is undefined");
    std::uint64_t out = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        out -= out / p;
    }
    if (n > 1) out -= out / n;
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

namespace {

void require_necklace_args(std::uint64_t n, std::uint64_t w)
{
    if (n == 0) throw Error(ErrorKind::domain, "necklace length must be positive");
    if (w > n) throw Error(ErrorKind::domain, "necklace weight exceeds its length");
}

// x^j y^(d-j) coefficient of (1/d) sum_{e | d} phi(d/e) (x^(d/e) + y^(d/e))^e
BigInt necklace_coefficient(std::uint64_t d, std::uint64_t j)
{
    BigInt sum = 0;
    for (auto e : divisors(d)) {
        const std::uint64_t m = d / e;
        if (j % m != 0) continue;
        sum += binom(e, j / m) * euler_phi(m);
    }
    return sum / d;
}

} // namespace

BigInt primitive_necklaces(std::uint64_t n, std::uint64_t w)
{
    require_necklace_args(n, w);
    BigInt sum = 0;
    for (auto d : divisors(std::gcd(n, w))) {
        const int m = moebius(d);
        if (m == 0) continue;
        const auto term = binom(n / d, w / d);
        if (m > 0) sum += term; else sum -= term;
    }
    return sum / n;
}

BigInt primitive_necklaces_gf(std::uint64_t n, std::uint64_t w)
{
    require_necklace_args(n, w);
    BigInt sum = 0;
    for (auto d : divisors(n)) {
        const int m = moebius(n / d);
        if (m == 0 || (w * d) % n != 0) continue;
        const auto q = necklace_coefficient(d, w * d / n);
        if (m > 0) sum += q; else sum -= q;
    }
    return sum;
}

namespace {

void require_bound_ell(int ell)
{
    if (ell < 3 || ell > kMaxEll) {
        throw Error(ErrorKind::parameter, "ell must lie in [3, " + std::to_string(kMaxEll) + "]");
    }
}

} // namespace

int necklace_bound(int ell)
{
    require_bound_ell(ell);
    return ell + floor_log2(primitive_necklaces(std::uint64_t{1} << ell, static_cast<std::uint64_t>(ell)));
}

DeltaReport delta_ell(int ell)
{
    require_bound_ell(ell);
    const double l = ell;
    const double ln2 = std::numbers::ln2;
    DeltaReport r;
    r.ell = ell;
    r.delta = floor_log2_binom(std::uint64_t{1} << ell, static_cast<std::uint64_t>(ell)) -
              static_cast<int>(f_ell(ell).k());
    r.bound = (1 + 1 / (2 * ln2)) * l - 1.5 * std::log2(l) -
              std::log(2 * std::numbers::pi / std::numbers::e) / (2 * ln2);
    r.within_bound = r.delta <= r.bound;
    return r;
}

std::string BoundsReport::csv_header()
{
    return "ell,k_ell,k_hat_ell,floor_log2_binom,stirling_ub,necklace_ub,delta_ell";
}

std::string BoundsReport::csv_row() const
{
    std::ostringstream out;
    out << ell << ',' << k_ell << ',' << k_hat_ell << ',' << log2_binom_floor << ',' << std::fixed
        << std::setprecision(6) << stirling_ub << ',' << necklace_ub << ',' << delta_ell;
    return out.str();
}

BoundsReport bounds_report(int ell)
{
    require_bound_ell(ell);
    BoundsReport r;
    r.ell = ell;
    r.k_ell = f_ell(ell).k();
    r.k_hat_ell = f_hat(ell).k();
    r.log2_binom_floor = floor_log2_binom(std::uint64_t{1} << ell, static_cast<std::uint64_t>(ell));
    r.stirling_ub = stirling_upper_bound(ell);
    r.necklace_ub = necklace_bound(ell);
    r.delta_ell = r.log2_binom_floor - static_cast<int>(r.k_ell);
    return r;
}

namespace {

struct Search {
    int ell;
    std::uint64_t capacity;
    std::vector<int> entries;
    OptimalityResult* out;

    // entries holds s(1..depth); every later entry is at least the last one
    void extend(std::uint64_t partial)
    {
        const auto depth = static_cast<int>(entries.size());
        if (depth == ell - 1) {
            finish();
            return;
        }
        const int lo = entries.empty() ? 1 : entries.back();
        const int remaining = ell - 1 - depth;
        for (int v = lo; v <= ell; ++v) {
            // cheapest completion: all remaining entries equal v, so s(ell-1) = v as well
            const std::uint64_t floor_sum =
                partial + static_cast<std::uint64_t>(remaining + 1) * (std::uint64_t{1} << v);
            if (floor_sum > capacity) break;
            entries.push_back(v);
            extend(partial + (std::uint64_t{1} << v));
            entries.pop_back();
        }
    }

    void finish()
    {
        ++out->sequences_visited;
        auto full = entries;
        full.push_back(ell);
        CharSeq s(ell, std::move(full));
        if (!is_anchor_decodable(s).decodable) return;
        ++out->anchor_decodable;
        const auto k = s.k();
        out->achieved_k.insert(k);
        if (k > out->max_k) {
            out->max_k = k;
            out->maximizers.clear();
        }
        if (k == out->max_k) out->maximizers.push_back(std::move(s));
    }
};

} // namespace

OptimalityResult optimality_search(int ell)
{
    if (ell < 3 || ell > 8) throw Error(ErrorKind::parameter, "optimality search supports ell in [3, 8]");
    OptimalityResult result;
    result.ell = ell;
    Search search{ell, std::uint64_t{1} << ell, {}, &result};
    search.extend(0);
    const auto f = f_ell(ell);
    for (const auto& s : result.maximizers) {
        if (s == f) result.f_ell_is_maximizer = true;
    }
    return result;
}

} // namespace gapcode
