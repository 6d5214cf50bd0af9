#include "core/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace bipdisc {

std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            long long num = std::stoll(text.substr(0, slash));
            long long den = std::stoll(text.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return Rat(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) {
            return Rat(std::stoll(text), 1);
        }
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.size() > 12) frac = frac.substr(0, 12);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        bool neg = !whole.empty() && whole[0] == '-';
        long long w = (whole.empty() || whole == "-" || whole == "+") ? 0 : std::stoll(whole);
        long long den = 1;
        for (size_t i = 0; i < frac.size(); i++) den *= 10;
        long long f = frac.empty() ? 0 : std::stoll(frac);
        long long num = std::llabs(w) * den + f;
        if (neg || w < 0) num = -num;
        return Rat(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

bool fourth_power_leq(const Rat& r, long long hi_num, long long hi_den) {
    using I = unsigned __int128;
    I n = r.numerator() < 0 ? I(-(r.numerator())) : I(r.numerator());
    I d = I(r.denominator());
    // (n/d)^4 <= hi_num/hi_den  <=>  n^4 * hi_den <= hi_num * d^4.
    // Requires |numerator|, denominator <= 2^21 and hi_* <= 2^62, which keeps
    // both sides inside 128 bits; discrepancy deviations (<= 2n / n) and the
    // bounds used with them stay far below that.
    I le = (n * n) * (n * n) * I(hi_den);
    I ri = I(hi_num) * (d * d) * (d * d);
    return le <= ri;
}

bool meets_bound_with_slack(const Rat& value, long long slack_num, long long slack_den,
                            const Rat& target) {
    using I = __int128;
    // (v_n/v_d + s_n/s_d) >= t_n/t_d
    I lhs = (I(value.numerator()) * slack_den + I(slack_num) * value.denominator());
    // lhs over (v_d * s_d); cross-multiply with target
    I left = lhs * target.denominator();
    I right = I(target.numerator()) * value.denominator() * slack_den;
    return left >= right;
}

bool value_geq_scaled(long long value, const Rat& r, long long scale) {
    using I = __int128;
    return I(value) * r.denominator() >= I(r.numerator()) * scale;
}

bool square_leq_scaled(long long num, long long den, long long factor, const Rat& r) {
    using I = __int128;
    I lhs = I(num) * num * r.denominator();
    I rhs = I(factor) * r.numerator() * den * den;
    return lhs <= rhs;
}

long long floor_fourth_root(unsigned __int128 x) {
    long long lo = 0, hi = 3037000499LL;  // hi^2 fits in int64; hi^4 in 128 bits
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        unsigned __int128 m2 = static_cast<unsigned __int128>(mid) * mid;
        if (m2 * m2 <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace bipdisc
