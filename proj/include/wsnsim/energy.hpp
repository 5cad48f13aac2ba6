#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace wsnsim {

/// Energy billing class. Data packets cost 1 unit per tx/rx; everything else
/// (interest, ADV, REP, census query/reply) is small control traffic billed
/// at the interest rate of 0.25.
enum class MessageClass { Data, Interest };

/// Energy amount in fixed point (1/1000 unit). All protocol charges are
/// multiples of 0.25, so ledger arithmetic stays exact and conservation
/// checks can compare for equality.
class Energy {
public:
    constexpr Energy() = default;

    static constexpr Energy from_millis(std::int64_t m) { return Energy(m); }
    static Energy from_units(double u) {
        return Energy(static_cast<std::int64_t>(std::llround(u * 1000.0)));
    }
    static constexpr Energy zero() { return Energy(0); }

    constexpr std::int64_t millis() const { return millis_; }
    double units() const { return static_cast<double>(millis_) / 1000.0; }

    constexpr Energy operator+(Energy o) const { return Energy(millis_ + o.millis_); }
    constexpr Energy operator-(Energy o) const { return Energy(millis_ - o.millis_); }
    constexpr Energy& operator+=(Energy o) { millis_ += o.millis_; return *this; }
    constexpr Energy& operator-=(Energy o) { millis_ -= o.millis_; return *this; }
    constexpr Energy operator*(std::int64_t k) const { return Energy(millis_ * k); }
    constexpr auto operator<=>(const Energy&) const = default;

private:
    constexpr explicit Energy(std::int64_t m) : millis_(m) {}
    std::int64_t millis_ = 0;
};

/// Exact decimal rendering, shortest form: "100", "99.75", "0.1".
inline std::string to_decimal_string(Energy e) {
    std::int64_t m = e.millis();
    std::string sign;
    if (m < 0) {
        sign = "-";
        m = -m;
    }
    std::string out = sign + std::to_string(m / 1000);
    std::int64_t frac = m % 1000;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%03lld", static_cast<long long>(frac));
        std::string f(buf);
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

} // namespace wsnsim
