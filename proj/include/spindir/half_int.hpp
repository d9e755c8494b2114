#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spindir {

// Half-integer spin quantum number stored as twice its value so that
// arithmetic on j and m stays exact (j = 3/2 is twice() == 3).
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : tw_(2 * whole) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.tw_ = twice;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr int twice() const { return tw_; }
    constexpr double value() const { return 0.5 * tw_; }
    constexpr bool is_integer() const { return (tw_ & 1) == 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.tw_ + b.tw_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.tw_ - b.tw_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.tw_); }
    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.tw_ == b.tw_; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.tw_ != b.tw_; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.tw_ < b.tw_; }
    friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.tw_ <= b.tw_; }
    friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.tw_ > b.tw_; }
    friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.tw_ >= b.tw_; }

  private:
    int tw_ = 0;
};

constexpr HalfInt abs(HalfInt a) { return HalfInt::from_twice(a.twice() < 0 ? -a.twice() : a.twice()); }

constexpr bool same_parity(HalfInt a, HalfInt b) { return ((a.twice() ^ b.twice()) & 1) == 0; }

// A magnetic quantum number m is admissible for spin j when |m| <= j and
// 2j, 2m have equal parity.
constexpr bool valid_jm(HalfInt j, HalfInt m) {
    return j.twice() >= 0 && abs(m).twice() <= j.twice() && same_parity(j, m);
}

inline void require_valid_jm(HalfInt j, HalfInt m, const char* where) {
    if (!valid_jm(j, m))
        throw std::domain_error(std::string(where) + ": invalid (j, m) pair (2j=" +
                                std::to_string(j.twice()) + ", 2m=" + std::to_string(m.twice()) + ")");
}

// Dimension 2j+1 of the spin-j representation.
constexpr int num_states(HalfInt j) { return j.twice() + 1; }

inline std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.twice() / 2);
    return std::to_string(h.twice()) + "/2";
}

// Accepts "2", "-1" (whole values) or "3/2", "-1/2" (half-odd values).
inline HalfInt parse_half_int(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            const int whole = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return HalfInt(whole);
        }
        std::size_t used = 0;
        const int num = std::stoi(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(text);
        const std::string den = text.substr(slash + 1);
        if (den != "2") throw std::invalid_argument(text);
        return HalfInt::from_twice(num);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse half-integer from '" + text + "'");
    }
}

}  // namespace spindir
