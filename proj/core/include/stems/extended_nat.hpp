#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stems {

// A dimension count: a natural number or countably infinite.
class ExtendedNat {
public:
    ExtendedNat() : infinite_(false), value_(0) {}
    explicit ExtendedNat(std::int64_t v) : infinite_(false), value_(v) {
        if (v < 0) throw std::invalid_argument("ExtendedNat: negative value");
    }
    static ExtendedNat infinity() {
        ExtendedNat n;
        n.infinite_ = true;
        return n;
    }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && value_ == 0; }
    std::int64_t value() const {
        if (infinite_) throw std::logic_error("ExtendedNat: value() of infinity");
        return value_;
    }

    ExtendedNat& operator+=(const ExtendedNat& o) {
        if (o.infinite_) infinite_ = true;
        if (!infinite_) value_ += o.value_;
        return *this;
    }
    friend ExtendedNat operator+(ExtendedNat a, const ExtendedNat& b) { return a += b; }

    // Subtraction is only defined when the result stays a natural number;
    // infinity absorbs any finite subtrahend.
    ExtendedNat minus(std::int64_t amount) const {
        if (amount < 0) throw std::invalid_argument("ExtendedNat: negative subtrahend");
        if (infinite_) return *this;
        if (value_ < amount) throw std::logic_error("ExtendedNat: subtraction below zero");
        return ExtendedNat(value_ - amount);
    }

    friend bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const ExtendedNat& a, const ExtendedNat& b) { return !(a == b); }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    bool infinite_;
    std::int64_t value_;
};

} // namespace stems
