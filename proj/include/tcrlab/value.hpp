#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tcrlab/errors.hpp"

namespace tcrlab {

/* Natural number extended with infinity. Addition and scaling saturate at
 * infinity; 0 * infinity is 0 (scaling an empty product of covers). */
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t n) : n_(n) {}

    static constexpr ExtNat infinity() {
        ExtNat e;
        e.inf_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return inf_; }

    std::uint64_t finite_value() const {
        if (inf_) throw InputError("finite_value() on infinity");
        return n_;
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.n_ == b.n_);
    }
    friend constexpr bool operator!=(ExtNat a, ExtNat b) { return !(a == b); }
    friend constexpr bool operator<(ExtNat a, ExtNat b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.n_ < b.n_;
    }
    friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtNat a, ExtNat b) { return b < a; }
    friend constexpr bool operator>=(ExtNat a, ExtNat b) { return b <= a; }

    friend ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return infinity();
        if (a.n_ > UINT64_MAX - b.n_) throw InputError("ExtNat addition overflow");
        return ExtNat(a.n_ + b.n_);
    }

    friend ExtNat operator*(std::uint64_t k, ExtNat a) {
        if (k == 0) return ExtNat(0);
        if (a.inf_) return infinity();
        if (a.n_ != 0 && k > UINT64_MAX / a.n_) throw InputError("ExtNat scaling overflow");
        return ExtNat(k * a.n_);
    }

    ExtNat div_floor(std::uint64_t k) const {
        if (k == 0) throw InputError("division by zero");
        if (inf_) return infinity();
        return ExtNat(n_ / k);
    }

    ExtNat div_ceil(std::uint64_t k) const {
        if (k == 0) throw InputError("division by zero");
        if (inf_) return infinity();
        return ExtNat(n_ / k + (n_ % k != 0 ? 1 : 0));
    }

    friend ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
    friend ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

    std::string str() const { return inf_ ? "infinity" : std::to_string(n_); }

private:
    bool inf_ = false;
    std::uint64_t n_ = 0;
};

/* A value of cat/cd/TC_r: an exact natural, infinity, or a closed interval
 * over the extended naturals. exact(n) == [n,n], infinite == [inf,inf]. */
class InvariantValue {
public:
    enum class Kind { exact, infinite, interval };

    InvariantValue() = default;  // unknown: [0, infinity]

    static InvariantValue exact(std::uint64_t n) { return InvariantValue(ExtNat(n), ExtNat(n)); }
    static InvariantValue infinite() { return InvariantValue(ExtNat::infinity(), ExtNat::infinity()); }
    static InvariantValue interval(ExtNat lo, ExtNat hi) {
        if (hi < lo) throw InputError("interval with lo > hi");
        return InvariantValue(lo, hi);
    }
    static std::optional<InvariantValue> try_interval(ExtNat lo, ExtNat hi) {
        if (hi < lo) return std::nullopt;
        return InvariantValue(lo, hi);
    }
    static InvariantValue unknown() { return InvariantValue(); }

    ExtNat lo() const { return lo_; }
    ExtNat hi() const { return hi_; }

    Kind kind() const {
        if (lo_ == hi_) return lo_.is_infinite() ? Kind::infinite : Kind::exact;
        return Kind::interval;
    }
    bool is_exact() const { return kind() == Kind::exact; }
    bool is_infinite() const { return kind() == Kind::infinite; }
    bool is_unknown() const { return lo_ == ExtNat(0) && hi_.is_infinite(); }

    bool contains(const InvariantValue& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }

    /* Intersection; empty when the bounds conflict. */
    static std::optional<InvariantValue> meet(const InvariantValue& a, const InvariantValue& b) {
        ExtNat lo = max(a.lo_, b.lo_);
        ExtNat hi = min(a.hi_, b.hi_);
        if (hi < lo) return std::nullopt;
        return InvariantValue(lo, hi);
    }

    static InvariantValue hull(const InvariantValue& a, const InvariantValue& b) {
        return InvariantValue(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
    }

    InvariantValue scaled(std::uint64_t k) const { return InvariantValue(k * lo_, k * hi_); }

    /* Preimage of this interval under multiplication by k: the widest interval
     * whose k-fold scaling lands inside. Used by equalities like cd(f^k) = k cd(f). */
    InvariantValue unscaled(std::uint64_t k) const {
        return InvariantValue(lo_.div_ceil(k), hi_.div_floor(k));
    }

    friend bool operator==(const InvariantValue& a, const InvariantValue& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    std::string str() const {
        if (is_exact()) return lo_.str();
        if (is_infinite()) return "infinity";
        return "[" + lo_.str() + ", " + hi_.str() + "]";
    }

private:
    InvariantValue(ExtNat lo, ExtNat hi) : lo_(lo), hi_(hi) {}

    ExtNat lo_{0};
    ExtNat hi_ = ExtNat::infinity();
};

}  // namespace tcrlab
