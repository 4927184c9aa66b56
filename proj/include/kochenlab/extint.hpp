#ifndef KOCHENLAB_EXTINT_HPP
#define KOCHENLAB_EXTINT_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "kochenlab/errors.hpp"

namespace kochenlab {

// An integer extended by +infinity; the codomain of every valuation map.
// +infinity absorbs addition and dominates every finite value.
class ExtInt {
  public:
    ExtInt() : inf_(false), v_(0) {}
    ExtInt(long long v) : inf_(false), v_(v) {} // NOLINT: implicit by design
    static ExtInt infinity() { ExtInt e; e.inf_ = true; return e; }

    bool is_infinite() const { return inf_; }
    long long value() const {
        if (inf_) throw domain_error("ExtInt: +infinity has no finite value");
        return v_;
    }

    ExtInt operator+(const ExtInt& o) const {
        if (inf_ || o.inf_) return infinity();
        return ExtInt(v_ + o.v_);
    }
    ExtInt operator-() const {
        if (inf_) throw domain_error("ExtInt: cannot negate +infinity");
        return ExtInt(-v_);
    }
    ExtInt operator*(long long c) const {
        if (inf_) {
            if (c <= 0) throw domain_error("ExtInt: bad scalar for +infinity");
            return infinity();
        }
        return ExtInt(v_ * c);
    }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

    friend ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const ExtInt& e) {
        return os << e.str();
    }

  private:
    bool inf_;
    long long v_;
};

} // namespace kochenlab

#endif
