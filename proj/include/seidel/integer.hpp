#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seidel {

/**
 * Arbitrary-precision signed integer.
 *
 * Sign-magnitude representation over little-endian 64-bit limbs.
 * Invariants: no leading zero limbs; zero has empty limbs and sign 0.
 * Values are immutable through the public interface, so instances can be
 * shared freely across threads.
 */
class Integer {
public:
    Integer() = default;

    Integer(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        limbs_.push_back(m);
    }

    explicit Integer(std::string_view text) { *this = from_string(text); }

    static Integer from_string(std::string_view text);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (limbs_[0] & 1u); }
    int sign() const { return sign_; }

    // True when the value fits a single limb (ignoring sign).
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t mag_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    friend bool operator==(const Integer& a, const Integer& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    Integer operator-() const {
        Integer r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    Integer abs() const {
        Integer r = *this;
        r.sign_ = r.sign_ == 0 ? 0 : 1;
        return r;
    }

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);

    // Quotient truncated toward zero, remainder with the dividend's sign.
    static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b);

    friend Integer operator/(const Integer& a, const Integer& b) { return divmod(a, b).first; }
    friend Integer operator%(const Integer& a, const Integer& b) { return divmod(a, b).second; }

    Integer& operator+=(const Integer& b) { return *this = *this + b; }
    Integer& operator-=(const Integer& b) { return *this = *this - b; }
    Integer& operator*=(const Integer& b) { return *this = *this * b; }

    // Nonnegative greatest common divisor; gcd(0, 0) = 0.
    static Integer gcd(const Integer& a, const Integer& b);

    friend Integer pow_u(const Integer& base, unsigned long long e) {
        Integer r(1), b = base;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

private:
    using Limbs = std::vector<std::uint64_t>;
    using u64 = std::uint64_t;
    using u128 = unsigned __int128;

    Limbs limbs_;
    int sign_ = 0;

    Integer(int sign, Limbs limbs) : limbs_(std::move(limbs)), sign_(sign) {
        trim(limbs_);
        if (limbs_.empty()) sign_ = 0;
    }

    static void trim(Limbs& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static int cmp_mag(const Limbs& a, const Limbs& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static Limbs add_mag(const Limbs& a, const Limbs& b) {
        const Limbs& lo = a.size() < b.size() ? a : b;
        const Limbs& hi = a.size() < b.size() ? b : a;
        Limbs r;
        r.reserve(hi.size() + 1);
        u64 carry = 0;
        std::size_t i = 0;
        for (; i < lo.size(); ++i) {
            u64 s = hi[i] + carry;
            carry = s < carry;
            u64 t = s + lo[i];
            carry += t < s;
            r.push_back(t);
        }
        for (; i < hi.size(); ++i) {
            u64 s = hi[i] + carry;
            carry = s < carry;
            r.push_back(s);
        }
        if (carry) r.push_back(carry);
        return r;
    }

    // requires |a| >= |b|
    static Limbs sub_mag(const Limbs& a, const Limbs& b) {
        Limbs r;
        r.reserve(a.size());
        u64 borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            u64 bi = i < b.size() ? b[i] : 0;
            u64 d = a[i] - bi;
            u64 borrow2 = a[i] < bi;
            u64 d2 = d - borrow;
            borrow2 += d < borrow;
            r.push_back(d2);
            borrow = borrow2;
        }
        trim(r);
        return r;
    }

    static Limbs mul_mag(const Limbs& a, const Limbs& b) {
        if (a.empty() || b.empty()) return {};
        if (a.size() == 1 && b.size() == 1) {
            u128 p = static_cast<u128>(a[0]) * b[0];
            Limbs r{static_cast<u64>(p)};
            if (u64 hi = static_cast<u64>(p >> 64)) r.push_back(hi);
            return r;
        }
        Limbs r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            u64 carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                u128 cur = static_cast<u128>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<u64>(cur);
                carry = static_cast<u64>(cur >> 64);
            }
            r[i + b.size()] += carry;
        }
        trim(r);
        return r;
    }

    static void shl_bits(Limbs& v, unsigned s) {
        if (s == 0 || v.empty()) return;
        u64 carry = 0;
        for (auto& limb : v) {
            u64 next = limb >> (64 - s);
            limb = (limb << s) | carry;
            carry = next;
        }
        if (carry) v.push_back(carry);
    }

    static void shr_bits(Limbs& v, unsigned s) {
        if (s == 0 || v.empty()) return;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            v[i] = (v[i] >> s) | (v[i + 1] << (64 - s));
        }
        v.back() >>= s;
        trim(v);
    }

    // whole-limb + bit right shift, in place
    static void shr_any(Limbs& v, std::size_t bits) {
        std::size_t limbs = bits / 64;
        if (limbs) {
            if (limbs >= v.size()) {
                v.clear();
                return;
            }
            v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(limbs));
        }
        shr_bits(v, static_cast<unsigned>(bits % 64));
    }

    static std::size_t ctz_mag(const Limbs& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(v[i]));
        }
        return 0;
    }

    // in-place a -= b for magnitudes, requires a >= b
    static void sub_mag_inplace(Limbs& a, const Limbs& b) {
        u64 borrow = 0;
        std::size_t i = 0;
        for (; i < b.size(); ++i) {
            u64 d = a[i] - b[i];
            u64 nb = a[i] < b[i];
            u64 d2 = d - borrow;
            nb += d < borrow;
            a[i] = d2;
            borrow = nb;
        }
        for (; borrow && i < a.size(); ++i) {
            u64 d = a[i] - borrow;
            borrow = a[i] < borrow;
            a[i] = d;
        }
        trim(a);
    }

    static u64 gcd_u64(u64 a, u64 b) {
        if (a == 0) return b;
        if (b == 0) return a;
        unsigned s = static_cast<unsigned>(std::countr_zero(a | b));
        a >>= std::countr_zero(a);
        while (b) {
            b >>= std::countr_zero(b);
            if (a > b) std::swap(a, b);
            b -= a;
        }
        return a << s;
    }

    // Stein's algorithm on magnitudes.
    static Limbs gcd_mag(Limbs a, Limbs b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        if (a.size() == 1 && b.size() == 1) return Limbs{gcd_u64(a[0], b[0])};
        std::size_t za = ctz_mag(a), zb = ctz_mag(b);
        std::size_t shift = za < zb ? za : zb;
        shr_any(a, za);
        for (;;) {
            std::size_t z = ctz_mag(b);
            if (z) shr_any(b, z);
            if (b.empty()) break;
            if (cmp_mag(a, b) > 0) a.swap(b);
            sub_mag_inplace(b, a);
            if (b.empty()) break;
        }
        Limbs g = std::move(a);
        // re-apply the common power of two
        std::size_t limbs = shift / 64;
        if (limbs) g.insert(g.begin(), limbs, 0);
        shl_bits(g, static_cast<unsigned>(shift % 64));
        return g;
    }

    // Schoolbook long division on magnitudes: u = q*v + r with r < v.
    static void divmod_mag(const Limbs& u, const Limbs& v, Limbs& q, Limbs& r);
};

inline Integer operator+(const Integer& a, const Integer& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return Integer(a.sign_, Integer::add_mag(a.limbs_, b.limbs_));
    int c = Integer::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return Integer();
    if (c > 0) return Integer(a.sign_, Integer::sub_mag(a.limbs_, b.limbs_));
    return Integer(b.sign_, Integer::sub_mag(b.limbs_, a.limbs_));
}

inline Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

inline Integer operator*(const Integer& a, const Integer& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Integer();
    return Integer(a.sign_ * b.sign_, Integer::mul_mag(a.limbs_, b.limbs_));
}

inline void Integer::divmod_mag(const Limbs& u, const Limbs& v, Limbs& q, Limbs& r) {
    if (v.empty()) throw std::domain_error("Integer: division by zero");
    if (cmp_mag(u, v) < 0) {
        q.clear();
        r = u;
        return;
    }
    if (v.size() == 1) {
        q.assign(u.size(), 0);
        u64 d = v[0], rem = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            u128 cur = (static_cast<u128>(rem) << 64) | u[i];
            q[i] = static_cast<u64>(cur / d);
            rem = static_cast<u64>(cur % d);
        }
        trim(q);
        r = rem ? Limbs{rem} : Limbs{};
        return;
    }

    // Knuth algorithm D with 64-bit limbs.
    const unsigned s = static_cast<unsigned>(std::countl_zero(v.back()));
    Limbs vn = v;
    shl_bits(vn, s);
    Limbs un = u;
    shl_bits(un, s);
    un.resize(u.size() + 1, 0);

    const std::size_t n = vn.size();
    const std::size_t m = un.size() - n - 1;
    q.assign(m + 1, 0);
    const u64 vhi = vn[n - 1], vlo = vn[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        u128 num = (static_cast<u128>(un[j + n]) << 64) | un[j + n - 1];
        u128 qhat = num / vhi;
        u128 rhat = num % vhi;
        while (qhat >> 64 ||
               static_cast<u128>(static_cast<u64>(qhat)) * vlo >
                   ((rhat << 64) | un[j + n - 2])) {
            --qhat;
            rhat += vhi;
            if (rhat >> 64) break;
        }

        // multiply-subtract
        u64 qd = static_cast<u64>(qhat);
        u64 borrow = 0, carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 p = static_cast<u128>(qd) * vn[i] + carry;
            carry = static_cast<u64>(p >> 64);
            u64 plo = static_cast<u64>(p);
            u64 t = un[i + j] - plo;
            u64 nb = un[i + j] < plo;
            u64 t2 = t - borrow;
            nb += t < borrow;
            un[i + j] = t2;
            borrow = nb;
        }
        u64 top = un[j + n] - carry;
        u64 nb = un[j + n] < carry;
        u64 top2 = top - borrow;
        nb += top < borrow;
        un[j + n] = top2;

        if (nb) {
            // qhat was one too large: add divisor back
            --qd;
            u64 c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u64 sum = un[i + j] + c;
                c = sum < c;
                u64 sum2 = sum + vn[i];
                c += sum2 < sum;
                un[i + j] = sum2;
            }
            un[j + n] += c;
        }
        q[j] = qd;
    }
    trim(q);
    r.assign(un.begin(), un.begin() + static_cast<std::ptrdiff_t>(n));
    trim(r);
    shr_bits(r, s);
}

inline std::pair<Integer, Integer> Integer::divmod(const Integer& a, const Integer& b) {
    if (b.sign_ == 0) throw std::domain_error("Integer: division by zero");
    Limbs q, r;
    divmod_mag(a.limbs_, b.limbs_, q, r);
    Integer qi(a.sign_ * b.sign_, std::move(q));
    Integer ri(a.sign_, std::move(r));
    return {std::move(qi), std::move(ri)};
}

inline Integer Integer::gcd(const Integer& a, const Integer& b) {
    return Integer(a.sign_ == 0 && b.sign_ == 0 ? 0 : 1, gcd_mag(a.limbs_, b.limbs_));
}

inline Integer Integer::from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("Integer: empty numeral");
    Integer result;
    while (pos < text.size()) {
        std::size_t take = std::min<std::size_t>(18, text.size() - pos);
        long long chunk = 0, scale = 1;
        for (std::size_t i = 0; i < take; ++i) {
            char c = text[pos + i];
            if (c < '0' || c > '9') throw std::invalid_argument("Integer: bad digit");
            chunk = chunk * 10 + (c - '0');
            scale *= 10;
        }
        result = result * Integer(scale) + Integer(chunk);
        pos += take;
    }
    if (sign < 0) result = -result;
    return result;
}

inline std::string Integer::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<u64> chunks;
    Limbs cur = limbs_;
    const u64 base = 10000000000000000000ULL;  // 10^19
    while (!cur.empty()) {
        u64 rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            u128 t = (static_cast<u128>(rem) << 64) | cur[i];
            cur[i] = static_cast<u64>(t / base);
            rem = static_cast<u64>(t % base);
        }
        trim(cur);
        chunks.push_back(rem);
    }
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(19 - part.size(), '0');
        out += part;
    }
    return out;
}

}  // namespace seidel
