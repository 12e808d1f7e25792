#pragma once

// Exact scalar arithmetic. Two fields are supported: the rationals (GMP-backed,
// always stored canonically: lowest terms, positive denominator) and prime
// fields GF(p) with runtime modulus. All arithmetic is routed through a field
// context object so that generic code over `FieldType` never needs to invent
// a zero or one out of thin air.

#include <cstdint>
#include <optional>
#include <string>
#include <gmpxx.h>

#include "codual/errors.hpp"

namespace codual {

/// Runtime description of the base field, as it appears in structure files.
struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint64_t characteristic = 0;  // prime p for prime_field, 0 for rationals

    bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class RatField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long n) const { return Elem(n); }

    Elem make(long num, long den) const {
        if (den == 0) throw FieldError("rational with zero denominator");
        Elem e(num, den);
        e.canonicalize();
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw FieldError("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const { return a.get_str(); }

    /// Accepts "p" or "p/q" with optional leading '-'. Normalizes to lowest
    /// terms with positive denominator.
    std::optional<Elem> parse(const std::string& s) const {
        if (s.empty()) return std::nullopt;
        std::size_t i = 0;
        auto digits = [&](std::size_t& k) {
            std::size_t start = k;
            while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
            return k > start;
        };
        if (s[i] == '-' || s[i] == '+') ++i;
        if (!digits(i)) return std::nullopt;
        if (i < s.size()) {
            if (s[i] != '/') return std::nullopt;
            ++i;
            if (s.size() > i && (s[i] == '-' || s[i] == '+')) ++i;
            if (!digits(i) || i != s.size()) return std::nullopt;
        }
        Elem e;
        if (e.set_str(s, 10) != 0) return std::nullopt;
        if (e.get_den() == 0) return std::nullopt;
        e.canonicalize();
        return e;
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::rationals, 0}; }
    std::string name() const { return "Q"; }

    bool operator==(const RatField&) const = default;
};

/// GF(p) with runtime modulus. Elements are canonical representatives in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw FieldError("modulus too large");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long n) const {
        long long r = static_cast<long long>(n) % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw FieldError("division by zero");
        // extended Euclid
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p_), nr = static_cast<long long>(a);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string str(Elem a) const { return std::to_string(a); }

    std::optional<Elem> parse(const std::string& s) const {
        if (s.empty()) return std::nullopt;
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v >= (std::uint64_t{1} << 62)) return std::nullopt;
        }
        if (v >= p_) return std::nullopt;  // representatives must lie in [0, p)
        return v;
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime_field, p_}; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_ = 2;
};

template <class F>
concept FieldType = requires(const F f, const typename F::Elem a) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, a) } -> std::convertible_to<bool>;
    { f.str(a) } -> std::convertible_to<std::string>;
};

/// Calls fn with the concrete field object described by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rationals) return fn(RatField{});
    return fn(PrimeField{spec.characteristic});
}

}  // namespace codual
