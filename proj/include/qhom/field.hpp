#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhom/errors.hpp"

namespace qhom {

// Arithmetic context for F_p.  Elements are plain uint64_t in [0, p);
// every matrix and representation carries its context by value.
class PrimeField {
public:
    using Elt = std::uint64_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t(1) << 31)) throw InputError("field modulus too large (needs p < 2^31)");
    }

    std::uint64_t modulus() const { return p_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1 % p_; }
    bool is_zero(Elt a) const { return a == 0; }
    bool is_one(Elt a) const { return a == one(); }

    Elt add(Elt a, Elt b) const {
        Elt s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p_ - b; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p_; }

    Elt inv(Elt a) const {
        if (a == 0) throw VerifyError("division by zero in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elt>(t);
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    Elt from_int(long long v) const {
        long long m = static_cast<long long>(p_);
        long long r = v % m;
        if (r < 0) r += m;
        return static_cast<Elt>(r);
    }
    // accepts "n" or "n/d"
    Elt from_string(const std::string& s) const {
        auto slash = s.find('/');
        if (slash == std::string::npos) return from_int(parse_ll(s));
        Elt n = from_int(parse_ll(s.substr(0, slash)));
        Elt d = from_int(parse_ll(s.substr(slash + 1)));
        return div(n, d);
    }
    std::string to_string(Elt a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    static long long parse_ll(const std::string& s) {
        try {
            size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw InputError("bad integer '" + s + "'");
            return v;
        } catch (const std::exception&) {
            throw InputError("bad integer '" + s + "'");
        }
    }

    std::uint64_t p_;
};

// Exact rationals.  Stateless context; same interface as PrimeField.
class RationalField {
public:
    using Elt = boost::multiprecision::cpp_rational;

    Elt zero() const { return Elt(0); }
    Elt one() const { return Elt(1); }
    bool is_zero(const Elt& a) const { return a == 0; }
    bool is_one(const Elt& a) const { return a == 1; }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw VerifyError("division by zero in Q");
        return Elt(1) / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return a / inv_guard(b); }

    Elt from_int(long long v) const { return Elt(v); }
    Elt from_string(const std::string& s) const {
        try {
            return Elt(s);
        } catch (const std::exception&) {
            throw InputError("bad rational '" + s + "'");
        }
    }
    std::string to_string(const Elt& a) const { return a.str(); }

    bool operator==(const RationalField&) const { return true; }

private:
    Elt inv_guard(const Elt& b) const {
        if (b == 0) throw VerifyError("division by zero in Q");
        return b;
    }
};

// Runtime field selection for the CLI and file formats.
struct FieldDesc {
    bool rational = false;
    std::uint64_t p = 32003;

    static FieldDesc parse(const std::string& s) {
        FieldDesc d;
        if (s == "Q" || s == "q") {
            d.rational = true;
            return d;
        }
        try {
            size_t pos = 0;
            unsigned long long v = std::stoull(s, &pos);
            if (pos != s.size()) throw InputError("");
            d.p = v;
        } catch (const std::exception&) {
            throw InputError("bad field descriptor '" + s + "' (expected a prime or Q)");
        }
        if (!PrimeField::is_prime(d.p)) throw InputError("field modulus " + std::to_string(d.p) + " is not prime");
        return d;
    }
    std::string to_string() const { return rational ? "Q" : std::to_string(p); }
};

} // namespace qhom
