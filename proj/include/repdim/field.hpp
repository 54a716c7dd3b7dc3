#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "repdim/qpoly.hpp"

namespace repdim {

enum class FieldKind { Rationals, Prime, Extension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class Scalar;

// Ground field descriptor: Q, F_p (p prime), or Q[t]/(f) with f monic
// irreducible over Q. Immutable, shared by reference.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    // f monic irreducible over Q (verified by factoring); degree >= 2
    static FieldPtr extension(qpoly::QPoly f);
    // Q[t]/(Phi_ell), housing a primitive ell-th root of unity
    static FieldPtr cyclotomic(unsigned ell);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }
    std::uint64_t prime_modulus() const { return p_; }
    const qpoly::QPoly& modulus() const { return f_; }
    int extension_degree() const { return kind_ == FieldKind::Extension ? qpoly::degree(f_) : 1; }

    bool same(const Field& other) const;
    std::string describe() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_long(long n) const;
    Scalar from_rational(const mpq_class& q) const;  // reduction mod p for prime fields
    // extension element from rational coefficients (low degree first)
    Scalar from_coeffs(const std::vector<mpq_class>& coeffs) const;
    // class of t in Q[t]/(f); error for other kinds
    Scalar generator() const;

    struct Private {};
    Field(Private, FieldKind k, std::uint64_t p, qpoly::QPoly f)
        : kind_(k), p_(p), f_(std::move(f)) {}

private:
    FieldKind kind_;
    std::uint64_t p_ = 0;
    qpoly::QPoly f_;
};

// Exact field element in canonical form: reduced fraction, residue in [0,p),
// or polynomial of degree < deg f.
class Scalar {
public:
    Scalar() = default;  // invalid until assigned

    const FieldPtr& field() const { return field_; }
    bool valid() const { return static_cast<bool>(field_); }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // representation accessors (valid per field kind)
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
    const std::vector<mpq_class>& coeffs() const { return std::get<std::vector<mpq_class>>(v_); }

    // "p/q" | integer string | coefficient list "[a0,a1,...]"
    std::string str() const;

    friend class Field;

private:
    Scalar(FieldPtr f, mpq_class q) : field_(std::move(f)), v_(std::move(q)) {}
    Scalar(FieldPtr f, std::uint64_t r) : field_(std::move(f)), v_(r) {}
    Scalar(FieldPtr f, std::vector<mpq_class> c) : field_(std::move(f)), v_(std::move(c)) {}

    void check_same_field(const Scalar& o) const;

    FieldPtr field_;
    std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace repdim
