#include "repdim/field.hpp"

#include <ostream>
#include <sstream>

#include "repdim/errors.hpp"

namespace repdim {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid over signed 128-bit; a != 0 mod p
    __int128 t = 0, newt = 1, r = static_cast<__int128>(p), newr = a % p;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DomainError("mod_inverse: not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// reduce rational mod p (denominator inverted)
std::uint64_t rational_mod_p(const mpq_class& q, std::uint64_t p) {
    mpz_class num = q.get_num() % static_cast<long>(p);
    mpz_class den = q.get_den() % static_cast<long>(p);
    if (num < 0) num += static_cast<long>(p);
    if (den == 0) throw DomainError("rational has p in denominator");
    std::uint64_t n = num.get_ui() % p;
    std::uint64_t d = den.get_ui() % p;
    return mulmod(n, mod_inverse(d, p), p);
}

}  // namespace

FieldPtr Field::rationals() {
    static FieldPtr q = std::make_shared<Field>(Private{}, FieldKind::Rationals, 0, qpoly::QPoly{});
    return q;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw DomainError("Field::prime: modulus is not prime");
    if (p >= (1ull << 31)) throw DomainError("Field::prime: modulus too large");
    return std::make_shared<Field>(Private{}, FieldKind::Prime, p, qpoly::QPoly{});
}

FieldPtr Field::extension(qpoly::QPoly f) {
    qpoly::trim(f);
    if (qpoly::degree(f) < 2) throw DomainError("Field::extension: degree must be >= 2");
    f = qpoly::monic(f);
    if (!qpoly::is_irreducible(f))
        throw DomainError("Field::extension: modulus polynomial is reducible over Q");
    return std::make_shared<Field>(Private{}, FieldKind::Extension, 0, std::move(f));
}

FieldPtr Field::cyclotomic(unsigned ell) {
    if (ell < 3) throw DomainError("Field::cyclotomic: need ell >= 3 (ell <= 2 is rational)");
    return extension(qpoly::cyclotomic(ell));
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case FieldKind::Rationals: return true;
        case FieldKind::Prime: return p_ == o.p_;
        case FieldKind::Extension: return qpoly::equal(f_, o.f_);
    }
    return false;
}

std::string Field::describe() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Prime: return "F" + std::to_string(p_);
        case FieldKind::Extension: {
            std::ostringstream os;
            os << "Q[t]/(";
            bool first = true;
            for (int i = qpoly::degree(f_); i >= 0; --i) {
                if (f_[i] == 0) continue;
                if (!first && f_[i] > 0) os << "+";
                if (i == 0)
                    os << f_[i].get_str();
                else if (f_[i] == -1)
                    os << "-";
                else if (f_[i] != 1)
                    os << f_[i].get_str() << "*";
                if (i > 0) os << "t";
                if (i > 1) os << "^" << i;
                first = false;
            }
            os << ")";
            return os.str();
        }
    }
    return "?";
}

Scalar Field::zero() const { return from_long(0); }
Scalar Field::one() const { return from_long(1); }

Scalar Field::from_long(long n) const {
    FieldPtr self = shared_from_this();
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(self, mpq_class(n));
        case FieldKind::Prime: {
            long r = n % static_cast<long>(p_);
            if (r < 0) r += static_cast<long>(p_);
            return Scalar(self, static_cast<std::uint64_t>(r));
        }
        case FieldKind::Extension: {
            std::vector<mpq_class> c;
            if (n != 0) c.emplace_back(n);
            return Scalar(self, std::move(c));
        }
    }
    throw DomainError("Field::from_long: bad kind");
}

Scalar Field::from_rational(const mpq_class& q) const {
    FieldPtr self = shared_from_this();
    switch (kind_) {
        case FieldKind::Rationals: {
            mpq_class c = q;
            c.canonicalize();
            return Scalar(self, std::move(c));
        }
        case FieldKind::Prime: return Scalar(self, rational_mod_p(q, p_));
        case FieldKind::Extension: {
            std::vector<mpq_class> c;
            if (q != 0) c.push_back(q);
            return Scalar(self, std::move(c));
        }
    }
    throw DomainError("Field::from_rational: bad kind");
}

Scalar Field::from_coeffs(const std::vector<mpq_class>& coeffs) const {
    if (kind_ != FieldKind::Extension)
        throw DomainError("Field::from_coeffs: not an extension field");
    qpoly::QPoly c(coeffs.begin(), coeffs.end());
    qpoly::trim(c);
    if (qpoly::degree(c) >= qpoly::degree(f_)) c = qpoly::divrem(c, f_).second;
    return Scalar(shared_from_this(), std::move(c));
}

Scalar Field::generator() const {
    if (kind_ != FieldKind::Extension) throw DomainError("Field::generator: not an extension");
    return from_coeffs({mpq_class(0), mpq_class(1)});
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw FieldMismatch("scalar operands lie in different fields");
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return rational() == 0;
        case FieldKind::Prime: return residue() == 0;
        case FieldKind::Extension: return coeffs().empty();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return rational() == 1;
        case FieldKind::Prime: return residue() == 1 % field_->prime_modulus();
        case FieldKind::Extension: return coeffs().size() == 1 && coeffs()[0] == 1;
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(rational() + o.rational()));
        case FieldKind::Prime:
            return Scalar(field_, (residue() + o.residue()) % field_->prime_modulus());
        case FieldKind::Extension: return Scalar(field_, qpoly::add(coeffs(), o.coeffs()));
    }
    throw DomainError("scalar add");
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(rational() - o.rational()));
        case FieldKind::Prime: {
            std::uint64_t p = field_->prime_modulus();
            return Scalar(field_, (residue() + p - o.residue()) % p);
        }
        case FieldKind::Extension: return Scalar(field_, qpoly::sub(coeffs(), o.coeffs()));
    }
    throw DomainError("scalar sub");
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(rational() * o.rational()));
        case FieldKind::Prime: return Scalar(field_, mulmod(residue(), o.residue(), field_->prime_modulus()));
        case FieldKind::Extension: {
            auto prod = qpoly::mul(coeffs(), o.coeffs());
            if (qpoly::degree(prod) >= qpoly::degree(field_->modulus()))
                prod = qpoly::divrem(prod, field_->modulus()).second;
            return Scalar(field_, std::move(prod));
        }
    }
    throw DomainError("scalar mul");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("Scalar::inverse: zero");
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(1 / rational()));
        case FieldKind::Prime: return Scalar(field_, mod_inverse(residue(), field_->prime_modulus()));
        case FieldKind::Extension: {
            auto eg = qpoly::ext_gcd(coeffs(), field_->modulus());
            if (qpoly::degree(eg.g) != 0)
                throw DomainError("Scalar::inverse: modulus not coprime (field corrupt)");
            auto inv = eg.s;
            if (qpoly::degree(inv) >= qpoly::degree(field_->modulus()))
                inv = qpoly::divrem(inv, field_->modulus()).second;
            return Scalar(field_, std::move(inv));
        }
    }
    throw DomainError("scalar inverse");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(-rational()));
        case FieldKind::Prime: {
            std::uint64_t p = field_->prime_modulus();
            return Scalar(field_, (p - residue()) % p);
        }
        case FieldKind::Extension: return Scalar(field_, qpoly::scale(coeffs(), mpq_class(-1)));
    }
    throw DomainError("scalar neg");
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    if (!s.valid()) return os << "<invalid>";
    switch (s.field()->kind()) {
        case FieldKind::Rationals: return os << s.rational().get_str();
        case FieldKind::Prime: return os << s.residue();
        case FieldKind::Extension: {
            os << "[";
            const auto& c = s.coeffs();
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ",";
                os << c[i].get_str();
            }
            return os << "]";
        }
    }
    return os;
}

}  // namespace repdim
