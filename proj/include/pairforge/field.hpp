#ifndef PAIRFORGE_FIELD_HPP
#define PAIRFORGE_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairforge {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct field_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Theorem-checker mismatch; always a bug, never a math failure.
struct internal_check_error : std::logic_error {
    using std::logic_error::logic_error;
};

class Scalar;

/// Exact base field: the rationals, a prime field GF(p), or a simple
/// extension base[t]/(m) with m monic irreducible (used to present
/// centroid fields of central closures).
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Rationals, PrimeField, Extension };

    static FieldPtr rationals();
    static FieldPtr prime_field(const mpz_class& p);
    // modulus given lowest degree first, monic, degree >= 1, over `base`.
    static FieldPtr extension(const FieldPtr& base, const std::vector<Scalar>& modulus);

    Kind kind() const { return kind_; }
    // characteristic: 0 for Q and extensions of Q, p for GF(p) and extensions.
    const mpz_class& characteristic() const { return char_; }
    const FieldPtr& base() const { return base_; }
    const std::vector<Scalar>& modulus() const { return modulus_; }
    std::size_t extension_degree() const { return modulus_.empty() ? 1 : modulus_.size() - 1; }

    bool same(const Field& other) const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    // Accepts "a", "-a", "a/b"; extension elements as "[c0,c1,...]".
    Scalar from_string(const std::string& text) const;

    std::string describe() const;

private:
    Field() = default;
    Kind kind_ = Kind::Rationals;
    mpz_class char_ = 0;
    FieldPtr base_;
    std::vector<Scalar> modulus_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// An exact field element. Arithmetic never rounds; GF(p) residues are kept
/// in [0, p); rationals stay in lowest terms with positive denominator.
class Scalar {
public:
    Scalar() = default;  // invalid until assigned; field() == nullptr
    Scalar(FieldPtr field, mpq_class value);
    Scalar(FieldPtr field, std::vector<Scalar> ext_coeffs);

    const FieldPtr& field() const { return field_; }
    const mpq_class& rational() const { return rat_; }
    const std::vector<Scalar>& ext_coeffs() const { return ext_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form; identical values print identically.
    std::string str() const;

private:
    void check_compatible(const Scalar& o) const;
    FieldPtr field_;
    mpq_class rat_;
    std::vector<Scalar> ext_;
};

}  // namespace pairforge

#endif
