#pragma once

#include <memory>
#include <string>
#include <vector>

#include "folkit/rat.hpp"

namespace folkit {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// An element of Q or of a simple extension tower Q(a1)(a2)...(ak).
// Canonical form: an element whose higher power-basis coordinates all vanish
// is collapsed into the field below, so rationals always have field() == nullptr.
class FieldElem {
public:
    FieldElem() : rat_(0) {}
    FieldElem(long n) : rat_(n) {}
    FieldElem(Rat r) : rat_(std::move(r)) { rat_.canonicalize(); }
    FieldElem(const Int& n) : rat_(n) {}

    // The generator (class of x) of the top extension of K.
    static FieldElem generator(const FieldPtr& K);
    // Element of K with the given power-basis coordinates (entries in K's base).
    static FieldElem make(const FieldPtr& K, std::vector<FieldElem> coords);

    const FieldPtr& field() const { return field_; } // nullptr = Q
    bool is_zero() const { return !field_ && rat_ == 0; }
    bool is_one() const { return !field_ && rat_ == 1; }
    bool is_rational() const { return !field_; }
    const Rat& rational() const; // pre: is_rational()

    // Power-basis coordinates of this element viewed in K (K must contain field()).
    std::vector<FieldElem> coords_in(const FieldPtr& K) const;
    FieldElem lift_to(const FieldPtr& K) const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    FieldElem inverse() const;
    FieldElem pow(long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Norm down one level: determinant of multiplication by *this on the top
    // extension's power basis, an element of field()->base(). Rational input
    // returns itself.
    FieldElem norm_down() const;

    std::string str() const;

private:
    FieldPtr field_;                 // nullptr => rational
    Rat rat_;                        // payload when field_ == nullptr
    std::vector<FieldElem> coords_;  // size field_->degree(), entries in field_->base()

    static FieldElem canonical(const FieldPtr& K, std::vector<FieldElem> coords);
    friend class NumberField;
};

// One step of the extension tower: base field + monic minimal polynomial of
// the new generator over it. Irreducibility is certified by the factorization
// routine that creates extensions (see factor.hpp).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // minpoly: monic, coefficients in `base`, degree >= 2.
    // Throws ExtensionDegreeExceeded if the tower degree would pass the bound.
    static FieldPtr extend(const FieldPtr& base, std::vector<FieldElem> minpoly,
                           int max_total_degree, std::string gen_name = "");

    const FieldPtr& base() const { return base_; }
    const std::vector<FieldElem>& minpoly() const { return minpoly_; }
    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    int total_degree() const { return total_degree_; }
    int depth() const { return depth_; }
    const std::string& generator_name() const { return gen_name_; }

    // true iff `this` appears in the tower chain of K (K never null here).
    bool contains(const FieldPtr& sub) const;

private:
    NumberField() = default;
    FieldPtr base_;
    std::vector<FieldElem> minpoly_;
    std::string gen_name_;
    int total_degree_ = 1;
    int depth_ = 0;
};

inline int field_depth(const FieldPtr& K) { return K ? K->depth() : 0; }
inline int field_total_degree(const FieldPtr& K) { return K ? K->total_degree() : 1; }
bool same_field(const FieldPtr& a, const FieldPtr& b);
// The deeper of two comparable fields; throws if the towers are incomparable.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

} // namespace folkit
