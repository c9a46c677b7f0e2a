#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sni/errors.hpp"

namespace sni {

/// Arithmetic context for GF(q), q prime. Cheap value type: holds only the modulus.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q);

    std::uint32_t modulus() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q_ - b % q_) % q_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a % q_ == 0 ? 0 : q_ - a % q_; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    /// Canonical representative in [0, q) of any signed integer.
    std::uint32_t reduce(std::int64_t v) const {
        const std::int64_t r = v % static_cast<std::int64_t>(q_);
        return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t q_;
};

/// One symbol of GF(q). Value is validated at construction and every
/// operation stays in [0, q).
struct FieldElement {
    std::uint32_t value;
    PrimeField field;

    FieldElement(std::uint32_t v, const PrimeField& f) : value(v), field(f) {
        if (v >= f.modulus()) throw FieldMismatch("element value out of range");
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b); return {a.field.add(a.value, b.value), a.field};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b); return {a.field.sub(a.value, b.value), a.field};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b); return {a.field.mul(a.value, b.value), a.field};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b); return {a.field.div(a.value, b.value), a.field};
    }
    FieldElement operator-() const { return {field.neg(value), field}; }
    FieldElement inverse() const { return {field.inv(value), field}; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (!(a.field == b.field)) throw FieldMismatch("elements from different fields");
    }
};

/// Dense row-major matrix over one prime field.
class FieldMatrix {
public:
    FieldMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

    static FieldMatrix identity(const PrimeField& f, std::size_t n);
    static FieldMatrix from_rows(const PrimeField& f,
                                 std::initializer_list<std::initializer_list<std::uint32_t>> rows);
    static FieldMatrix from_rows(const PrimeField& f,
                                 const std::vector<std::vector<std::uint32_t>>& rows);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { v_[r * cols_ + c] = field_.reduce(v); }

    std::span<const std::uint32_t> row(std::size_t r) const {
        return {v_.data() + r * cols_, cols_};
    }
    std::vector<std::uint32_t> row_copy(std::size_t r) const {
        return {v_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                v_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    FieldMatrix transposed() const;

    /// Rows picked by index (in the given order), as a new matrix.
    FieldMatrix select_rows(std::span<const std::size_t> idx) const;

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> v_;
};

/// Rank by Gaussian elimination, first-nonzero pivoting, left-to-right columns.
std::size_t rank(FieldMatrix m);

/// Unique solution of A x = y for full-column-rank A (square or overdetermined).
/// Throws InconsistentSystem when no solution exists, SingularSystem when the
/// solution is not unique.
std::vector<std::uint32_t> solve(const FieldMatrix& a, std::span<const std::uint32_t> y);

/// Decoding functional: phi with phi . r = 0 for every interference row r and
/// phi . wanted = 1. Exists iff wanted is outside the interference row span;
/// throws NotDecodable otherwise. Free variables are fixed to 0, so the result
/// is deterministic.
std::vector<std::uint32_t> annihilator(const FieldMatrix& interference,
                                       std::span<const std::uint32_t> wanted);

std::uint32_t dot(const PrimeField& f, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b);

} // namespace sni
