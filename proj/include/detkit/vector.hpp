#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detkit/errors.hpp"

namespace detkit {

// Coordinate vector in F^n. Immutable value; entries share one field.
template <class S>
class Vector {
  public:
    explicit Vector(std::vector<S> entries) : e_(std::move(entries)) {
        if (e_.empty())
            throw DimensionMismatchError("vector must have at least one entry");
        for (const S& x : e_)
            if (!same_field(x, e_.front()))
                throw FieldMismatchError("vector entries from different fields");
    }

    int dim() const { return static_cast<int>(e_.size()); }

    const S& operator[](int i) const {
        if (i < 0 || i >= dim())
            throw IndexOutOfRangeError("vector index " + std::to_string(i));
        return e_[static_cast<std::size_t>(i)];
    }

    const std::vector<S>& entries() const { return e_; }

    bool is_zero() const {
        for (const S& x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Vector operator+(const Vector& o) const { return combine(o, /*subtract=*/false); }
    Vector operator-(const Vector& o) const { return combine(o, /*subtract=*/true); }

    friend Vector operator*(const S& s, const Vector& v) {
        std::vector<S> out;
        out.reserve(v.e_.size());
        for (const S& x : v.e_)
            out.push_back(s * x);
        return Vector(std::move(out));
    }

    bool operator==(const Vector& o) const {
        if (dim() != o.dim())
            return false;
        for (int i = 0; i < dim(); ++i)
            if (e_[static_cast<std::size_t>(i)] != o.e_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    // Entries in the scalar grammar, single-space separated.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i)
                s += ' ';
            s += e_[i].str();
        }
        return s;
    }

  private:
    Vector combine(const Vector& o, bool subtract) const {
        if (dim() != o.dim())
            throw DimensionMismatchError("vector dims " + std::to_string(dim()) + " vs " +
                                         std::to_string(o.dim()));
        std::vector<S> out;
        out.reserve(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i)
            out.push_back(subtract ? e_[i] - o.e_[i] : e_[i] + o.e_[i]);
        return Vector(std::move(out));
    }

    std::vector<S> e_;
};

// Ordered tuple of vectors of equal dimension — the T of the main equation.
// The ambient dimension is stored explicitly so arity-0 tuples remain typed.
template <class S>
class VecTuple {
  public:
    VecTuple(int dim, std::vector<Vector<S>> vectors) : dim_(dim), v_(std::move(vectors)) {
        validate();
    }

    explicit VecTuple(std::vector<Vector<S>> vectors) : dim_(0), v_(std::move(vectors)) {
        if (v_.empty())
            throw DimensionMismatchError("cannot infer dimension of an empty tuple");
        dim_ = v_.front().dim();
        validate();
    }

    int arity() const { return static_cast<int>(v_.size()); }
    int dim() const { return dim_; }

    const Vector<S>& operator[](int k) const {
        if (k < 0 || k >= arity())
            throw IndexOutOfRangeError("tuple slot " + std::to_string(k));
        return v_[static_cast<std::size_t>(k)];
    }

    const std::vector<Vector<S>>& vectors() const { return v_; }

    // Copy with slot k replaced; the "obtained by replacing v_k with b" step.
    VecTuple with_slot(int k, const Vector<S>& b) const {
        if (k < 0 || k >= arity())
            throw IndexOutOfRangeError("tuple slot " + std::to_string(k));
        std::vector<Vector<S>> out = v_;
        out[static_cast<std::size_t>(k)] = b;
        return VecTuple(dim_, std::move(out));
    }

    VecTuple swapped(int i, int j) const {
        if (i < 0 || i >= arity() || j < 0 || j >= arity())
            throw IndexOutOfRangeError("tuple swap " + std::to_string(i) + "," + std::to_string(j));
        std::vector<Vector<S>> out = v_;
        std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(j)]);
        return VecTuple(dim_, std::move(out));
    }

    VecTuple appended(const Vector<S>& v) const {
        std::vector<Vector<S>> out = v_;
        out.push_back(v);
        return VecTuple(dim_, std::move(out));
    }

    bool operator==(const VecTuple& o) const { return dim_ == o.dim_ && v_ == o.v_; }
    bool operator!=(const VecTuple& o) const { return !(*this == o); }

  private:
    void validate() const {
        if (dim_ < 1)
            throw DimensionMismatchError("tuple ambient dimension must be positive");
        for (const Vector<S>& v : v_) {
            if (v.dim() != dim_)
                throw DimensionMismatchError("tuple vector dim " + std::to_string(v.dim()) +
                                             " vs ambient " + std::to_string(dim_));
            if (!same_field(v[0], v_.front()[0]))
                throw FieldMismatchError("tuple vectors from different fields");
        }
    }

    int dim_;
    std::vector<Vector<S>> v_;
};

} // namespace detkit
