#pragma once

/*
 * Exact scalar arithmetic for the algebraic core: Gaussian rationals
 * Q(i) = {re + im*i : re, im rational}. All arithmetic is exact; floats
 * never enter the library. Equality is structural (cpp_rational keeps
 * values canonically reduced).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ckstar {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT: implicit on purpose
    GaussianRational(BigRational re) : re_(std::move(re)) {}
    GaussianRational(BigRational re, BigRational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& real() const { return re_; }
    const BigRational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        BigRational re = re_ * o.re_ - im_ * o.im_;
        BigRational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {-a.re_, -a.im_};
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        // (a / b) = a * conj(b) / |b|^2, exactly.
        BigRational norm = b.re_ * b.re_ + b.im_ * b.im_;
        GaussianRational num = a * b.conj();
        return {num.re_ / norm, num.im_ / norm};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    // Total order so scalars can key ordered containers; not a numeric order.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /* Prints "0", "3", "-1/2", "i", "-2/3i", "1+i", "2-1/2i".  The output is
       re-parseable by the expression grammar. */
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        if (re_ != 0) {
            os << re_;
            if (im_ > 0)
                os << "+";
        }
        if (im_ != 0) {
            if (im_ == -1)
                os << "-";
            else if (im_ != 1)
                os << im_;
            os << "i";
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
        return os << v.str();
    }

private:
    BigRational re_{0};
    BigRational im_{0};
};

}  // namespace ckstar
