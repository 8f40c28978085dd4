#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "donaldson/matrix.hpp"
#include "donaldson/poly.hpp"

namespace donaldson {

/// Dense truncated series on an exponent box: extent dims[i] per variable,
/// coefficients stored row-major with the last variable fastest. This is the
/// workhorse representation for deep expansions and structure fitting; the
/// sparse TruncSeries stays the public face.
///
/// Every kernel has a serial reference implementation and an OpenMP variant
/// producing bit-identical output (each output entry is computed
/// independently, and the arithmetic is exact).
struct BoxSeries {
    std::vector<std::string> vars;
    std::vector<int> dims;
    std::vector<GaussianRational> a;

    BoxSeries() = default;
    BoxSeries(std::vector<std::string> v, std::vector<int> d);

    std::size_t size() const { return a.size(); }
    std::size_t flat(const ExpVec& e) const;
    void decode(std::size_t f, ExpVec& e) const;
    GaussianRational& at(const ExpVec& e) { return a[flat(e)]; }
    const GaussianRational& at(const ExpVec& e) const { return a[flat(e)]; }

    static BoxSeries from_trunc(const TruncSeries& s);
    static BoxSeries from_poly(const MultiPoly& p, std::vector<int> dims);
    TruncSeries to_trunc(const Cutoffs& cut) const;

    friend bool operator==(const BoxSeries& x, const BoxSeries& y) {
        return x.vars == y.vars && x.dims == y.dims && x.a == y.a;
    }
};

/// Whether kernels run their OpenMP variant. Controlled by DONALDSON_SERIAL=1;
/// the output is identical either way.
bool parallel_kernels_enabled();

void box_add(BoxSeries& dst, const BoxSeries& src);

/// Multiply by exp(c * m) where m is the monomial with exponent vector step.
/// out[e] = sum_k (c^k / k!) in[e - k*step].
BoxSeries box_mul_exp_monomial(const BoxSeries& in, const ExpVec& step, const GaussianRational& c,
                               bool parallel = parallel_kernels_enabled());

/// The coefficient box of exp(sum_j c_j x_j): out[e] = prod_j c_j^{e_j}/e_j!.
BoxSeries box_fill_exponential(std::vector<std::string> vars, std::vector<int> dims,
                               const std::vector<GaussianRational>& c,
                               bool parallel = parallel_kernels_enabled());

/// Multiply by a polynomial (truncating to the box).
BoxSeries box_mul_poly(const BoxSeries& in, const MultiPoly& p,
                       bool parallel = parallel_kernels_enabled());

/// Replace the leading M.cols() slots along `axis` by M applied to them;
/// the axis extent becomes M.rows(). Entries beyond M.cols() are dropped.
BoxSeries box_axis_transform(const BoxSeries& in, std::size_t axis, const Matrix& m,
                             bool parallel = parallel_kernels_enabled());

/// Extract dims[axis] entries [from, from+len) along `axis`.
BoxSeries box_slice_axis(const BoxSeries& in, std::size_t axis, int from, int len);

} // namespace donaldson
