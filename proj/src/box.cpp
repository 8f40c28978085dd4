#include "donaldson/box.hpp"

#include <omp.h>

#include <cstdlib>

#include "donaldson/errors.hpp"

namespace donaldson {

BoxSeries::BoxSeries(std::vector<std::string> v, std::vector<int> d)
    : vars(std::move(v)), dims(std::move(d)) {
    if (vars.size() != dims.size()) throw validation_error("box dims arity mismatch");
    std::size_t n = 1;
    for (int x : dims) {
        if (x < 1) throw validation_error("box extent must be >= 1");
        n *= static_cast<std::size_t>(x);
    }
    a.assign(n, GaussianRational(0));
}

std::size_t BoxSeries::flat(const ExpVec& e) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) f = f * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(e[i]);
    return f;
}

void BoxSeries::decode(std::size_t f, ExpVec& e) const {
    e.resize(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        e[i] = static_cast<int>(f % static_cast<std::size_t>(dims[i]));
        f /= static_cast<std::size_t>(dims[i]);
    }
}

BoxSeries BoxSeries::from_trunc(const TruncSeries& s) {
    const auto& cut = s.cutoffs();
    std::vector<int> dims(s.vars().size(), 0);
    std::size_t vi = 0;
    for (std::size_t i = 0; i < s.vars().size(); ++i) {
        if (static_cast<int>(i) == s.lambda_index()) {
            dims[i] = cut.lambda + 1;
            continue;
        }
        dims[i] = (cut.per_var.empty() ? cut.total : std::min(cut.total, cut.per_var[vi])) + 1;
        ++vi;
    }
    BoxSeries b(s.vars(), dims);
    for (const auto& [e, c] : s.terms()) b.at(e) = c;
    return b;
}

BoxSeries BoxSeries::from_poly(const MultiPoly& p, std::vector<int> dims) {
    BoxSeries b(p.vars(), std::move(dims));
    for (const auto& [e, c] : p.terms()) {
        bool inside = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= b.dims[i]) inside = false;
        if (!inside) throw validation_error("polynomial exceeds box extents");
        b.at(e) = c;
    }
    return b;
}

TruncSeries BoxSeries::to_trunc(const Cutoffs& cut) const {
    TruncSeries s(vars, cut);
    ExpVec e;
    for (std::size_t f = 0; f < a.size(); ++f) {
        if (a[f].is_zero()) continue;
        decode(f, e);
        s.add_term(e, a[f]);
    }
    return s;
}

bool parallel_kernels_enabled() {
    static const bool enabled = [] {
        const char* v = std::getenv("DONALDSON_SERIAL");
        return !(v && v[0] == '1');
    }();
    return enabled;
}

void box_add(BoxSeries& dst, const BoxSeries& src) {
    if (dst.vars != src.vars || dst.dims != src.dims)
        throw validation_error("box shape mismatch in addition");
    for (std::size_t f = 0; f < dst.a.size(); ++f)
        if (!src.a[f].is_zero()) dst.a[f] += src.a[f];
}

BoxSeries box_mul_exp_monomial(const BoxSeries& in, const ExpVec& step, const GaussianRational& c,
                               bool parallel) {
    if (step.size() != in.dims.size()) throw validation_error("step arity mismatch");
    // Max number of applications of the step inside the box.
    int kmax = 0;
    {
        int bound = -1;
        for (std::size_t i = 0; i < step.size(); ++i) {
            if (step[i] <= 0) continue;
            int b = (in.dims[i] - 1) / step[i];
            bound = (bound < 0) ? b : std::min(bound, b);
        }
        kmax = std::max(bound, 0);
    }
    std::vector<GaussianRational> pow(static_cast<std::size_t>(kmax) + 1, GaussianRational(1));
    for (int k = 1; k <= kmax; ++k)
        pow[static_cast<std::size_t>(k)] =
            pow[static_cast<std::size_t>(k - 1)] * c * GaussianRational(mpq_class(1, k));

    BoxSeries out(in.vars, in.dims);
    const long n = static_cast<long>(in.a.size());
#pragma omp parallel if (parallel)
    {
        ExpVec e;
#pragma omp for schedule(static)
        for (long f = 0; f < n; ++f) {
            in.decode(static_cast<std::size_t>(f), e);
            GaussianRational acc = in.a[static_cast<std::size_t>(f)];
            ExpVec src = e;
            for (int k = 1; k <= kmax; ++k) {
                bool ok = true;
                for (std::size_t i = 0; i < src.size(); ++i) {
                    src[i] -= step[i];
                    if (src[i] < 0) ok = false;
                }
                if (!ok) break;
                const GaussianRational& v = in.a[in.flat(src)];
                if (!v.is_zero()) acc += pow[static_cast<std::size_t>(k)] * v;
            }
            out.a[static_cast<std::size_t>(f)] = std::move(acc);
        }
    }
    return out;
}

BoxSeries box_fill_exponential(std::vector<std::string> vars, std::vector<int> dims,
                               const std::vector<GaussianRational>& c, bool parallel) {
    if (c.size() != dims.size()) throw validation_error("exponential fill arity mismatch");
    BoxSeries out(std::move(vars), std::move(dims));
    // Per-axis tables c_j^k / k!.
    std::vector<std::vector<GaussianRational>> pow(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        pow[j].assign(static_cast<std::size_t>(out.dims[j]), GaussianRational(1));
        for (int k = 1; k < out.dims[j]; ++k)
            pow[j][static_cast<std::size_t>(k)] =
                pow[j][static_cast<std::size_t>(k - 1)] * c[j] * GaussianRational(mpq_class(1, k));
    }
    const long n = static_cast<long>(out.a.size());
#pragma omp parallel if (parallel)
    {
        ExpVec e;
#pragma omp for schedule(static)
        for (long f = 0; f < n; ++f) {
            out.decode(static_cast<std::size_t>(f), e);
            GaussianRational acc(1);
            bool zero = false;
            for (std::size_t j = 0; j < e.size(); ++j) {
                const GaussianRational& v = pow[j][static_cast<std::size_t>(e[j])];
                if (v.is_zero()) {
                    zero = true;
                    break;
                }
                if (e[j] != 0) acc *= v;
            }
            out.a[static_cast<std::size_t>(f)] = zero ? GaussianRational(0) : std::move(acc);
        }
    }
    return out;
}

BoxSeries box_mul_poly(const BoxSeries& in, const MultiPoly& p, bool parallel) {
    if (p.vars() != in.vars) throw validation_error("variable-list mismatch in box_mul_poly");
    std::vector<std::pair<ExpVec, GaussianRational>> mono(p.terms().begin(), p.terms().end());
    BoxSeries out(in.vars, in.dims);
    const long n = static_cast<long>(in.a.size());
#pragma omp parallel if (parallel)
    {
        ExpVec e;
#pragma omp for schedule(static)
        for (long f = 0; f < n; ++f) {
            in.decode(static_cast<std::size_t>(f), e);
            GaussianRational acc(0);
            ExpVec src(e.size());
            for (const auto& [me, mc] : mono) {
                bool ok = true;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    src[i] = e[i] - me[i];
                    if (src[i] < 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                const GaussianRational& v = in.a[in.flat(src)];
                if (!v.is_zero()) acc += mc * v;
            }
            out.a[static_cast<std::size_t>(f)] = std::move(acc);
        }
    }
    return out;
}

BoxSeries box_axis_transform(const BoxSeries& in, std::size_t axis, const Matrix& m, bool parallel) {
    if (axis >= in.dims.size()) throw validation_error("axis out of range");
    if (static_cast<std::size_t>(in.dims[axis]) < m.cols())
        throw validation_error("axis extent smaller than transform input size");
    std::vector<int> odims = in.dims;
    odims[axis] = static_cast<int>(m.rows());
    BoxSeries out(in.vars, odims);

    // Strides of the axis in both layouts.
    std::size_t in_stride = 1, out_stride = 1;
    for (std::size_t i = axis + 1; i < in.dims.size(); ++i) {
        in_stride *= static_cast<std::size_t>(in.dims[i]);
        out_stride *= static_cast<std::size_t>(odims[i]);
    }
    std::size_t lines = in.a.size() / static_cast<std::size_t>(in.dims[axis]);

#pragma omp parallel for schedule(static) if (parallel)
    for (long li = 0; li < static_cast<long>(lines); ++li) {
        // Line li -> base offsets: split flat line index around the axis.
        std::size_t l = static_cast<std::size_t>(li);
        std::size_t inner = l % in_stride;
        std::size_t outer = l / in_stride;
        std::size_t in_base = outer * in_stride * static_cast<std::size_t>(in.dims[axis]) + inner;
        std::size_t out_base = outer * out_stride * static_cast<std::size_t>(odims[axis]) + inner;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            GaussianRational acc(0);
            for (std::size_t k = 0; k < m.cols(); ++k) {
                const GaussianRational& v = in.a[in_base + k * in_stride];
                if (!v.is_zero() && !m.at(r, k).is_zero()) acc += m.at(r, k) * v;
            }
            out.a[out_base + r * out_stride] = std::move(acc);
        }
    }
    return out;
}

BoxSeries box_slice_axis(const BoxSeries& in, std::size_t axis, int from, int len) {
    if (axis >= in.dims.size() || from < 0 || len < 1 || from + len > in.dims[axis])
        throw validation_error("bad axis slice");
    std::vector<int> odims = in.dims;
    odims[axis] = len;
    BoxSeries out(in.vars, odims);
    ExpVec e;
    for (std::size_t f = 0; f < out.a.size(); ++f) {
        out.decode(f, e);
        e[axis] += from;
        out.a[f] = in.a[in.flat(e)];
    }
    return out;
}

} // namespace donaldson
