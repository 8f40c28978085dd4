#include <chrono>
#include <cstdio>
#include <random>

#include "donaldson/box.hpp"
#include "donaldson/matrix.hpp"

using namespace donaldson;

namespace {

BoxSeries random_box(std::vector<int> dims, unsigned seed) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < dims.size(); ++i) vars.push_back("v" + std::to_string(i + 1));
    BoxSeries b(vars, std::move(dims));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (auto& c : b.a) c = GaussianRational(mpq_class(num(rng), den(rng)));
    return b;
}

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    BoxSeries in = random_box({21, 21, 21, 6}, 1234);
    std::printf("box: %zu coefficients\n", in.a.size());

    ExpVec step(in.dims.size(), 0);
    step[0] = 2;
    GaussianRational c(mpq_class(3, 2));
    BoxSeries serial_exp(in.vars, in.dims), parallel_exp(in.vars, in.dims);
    double t_se = time_ms([&] { serial_exp = box_mul_exp_monomial(in, step, c, false); });
    double t_pe = time_ms([&] { parallel_exp = box_mul_exp_monomial(in, step, c, true); });
    std::printf("exp-monomial multiply: serial %.1f ms, parallel %.1f ms, identical: %s\n", t_se,
                t_pe, serial_exp.a == parallel_exp.a ? "yes" : "NO");

    std::vector<std::pair<GaussianRational, int>> eigs;
    for (long r = -3; r <= 3; ++r) eigs.emplace_back(GaussianRational(r), 3);
    Matrix m = confluent_vandermonde(eigs, 21).inverse();
    BoxSeries serial_tr(in.vars, in.dims), parallel_tr(in.vars, in.dims);
    double t_st = time_ms([&] { serial_tr = box_axis_transform(in, 1, m, false); });
    double t_pt = time_ms([&] { parallel_tr = box_axis_transform(in, 1, m, true); });
    std::printf("axis transform: serial %.1f ms, parallel %.1f ms, identical: %s\n", t_st, t_pt,
                serial_tr.a == parallel_tr.a ? "yes" : "NO");

    bool ok = serial_exp.a == parallel_exp.a && serial_tr.a == parallel_tr.a;
    return ok ? 0 : 1;
}
