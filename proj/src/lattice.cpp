#include "donaldson/lattice.hpp"

#include <set>
#include <sstream>

#include "donaldson/errors.hpp"

namespace donaldson {

CohClass operator+(const CohClass& a, const CohClass& b) {
    if (a.rank() != b.rank()) throw validation_error("rank mismatch in class addition");
    CohClass out = a;
    for (std::size_t i = 0; i < b.rank(); ++i) out.c[i] += b.c[i];
    return out;
}

CohClass operator-(const CohClass& a, const CohClass& b) {
    if (a.rank() != b.rank()) throw validation_error("rank mismatch in class subtraction");
    CohClass out = a;
    for (std::size_t i = 0; i < b.rank(); ++i) out.c[i] -= b.c[i];
    return out;
}

CohClass CohClass::negated() const {
    CohClass out = *this;
    for (auto& x : out.c) x = -x;
    return out;
}

bool CohClass::is_zero() const {
    for (long x : c)
        if (x != 0) return false;
    return true;
}

std::string CohClass::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

Lattice::Lattice(std::vector<std::vector<long>> g, std::vector<std::string> l)
    : gram(std::move(g)), labels(std::move(l)) {
    if (labels.empty()) throw validation_error("lattice rank must be >= 1");
    if (gram.size() != labels.size()) throw validation_error("gram size does not match rank");
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (gram[i].size() != gram.size()) throw validation_error("gram matrix not square");
        for (std::size_t j = 0; j < gram.size(); ++j)
            if (gram[i][j] != gram[j][i]) throw validation_error("gram matrix not symmetric");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw validation_error("lattice labels not distinct");
}

CohClass Lattice::basis_vector(std::size_t i) const {
    std::vector<long> v(rank(), 0);
    v.at(i) = 1;
    return CohClass(std::move(v));
}

long pairing(const Lattice& L, const CohClass& u, const CohClass& v) {
    if (u.rank() != L.rank() || v.rank() != L.rank())
        throw validation_error("rank mismatch in pairing");
    long out = 0;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (u.c[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank(); ++j) out += u.c[i] * L.gram[i][j] * v.c[j];
    }
    return out;
}

long self_pairing(const Lattice& L, const CohClass& u) { return pairing(L, u, u); }

long evaluation(const CohClass& K, const CohClass& v) {
    if (K.rank() != v.rank()) throw validation_error("rank mismatch in evaluation");
    long out = 0;
    for (std::size_t i = 0; i < K.rank(); ++i) out += K.c[i] * v.c[i];
    return out;
}

bool is_characteristic(const Lattice& L, const CohClass& K) {
    if (K.rank() != L.rank()) throw validation_error("rank mismatch in characteristic test");
    for (std::size_t i = 0; i < L.rank(); ++i) {
        long lhs = K.c[i]; // K evaluated on the i-th basis vector
        long rhs = L.gram[i][i];
        if (((lhs - rhs) % 2 + 2) % 2 != 0) return false;
    }
    return true;
}

void ManifoldData::validate() const {
    if (bplus <= 1) throw validation_error("manifold requires b+ > 1");
    if (b1 < 0) throw validation_error("b1 must be nonnegative");
}

long twice_d0(const ManifoldData& m, const CohClass& w) {
    return -2 * self_pairing(m.lattice, w) - 3 * (1 - m.b1 + m.bplus);
}

DimensionResidues d0_mod4(const ManifoldData& m, const CohClass& w, long deg2z) {
    long td0 = twice_d0(m, w);
    if ((((td0 - deg2z) % 2) + 2) % 2 != 0)
        throw validation_error("parity violation: d0 - d is not an integer");
    long diff2 = td0 - deg2z; // = 2*(d0 - d), even here
    long d0md = ((diff2 / 2) % 4 + 4) % 4;
    DimensionResidues out;
    out.twice_d0 = td0;
    out.d0_mod4_num = static_cast<int>(((td0 % 8) + 8) % 8);
    out.d0_minus_d_mod4 = static_cast<int>(d0md);
    return out;
}

int d0_minus_d_mod4(const ManifoldData& m, const CohClass& w, long deg2z) {
    return d0_mod4(m, w, deg2z).d0_minus_d_mod4;
}

} // namespace donaldson
