#pragma once

#include <string>
#include <vector>

#include "donaldson/rational.hpp"

namespace donaldson {

/// Integer class in a lattice: a coordinate vector in the chosen basis.
struct CohClass {
    std::vector<long> c;

    CohClass() = default;
    explicit CohClass(std::vector<long> coords) : c(std::move(coords)) {}

    std::size_t rank() const { return c.size(); }
    long operator[](std::size_t i) const { return c[i]; }

    friend bool operator==(const CohClass& a, const CohClass& b) { return a.c == b.c; }
    friend bool operator!=(const CohClass& a, const CohClass& b) { return a.c != b.c; }
    friend bool operator<(const CohClass& a, const CohClass& b) { return a.c < b.c; }
    friend CohClass operator+(const CohClass& a, const CohClass& b);
    friend CohClass operator-(const CohClass& a, const CohClass& b);
    CohClass negated() const;
    bool is_zero() const;
    std::string str() const;
};

/// Integer intersection lattice: H2 mod torsion with its symmetric Gram form.
struct Lattice {
    std::vector<std::vector<long>> gram;
    std::vector<std::string> labels;

    Lattice() = default;
    Lattice(std::vector<std::vector<long>> g, std::vector<std::string> l);

    std::size_t rank() const { return labels.size(); }
    CohClass basis_vector(std::size_t i) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.gram == b.gram && a.labels == b.labels;
    }
};

long pairing(const Lattice& L, const CohClass& u, const CohClass& v);
long self_pairing(const Lattice& L, const CohClass& u);

/// Evaluation of a degree-2 cohomology class K (stored by its values on the
/// homology basis) against a homology class v in basis coordinates: plain
/// coordinate contraction, no Gram matrix. This is the K·v of the class
/// exponentials e^{K·tD}; the Gram form enters only through Q and squares.
long evaluation(const CohClass& K, const CohClass& v);

/// K is characteristic iff K.x = x^2 (mod 2) for all x; checked on the basis,
/// which suffices by bilinearity over Z/2.
bool is_characteristic(const Lattice& L, const CohClass& K);

/// The 4-manifold data the structure form needs.
struct ManifoldData {
    Lattice lattice;
    long b1 = 0;
    long bplus = 2;
    std::string name;
    /// Cleared when the manifold is known not to be of strong simple type
    /// (e.g. after a connected sum with S^1 x S^3); the per-(X, z) series can
    /// still have simple-type shape.
    bool sst_manifold = true;

    void validate() const;
    friend bool operator==(const ManifoldData& a, const ManifoldData& b) {
        return a.lattice == b.lattice && a.b1 == b.b1 && a.bplus == b.bplus &&
               a.sst_manifold == b.sst_manifold;
    }
};

/// 2*d0 where d0 = -w^2 - (3/2)(1 - b1 + b+). Stored doubled so the
/// half-integer case needs no rational arithmetic.
long twice_d0(const ManifoldData& m, const CohClass& w);

struct DimensionResidues {
    long twice_d0;        // 2*d0
    int d0_mod4_num;      // numerator of d0 mod 4 over denominator 2 (i.e. 2*d0 mod 8)
    int d0_minus_d_mod4;  // (d0 - d) mod 4, defined only when integral
};

/// d0 and d0-d (mod 4), with d = deg2z / 2. Throws if d0 - d is not an
/// integer (parity violation: inconsistent input).
DimensionResidues d0_mod4(const ManifoldData& m, const CohClass& w, long deg2z);

/// (d0 - d) mod 4 as a plain int, same precondition.
int d0_minus_d_mod4(const ManifoldData& m, const CohClass& w, long deg2z);

} // namespace donaldson
