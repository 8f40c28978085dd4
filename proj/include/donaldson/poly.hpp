#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "donaldson/rational.hpp"

namespace donaldson {

using ExpVec = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex. All stored
/// polynomials and series iterate in this order, so printing is deterministic.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

using TermMap = std::map<ExpVec, GaussianRational, GradedLexLess>;

/// Sparse exact multivariate polynomial over the Gaussian rationals.
/// Variables are named; by convention the last variable of series-facing
/// polynomials is "lambda".
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, GaussianRational c);
    static MultiPoly monomial(std::vector<std::string> vars, const ExpVec& e, GaussianRational c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussianRational constant_value() const;
    int total_degree() const;       // -1 for zero
    int degree_in(std::size_t i) const; // -1 for zero

    /// Accumulate c into the coefficient at e, pruning zeros.
    void add_term(const ExpVec& e, const GaussianRational& c);
    GaussianRational coeff(const ExpVec& e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const GaussianRational& c) const;
    MultiPoly negated() const { return scaled(GaussianRational(-1)); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(std::size_t var) const;

    /// Substitute var i -> subs[i] (a polynomial over `new_vars`) for every i.
    MultiPoly substitute(const std::vector<MultiPoly>& subs,
                         const std::vector<std::string>& new_vars) const;

    /// Substitute var i -> factors[i] * var i, i.e. rescale each variable by a
    /// scalar. Used for the t -> i*t and lambda -> -lambda symmetries.
    MultiPoly scale_vars(const std::vector<GaussianRational>& factors) const;

    /// Reinterpret over an extended/reordered variable list. `where[i]` is the
    /// position of old var i in `new_vars`.
    MultiPoly with_vars(const std::vector<std::string>& new_vars,
                        const std::vector<std::size_t>& where) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Truncation region for a series: a total-degree bound over the non-lambda
/// variables, optional per-variable bounds, and a separate lambda bound.
/// lambda carries its own cutoff because lambda-degree controls finite-type
/// order while t-degree controls fitting depth.
struct Cutoffs {
    int total = 0;
    std::vector<int> per_var; // empty, or one entry per non-lambda variable
    int lambda = 0;

    static Cutoffs total_only(int m, int lam) { return Cutoffs{m, {}, lam}; }
    static Cutoffs box(std::vector<int> per_var, int lam);

    bool admits(const ExpVec& e, int lambda_index) const;
    friend bool operator==(const Cutoffs& a, const Cutoffs& b) {
        return a.total == b.total && a.per_var == b.per_var && a.lambda == b.lambda;
    }
};

/// Total-degree-truncated power series: same representation as MultiPoly plus
/// a truncation region. Ring operations truncate consistently, so the result
/// at cutoff M equals the truncation of the untruncated result.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(std::vector<std::string> vars, Cutoffs cut);

    static TruncSeries from_poly(const MultiPoly& p, Cutoffs cut);
    /// exp(p) truncated; p must have zero constant term.
    static TruncSeries exp(const MultiPoly& p, Cutoffs cut);

    const std::vector<std::string>& vars() const { return vars_; }
    const Cutoffs& cutoffs() const { return cut_; }
    const TermMap& terms() const { return terms_; }
    int lambda_index() const { return lambda_index_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExpVec& e, const GaussianRational& c);

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    TruncSeries scaled(const GaussianRational& c) const;

    /// Truncated product. Dispatches to the OpenMP kernel for large inputs;
    /// the result is bit-identical to mul_serial.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    static TruncSeries mul_serial(const TruncSeries& a, const TruncSeries& b);
    static TruncSeries mul_parallel(const TruncSeries& a, const TruncSeries& b);

    TruncSeries mul_poly(const MultiPoly& p) const;
    TruncSeries derivative(std::size_t var) const; // caller tracks validity loss
    TruncSeries truncated(const Cutoffs& tighter) const;

    /// The polynomial of all stored terms (exact when the series content is
    /// polynomial, e.g. after a structure fit).
    MultiPoly as_poly() const;

    /// Coefficient of var^k as a polynomial in the remaining variables
    /// (returned over the full variable list with exponent 0 at `var`).
    MultiPoly coefficient_of(std::size_t var, int k) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.vars_ == b.vars_ && a.cut_ == b.cut_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<std::string> vars_;
    Cutoffs cut_;
    TermMap terms_;
    int lambda_index_ = -1;
    void init_lambda();
};

/// Variable list t1..tn followed by lambda.
std::vector<std::string> series_vars(std::size_t rank);
/// Find "lambda" in a var list, -1 if absent.
int find_lambda(const std::vector<std::string>& vars);

} // namespace donaldson
