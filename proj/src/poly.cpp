#include "donaldson/poly.hpp"

#include <omp.h>

#include <sstream>

#include "donaldson/errors.hpp"

namespace donaldson {

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::vector<std::string> vars, GaussianRational c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(ExpVec(p.vars_.size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, const ExpVec& e, GaussianRational c) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw validation_error("monomial exponent arity mismatch");
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
    ExpVec e(vars.size(), 0);
    e.at(index) = 1;
    return monomial(std::move(vars), e, GaussianRational(1));
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec(vars_.size(), 0);
}

GaussianRational MultiPoly::constant_value() const {
    auto it = terms_.find(ExpVec(vars_.size(), 0));
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const ExpVec& e = terms_.rbegin()->first; // graded order: last term has max degree
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

void MultiPoly::add_term(const ExpVec& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (e.size() != vars_.size()) throw validation_error("exponent arity mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational MultiPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw validation_error("variable-list mismatch in polynomial addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw validation_error("variable-list mismatch in polynomial subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw validation_error("variable-list mismatch in polynomial product");
    MultiPoly out(a.vars_);
    ExpVec e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        out.add_term(d, c * GaussianRational(e[var]));
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs,
                                const std::vector<std::string>& new_vars) const {
    if (subs.size() != vars_.size()) throw validation_error("substitution arity mismatch");
    MultiPoly out(new_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly m = MultiPoly::constant(new_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) m = m * subs[i];
        out += m;
    }
    return out;
}

MultiPoly MultiPoly::scale_vars(const std::vector<GaussianRational>& factors) const {
    if (factors.size() != vars_.size()) throw validation_error("scale_vars arity mismatch");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        GaussianRational v = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) v *= gr_pow(factors[i], e[i]);
        out.add_term(e, v);
    }
    return out;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& new_vars,
                               const std::vector<std::size_t>& where) const {
    if (where.size() != vars_.size()) throw validation_error("with_vars arity mismatch");
    MultiPoly out(new_vars);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne.at(where[i]) = e[i];
        out.add_term(ne, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ Cutoffs

Cutoffs Cutoffs::box(std::vector<int> per_var, int lam) {
    int total = 0;
    for (int v : per_var) total += v;
    return Cutoffs{total, std::move(per_var), lam};
}

bool Cutoffs::admits(const ExpVec& e, int lambda_index) const {
    int sum = 0;
    std::size_t vi = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (static_cast<int>(i) == lambda_index) {
            if (e[i] > lambda) return false;
            continue;
        }
        sum += e[i];
        if (!per_var.empty()) {
            if (e[i] > per_var.at(vi)) return false;
        }
        ++vi;
    }
    return sum <= total;
}

// -------------------------------------------------------------- TruncSeries

std::vector<std::string> series_vars(std::size_t rank) {
    std::vector<std::string> v;
    v.reserve(rank + 1);
    for (std::size_t i = 1; i <= rank; ++i) v.push_back("t" + std::to_string(i));
    v.push_back("lambda");
    return v;
}

int find_lambda(const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == "lambda") return static_cast<int>(i);
    return -1;
}

TruncSeries::TruncSeries(std::vector<std::string> vars, Cutoffs cut)
    : vars_(std::move(vars)), cut_(std::move(cut)) {
    init_lambda();
}

void TruncSeries::init_lambda() {
    lambda_index_ = find_lambda(vars_);
    std::size_t nt = vars_.size() - (lambda_index_ >= 0 ? 1 : 0);
    if (!cut_.per_var.empty() && cut_.per_var.size() != nt)
        throw validation_error("per-variable cutoff arity mismatch");
}

TruncSeries TruncSeries::from_poly(const MultiPoly& p, Cutoffs cut) {
    TruncSeries s(p.vars(), std::move(cut));
    for (const auto& [e, c] : p.terms()) s.add_term(e, c);
    return s;
}

void TruncSeries::add_term(const ExpVec& e, const GaussianRational& c) {
    if (c.is_zero() || !cut_.admits(e, lambda_index_)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (vars_ != o.vars_) throw validation_error("variable-list mismatch in series addition");
    if (!(cut_ == o.cut_)) throw validation_error("cutoff mismatch in series addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (vars_ != o.vars_) throw validation_error("variable-list mismatch in series subtraction");
    if (!(cut_ == o.cut_)) throw validation_error("cutoff mismatch in series subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TruncSeries TruncSeries::scaled(const GaussianRational& c) const {
    TruncSeries out(vars_, cut_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

TruncSeries TruncSeries::mul_serial(const TruncSeries& a, const TruncSeries& b) {
    if (a.vars_ != b.vars_) throw validation_error("variable-list mismatch in series product");
    if (!(a.cut_ == b.cut_)) throw validation_error("cutoff mismatch in series product");
    TruncSeries out(a.vars_, a.cut_);
    ExpVec e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

TruncSeries TruncSeries::mul_parallel(const TruncSeries& a, const TruncSeries& b) {
    if (a.vars_ != b.vars_) throw validation_error("variable-list mismatch in series product");
    if (!(a.cut_ == b.cut_)) throw validation_error("cutoff mismatch in series product");

    std::vector<const TermMap::value_type*> av;
    av.reserve(a.terms_.size());
    for (const auto& t : a.terms_) av.push_back(&t);

    int nthreads = omp_get_max_threads();
    std::vector<TermMap> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        int tid = omp_get_thread_num();
        TermMap& local = partial[static_cast<std::size_t>(tid)];
        ExpVec e(a.vars_.size());
#pragma omp for schedule(static)
        for (long idx = 0; idx < static_cast<long>(av.size()); ++idx) {
            const auto& [ea, ca] = *av[static_cast<std::size_t>(idx)];
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                if (!a.cut_.admits(e, a.lambda_index_)) continue;
                auto [it, fresh] = local.emplace(e, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        }
    }
    // Exact arithmetic: any merge order yields the identical result.
    TruncSeries out(a.vars_, a.cut_);
    for (auto& local : partial)
        for (auto& [e, c] : local) out.add_term(e, c);
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.terms_.size() * b.terms_.size() >= 16384) return TruncSeries::mul_parallel(a, b);
    return TruncSeries::mul_serial(a, b);
}

TruncSeries TruncSeries::mul_poly(const MultiPoly& p) const {
    return *this * TruncSeries::from_poly(p, cut_);
}

TruncSeries TruncSeries::exp(const MultiPoly& p, Cutoffs cut) {
    TruncSeries out(p.vars(), cut);
    if (!p.coeff(ExpVec(p.vars().size(), 0)).is_zero())
        throw validation_error("exp_truncated requires zero constant term");
    TruncSeries pw = TruncSeries::from_poly(MultiPoly::constant(p.vars(), GaussianRational(1)), cut);
    TruncSeries ps = TruncSeries::from_poly(p, cut);
    out += pw;
    for (int k = 1; !pw.is_zero(); ++k) {
        pw = (pw * ps).scaled(GaussianRational(mpq_class(1, k)));
        if (pw.is_zero()) break;
        out += pw;
    }
    return out;
}

TruncSeries TruncSeries::derivative(std::size_t var) const {
    TruncSeries out(vars_, cut_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        out.add_term(d, c * GaussianRational(e[var]));
    }
    return out;
}

TruncSeries TruncSeries::truncated(const Cutoffs& tighter) const {
    TruncSeries out(vars_, tighter);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

MultiPoly TruncSeries::as_poly() const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) p.add_term(e, c);
    return p;
}

MultiPoly TruncSeries::coefficient_of(std::size_t var, int k) const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        ExpVec r = e;
        r[var] = 0;
        p.add_term(r, c);
    }
    return p;
}

std::string TruncSeries::str() const { return as_poly().str(); }

} // namespace donaldson
