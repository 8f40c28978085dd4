#include "donaldson/json_io.hpp"

#include <sstream>

#include "donaldson/errors.hpp"

namespace donaldson {

namespace {

std::string exp_key(const ExpVec& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    return os.str();
}

ExpVec parse_exp_key(const std::string& key, std::size_t arity) {
    ExpVec e;
    std::istringstream is(key);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            e.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw validation_error("bad exponent key: " + key);
        }
    }
    if (e.size() != arity) throw validation_error("exponent key arity mismatch: " + key);
    for (int x : e)
        if (x < 0) throw validation_error("negative exponent in key: " + key);
    return e;
}

std::vector<long> long_list(const ordered_json& j, const char* what) {
    if (!j.is_array()) throw validation_error(std::string(what) + " must be an array");
    std::vector<long> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw validation_error(std::string(what) + " must hold integers");
        out.push_back(x.get<long>());
    }
    return out;
}

GaussianRational rational_field(const ordered_json& j, const char* what) {
    if (!j.is_string()) throw validation_error(std::string(what) + " must be a rational string");
    try {
        return GaussianRational::from_string(j.get<std::string>());
    } catch (const std::exception&) {
        throw validation_error(std::string(what) + ": unparseable rational " +
                               j.get<std::string>());
    }
}

} // namespace

ordered_json poly_to_json(const MultiPoly& p) {
    ordered_json j = ordered_json::object();
    for (const auto& [e, c] : p.terms()) j[exp_key(e)] = c.str();
    return j;
}

MultiPoly poly_from_json(const ordered_json& j, const std::vector<std::string>& vars) {
    if (!j.is_object()) throw validation_error("polynomial must be an object");
    MultiPoly p(vars);
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_term(parse_exp_key(it.key(), vars.size()), rational_field(it.value(), "coefficient"));
    return p;
}

ordered_json series_to_json(const DonaldsonSeries& s) {
    DonaldsonSeries c = s.canonicalized();
    ordered_json j;
    j["name"] = c.manifold().name;
    j["b1"] = c.manifold().b1;
    j["bplus"] = c.manifold().bplus;
    j["sst_manifold"] = c.manifold().sst_manifold;
    ordered_json lat;
    lat["rank"] = c.manifold().lattice.rank();
    lat["gram"] = c.manifold().lattice.gram;
    lat["labels"] = c.manifold().lattice.labels;
    j["lattice"] = lat;
    j["w"] = c.w().c;
    ordered_json zw;
    zw["labels"] = c.zword().labels;
    zw["deg2z"] = c.zword().deg2z();
    j["zword"] = zw;
    {
        long td0 = c.twice_d0();
        ordered_json audit;
        audit["twice_d0"] = td0;
        if ((((td0 - c.zword().deg2z()) % 2) + 2) % 2 == 0)
            audit["d0_minus_d_mod4"] = c.d0_minus_d_mod4();
        j["d0mod4"] = audit;
    }
    ordered_json fl;
    fl["claims_characteristic"] = c.flags().claims_characteristic;
    fl["claims_symmetric"] = c.flags().claims_symmetric;
    fl["claims_sst"] = c.flags().claims_sst;
    j["flags"] = fl;
    ordered_json terms = ordered_json::array();
    for (const auto& t : c.terms()) {
        ordered_json tj;
        tj["sector"] = t.sector == Sector::Plus ? "plus" : "minus";
        tj["K"] = t.K.c;
        tj["poly"] = poly_to_json(t.poly);
        terms.push_back(tj);
    }
    j["terms"] = terms;
    return j;
}

DonaldsonSeries series_from_json(const ordered_json& j) {
    if (!j.is_object()) throw validation_error("series document must be an object");
    ManifoldData m;
    m.name = j.value("name", std::string());
    if (!j.contains("b1") || !j.contains("bplus") || !j.contains("lattice") || !j.contains("w"))
        throw validation_error("series document missing b1/bplus/lattice/w");
    if (!j["b1"].is_number_integer() || !j["bplus"].is_number_integer())
        throw validation_error("b1 and bplus must be integers");
    m.b1 = j["b1"].get<long>();
    m.bplus = j["bplus"].get<long>();
    if (j.contains("sst_manifold")) {
        if (!j["sst_manifold"].is_boolean()) throw validation_error("sst_manifold must be boolean");
        m.sst_manifold = j["sst_manifold"].get<bool>();
    }
    const auto& lat = j["lattice"];
    if (!lat.is_object() || !lat.contains("gram") || !lat.contains("labels"))
        throw validation_error("lattice must carry gram and labels");
    std::vector<std::vector<long>> gram;
    if (!lat["gram"].is_array()) throw validation_error("gram must be an array of arrays");
    for (const auto& row : lat["gram"]) gram.push_back(long_list(row, "gram row"));
    std::vector<std::string> labels;
    if (!lat["labels"].is_array()) throw validation_error("labels must be an array");
    for (const auto& l : lat["labels"]) {
        if (!l.is_string()) throw validation_error("labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    m.lattice = Lattice(std::move(gram), std::move(labels));
    if (lat.contains("rank") &&
        (!lat["rank"].is_number_integer() ||
         lat["rank"].get<std::size_t>() != m.lattice.rank()))
        throw validation_error("declared rank does not match the gram matrix");

    CohClass w(long_list(j["w"], "w"));

    OneCycleWord z;
    if (j.contains("zword")) {
        const auto& zw = j["zword"];
        if (!zw.is_object() || !zw.contains("labels"))
            throw validation_error("zword must carry labels");
        for (const auto& l : zw["labels"]) {
            if (!l.is_string()) throw validation_error("zword labels must be strings");
            z.labels.push_back(l.get<std::string>());
        }
        if (zw.contains("deg2z") && zw["deg2z"].get<long>() != z.deg2z())
            throw validation_error("declared deg2z does not match the label count");
    }

    SeriesFlags flags;
    if (j.contains("flags")) {
        const auto& fl = j["flags"];
        flags.claims_characteristic = fl.value("claims_characteristic", false);
        flags.claims_symmetric = fl.value("claims_symmetric", false);
        flags.claims_sst = fl.value("claims_sst", false);
    }

    auto vars = series_vars(m.lattice.rank());
    std::vector<SeriesTerm> terms;
    if (j.contains("terms")) {
        if (!j["terms"].is_array()) throw validation_error("terms must be an array");
        for (const auto& tj : j["terms"]) {
            if (!tj.is_object() || !tj.contains("sector") || !tj.contains("K") ||
                !tj.contains("poly"))
                throw validation_error("term must carry sector, K and poly");
            std::string sec = tj["sector"].get<std::string>();
            if (sec != "plus" && sec != "minus") throw validation_error("sector must be plus|minus");
            terms.push_back(SeriesTerm{sec == "plus" ? Sector::Plus : Sector::Minus,
                                       CohClass(long_list(tj["K"], "K")),
                                       poly_from_json(tj["poly"], vars)});
        }
    }

    DonaldsonSeries s(std::move(m), std::move(w), std::move(z), std::move(terms), flags);
    if (j.contains("d0mod4")) {
        const auto& audit = j["d0mod4"];
        if (audit.contains("twice_d0") && audit["twice_d0"].get<long>() != s.twice_d0())
            throw inconsistency_error("stored twice_d0 disagrees with the manifold data");
        if (audit.contains("d0_minus_d_mod4") &&
            audit["d0_minus_d_mod4"].get<int>() != s.d0_minus_d_mod4())
            throw inconsistency_error("stored d0_minus_d_mod4 disagrees with the manifold data");
    }
    s.check_claims();
    return s;
}

ordered_json trunc_to_json(const TruncSeries& s) {
    ordered_json j;
    j["vars"] = s.vars();
    ordered_json cut;
    cut["total"] = s.cutoffs().total;
    if (!s.cutoffs().per_var.empty()) cut["per_var"] = s.cutoffs().per_var;
    cut["lambda"] = s.cutoffs().lambda;
    j["cutoff"] = cut;
    ordered_json terms = ordered_json::object();
    for (const auto& [e, c] : s.terms()) terms[exp_key(e)] = c.str();
    j["terms"] = terms;
    return j;
}

TruncSeries trunc_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("cutoff"))
        throw validation_error("truncated series must carry vars and cutoff");
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw validation_error("vars must be strings");
        vars.push_back(v.get<std::string>());
    }
    const auto& cj = j["cutoff"];
    Cutoffs cut;
    cut.total = cj.value("total", 0);
    cut.lambda = cj.value("lambda", 0);
    if (cj.contains("per_var")) {
        for (const auto& x : cj["per_var"]) cut.per_var.push_back(x.get<int>());
    }
    TruncSeries s(vars, cut);
    if (j.contains("terms")) {
        const auto& terms = j["terms"];
        if (!terms.is_object()) throw validation_error("terms must be an object");
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            ExpVec e = parse_exp_key(it.key(), vars.size());
            if (!cut.admits(e, s.lambda_index()))
                throw validation_error("term outside the declared cutoff: " + it.key());
            s.add_term(e, rational_field(it.value(), "coefficient"));
        }
    }
    return s;
}

ordered_json even_to_json(const EvenElement& e) {
    ordered_json j;
    j["scale"] = e.scale.str();
    ordered_json factors = ordered_json::array();
    for (const auto& f : e.factors) {
        ordered_json fj;
        if (const auto* p = std::get_if<PointShift>(&f)) {
            fj["kind"] = "point";
            fj["c"] = p->c.str();
            fj["power"] = p->power;
        } else {
            const auto& sh = std::get<SurfaceShift>(f);
            fj["kind"] = "surface";
            fj["v"] = sh.v.c;
            fj["c"] = sh.c.str();
            fj["mode"] = sh.reduced ? "reduced" : "raw";
            fj["power"] = sh.power;
        }
        factors.push_back(fj);
    }
    j["factors"] = factors;
    return j;
}

EvenElement even_from_json(const ordered_json& j, std::size_t rank) {
    EvenElement e;
    if (!j.is_object()) throw validation_error("even element must be an object");
    if (j.contains("scale")) e.scale = rational_field(j["scale"], "scale");
    if (e.scale.is_zero()) throw validation_error("even element scale must be nonzero");
    if (j.contains("factors")) {
        for (const auto& fj : j["factors"]) {
            std::string kind = fj.value("kind", std::string());
            int power = fj.value("power", 1);
            if (power < 0) throw validation_error("factor power must be >= 0");
            GaussianRational c =
                fj.contains("c") ? rational_field(fj["c"], "factor shift") : GaussianRational(0);
            if (kind == "point") {
                e.factors.push_back(PointShift{c, power});
            } else if (kind == "surface") {
                if (!fj.contains("v")) throw validation_error("surface factor needs v");
                CohClass v(long_list(fj["v"], "v"));
                if (v.rank() != rank) throw validation_error("surface factor rank mismatch");
                std::string mode = fj.value("mode", std::string("reduced"));
                if (mode != "reduced" && mode != "raw")
                    throw validation_error("surface mode must be reduced|raw");
                e.factors.push_back(SurfaceShift{std::move(v), c, mode == "reduced", power});
            } else {
                throw validation_error("factor kind must be point|surface");
            }
        }
    }
    return e;
}

ordered_json annihilator_to_json(const AnnihilatorOp& op) {
    ordered_json factors = ordered_json::array();
    for (const auto& f : op.factors) {
        ordered_json fj;
        fj["variable"] = f.on_lambda ? "lambda" : "s";
        fj["eigenvalue_const"] = f.c0.str();
        fj["eigenvalue_t"] = f.ct.str();
        fj["multiplicity"] = f.mult;
        factors.push_back(fj);
    }
    ordered_json j;
    j["factors"] = factors;
    return j;
}

} // namespace donaldson
