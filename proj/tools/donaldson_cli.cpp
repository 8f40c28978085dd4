#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "donaldson/catalog.hpp"
#include "donaldson/errors.hpp"
#include "donaldson/hff.hpp"
#include "donaldson/insertion.hpp"
#include "donaldson/json_io.hpp"
#include "donaldson/structfit.hpp"
#include "donaldson/transforms.hpp"

namespace {

using donaldson::ordered_json;

ordered_json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(path);
        if (!in) throw donaldson::validation_error("cannot open input file: " + path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw donaldson::validation_error(std::string("invalid JSON input: ") + ex.what());
    }
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct SeriesInput {
    std::string path = "-";
    std::string catalog_name;

    donaldson::DonaldsonSeries load() const {
        if (!catalog_name.empty()) return donaldson::catalog_series(catalog_name);
        return donaldson::series_from_json(read_json(path));
    }
};

void add_series_input(CLI::App* cmd, SeriesInput& in) {
    cmd->add_option("--input", in.path, "series JSON file, or - for stdin");
    cmd->add_option("--catalog", in.catalog_name, "use a built-in fixture instead of --input");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structured Donaldson series toolkit"};
    app.require_subcommand(1);

    SeriesInput in;
    int cutoff = 8;
    int lambda_cutoff = 2;
    std::vector<int> per_var;
    std::string variant = "cosh";
    long e_index = -1;
    std::vector<long> wprime;
    std::string cycle = "delta";
    std::vector<long> surface;
    long genus = 1;
    int mult = 1;
    long dsigma = 0;
    std::vector<long> bounds;
    int max_degree = 0;
    int max_lambda_degree = 0;
    std::string manifold_path;
    std::string catalog_name;

    auto* c_expand = app.add_subcommand("expand", "expand a structured series to a truncated one");
    add_series_input(c_expand, in);
    c_expand->add_option("--cutoff", cutoff, "total degree cutoff in the t variables");
    c_expand->add_option("--lambda-cutoff", lambda_cutoff, "degree cutoff in lambda");
    c_expand->add_option("--per-var", per_var, "per-variable degree cutoffs (overrides --cutoff)");

    auto* c_fit = app.add_subcommand("fit", "recover the structured form from a truncated series");
    c_fit->add_option("--input", in.path, "truncated-series JSON file, or - for stdin");
    c_fit->add_option("--manifold", manifold_path, "series JSON supplying manifold, w and zword")
        ->required();
    c_fit->add_option("--bound", bounds, "frequency bound(s), one per direction or a single value")
        ->required();
    c_fit->add_option("--max-degree", max_degree, "bound on the t-degree of the polynomials");
    c_fit->add_option("--max-lambda-degree", max_lambda_degree,
                      "bound on the lambda-degree of the polynomials");

    auto* c_blowup = app.add_subcommand("blowup", "blow up a simple-type-shape series");
    add_series_input(c_blowup, in);
    c_blowup->add_option("--variant", variant, "cosh (same w) or sinh (w+E)");

    auto* c_blowdown = app.add_subcommand("blowdown", "blow-down derivative along E");
    add_series_input(c_blowdown, in);
    c_blowdown->add_option("--e-index", e_index, "index of the exceptional class (default: last)");

    auto* c_recolor = app.add_subcommand("recolor", "change the coloring w");
    add_series_input(c_recolor, in);
    c_recolor->add_option("--w-prime", wprime, "coordinates of the new w")->required();

    auto* c_sum = app.add_subcommand("sum-s1s3", "connected sum with S^1 x S^3");
    add_series_input(c_sum, in);
    c_sum->add_option("--cycle", cycle, "label of the new 1-cycle");

    auto* c_basic = app.add_subcommand("basic-classes", "list the basic classes");
    add_series_input(c_basic, in);

    auto* c_order = app.add_subcommand("order", "finite-type order");
    add_series_input(c_order, in);

    auto* c_genus = app.add_subcommand("min-genus", "adjunction-style genus bound");
    add_series_input(c_genus, in);
    c_genus->add_option("--surface", surface, "coordinates of the surface class")->required();

    auto* c_sym = app.add_subcommand("symmetry-check", "validate pair structure and claims");
    add_series_input(c_sym, in);

    auto* c_ann = app.add_subcommand("annihilators", "Fukaya-Floer annihilating operators");
    c_ann->add_option("--genus", genus, "genus of the surface")->required();
    c_ann->add_option("--mult", mult, "multiplicity on every factor");
    c_ann->add_option("--dsigma", dsigma, "pairing D.Sigma");

    auto* c_cat = app.add_subcommand("catalog", "list or emit built-in fixtures");
    c_cat->add_option("--name", catalog_name, "emit this fixture as a series document");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_expand->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            donaldson::Cutoffs cut =
                per_var.empty() ? donaldson::Cutoffs::total_only(cutoff, lambda_cutoff)
                                : donaldson::Cutoffs::box(per_var, lambda_cutoff);
            emit(donaldson::trunc_to_json(donaldson::expand(s, cut)));
        } else if (c_fit->parsed()) {
            donaldson::TruncSeries g = donaldson::trunc_from_json(read_json(in.path));
            donaldson::DonaldsonSeries ref =
                donaldson::series_from_json(read_json(manifold_path));
            donaldson::RecoverOptions opts;
            opts.bounds = bounds;
            opts.max_poly_degree = max_degree;
            opts.max_lambda_degree = max_lambda_degree;
            donaldson::DonaldsonSeries s =
                donaldson::recover_structure(g, ref.manifold(), ref.w(), ref.zword(), opts);
            ordered_json j;
            j["series"] = donaldson::series_to_json(s);
            j["residual_zero"] = true; // recover_structure throws otherwise
            emit(j);
        } else if (c_blowup->parsed()) {
            if (variant != "cosh" && variant != "sinh")
                throw donaldson::validation_error("variant must be cosh|sinh");
            donaldson::DonaldsonSeries s = in.load();
            emit(donaldson::series_to_json(donaldson::blow_up(
                s, variant == "cosh" ? donaldson::BlowupVariant::Cosh
                                     : donaldson::BlowupVariant::Sinh)));
        } else if (c_blowdown->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            std::size_t idx = e_index < 0 ? s.rank() - 1 : static_cast<std::size_t>(e_index);
            emit(donaldson::series_to_json(donaldson::blow_down_derivative(s, idx)));
        } else if (c_recolor->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            emit(donaldson::series_to_json(
                donaldson::recolor(s, donaldson::CohClass(wprime))));
        } else if (c_sum->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            emit(donaldson::series_to_json(donaldson::connect_sum_s1s3(s, cycle)));
        } else if (c_basic->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            ordered_json list = ordered_json::array();
            for (const auto& [K, p] : donaldson::basic_classes(s)) {
                ordered_json e;
                e["K"] = K.c;
                e["poly"] = donaldson::poly_to_json(p);
                list.push_back(e);
            }
            emit(list);
        } else if (c_order->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            ordered_json j;
            j["order"] = donaldson::finite_type_order(s);
            j["sst_shape"] = donaldson::is_sst_shape(s);
            emit(j);
        } else if (c_genus->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            ordered_json j;
            j["min_genus"] = donaldson::min_genus(s, donaldson::CohClass(surface));
            emit(j);
        } else if (c_sym->parsed()) {
            donaldson::DonaldsonSeries s = in.load();
            donaldson::PairReport rep = donaldson::check_pair_structure(s);
            donaldson::DonaldsonSeries v = s.with_validated_flags();
            ordered_json j;
            j["pair_structure_ok"] = rep.ok;
            j["violations"] = rep.violations;
            j["characteristic"] = v.flags().claims_characteristic;
            j["symmetric"] = v.flags().claims_symmetric;
            j["sst_shape_polys"] = v.flags().claims_sst;
            j["ok"] = rep.ok && v.flags().claims_symmetric;
            emit(j);
            if (!rep.ok) return 3;
        } else if (c_ann->parsed()) {
            donaldson::AnnihilatorSet set = donaldson::annihilators(genus, mult, dsigma);
            ordered_json j;
            j["plus"] = donaldson::annihilator_to_json(set.plus);
            j["minus"] = donaldson::annihilator_to_json(set.minus);
            j["combined"] = donaldson::annihilator_to_json(set.combined);
            emit(j);
        } else if (c_cat->parsed()) {
            if (catalog_name.empty()) {
                ordered_json list = ordered_json::array();
                for (const auto& e : donaldson::catalog()) {
                    ordered_json ej;
                    ej["name"] = e.name;
                    ej["description"] = e.description;
                    list.push_back(ej);
                }
                emit(list);
            } else {
                emit(donaldson::series_to_json(donaldson::catalog_series(catalog_name)));
            }
        }
    } catch (const donaldson::validation_error& ex) {
        ordered_json j;
        j["error"] = {{"type", "validation"}, {"message", ex.what()}};
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const donaldson::inconsistency_error& ex) {
        ordered_json j;
        j["error"] = {{"type", "inconsistency"}, {"message", ex.what()}};
        std::cout << j.dump(2) << "\n";
        return 3;
    } catch (const std::exception& ex) {
        ordered_json j;
        j["error"] = {{"type", "validation"}, {"message", ex.what()}};
        std::cout << j.dump(2) << "\n";
        return 2;
    }
    return 0;
}
