#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "gieseker/category_o.hpp"
#include "gieseker/diagnostics.hpp"
#include "gieseker/errors.hpp"
#include "gieseker/ideal_lattice.hpp"
#include "gieseker/parameter.hpp"
#include "gieseker/partitions.hpp"
#include "gieseker/quiver_engine.hpp"
#include "gieseker/torus_chambers.hpp"

namespace gieseker::cli {

using nlohmann::json;

namespace {

json strings(const std::vector<Multipartition>& v) {
    json a = json::array();
    for (const auto& mp : v) a.push_back(mp.to_string());
    return a;
}

json chain_json(const IdealChain& c) {
    json entries = json::array();
    for (const auto& e : c.entries) {
        json j{{"index", e.index}, {"leaf", e.leaf.to_string()}};
        j["variety_dim"] = e.variety_dim ? json(*e.variety_dim) : json();
        entries.push_back(std::move(j));
    }
    json j{{"simple", c.simple}, {"entries", std::move(entries)}};
    j["m"] = c.m ? json(*c.m) : json();
    return j;
}

json diagnose_json(int n, int r, const ParameterValue& lambda, bool with_cartan) {
    const auto rep = diagnose(n, r, lambda);
    json j{{"n", n},
           {"r", r},
           {"lambda", lambda.to_string()},
           {"finite_global_dim", rep.finite_global_dim},
           {"abelian_localization_det", rep.abelian_localization_det},
           {"abelian_localization_det_inv", rep.abelian_localization_det_inv},
           {"has_findim_rep", rep.has_findim_rep},
           {"findim_category", rep.findim_category == FindimCategory::single_simple ? "single_simple" : "none"},
           {"ideal_count", rep.ideal_count.value_or(0)},
           {"ideal_chain", chain_json(ideal_chain(n, r, lambda))}};
    j["findim_dimension"] = json();
    if (rep.has_findim_rep && r == 1 && lambda.is_positive() && lambda.value().get_num().fits_slong_p())
        j["findim_dimension"] = findim_dimension_rank_one(n, lambda.value().get_num().get_si()).get_str();
    j["anchors"] = {
        {"finite_global_dim", "fails exactly for lambda = s/m with 1 <= m <= n and -rm < s < 0"},
        {"abelian_localization_det", "fails exactly for lambda = s/m with 1 <= m <= n and s < 0"},
        {"abelian_localization_det_inv", "det criterion applied to -lambda - r"},
        {"has_findim_rep", "reduced denominator exactly n and finite global dimension"},
        {"findim_dimension", "r = 1, lambda = q/n, q > 0: (q+n-1)!/(q! n!)"},
        {"ideal_chain", "proper ideals J_1 < ... < J_floor(n/m); none when simple"}};
    if (with_cartan) {
        json summands = json::array();
        for (const auto& s : cartan_decomposition(n, r, lambda)) {
            json factors = json::array();
            for (const auto& f : s.factors)
                factors.push_back({{"slot", f.slot},
                                   {"size", f.size},
                                   {"parameter", f.parameter.to_string()},
                                   {"denominator_within_size", f.denominator_within_size},
                                   {"has_findim_rep", f.has_findim_rep}});
            summands.push_back({{"composition", s.composition}, {"factors", std::move(factors)}});
        }
        j["cartan_decomposition"] = std::move(summands);
    }
    return j;
}

json support_json(int n, int r, const ParameterValue& lambda, const Multipartition& sigma) {
    const auto rep = support_dimension(n, r, lambda, sigma);
    json j{{"sigma", rep.sigma.to_string()},
           {"quotient", rep.quotient.to_string()},
           {"quotient_size", rep.quotient_size},
           {"support_dim", rep.support_dim},
           {"annihilator_index", annihilator_index(n, r, lambda, sigma)}};
    j["m"] = rep.m ? json(*rep.m) : json();
    return j;
}

json poincare_json(int n, int r) {
    const auto p = poincare_polynomial(n, r);
    const auto top = top_cohomology_check(n, r);
    return {{"n", n},
            {"r", r},
            {"polynomial", p.to_string()},
            {"coefficients", p.coefficients},
            {"degree", p.degree()},
            {"multipartition_count", p.value_at_one()},
            {"top_cohomology_ok", top.ok},
            {"top_maximizers", strings(top.maximizers)},
            {"anchors", {{"polynomial", "one monomial t^{sum_i (r|l_i| - i len(l_i))} per r-multipartition of n"},
                         {"top_cohomology_ok", "degree rn - 1, coefficient 1, attained only at ((n), -, ..., -)"}}}};
}

json block_json(int n, int r, const ParameterValue& lambda, const Cocharacter& nu) {
    const auto b = block_structure(n, r, lambda, nu);
    json hooks = json::array();
    for (std::size_t i = 0; i < b.hooks.size(); ++i)
        hooks.push_back({{"name", b.hooks[i].name()}, {"label", b.labels[i].to_string()}});
    json j{{"n", n},
           {"r", r},
           {"lambda", lambda.to_string()},
           {"nu", nu.to_string()},
           {"dominant", is_dominant(nu, n)},
           {"kind", to_string(b.kind)},
           {"ordered", b.ordered},
           {"hooks", std::move(hooks)},
           {"finite_dim_candidates", strings(b.finite_dim_candidates)},
           {"anchors", {{"kind", "denominator n: a single nontrivial block, labelled by the rn hooks"},
                        {"ordered", "hooks are in decreasing highest weight order for dominant nu"}}}};
    j["finite_dim_label"] = b.finite_dim_label ? json(b.finite_dim_label->to_string()) : json();
    return j;
}

json antichain_json(const IdealAntichain& a) {
    const auto i = to_intersection_form(a);
    return {{"intersection_form", i.to_string()},
            {"sum_form", to_sum_form(i).to_string()},
            {"whole_algebra", i.is_whole_algebra()},
            {"zero", i.is_zero()}};
}

QuiverModule named_module(const BoundQuiverAlgebra& A, const std::string& name) {
    const auto us = name.find('_');
    if (us == std::string::npos) throw ParseError("module name '" + name + "' must look like P_2, L_1, Delta_3 or nabla_1");
    const std::string kind = name.substr(0, us);
    int i = 0;
    try {
        std::size_t used = 0;
        i = std::stoi(name.substr(us + 1), &used);
        if (used != name.size() - us - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("module index in '" + name + "' is not an integer");
    }
    if (i < 1 || i > A.vertices())
        throw std::invalid_argument("module index must lie in 1..N = " + std::to_string(A.vertices()));
    if (kind == "P") return projective(A, i);
    if (kind == "L") return simple(A, i);
    if (kind == "Delta") return standard(A, i);
    if (kind == "nabla") return costandard(A, i);
    throw ParseError("unknown module kind '" + kind + "', expected P, L, Delta or nabla");
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
        return "[" + s + "]";
    }
    return v.dump();
}

void render_text(const json& j, std::ostream& out, const std::string& indent = "") {
    if (!j.is_object()) {
        out << indent << scalar_text(j) << '\n';
        return;
    }
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        out << indent << it.key() << std::string(width - it.key().size(), ' ') << "  ";
        if (v.is_object()) {
            out << '\n';
            render_text(v, out, indent + "  ");
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << '\n';
            for (const auto& e : v) {
                std::string line;
                for (auto f = e.begin(); f != e.end(); ++f)
                    line += (line.empty() ? "" : "  ") + f.key() + "=" + scalar_text(f.value());
                out << indent << "  " << line << '\n';
            }
        } else {
            out << scalar_text(v) << '\n';
        }
    }
}

void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "text")
        render_text(j, out);
    else
        out << j.dump(2) << '\n';
}

int fail(std::ostream& out, std::ostream& err, const std::string& format, int code, const std::string& message,
         const std::string& anchor) {
    err << "error: " << message << '\n';
    if (!anchor.empty()) err << "anchor: " << anchor << '\n';
    json j{{"error", message}, {"exit_code", code}};
    if (!anchor.empty()) j["anchor"] = anchor;
    emit(j, format, out);
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculators for quantized Gieseker moduli spaces", "gieseker"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::function<json()> action;
    int n = 0, r = 0, k = 0;
    std::string lambda_text, sigma_text, nu_text, op, a_text, b_text, form_text = "intersection", export_text;
    bool cartan = false, verify = false;

    auto* diag = app.add_subcommand("diagnose", "Global dimension, localization, finite-dimensional reps, ideals");
    diag->add_option("n", n)->required();
    diag->add_option("r", r)->required();
    diag->add_option("lambda", lambda_text, "p/q, integer, or 'irrational'")->required();
    diag->add_flag("--cartan", cartan, "Include the decomposition over compositions of n");
    diag->callback([&] {
        action = [&] { return diagnose_json(n, r, parse_parameter(lambda_text), cartan); };
    });

    auto* walls_cmd = app.add_subcommand("walls", "Walls of the cocharacter lattice");
    walls_cmd->add_option("n", n)->required();
    walls_cmd->add_option("r", r)->required();
    walls_cmd->callback([&] {
        action = [&] {
            const auto ws = walls(n, r);
            json list = json::array();
            for (const auto& w : ws.walls) list.push_back(w.to_string());
            return json{{"n", n},
                        {"r", r},
                        {"count", ws.walls.size()},
                        {"walls", std::move(list)},
                        {"anchors", {{"walls", "k = 0 and d_i - d_j = s k for i < j, |s| < n"}}}};
        };
    });

    auto* gen = app.add_subcommand("generic", "Genericity and dominance of a cocharacter");
    gen->add_option("n", n)->required();
    gen->add_option("nu", nu_text, "d1,...,dr;k")->required();
    gen->callback([&] {
        action = [&] {
            const auto nu = parse_cocharacter(nu_text);
            const bool g = is_generic(nu, n);
            json j{{"n", n},
                   {"r", nu.rank()},
                   {"nu", nu.to_string()},
                   {"generic", g},
                   {"dominant", is_dominant(nu, n)},
                   {"anchors", {{"generic", "off every wall k = 0, d_i - d_j = s k (|s| < n)"},
                                {"dominant", "k >= 1 and d_i - d_{i+1} > n k"}}}};
            const auto w = violated_wall(nu, n);
            j["violated_wall"] = w ? json(w->to_string()) : json();
            return j;
        };
    });

    auto* poin = app.add_subcommand("poincare", "Poincare polynomial of the smooth moduli space");
    poin->add_option("n", n)->required();
    poin->add_option("r", r)->required();
    poin->callback([&] { action = [&] { return poincare_json(n, r); }; });

    auto* sup = app.add_subcommand("supports", "Support dimensions of simples in category O");
    sup->add_option("n", n)->required();
    sup->add_option("r", r)->required();
    sup->add_option("lambda", lambda_text)->required();
    sup->add_option("--sigma", sigma_text, "Multipartition, e.g. '2,1|-'");
    sup->callback([&] {
        action = [&] {
            const auto lambda = parse_parameter(lambda_text);
            json j;
            if (!sigma_text.empty()) {
                j = support_json(n, r, lambda, parse_multipartition(sigma_text));
            } else {
                json all = json::array();
                for (const auto& s : enumerate_multipartitions(n, r)) all.push_back(support_json(n, r, lambda, s));
                j = json{{"supports", std::move(all)}};
            }
            j["n"] = n;
            j["r"] = r;
            j["lambda"] = lambda.to_string();
            j["semisimplicity"] = to_string(semisimplicity(n, r, lambda));
            j["anchors"] = {{"support_dim", "rn - |sigma^(1) quotient| (rm - 1) for dominant nu, lambda > 0, m > 1"},
                            {"annihilator_index", "annihilator is J_i with i the quotient size"}};
            return j;
        };
    });

    auto* blk = app.add_subcommand("block", "Block structure of category O");
    blk->add_option("n", n)->required();
    blk->add_option("r", r)->required();
    blk->add_option("lambda", lambda_text)->required();
    blk->add_option("--nu", nu_text, "d1,...,dr;k (default: a dominant cocharacter)");
    blk->callback([&] {
        action = [&] {
            const auto nu = nu_text.empty() ? dominant_cocharacter(n, r) : parse_cocharacter(nu_text);
            return block_json(n, r, parse_parameter(lambda_text), nu);
        };
    });

    auto* lat = app.add_subcommand("ideal-lattice", "Antichain calculus for ideals of a tensor power");
    lat->add_option("k", k)->required();
    lat->add_option("--op", op, "Operation")
        ->required()
        ->check(CLI::IsMember({"count", "enumerate", "normalize", "intersect", "sum", "product", "contains"}));
    lat->add_option("--a", a_text, "Antichain, e.g. '[[1],[2]]'");
    lat->add_option("--b", b_text, "Second antichain");
    lat->add_option("--form", form_text, "Form of the inputs")->check(CLI::IsMember({"intersection", "sum"}));
    lat->callback([&] {
        action = [&] {
            const auto form = form_text == "sum" ? AntichainForm::sum : AntichainForm::intersection;
            auto need = [&](const std::string& text, const char* flag) {
                if (text.empty()) throw ParseError(std::string("--op ") + op + " needs " + flag);
                return parse_antichain(text, k, form);
            };
            json j{{"k", k},
                   {"op", op},
                   {"anchors", {{"op", "ideals of the k-fold tensor power correspond to antichains of subsets of "
                                       "{1..k}; every ideal is idempotent, so products are intersections"}}}};
            if (op == "count") {
                j["count"] = count_ideals(k);
            } else if (op == "enumerate") {
                json list = json::array();
                for (const auto& a : enumerate_ideals(k)) list.push_back(antichain_json(a));
                j["count"] = list.size();
                j["ideals"] = std::move(list);
            } else if (op == "normalize") {
                j["result"] = antichain_json(need(a_text, "--a"));
            } else {
                const auto a = need(a_text, "--a"), b = need(b_text, "--b");
                if (op == "intersect") j["result"] = antichain_json(intersect(a, b));
                if (op == "sum") j["result"] = antichain_json(sum(a, b));
                if (op == "product") j["result"] = antichain_json(product(a, b));
                if (op == "contains") j["a_contains_b"] = contains(a, b);
            }
            return j;
        };
    });

    auto* lv = app.add_subcommand("leaves", "Symplectic leaves and their dimensions");
    lv->add_option("n", n)->required();
    lv->add_option("r", r)->required();
    lv->callback([&] {
        action = [&] {
            json list = json::array();
            for (const auto& l : enumerate_leaves(n, r))
                list.push_back({{"leaf", l.to_string()},
                                {"dimension", leaf_dimension(l, n, r)},
                                {"dimension_unreduced", leaf_dimension_unreduced(l, n, r)}});
            return json{{"n", n},
                        {"r", r},
                        {"count", list.size()},
                        {"leaves", std::move(list)},
                        {"anchors", {{"dimension", "(2rn - 2) - sum_i (2r n_i - 2)"}}}};
        };
    });

    auto* mb = app.add_subcommand("model-block", "Bound quiver model of the nontrivial block");
    mb->add_option("N", n)->required();
    mb->add_flag("--verify", verify, "Run the homological checks");
    mb->add_option("--export", export_text, "Module to export: P_i, L_i, Delta_i or nabla_i");
    mb->callback([&] {
        action = [&] {
            const auto A = build_model_algebra(n);
            json basis = json::array();
            for (const auto& e : A.basis()) basis.push_back(e.label);
            json projectives = json::array(), standards = json::array();
            for (int i = 1; i <= n; ++i) {
                projectives.push_back(dimension_vector(A, projective(A, i)));
                standards.push_back(dimension_vector(A, standard(A, i)));
            }
            json j{{"N", n},
                   {"dimension", A.dimension()},
                   {"basis", std::move(basis)},
                   {"projective_dimension_vectors", std::move(projectives)},
                   {"standard_dimension_vectors", std::move(standards)},
                   {"anchors", {{"dimension", "4N - 3 basis paths"},
                                {"concentration_degree", "computed degree of RHom(T, L_1); N - 1 expected, "
                                                         "one less than the literal degree N"}}}};
            if (verify) j["verification"] = report_to_json(verify_model_properties(n));
            if (!export_text.empty()) j["module"] = module_to_json(A, named_module(A, export_text));
            return j;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        msg << e.what();
        return fail(out, err, format, exit_parse, msg.str(), "");
    }

    try {
        emit(action(), format, out);
        return exit_ok;
    } catch (const ParseError& e) {
        return fail(out, err, format, exit_parse, e.what(), "");
    } catch (const HypothesisError& e) {
        return fail(out, err, format, exit_regime, e.hypothesis(), e.anchor());
    } catch (const NonGenericError& e) {
        return fail(out, err, format, exit_regime, e.what(), "nu must avoid every wall");
    } catch (const std::invalid_argument& e) {
        return fail(out, err, format, exit_regime, e.what(), "input precondition");
    } catch (const std::domain_error& e) {
        return fail(out, err, format, exit_regime, e.what(), "input precondition");
    }
}

}  // namespace gieseker::cli
