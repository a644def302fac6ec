#include "cli/cli.hpp"

#include "cli/svg_plot.hpp"

#include <bqf/bqf.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace bqf::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// Scalar rendering shared by every text view.
std::string scalar_text(const Json& v) {
    if (v.is_boolean()) return yes_no(v.get<bool>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// "key: value" lines, arrays as one item per line, and the listed summary
// keys as "key=value" at the end.
std::string key_value_text(const Json& doc, std::initializer_list<const char*> summary = {}) {
    std::string out;
    auto is_summary = [&](const std::string& key) {
        return std::any_of(summary.begin(), summary.end(), [&](const char* s) { return key == s; });
    };
    for (const auto& [key, value] : doc.items()) {
        if (is_summary(key)) continue;
        if (value.is_array()) {
            for (const auto& item : value) out += scalar_text(item) + "\n";
        } else {
            out += key + ": " + scalar_text(value) + "\n";
        }
    }
    for (const char* key : summary)
        if (doc.contains(key)) out += std::string(key) + "=" + scalar_text(doc.at(key)) + "\n";
    return out;
}

struct Result {
    Json doc;
    std::function<std::string(const Json&)> text;
};

EquivalenceMode parse_mode(const std::string& mode) {
    return mode == "extended" ? EquivalenceMode::extended : EquivalenceMode::proper;
}

Result cmd_reduce(const std::string& form_text) {
    auto f = parse_form(form_text);
    auto r = reduce(f);
    Json doc;
    doc["input"] = to_string(f);
    doc["reduced"] = to_string(r.reduced);
    doc["word"] = to_string(r.word);
    doc["matrix"] = to_string(r.witness);
    doc["steps"] = r.steps;
    return {doc, [](const Json& d) { return key_value_text(d); }};
}

Result cmd_equiv(const std::string& f_text, const std::string& g_text, const std::string& mode) {
    auto f = parse_form(f_text);
    auto g = parse_form(g_text);
    auto witness = equivalent(f, g, parse_mode(mode));
    Json doc;
    doc["mode"] = mode;
    doc["equivalent"] = witness.has_value();
    if (witness) {
        doc["word"] = to_string(element_to_word(*witness));
        doc["matrix"] = to_string(*witness);
        doc["det"] = witness->det();
    }
    return {doc, [](const Json& d) { return key_value_text(d); }};
}

Result cmd_class_number(const std::string& delta_text) {
    DiscriminantQuery q(parse_int(delta_text), true);
    Json doc;
    doc["discriminant"] = to_string(q.delta());
    doc["h"] = class_number(q);
    return {doc, [](const Json& d) { return "h=" + scalar_text(d.at("h")) + "\n"; }};
}

Result cmd_enumerate(const std::string& delta_text, bool primitive, bool almost) {
    DiscriminantQuery q(parse_int(delta_text), primitive);
    auto forms = almost ? enumerate_almost_reduced(q) : enumerate_reduced(q);
    Json doc;
    doc["discriminant"] = to_string(q.delta());
    doc["kind"] = almost ? "almost-reduced" : "reduced";
    doc["primitive"] = primitive;
    doc["forms"] = Json::array();
    for (const auto& f : forms) doc["forms"].push_back(to_string(f));
    doc["h"] = forms.size();
    return {doc, [](const Json& d) {
                std::string out;
                for (const auto& f : d.at("forms")) out += f.get<std::string>() + "\n";
                return out + "h=" + scalar_text(d.at("h")) + "\n";
            }};
}

Result cmd_base_point(const std::string& form_text) {
    auto f = parse_form(form_text);
    auto z = base_point(f);
    Json doc;
    doc["form"] = to_string(f);
    doc["point"] = to_string(z);
    doc["re"] = to_string(re(z));
    doc["abs_sq"] = to_string(abs_sq(z));
    doc["in_pi"] = in_fundamental_domain_pi(z);
    doc["in_pibar"] = in_fundamental_domain_pibar(z);
    return {doc, [](const Json& d) { return key_value_text(d); }};
}

Result cmd_point_form(const std::string& point_text) {
    auto z = parse_point(point_text);
    auto pf = form_from_point(z);
    Json doc;
    doc["point"] = to_string(z);
    doc["form"] = to_string(pf.form);
    doc["scale"] = to_string(pf.scale);
    return {doc, [](const Json& d) { return key_value_text(d); }};
}

Result cmd_legendre(const std::string& lambda_text, const std::string& p_text) {
    Int lambda = parse_int(lambda_text);
    OddPrime p(parse_int(p_text));
    Json doc;
    doc["lambda"] = to_string(lambda);
    doc["p"] = to_string(p.value());
    doc["symbol"] = legendre(lambda, p);
    return {doc, [](const Json& d) { return scalar_text(d.at("symbol")) + "\n"; }};
}

Result cmd_orbit(const std::string& element_text, std::size_t depth, bool primitive) {
    auto alpha = parse_field_element(element_text);
    if (primitive && !is_primitive_element(alpha))
        throw domain_error(to_string(alpha) + " is not primitive: gcd(a, b, c) != 1");
    auto orbit = orbit_explore(alpha, depth);
    Json doc;
    doc["element"] = to_string(alpha);
    doc["elements"] = Json::array();
    for (const auto& x : orbit) doc["elements"].push_back(to_string(x));
    doc["size"] = orbit.size();
    doc["depth"] = depth;
    return {doc, [](const Json& d) { return key_value_text(d, {"size", "depth"}); }};
}

Result cmd_check_t32(const std::string& a_text, const std::string& b_text, std::size_t depth) {
    auto alpha = parse_field_element(a_text);
    auto beta = parse_field_element(b_text);
    auto report = same_orbit_form_check(alpha, beta, depth);
    Json doc;
    doc["alpha"] = to_string(alpha);
    doc["beta"] = to_string(beta);
    doc["form_alpha"] = to_string(element_form(alpha));
    doc["form_beta"] = to_string(element_form(beta));
    doc["depth"] = depth;
    doc["reachable"] = report.reachable;
    doc["forms_equivalent"] = report.forms_equivalent;
    doc["status"] = report.violation() ? "violation" : report.truncated() ? "truncated" : "consistent";
    return {doc, [](const Json& d) { return key_value_text(d); }};
}

Result cmd_plot(const std::vector<std::string>& forms, const std::vector<std::string>& points,
                const std::optional<std::string>& delta, const std::string& region_text,
                const std::optional<std::string>& out_path) {
    std::vector<AlgebraicPoint> zs;
    for (const auto& f : forms) zs.push_back(base_point(parse_form(f)));
    for (const auto& p : points) zs.push_back(parse_point(p));
    if (delta)
        for (const auto& f : enumerate_reduced(DiscriminantQuery(parse_int(*delta)))) zs.push_back(base_point(f));
    auto region = region_text == "pibar" ? plot::Region::pibar : plot::Region::pi;
    std::string svg = plot::render_svg(zs, region);

    Json doc;
    doc["region"] = region_text;
    doc["markers"] = zs.size();
    if (!out_path) {
        doc["svg"] = svg;
        return {doc, [](const Json& d) { return d.at("svg").get<std::string>(); }};
    }
    std::ofstream file(*out_path, std::ios::binary);
    if (!file) throw domain_error("cannot write '" + *out_path + "'");
    file << svg;
    file.close();
    if (!file) throw domain_error("cannot write '" + *out_path + "'");
    doc["out"] = *out_path;
    return {doc, [](const Json& d) { return key_value_text(d); }};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact positive definite binary quadratic forms under the extended modular group", "bqf"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::function<Result()> action;
    std::string arg1, arg2, mode = "proper";
    std::size_t depth = 12;
    bool primitive = false, almost = false;

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a form; print the reduced form and witness");
    reduce_cmd->add_option("form", arg1, "Form a,b,c")->required();
    reduce_cmd->callback([&] { action = [&] { return cmd_reduce(arg1); }; });

    auto* equiv_cmd = app.add_subcommand("equiv", "Test equivalence of two forms");
    equiv_cmd->add_option("F", arg1, "Form a,b,c")->required();
    equiv_cmd->add_option("G", arg2, "Form a,b,c")->required();
    equiv_cmd->add_option("--mode", mode, "proper or extended")->check(CLI::IsMember({"proper", "extended"}));
    equiv_cmd->callback([&] { action = [&] { return cmd_equiv(arg1, arg2, mode); }; });

    auto* class_cmd = app.add_subcommand("class-number", "Number of primitive reduced forms h(D)");
    class_cmd->add_option("discriminant", arg1, "Negative discriminant")->required();
    class_cmd->callback([&] { action = [&] { return cmd_class_number(arg1); }; });

    auto* enum_cmd = app.add_subcommand("enumerate", "List reduced (or almost reduced) forms");
    enum_cmd->add_option("discriminant", arg1, "Negative discriminant")->required();
    enum_cmd->add_flag("--primitive", primitive, "Primitive forms only");
    enum_cmd->add_flag("--almost", almost, "Almost reduced forms (no boundary rules)");
    enum_cmd->callback([&] { action = [&] { return cmd_enumerate(arg1, primitive, almost); }; });

    auto* bp_cmd = app.add_subcommand("base-point", "Base point (b + sqrt(D))/2a of a form");
    bp_cmd->add_option("form", arg1, "Form a,b,c")->required();
    bp_cmd->callback([&] { action = [&] { return cmd_base_point(arg1); }; });

    auto* pf_cmd = app.add_subcommand("point-form", "Primitive form with a given base point");
    pf_cmd->add_option("point", arg1, "Point p,q,D meaning (p + sqrt(D))/q")->required();
    pf_cmd->callback([&] { action = [&] { return cmd_point_form(arg1); }; });

    auto* leg_cmd = app.add_subcommand("legendre", "Legendre symbol (lambda/p)");
    leg_cmd->add_option("lambda", arg1, "Integer")->required();
    leg_cmd->add_option("p", arg2, "Odd prime")->required();
    leg_cmd->callback([&] { action = [&] { return cmd_legendre(arg1, arg2); }; });

    auto* orbit_cmd = app.add_subcommand("orbit", "Bounded PSL(2,Z) orbit of (a + sqrt(-n))/c");
    orbit_cmd->add_option("element", arg1, "Element a/c/n")->required();
    orbit_cmd->add_option("--depth", depth, "Word length bound (max 12)");
    orbit_cmd->add_flag("--primitive", primitive, "Require gcd(a, b, c) = 1");
    orbit_cmd->callback([&] { action = [&] { return cmd_orbit(arg1, depth, primitive); }; });

    auto* t32_cmd = app.add_subcommand("check-t32", "Orbit reachability versus form equivalence for two elements");
    t32_cmd->add_option("alpha", arg1, "Element a/c/n")->required();
    t32_cmd->add_option("beta", arg2, "Element a/c/n")->required();
    t32_cmd->add_option("--depth", depth, "Word length bound (max 12)");
    t32_cmd->callback([&] { action = [&] { return cmd_check_t32(arg1, arg2, depth); }; });

    std::vector<std::string> plot_forms, plot_points;
    std::optional<std::string> plot_delta, plot_out;
    std::string region = "pi";
    auto* plot_cmd = app.add_subcommand("plot", "SVG of base points against a fundamental region");
    plot_cmd->add_option("--form", plot_forms, "Form a,b,c (repeatable)");
    plot_cmd->add_option("--point", plot_points, "Point p,q,D (repeatable)");
    plot_cmd->add_option("--delta", plot_delta, "Add every reduced form of this discriminant");
    plot_cmd->add_option("--region", region, "pi or pibar")->check(CLI::IsMember({"pi", "pibar"}));
    plot_cmd->add_option("--out", plot_out, "Output file (default: stdout)");
    plot_cmd->callback([&] { action = [&] { return cmd_plot(plot_forms, plot_points, plot_delta, region, plot_out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        Result result = action();
        if (format == "json")
            out << result.doc.dump(2) << "\n";
        else
            out << result.text(result.doc);
        return kExitOk;
    } catch (const bqf::parse_error& e) {
        err << "error: " << e.what() << "\n\n";
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    } catch (const bqf::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace bqf::cli
