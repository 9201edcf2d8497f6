// essq -- certificate checker for the mod-2 cohomology spectral sequence of
// the Sylow 2-subgroup of SU3(4), its essential classes and their products.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "essq/essential.hpp"
#include "essq/runner.hpp"
#include "essq/series.hpp"

namespace {

int emit(const essq::Report& report, const essq::Config& cfg) {
    std::string text = cfg.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "essq: cannot write " << cfg.out_path << "\n";
            return 2;
        }
        out << text;
    }
    return report.all_passed() ? 0 : 1;
}

void add_common(CLI::App* cmd, essq::Config& cfg) {
    cmd->add_option("--pmax", cfg.pmax, "window bound on the filtration degree");
    cmd->add_option("--qmax", cfg.qmax, "window bound on the fibre degree");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", cfg.out_path, "write the report to a file");
}

nlohmann::json certificate_dump(const essq::SpectralSequence& s) {
    nlohmann::json pages = nlohmann::json::array();
    struct Spec {
        const char* label;
        const essq::PageSpace* page;
        const essq::Derivation* d;
    };
    const Spec specs[] = {
        {"E2", &s.e2(), &s.d2()},
        {"E3", &s.e3(), &s.d3()},
        {"E5", &s.e4(), &s.d5()},
    };
    for (const auto& spec : specs) {
        nlohmann::json slices = nlohmann::json::array();
        for (int p = 0; p <= 8; ++p)
            for (int q = 0; q <= 8; ++q) {
                essq::Bidegree bd{p, q};
                nlohmann::json basis = nlohmann::json::array();
                for (const auto& b : spec.page->basis_elements(bd)) basis.push_back(b.str());
                nlohmann::json rows = nlohmann::json::array();
                essq::Bidegree out_bd = bd + spec.d->shift();
                if (out_bd.first_quadrant()) {
                    for (const auto& b : spec.page->basis_elements(bd)) {
                        essq::Element db = spec.d->apply(b);
                        nlohmann::json row = nlohmann::json::array();
                        for (essq::Gf16 c : spec.page->coords(db, out_bd))
                            row.push_back(std::string(1, c.hex()));
                        rows.push_back(row);
                    }
                }
                if (!basis.empty())
                    slices.push_back({{"p", p}, {"q", q}, {"basis", basis},
                                      {"differential", rows}});
            }
        pages.push_back({{"page", spec.label}, {"slices", slices}});
    }
    return {{"pages", pages}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificate checker: Sylow 2-subgroup of SU3(4), spectral sequence,\n"
                 "essential classes, Poincare series"};
    app.require_subcommand(1);
    essq::Config cfg;

    auto* verify = app.add_subcommand("verify", "run verification groups (default: all)");
    std::vector<std::string> groups;
    verify->add_option("groups", groups,
                       "check groups: all, group, e3, e4, einf, relations, properties, "
                       "essential, products, series");
    std::string only_csv;
    verify->add_option("--only", only_csv, "comma separated list of groups");
    add_common(verify, cfg);

    auto* dims = app.add_subcommand("dims", "print the Einf dimension table");
    std::string page = "einf";
    dims->add_option("--page", page, "page to print")->check(CLI::IsMember({"einf"}));
    add_common(dims, cfg);

    auto* essential = app.add_subcommand("essential", "essential-class computations");
    bool scan = false;
    std::string check_expr;
    essential->add_flag("--scan", scan, "per-degree essential dimension table");
    essential->add_option("--check", check_expr, "test one class, e.g. 'a4^2*d3 + a4^2*d7'");
    add_common(essential, cfg);

    auto* products = app.add_subcommand("products", "essential products and the last survivor");
    bool all_products = false;
    products->add_flag("--all", all_products, "include the pairwise/triple product scans");
    add_common(products, cfg);

    auto* series = app.add_subcommand("series", "Poincare series and duality checks");
    add_common(series, cfg);

    auto* group = app.add_subcommand("group", "group-structure report");
    add_common(group, cfg);

    auto* report_cmd = app.add_subcommand("report", "full verification report plus certificate data");
    add_common(report_cmd, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify)) {
            for (const auto& g : groups)
                if (g != "all") cfg.only.insert(g);
            if (!only_csv.empty()) {
                size_t start = 0;
                while (start <= only_csv.size()) {
                    size_t comma = only_csv.find(',', start);
                    std::string g = only_csv.substr(
                        start, comma == std::string::npos ? std::string::npos : comma - start);
                    if (!g.empty() && g != "all") cfg.only.insert(g);
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            return emit(essq::run_checks(cfg), cfg);
        }
        if (app.got_subcommand(group)) {
            cfg.only = {"group"};
            return emit(essq::run_checks(cfg), cfg);
        }
        if (app.got_subcommand(dims)) {
            essq::SpectralSequence s(essq::Window{cfg.pmax, cfg.qmax});
            if (cfg.format == "json") {
                nlohmann::json tbl = nlohmann::json::array();
                for (int q = 8; q >= 0; --q) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int p = 0; p <= 8; ++p) row.push_back(s.quotient_dim({p, q}));
                    tbl.push_back(row);
                }
                std::cout << nlohmann::json{{"einf_mod_params", tbl}}.dump(2) << "\n";
            } else {
                std::cout << essq::render_einf_table(s);
            }
            return 0;
        }
        if (app.got_subcommand(essential)) {
            essq::SpectralSequence s(essq::Window{cfg.pmax, cfg.qmax});
            essq::Report r;
            if (!check_expr.empty()) {
                essq::Element x = s.einf_rep(check_expr);
                auto bd = x.bidegree();
                if (!bd) {
                    std::cerr << "essq: expression is not bihomogeneous\n";
                    return 2;
                }
                essq::Gf16 failing;
                auto ws = essq::einf_essential(s, x, *bd, &failing);
                if (ws) {
                    nlohmann::json wit = nlohmann::json::array();
                    for (const auto& [alpha, w] : ws->witnesses)
                        wit.push_back({{"alpha", alpha.sym()}, {"witness", w.str()}});
                    r.pass("essential.check", check_expr + " is Einf-essential at " + bd->str(),
                           {{"witnesses", wit}});
                } else {
                    r.fail("essential.check",
                           check_expr + " is not divisible by N(" + failing.sym() + " a1)");
                }
            }
            if (scan || check_expr.empty()) {
                essq::EssentialScan sc = essq::run_essential_scan(s);
                r.append(essq::essential_scan_report(s, sc));
            }
            return emit(r, cfg);
        }
        if (app.got_subcommand(products)) {
            cfg.only = {"products"};
            essq::Report r = essq::run_checks(cfg);
            return emit(r, cfg);
        }
        if (app.got_subcommand(series)) {
            cfg.only = {"series"};
            essq::SpectralSequence s(essq::Window{cfg.pmax, cfg.qmax});
            std::vector<int> num = essq::poincare_numerator(s);
            if (cfg.format == "text" && cfg.out_path.empty()) {
                std::string line = "P(t) = (";
                for (int n = 0; n <= 14; ++n) {
                    if (num[static_cast<size_t>(n)] == 0) continue;
                    if (line.back() != '(') line += " + ";
                    if (n == 0) line += std::to_string(num[0]);
                    else if (num[static_cast<size_t>(n)] == 1) line += "t^" + std::to_string(n);
                    else line += std::to_string(num[static_cast<size_t>(n)]) + "t^" + std::to_string(n);
                }
                line += ") / (1 - t^8)^2\n";
                std::cout << line;
            }
            return emit(essq::run_checks(cfg), cfg);
        }
        if (app.got_subcommand(report_cmd)) {
            essq::Report r = essq::run_checks(cfg);
            essq::SpectralSequence s(essq::Window{cfg.pmax, cfg.qmax});
            nlohmann::json out = r.to_json();
            out["certificate"] = certificate_dump(s);
            if (cfg.out_path.empty()) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::ofstream f(cfg.out_path);
                f << out.dump(2) << "\n";
            }
            return r.all_passed() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "essq: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "essq: internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
