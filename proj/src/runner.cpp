#include "essq/runner.hpp"

#include <stdexcept>

#include "essq/essential.hpp"
#include "essq/series.hpp"

namespace essq {

const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> kGroups = {
        "group", "e3", "e4", "einf", "relations", "properties", "essential", "products",
        "series",
    };
    return kGroups;
}

Report run_checks(const Config& cfg) {
    for (const auto& g : cfg.only) {
        bool known = false;
        for (const auto& k : check_groups()) known = known || k == g;
        if (!known) throw std::invalid_argument("unknown check group '" + g + "'");
    }
    auto selected = [&](const std::string& g) {
        return cfg.only.empty() || cfg.only.count(g) > 0;
    };

    Report r;
    if (selected("group")) r.append(group_report());

    bool needs_sseq = false;
    for (const auto& g : check_groups())
        if (g != "group" && selected(g)) needs_sseq = true;
    if (!needs_sseq) return r;

    SpectralSequence s(Window{cfg.pmax, cfg.qmax});
    if (selected("e3")) r.append(verify_e3(s));
    if (selected("e4")) {
        r.append(verify_e4(s));
        r.append(verify_e4_equals_e5(s));
    }
    if (selected("einf")) {
        r.append(verify_einf(s));
        r.append(last_survivor_report(s));
    }
    if (selected("relations")) r.append(verify_corrected_relations(s));
    if (selected("properties")) r.append(property_suite(s));
    if (selected("essential")) {
        r.append(verify_lemma_h4(s));
        r.append(verify_lemma_e64(s));
        r.append(verify_lemma_h8(s));
        r.append(verify_lemma_h10(s));
        r.append(verify_lemma_h6(s));
        r.append(essential_invariants(s));
    }
    if (selected("products") || selected("essential")) {
        EssentialScan scan = run_essential_scan(s);
        if (selected("essential")) r.append(essential_scan_report(s, scan));
        if (selected("products")) {
            r.append(verify_products(s));
            r.append(pairwise_product_scan(s, scan));
        }
    }
    if (selected("series")) {
        r.append(poincare_report(s));
        r.append(functional_equation_report(s));
        r.append(rational_parameters_report(s));
        r.append(clark_discrepancy_report(s));
    }
    return r;
}

std::string render_einf_table(const SpectralSequence& s) {
    std::string out = "dim Einf^{p,q} / (u5^8, u10^8)\n\n q\\p |";
    for (int p = 0; p <= 8; ++p) out += (p < 10 ? "   " : "  ") + std::to_string(p);
    out += "\n-----+" + std::string(9 * 4, '-') + "\n";
    for (int q = 8; q >= 0; --q) {
        std::string row = (q < 10 ? "   " : "  ") + std::to_string(q) + " |";
        for (int p = 0; p <= 8; ++p) {
            int d = s.quotient_dim({p, q});
            std::string cell = d == 0 ? "." : std::to_string(d);
            row += std::string(4 - cell.size(), ' ') + cell;
        }
        out += row + "\n";
    }
    return out;
}

}  // namespace essq
