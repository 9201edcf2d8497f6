#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "essq/essential.hpp"
#include "essq/group.hpp"
#include "essq/runner.hpp"
#include "essq/series.hpp"

namespace py = pybind11;

namespace {

// owns the spectral sequence and the lazily computed essential scan
class Verifier {
public:
    explicit Verifier(int pmax = 16, int qmax = 12)
        : s_(std::make_unique<essq::SpectralSequence>(essq::Window{pmax, qmax})) {}

    int quotient_dim(int p, int q) const { return s_->quotient_dim({p, q}); }
    int einf_dim(int p, int q) const { return s_->einf().dim({p, q}); }

    std::vector<std::vector<int>> figure_table() const {
        std::vector<std::vector<int>> rows;
        for (int q = 8; q >= 0; --q) {
            std::vector<int> row;
            for (int p = 0; p <= 8; ++p) row.push_back(s_->quotient_dim({p, q}));
            rows.push_back(std::move(row));
        }
        return rows;
    }

    std::vector<int> poincare_numerator() const { return essq::poincare_numerator(*s_); }

    std::vector<int> essential_dims() {
        const essq::EssentialScan& scan = this->scan();
        return std::vector<int>(scan.dims.begin(), scan.dims.end());
    }

    int element_weight(const std::string& expr) const {
        auto w = s_->einf_rep(expr).weight();
        if (!w) throw std::invalid_argument("expression has mixed weights");
        return *w;
    }

    std::pair<int, int> element_bidegree(const std::string& expr) const {
        auto bd = s_->einf_rep(expr).bidegree();
        if (!bd) throw std::invalid_argument("expression is not bihomogeneous");
        return {bd->p, bd->q};
    }

    bool is_essential(const std::string& expr) const {
        essq::Element x = s_->einf_rep(expr);
        auto bd = x.bidegree();
        if (!bd) throw std::invalid_argument("expression is not bihomogeneous");
        return essq::einf_essential(*s_, x, *bd).has_value();
    }

    bool class_is_zero(const std::string& expr) const {
        essq::Element x = s_->einf_rep(expr);
        if (x.is_zero()) return true;
        auto bd = x.bidegree();
        if (!bd) throw std::invalid_argument("expression is not bihomogeneous");
        for (essq::Gf16 c : s_->einf().class_coords(x, *bd))
            if (!c.is_zero()) return false;
        return true;
    }

private:
    const essq::EssentialScan& scan() {
        if (!scan_) scan_ = std::make_unique<essq::EssentialScan>(essq::run_essential_scan(*s_));
        return *scan_;
    }
    std::unique_ptr<essq::SpectralSequence> s_;
    std::unique_ptr<essq::EssentialScan> scan_;
};

std::string run_json(std::vector<std::string> groups, int pmax, int qmax) {
    essq::Config cfg;
    cfg.pmax = pmax;
    cfg.qmax = qmax;
    for (auto& g : groups) cfg.only.insert(std::move(g));
    return essq::run_checks(cfg).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(essq, m) {
    m.doc() = "certificate checker for the mod-2 cohomology of the Sylow 2-subgroup of SU3(4)";

    m.def("gf16_add", [](int a, int b) { return int((essq::Gf16(a) + essq::Gf16(b)).bits()); });
    m.def("gf16_mul", [](int a, int b) { return int((essq::Gf16(a) * essq::Gf16(b)).bits()); });
    m.def("gf16_inverse", [](int a) { return int(essq::Gf16(a).inverse().bits()); });
    m.def("gf16_frobenius", [](int a) { return int(essq::Gf16(a).frobenius().bits()); });
    m.def("gf16_trace", [](int a) { return essq::Gf16(a).trace2(); });

    m.def("group_order", [] { return essq::enumerate_group().size(); });
    m.def("center_size", [] { return essq::center().size(); });
    m.def("element_order", [](int a, int b) {
        essq::GroupElement g{essq::Gf16(a), essq::Gf16(b)};
        if (!essq::satisfies_membership(g))
            throw std::invalid_argument("(a, b) does not satisfy b + b^4 = a^5");
        return essq::element_order(g);
    });

    m.def("run_json", &run_json, py::arg("groups") = std::vector<std::string>{},
          py::arg("pmax") = 16, py::arg("qmax") = 12,
          "run the selected verification groups and return the report as a JSON string");

    py::class_<Verifier>(m, "Verifier")
        .def(py::init<int, int>(), py::arg("pmax") = 16, py::arg("qmax") = 12)
        .def("quotient_dim", &Verifier::quotient_dim, py::arg("p"), py::arg("q"),
             "dim Einf^{p,q} / (u5^8, u10^8)")
        .def("einf_dim", &Verifier::einf_dim, py::arg("p"), py::arg("q"))
        .def("figure_table", &Verifier::figure_table,
             "rows q = 8..0 of the quotient dimension table, p = 0..8")
        .def("poincare_numerator", &Verifier::poincare_numerator)
        .def("essential_dims", &Verifier::essential_dims,
             "graded essential dimensions per total degree 0..14")
        .def("element_weight", &Verifier::element_weight)
        .def("element_bidegree", &Verifier::element_bidegree)
        .def("is_essential", &Verifier::is_essential)
        .def("class_is_zero", &Verifier::class_is_zero);
}
