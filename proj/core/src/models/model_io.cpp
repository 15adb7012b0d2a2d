#include "cym/models/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cym/errors.hpp"
#include "cym/models/nilpotent.hpp"
#include "cym/models/pf_operator.hpp"
#include "cym/models/prepotential.hpp"
#include "cym/models/presets.hpp"

namespace cym {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

Cplx parse_cplx(const json& j)
{
    if (j.is_number())
        return Cplx(j.get<Real>(), 0);
    if (j.is_array() && j.size() == 2)
        return Cplx(j[0].get<Real>(), j[1].get<Real>());
    throw domain_error("model file: complex values must be numbers or [re, im]");
}

std::vector<CVec> parse_points(const json& j, int n)
{
    std::vector<CVec> pts;
    for (const auto& row : j) {
        CVec p;
        for (const auto& v : row)
            p.push_back(parse_cplx(v));
        if (static_cast<int>(p.size()) != n)
            throw domain_error("model file: point width does not match n");
        pts.push_back(std::move(p));
    }
    return pts;
}

std::unique_ptr<FamilyModel> parse_model(const json& j)
{
    const std::string type = j.at("type").get<std::string>();
    std::vector<CVec> suggested;
    if (j.contains("suggested_points"))
        suggested = parse_points(j.at("suggested_points"), j.at("n").get<int>());

    if (type == "prepotential") {
        const int n = j.at("n").get<int>();
        Poly P;
        P.nvars = n;
        for (const auto& term : j.at("coefficients")) {
            MIdx a = term.at("exps").get<std::vector<int>>();
            if (static_cast<int>(a.size()) != n)
                throw domain_error("model file: exponent width does not match n");
            Cplx c(term.value("re", 0.0), term.value("im", 0.0));
            if (c != Cplx(0))
                P.terms[a] += c;
        }
        return std::make_unique<PrepotentialModel>(n, std::move(P),
                                                   std::move(suggested));
    }

    if (type == "pf_mum") {
        PFOperator op;
        op.theta_coeffs = j.at("coefficients")
                              .at("theta_powers")
                              .get<std::vector<std::vector<Real>>>();
        int trunc = j.value("truncation", 64);
        FrobeniusMum fr = pf_frobenius_mum(op, trunc);
        Real cap = 0.9;
        if (j.contains("domain") && j.at("domain").contains("radius"))
            cap = j.at("domain").at("radius").get<Real>();
        auto model = NilpotentOrbitModel::from_frobenius(fr, cap);
        if (!suggested.empty())
            return std::make_unique<NilpotentOrbitModel>(
                model.Nint(), model.A_coeffs(), model.series_radius(),
                std::move(suggested));
        return std::make_unique<NilpotentOrbitModel>(std::move(model));
    }

    if (type == "nilpotent_orbit") {
        auto N = j.at("N").get<std::vector<std::vector<long long>>>();
        std::vector<CVec> A;
        for (const auto& row : j.at("A_series")) {
            CVec v;
            for (const auto& entry : row)
                v.push_back(parse_cplx(entry));
            A.push_back(std::move(v));
        }
        Real radius = j.at("domain").at("radius").get<Real>();
        return std::make_unique<NilpotentOrbitModel>(std::move(N), std::move(A),
                                                     radius, std::move(suggested));
    }

    throw domain_error("model file: unknown type '" + type + "'");
}

ojson cplx_json(Cplx z)
{
    return ojson::array({z.real(), z.imag()});
}

} // namespace

std::unique_ptr<FamilyModel> load_model(std::istream& in)
{
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw domain_error(std::string("model file: JSON parse failure: ") + e.what());
    }
    return parse_model(j);
}

std::unique_ptr<FamilyModel> load_model_path(const std::string& path)
{
    if (path.rfind("preset:", 0) == 0)
        return make_preset(path.substr(7));
    std::ifstream in(path);
    if (!in)
        throw domain_error("model file: cannot open '" + path + "'");
    return load_model(in);
}

std::string preset_to_json(const std::string& name)
{
    auto model = make_preset(name);
    ojson j;
    j["type"] = model->kind();
    j["n"] = model->n();

    if (auto* prep = dynamic_cast<const PrepotentialModel*>(model.get())) {
        ojson coeffs = ojson::array();
        for (const auto& [a, c] : prep->prepotential().terms) {
            ojson term;
            term["exps"] = a;
            term["re"] = c.real();
            term["im"] = c.imag();
            coeffs.push_back(term);
        }
        j["coefficients"] = coeffs;
    } else if (preset_is_pf(name)) {
        j["type"] = "pf_mum";
        PFOperator op = preset_operator(name);
        j["coefficients"] = ojson{{"theta_powers", op.theta_coeffs}};
        j["truncation"] = preset_truncation(name);
    } else if (auto* orb = dynamic_cast<const NilpotentOrbitModel*>(model.get())) {
        j["N"] = orb->Nint();
        ojson A = ojson::array();
        for (const auto& row : orb->A_coeffs()) {
            ojson r = ojson::array();
            for (const Cplx& z : row)
                r.push_back(cplx_json(z));
            A.push_back(r);
        }
        j["A_series"] = A;
        j["domain"] = ojson{{"radius", orb->series_radius()}};
    } else {
        throw domain_error("preset_to_json: unsupported model kind");
    }

    ojson pts = ojson::array();
    for (const CVec& p : model->suggested_points()) {
        ojson row = ojson::array();
        for (const Cplx& z : p)
            row.push_back(cplx_json(z));
        pts.push_back(row);
    }
    j["suggested_points"] = pts;
    return j.dump(2) + "\n";
}

void write_preset_file(const std::string& name, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw domain_error("write_preset_file: cannot open '" + path + "'");
    out << preset_to_json(name);
}

} // namespace cym
