#include "uzalc/io_json.hpp"

#include "uzalc/functionals.hpp"

namespace uzalc {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

json certificate_to_json(const Certificate& cert) {
    return json{{"aux", aux_name(cert.kind)},
                {"status", status_name(cert.status)},
                {"claimed_bound", cert.claimed_bound},
                {"certified_sup_hi", cert.certified_sup_hi},
                {"attained_lo", cert.attained_lo},
                {"witness", json::array({cert.witness_x, cert.witness_y})},
                {"boxes_processed", cert.boxes_processed},
                {"max_depth", cert.max_depth}};
}

json positivity_to_json(const PositivityCertificate& cert) {
    return json{{"aux", aux_name(cert.kind)},
                {"status", status_name(cert.status)},
                {"certified_inf_lo", cert.certified_inf_lo},
                {"point_min_hi", cert.point_min_hi},
                {"witness", json::array({cert.witness_x, cert.witness_y})},
                {"boxes_processed", cert.boxes_processed},
                {"max_depth", cert.max_depth}};
}

json edge_report_to_json(const EdgeReport& rep) {
    return json{{"edge", rep.edge},
                {"closed_form_max", rep.closed_form_max},
                {"argmax", rep.argmax},
                {"certified_hi", rep.certified_hi},
                {"attained_lo", rep.attained_lo},
                {"max_crosscheck_diff", rep.max_crosscheck_diff},
                {"boxes_processed", rep.boxes_processed}};
}

json record_to_json(const BestRecord& rec) {
    json gs = json::array();
    for (const Complex& g : rec.gammas) gs.push_back(complex_to_json(g));
    return json{{"spec", rec.spec.str()},
                {"value", rec.value},
                {"bound", rec.bound},
                {"excess", rec.excess},
                {"a2", complex_to_json(rec.a2)},
                {"gammas", gs},
                {"margin", rec.membership_margin},
                {"pole_free", rec.pole_free},
                {"seed", rec.seed},
                {"evals", rec.evaluations},
                {"wall_ms", rec.wall_ms}};
}

BestRecord record_from_json(const json& j) {
    BestRecord rec;
    rec.spec = FunctionalSpec::parse(j.at("spec").get<std::string>());
    rec.value = j.at("value").get<double>();
    rec.bound = j.at("bound").get<double>();
    rec.excess = j.at("excess").get<double>();
    rec.a2 = complex_from_json(j.at("a2"));
    for (const auto& g : j.at("gammas")) rec.gammas.push_back(complex_from_json(g));
    rec.membership_margin = j.at("margin").get<double>();
    rec.pole_free = j.at("pole_free").get<bool>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.evaluations = j.at("evals").get<long>();
    rec.wall_ms = j.at("wall_ms").get<long>();
    return rec;
}

json sample_to_json(const Sample& s) {
    json gs = json::array();
    for (const Complex& g : s.gammas) gs.push_back(complex_to_json(g));
    json ex = json::object();
    for (const FunctionalSpec& spec : proven_specs())
        ex[spec.str()] = excess(spec, s.fn);
    return json{{"a2", complex_to_json(s.a2)},
                {"gammas", gs},
                {"margin", s.fn.membership_margin()},
                {"pole_free", s.fn.pole_free()},
                {"excesses", ex}};
}

}  // namespace uzalc
